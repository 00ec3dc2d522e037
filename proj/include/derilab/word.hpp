#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "derilab/common.hpp"

namespace derilab {

// Letters are 1-based alphabet indices, packed contiguously and compared
// lexicographically. Tensor-algebra words always have length >= 1.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline Word make_word(std::initializer_list<int> ls) {
    Word w;
    w.reserve(ls.size());
    for (int l : ls) w.push_back(static_cast<Letter>(l));
    return w;
}

inline Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

inline std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(int(w[i]));
    }
    return s;
}

inline void check_rank(const Word& w, int n) {
    for (Letter l : w)
        if (l < 1 || int(l) > n) throw range_error("letter out of range for rank " + std::to_string(n));
}

inline std::uint64_t word_hash(const Word& w) {
    Fnv1a h;
    h.feed_bytes(w.data(), w.size());
    return h.digest();
}

}  // namespace derilab
