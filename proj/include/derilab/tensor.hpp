#pragma once

#include <optional>

#include "derilab/combo.hpp"
#include "derilab/word.hpp"

namespace derilab {

// Element of the tensor algebra without constant terms: an exact sparse
// combination of words. Homogeneous iff all words share one length.
using TensorElement = Combo<Word>;

inline TensorElement tensor_word(const Word& w, Int c = 1) {
    if (w.empty()) throw range_error("tensor words have length >= 1");
    return TensorElement::single(w, std::move(c));
}

inline std::optional<int> homogeneous_degree(const TensorElement& t) {
    std::optional<int> deg;
    for (const auto& [w, c] : t.terms()) {
        if (!deg)
            deg = int(w.size());
        else if (*deg != int(w.size()))
            return std::nullopt;
    }
    return deg;
}

// Graded product: concatenation of words, extended bilinearly.
inline TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
    std::vector<TensorElement::Term> raw;
    raw.reserve(a.size() * b.size());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            raw.emplace_back(concat(wa, wb), ca * cb);
    return TensorElement::from_raw(std::move(raw));
}

inline TensorElement commutator(const TensorElement& a, const TensorElement& b) {
    return tensor_product(a, b) - tensor_product(b, a);
}

}  // namespace derilab
