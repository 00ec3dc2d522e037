#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "derilab/common.hpp"

namespace derilab {

// Sparse linear combination in canonical form: terms sorted by key,
// no stored zero coefficients. Values are immutable after construction;
// all operations are pure.
template <class Key>
class Combo {
  public:
    using Term = std::pair<Key, Int>;

    Combo() = default;

    static Combo from_raw(std::vector<Term> raw) {
        std::sort(raw.begin(), raw.end(),
                  [](const Term& a, const Term& b) { return a.first < b.first; });
        std::vector<Term> out;
        out.reserve(raw.size());
        for (auto& t : raw) {
            if (!out.empty() && out.back().first == t.first)
                out.back().second += t.second;
            else
                out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term& t) { return t.second == 0; }),
                  out.end());
        return Combo(std::move(out));
    }

    static Combo single(Key k, Int c = 1) {
        if (c == 0) return Combo();
        return Combo({{std::move(k), std::move(c)}});
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Int coeff(const Key& k) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, const Key& kk) { return t.first < kk; });
        if (it != terms_.end() && it->first == k) return it->second;
        return 0;
    }

    friend Combo operator+(const Combo& a, const Combo& b) { return merged(a, b, 1); }
    friend Combo operator-(const Combo& a, const Combo& b) { return merged(a, b, -1); }
    friend Combo operator*(const Combo& a, const Int& c) {
        if (c == 0) return Combo();
        std::vector<Term> out = a.terms_;
        for (auto& t : out) t.second *= c;
        return Combo(std::move(out));
    }
    friend Combo operator-(const Combo& a) { return a * Int(-1); }

    friend bool operator==(const Combo& a, const Combo& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Combo& a, const Combo& b) { return !(a == b); }

  private:
    explicit Combo(std::vector<Term> t) : terms_(std::move(t)) {}

    static Combo merged(const Combo& a, const Combo& b, int bsign) {
        std::vector<Term> out;
        out.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
                out.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
                out.emplace_back(b.terms_[j].first, bsign > 0 ? b.terms_[j].second : -b.terms_[j].second);
                ++j;
            } else {
                Int c = a.terms_[i].second + (bsign > 0 ? b.terms_[j].second : -b.terms_[j].second);
                if (c != 0) out.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return Combo(std::move(out));
    }

    std::vector<Term> terms_;
};

}  // namespace derilab
