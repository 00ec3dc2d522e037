#include "derilab/lie.hpp"

#include <map>

namespace derilab {

namespace {

// Standard factorizations and tensor expansions of basis words are shared
// across calls; the caches only ever grow and are cheap to rebuild per thread.
thread_local std::map<Word, std::pair<Word, Word>> g_factor_cache;
thread_local std::map<Word, TensorElement> g_expand_cache;
thread_local std::map<std::pair<Word, Word>, LieElement> g_bracket_cache;

const std::pair<Word, Word>& factor(const Word& w) {
    auto it = g_factor_cache.find(w);
    if (it == g_factor_cache.end())
        it = g_factor_cache.emplace(w, standard_factorization(w)).first;
    return it->second;
}

const TensorElement& expand(const Word& w) {
    auto it = g_expand_cache.find(w);
    if (it != g_expand_cache.end()) return it->second;
    TensorElement t;
    if (w.size() == 1) {
        t = tensor_word(w);
    } else {
        const auto& [u, v] = factor(w);
        t = commutator(expand(u), expand(v));
    }
    return g_expand_cache.emplace(w, std::move(t)).first->second;
}

LieElement bracket_combos(const LieElement& a, const LieElement& b, int depth);

// Bracket of two basis words, rewritten to the basis. For u < v the word uv
// is again Lyndon; it carries the bracket directly when (u,v) is its standard
// factorization, otherwise the left factor is split by the Jacobi identity:
// [[u1,u2],v] = [[u1,v],u2] + [u1,[u2,v]].
LieElement bracket_words(const Word& u, const Word& v, int depth) {
    if (depth > 64) throw range_error("lie_bracket: rewriting depth guard exceeded");
    if (u == v) return LieElement();
    if (v < u) return -bracket_words(v, u, depth);
    auto key = std::make_pair(u, v);
    auto it = g_bracket_cache.find(key);
    if (it != g_bracket_cache.end()) return it->second;

    LieElement result;
    if (u.size() == 1 || !(factor(u).second < v)) {
        result = LieElement::single(concat(u, v));
    } else {
        const auto& [u1, u2] = factor(u);
        result = bracket_combos(bracket_words(u1, v, depth + 1), LieElement::single(u2), depth + 1) +
                 bracket_combos(LieElement::single(u1), bracket_words(u2, v, depth + 1), depth + 1);
    }
    g_bracket_cache.emplace(std::move(key), result);
    return result;
}

LieElement bracket_combos(const LieElement& a, const LieElement& b, int depth) {
    LieElement acc;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            acc = acc + bracket_words(wa, wb, depth) * (ca * cb);
    return acc;
}

}  // namespace

LieElement lie_generator(Letter x) { return LieElement::single(Word{x}); }

LieElement lie_basis_element(const Word& lyndon) {
    if (!is_lyndon(lyndon)) throw range_error("lie_basis_element: word is not Lyndon");
    return LieElement::single(lyndon);
}

LieElement lie_bracket(const LieElement& a, const LieElement& b) {
    return bracket_combos(a, b, 0);
}

TensorElement lie_to_tensor(const LieElement& a) {
    TensorElement t;
    for (const auto& [w, c] : a.terms()) t = t + expand(w) * c;
    return t;
}

LieElement tensor_to_lie(const TensorElement& t) {
    // The expansion of a basis word is that word plus lexicographically larger
    // ones, so peeling the minimal word is a terminating triangular solve.
    TensorElement rest = t;
    std::vector<LieElement::Term> out;
    while (!rest.is_zero()) {
        const auto& [w, c] = rest.terms().front();
        if (!is_lyndon(w)) throw oracle_error("tensor_to_lie: not in the image of the embedding");
        out.emplace_back(w, c);
        rest = rest - expand(w) * c;
    }
    return LieElement::from_raw(std::move(out));
}

}  // namespace derilab
