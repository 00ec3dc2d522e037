#include "derilab/deriv.hpp"

namespace derilab {

namespace {

void check_terms(int rank, int degree, const DTerms& terms, bool lyndon_keys) {
    for (const auto& [k, c] : terms.terms()) {
        (void)c;
        if (k.dual < 1 || int(k.dual) > rank) throw range_error("derivation: dual index out of range");
        check_rank(k.w, rank);
        if (int(k.w.size()) != degree + 1) throw range_error("derivation: word length must equal degree+1");
        if (lyndon_keys && !is_lyndon(k.w)) throw range_error("derivation: key word is not Lyndon");
    }
}

void check_same(int ra, int rb, int what) {
    if (ra != rb) throw range_error(what == 0 ? "rank mismatch" : "degree mismatch");
}

}  // namespace

AssocDerivation::AssocDerivation(int rank, int degree, DTerms terms)
    : rank_(rank), degree_(degree), terms_(std::move(terms)) {
    if (rank_ < 1 || degree_ < 0) throw range_error("derivation: bad rank or degree");
    check_terms(rank_, degree_, terms_, false);
}

AssocDerivation AssocDerivation::single(int rank, Letter dual, const Word& w, Int c) {
    return {rank, int(w.size()) - 1, DTerms::single(DKey{dual, w}, std::move(c))};
}

TensorElement AssocDerivation::on_generator(Letter x) const {
    std::vector<TensorElement::Term> raw;
    for (const auto& [k, c] : terms_.terms())
        if (k.dual == x) raw.emplace_back(k.w, c);
    return TensorElement::from_raw(std::move(raw));
}

AssocDerivation operator+(const AssocDerivation& a, const AssocDerivation& b) {
    check_same(a.rank_, b.rank_, 0);
    check_same(a.degree_, b.degree_, 1);
    return {a.rank_, a.degree_, a.terms_ + b.terms_};
}

AssocDerivation operator-(const AssocDerivation& a, const AssocDerivation& b) {
    check_same(a.rank_, b.rank_, 0);
    check_same(a.degree_, b.degree_, 1);
    return {a.rank_, a.degree_, a.terms_ - b.terms_};
}

AssocDerivation operator*(const AssocDerivation& a, const Int& c) {
    return {a.rank_, a.degree_, a.terms_ * c};
}

bool operator==(const AssocDerivation& a, const AssocDerivation& b) {
    return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

TensorElement apply_assoc(const AssocDerivation& d, const TensorElement& t) {
    std::vector<TensorElement::Term> raw;
    for (const auto& [w, c] : t.terms()) {
        check_rank(w, d.rank());
        for (std::size_t j = 0; j < w.size(); ++j) {
            for (const auto& [k, dc] : d.terms().terms()) {
                if (k.dual != w[j]) continue;
                Word nw(w.begin(), w.begin() + j);
                nw.insert(nw.end(), k.w.begin(), k.w.end());
                nw.insert(nw.end(), w.begin() + j + 1, w.end());
                raw.emplace_back(std::move(nw), c * dc);
            }
        }
    }
    return TensorElement::from_raw(std::move(raw));
}

AssocDerivation bracket_assoc(const AssocDerivation& f, const AssocDerivation& g) {
    check_same(f.rank(), g.rank(), 0);
    std::vector<DTerms::Term> raw;
    for (const auto& [fk, fc] : f.terms().terms()) {
        for (const auto& [gk, gc] : g.terms().terms()) {
            const Int c = fc * gc;
            // insert f's word into every slot of g's word that pairs with f's dual
            for (std::size_t s = 0; s < gk.w.size(); ++s) {
                if (gk.w[s] != fk.dual) continue;
                Word nw(gk.w.begin(), gk.w.begin() + s);
                nw.insert(nw.end(), fk.w.begin(), fk.w.end());
                nw.insert(nw.end(), gk.w.begin() + s + 1, gk.w.end());
                raw.emplace_back(DKey{gk.dual, std::move(nw)}, c);
            }
            for (std::size_t t = 0; t < fk.w.size(); ++t) {
                if (fk.w[t] != gk.dual) continue;
                Word nw(fk.w.begin(), fk.w.begin() + t);
                nw.insert(nw.end(), gk.w.begin(), gk.w.end());
                nw.insert(nw.end(), fk.w.begin() + t + 1, fk.w.end());
                raw.emplace_back(DKey{fk.dual, std::move(nw)}, -c);
            }
        }
    }
    return {f.rank(), f.degree() + g.degree(), DTerms::from_raw(std::move(raw))};
}

AssocDerivation bracket_assoc_endomorphism(const AssocDerivation& f, const AssocDerivation& g) {
    check_same(f.rank(), g.rank(), 0);
    std::vector<DTerms::Term> raw;
    for (Letter x = 1; x <= Letter(f.rank()); ++x) {
        TensorElement v = apply_assoc(f, g.on_generator(x)) - apply_assoc(g, f.on_generator(x));
        for (const auto& [w, c] : v.terms()) raw.emplace_back(DKey{x, w}, c);
    }
    return {f.rank(), f.degree() + g.degree(), DTerms::from_raw(std::move(raw))};
}

TensorElement contraction_c13(const AssocDerivation& f) {
    if (f.degree() != 2) throw range_error("contraction_c13: degree must be 2");
    std::vector<TensorElement::Term> raw;
    for (const auto& [k, c] : f.terms().terms()) {
        if (k.w[1] != k.dual) continue;
        raw.emplace_back(Word{k.w[0], k.w[2]}, c);
    }
    return TensorElement::from_raw(std::move(raw));
}

AssocDerivation section_s(const TensorElement& t, int rank) {
    std::vector<DTerms::Term> raw;
    for (const auto& [w, c] : t.terms()) {
        if (w.size() != 2) throw range_error("section_s: input must be homogeneous of degree 2");
        check_rank(w, rank);
        raw.emplace_back(DKey{Letter(1), Word{w[0], Letter(1), w[1]}}, c);
    }
    return {rank, 2, DTerms::from_raw(std::move(raw))};
}

AssocDerivation identity_derivation(int rank) {
    if (rank < 1) throw range_error("identity_derivation: rank must be >= 1");
    std::vector<DTerms::Term> raw;
    for (Letter x = 1; x <= Letter(rank); ++x) raw.emplace_back(DKey{x, Word{x}}, 1);
    return {rank, 0, DTerms::from_raw(std::move(raw))};
}

LieDerivation::LieDerivation(int rank, int degree, DTerms terms)
    : rank_(rank), degree_(degree), terms_(std::move(terms)) {
    if (rank_ < 1 || degree_ < 0) throw range_error("derivation: bad rank or degree");
    check_terms(rank_, degree_, terms_, true);
}

LieDerivation LieDerivation::single(int rank, Letter dual, const Word& lyndon, Int c) {
    return {rank, int(lyndon.size()) - 1, DTerms::single(DKey{dual, lyndon}, std::move(c))};
}

LieElement LieDerivation::on_generator(Letter x) const {
    std::vector<LieElement::Term> raw;
    for (const auto& [k, c] : terms_.terms())
        if (k.dual == x) raw.emplace_back(k.w, c);
    return LieElement::from_raw(std::move(raw));
}

LieDerivation operator+(const LieDerivation& a, const LieDerivation& b) {
    check_same(a.rank_, b.rank_, 0);
    check_same(a.degree_, b.degree_, 1);
    return {a.rank_, a.degree_, a.terms_ + b.terms_};
}

LieDerivation operator-(const LieDerivation& a, const LieDerivation& b) {
    check_same(a.rank_, b.rank_, 0);
    check_same(a.degree_, b.degree_, 1);
    return {a.rank_, a.degree_, a.terms_ - b.terms_};
}

LieDerivation operator*(const LieDerivation& a, const Int& c) {
    return {a.rank_, a.degree_, a.terms_ * c};
}

bool operator==(const LieDerivation& a, const LieDerivation& b) {
    return a.rank_ == b.rank_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

namespace {

LieElement apply_to_basis_word(const LieDerivation& d, const Word& w) {
    if (w.size() == 1) return d.on_generator(w[0]);
    auto [u, v] = standard_factorization(w);
    return lie_bracket(apply_to_basis_word(d, u), lie_basis_element(v)) +
           lie_bracket(lie_basis_element(u), apply_to_basis_word(d, v));
}

}  // namespace

LieElement apply_lie_derivation(const LieDerivation& d, const LieElement& a) {
    LieElement acc;
    for (const auto& [w, c] : a.terms()) acc = acc + apply_to_basis_word(d, w) * c;
    return acc;
}

LieDerivation bracket_lie_der(const LieDerivation& f, const LieDerivation& g) {
    check_same(f.rank(), g.rank(), 0);
    std::vector<DTerms::Term> raw;
    for (Letter x = 1; x <= Letter(f.rank()); ++x) {
        LieElement v = apply_lie_derivation(f, g.on_generator(x)) -
                       apply_lie_derivation(g, f.on_generator(x));
        for (const auto& [w, c] : v.terms()) raw.emplace_back(DKey{x, w}, c);
    }
    return {f.rank(), f.degree() + g.degree(), DTerms::from_raw(std::move(raw))};
}

SymMonoCombo trace_tr_k(const LieDerivation& f) {
    if (f.degree() < 1) throw range_error("trace_tr_k: degree must be >= 1");
    std::vector<SymMonoCombo::Term> raw;
    for (const auto& [k, c] : f.terms().terms()) {
        TensorElement t = lie_to_tensor(lie_basis_element(k.w));
        for (const auto& [w, tc] : t.terms()) {
            if (w[0] != k.dual) continue;
            raw.emplace_back(symmetric_monomial(Word(w.begin() + 1, w.end())), c * tc);
        }
    }
    return SymMonoCombo::from_raw(std::move(raw));
}

LieElement left_normed_bracket(const Word& letters) {
    if (letters.empty()) throw range_error("left_normed_bracket: empty word");
    LieElement acc = lie_generator(letters[0]);
    for (std::size_t i = 1; i < letters.size(); ++i)
        acc = lie_bracket(acc, lie_generator(letters[i]));
    return acc;
}

LieDerivation phi_k(const SymmetricMonomial& m, int rank) {
    const int k = int(m.size());
    if (k < 1) throw range_error("phi_k: empty monomial");
    if (rank < k + 2) throw range_error("phi_k: rank must be >= monomial size + 2");
    Letter l = 0;
    for (Letter cand = 1; cand <= Letter(rank); ++cand) {
        if (std::find(m.begin(), m.end(), cand) == m.end()) {
            l = cand;
            break;
        }
    }
    if (l == 0) throw range_error("phi_k: no admissible avoided index");
    Word letters{l};
    letters.insert(letters.end(), m.begin(), m.end());
    LieElement v = left_normed_bracket(letters);
    std::vector<DTerms::Term> raw;
    for (const auto& [w, c] : v.terms()) raw.emplace_back(DKey{l, w}, c);
    return {rank, k, DTerms::from_raw(std::move(raw))};
}

}  // namespace derilab
