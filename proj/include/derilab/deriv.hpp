#pragma once

#include "derilab/lie.hpp"
#include "derilab/tensor.hpp"

namespace derilab {

// (dual generator index, word) basis pair for derivation terms. A derivation
// of degree k maps each generator to a degree-(k+1) element, so every stored
// word has length degree+1.
struct DKey {
    Letter dual;
    Word w;
    friend bool operator<(const DKey& a, const DKey& b) {
        if (a.dual != b.dual) return a.dual < b.dual;
        return a.w < b.w;
    }
    friend bool operator==(const DKey& a, const DKey& b) { return a.dual == b.dual && a.w == b.w; }
};

using DTerms = Combo<DKey>;

class AssocDerivation {
  public:
    AssocDerivation(int rank, int degree, DTerms terms);
    static AssocDerivation zero(int rank, int degree) { return {rank, degree, DTerms()}; }
    static AssocDerivation single(int rank, Letter dual, const Word& w, Int c = 1);

    int rank() const { return rank_; }
    int degree() const { return degree_; }
    const DTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }

    // Value on one generator, an element of the tensor algebra.
    TensorElement on_generator(Letter x) const;

    friend AssocDerivation operator+(const AssocDerivation& a, const AssocDerivation& b);
    friend AssocDerivation operator-(const AssocDerivation& a, const AssocDerivation& b);
    friend AssocDerivation operator*(const AssocDerivation& a, const Int& c);
    friend bool operator==(const AssocDerivation& a, const AssocDerivation& b);

  private:
    int rank_;
    int degree_;
    DTerms terms_;
};

// Leibniz extension of the generator action to the whole tensor algebra.
TensorElement apply_assoc(const AssocDerivation& d, const TensorElement& t);

// Closed insertion formula for the bracket of derivations.
AssocDerivation bracket_assoc(const AssocDerivation& f, const AssocDerivation& g);

// Commutator of the Leibniz actions restricted to generators; agrees with
// bracket_assoc and serves as its independent oracle in the test suites.
AssocDerivation bracket_assoc_endomorphism(const AssocDerivation& f, const AssocDerivation& g);

// Contraction of a degree-2 derivation: f (x) u1 (x) u2 (x) u3 -> f(u2) u1 (x) u3.
TensorElement contraction_c13(const AssocDerivation& f);

// Section of the contraction: x_i (x) x_j -> x_1* (x) x_i (x) x_1 (x) x_j.
AssocDerivation section_s(const TensorElement& t, int rank);

AssocDerivation identity_derivation(int rank);

class LieDerivation {
  public:
    LieDerivation(int rank, int degree, DTerms terms);
    static LieDerivation zero(int rank, int degree) { return {rank, degree, DTerms()}; }
    static LieDerivation single(int rank, Letter dual, const Word& lyndon, Int c = 1);

    int rank() const { return rank_; }
    int degree() const { return degree_; }
    const DTerms& terms() const { return terms_; }
    bool is_zero() const { return terms_.is_zero(); }

    LieElement on_generator(Letter x) const;

    friend LieDerivation operator+(const LieDerivation& a, const LieDerivation& b);
    friend LieDerivation operator-(const LieDerivation& a, const LieDerivation& b);
    friend LieDerivation operator*(const LieDerivation& a, const Int& c);
    friend bool operator==(const LieDerivation& a, const LieDerivation& b);

  private:
    int rank_;
    int degree_;
    DTerms terms_;
};

LieElement apply_lie_derivation(const LieDerivation& d, const LieElement& a);

// Commutator of the Leibniz extensions evaluated on generators, rewritten in
// the Lyndon basis.
LieDerivation bracket_lie_der(const LieDerivation& f, const LieDerivation& g);

// Multiset of generator indices, kept sorted; a monomial in the symmetric power.
using SymmetricMonomial = Word;
using SymMonoCombo = Combo<SymmetricMonomial>;

inline SymmetricMonomial symmetric_monomial(Word w) {
    std::sort(w.begin(), w.end());
    return w;
}

// Trace map: embed into tensors, contract the dual slot against the first
// tensor slot, then symmetrize. Defined for every degree >= 1.
SymMonoCombo trace_tr_k(const LieDerivation& f);

// Section of the trace: a monomial maps to x_l* (x) [x_l, x_{i2}, ..., x_{ik+1}]
// with l the minimal index avoiding the monomial.
LieDerivation phi_k(const SymmetricMonomial& m, int rank);

// Left-iterated bracket [x_{i1}, x_{i2}, ..., x_{im}].
LieElement left_normed_bracket(const Word& letters);

}  // namespace derilab
