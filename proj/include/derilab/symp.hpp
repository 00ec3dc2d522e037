#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "derilab/deriv.hpp"

namespace derilab {

// Signed colors name the symplectic basis: color i > 0 is a_i, color -i is
// b_i. Plain alphabet letters pack them as a_i -> i, b_i -> g+i.
using Color = std::int8_t;
using ColorWord = std::vector<Color>;

inline int color_sign(Color c) { return c > 0 ? 1 : -1; }

Letter color_letter(int g, Color c);
Color letter_color(int g, Letter l);
void check_color(int g, Color c);

ColorWord parse_color_word(const std::string& text);  // "1,4,-2,..."
std::string color_word_str(const ColorWord& w);

// omega0 = sum_i (a_i (x) b_i - b_i (x) a_i), expressed in plain letters.
TensorElement omega0(int g);

// True iff the derivation annihilates omega0 exactly.
bool is_symplectic(const AssocDerivation& d, int g);

// Cyclic rotation invariance of a homogeneous tensor.
bool is_cyclic_invariant(const TensorElement& t);

// Cyclic word of signed colors, stored as the minimal rotation under the
// color order 1 < -1 < 2 < -2 < ...; equality is cyclic equality.
class Spider {
  public:
    Spider() = default;  // empty placeholder; real spiders have length >= 2
    Spider(ColorWord colors, int g);

    const ColorWord& colors() const { return colors_; }
    int length() const { return int(colors_.size()); }
    int degree() const { return int(colors_.size()) - 2; }

    friend bool operator<(const Spider& a, const Spider& b) {
        if (a.colors_.size() != b.colors_.size()) return a.colors_.size() < b.colors_.size();
        return a.colors_ < b.colors_;
    }
    friend bool operator==(const Spider& a, const Spider& b) { return a.colors_ == b.colors_; }

    static ColorWord canonical_rotation(ColorWord w);

  private:
    ColorWord colors_;
};

using SpiderCombo = Combo<Spider>;

// Sum of all length-many cyclic rotations of the spider word (rotation-fixed
// words therefore appear with multiplicity).
TensorElement spider_to_tensor(const Spider& s, int g);

// Sum over the distinct rotations only; these primitive sums are the integral
// basis vectors used by the linear algebra.
TensorElement orbit_sum_tensor(const Spider& s, int g);

// Smallest period of the cyclic word.
int primitive_period(const ColorWord& w);

// The derivation attached to an invariant tensor: the first slot pairs
// against the argument through the symplectic form.
AssocDerivation derivation_of_invariant_tensor(const TensorElement& t, int g);

// Inverse direction, defined for symplectic derivations.
TensorElement tensor_of_derivation(const AssocDerivation& d, int g);

// Bracket on spiders: every leg pair with opposite colors contracts, the two
// cut words splice into one cyclic word, with the pairing sign.
SpiderCombo bracket_spider(const Spider& a, const Spider& b, int g);

// One canonical spider per necklace class of length k+2 over the 2g signed
// colors; the attached primitive orbit sums form an integral basis of the
// cyclic invariants.
std::vector<Spider> a_basis(int g, int k);

// Invariant-subspace dimension by the orbit count formula.
long long a_dimension(int g, int k);

// sigma-invariant tensor together with its genus; the value object for the
// cyclic-invariant Lie algebra.
struct SympDerivation {
    int g = 0;
    TensorElement tensor;
};

SympDerivation make_symp_derivation(int g, TensorElement t);
SympDerivation symp_of_spider(const Spider& s, int g);

// Coordinates of an invariant tensor in the necklace basis.
SpiderCombo spider_coordinates(const SympDerivation& d);

// Degree-0 action on invariants; equals the derivation bracket restricted to
// the invariant subspace.
SympDerivation sp_action(const SympDerivation& x, const SympDerivation& d);

SpiderCombo bracket_symp(const SympDerivation& x, const SympDerivation& y);

// Basis of the symplectic derivations of the free Lie algebra in degree k:
// exact integer kernel of D -> D(omega0) on the degree-k derivations of the
// free Lie algebra on 2g generators.
std::vector<LieDerivation> h_basis(int g, int k);

// omega0 as a free Lie element, sum_i [a_i, b_i].
LieElement omega0_lie(int g);

}  // namespace derilab
