#pragma once

#include "derilab/combo.hpp"
#include "derilab/lyndon.hpp"
#include "derilab/tensor.hpp"

namespace derilab {

// Element of the free Lie algebra in the Lyndon basis: keys are Lyndon words,
// each standing for its left-iterated standard-factorization bracketing.
using LieElement = Combo<Word>;

LieElement lie_generator(Letter x);
LieElement lie_basis_element(const Word& lyndon);

// Bracket expressed back in the Lyndon basis by repeated rewriting along
// standard factorizations.
LieElement lie_bracket(const LieElement& a, const LieElement& b);

// Embedding into the tensor algebra: brackets become commutators. Degree
// preserving and injective.
TensorElement lie_to_tensor(const LieElement& a);

// Inverse of the embedding on its image; throws oracle_error when the tensor
// is not a Lie element.
LieElement tensor_to_lie(const TensorElement& t);

}  // namespace derilab
