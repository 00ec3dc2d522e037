#pragma once

#include <utility>
#include <vector>

#include "derilab/word.hpp"

namespace derilab {

// A word is Lyndon when it is strictly smaller than all of its proper cyclic
// rotations. Lyndon words of length k over 1..n index a basis of the degree-k
// part of the free Lie algebra.

bool is_lyndon(const Word& w);

// All Lyndon words of length k over the alphabet 1..n, lexicographically
// sorted (Duval's generation). Requires n >= 2, k >= 1.
std::vector<Word> lyndon_basis(int n, int k);

// Witt dimension (1/k) * sum_{d|k} mu(d) n^(k/d).
long long witt_dimension(int n, int k);

// Chen-Fox-Lyndon standard factorization w = u.v with v the longest proper
// Lyndon suffix. Requires |w| >= 2 and w Lyndon.
std::pair<Word, Word> standard_factorization(const Word& w);

}  // namespace derilab
