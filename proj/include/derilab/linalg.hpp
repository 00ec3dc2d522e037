#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <vector>

#include "derilab/common.hpp"
#include "derilab/kernels/modp.hpp"

namespace derilab {

using Rational = boost::multiprecision::cpp_rational;

// Streaming row-echelon rank accumulator over F_p with dense rows.
// Stored rows are normalized with leading entry 1 and are never modified
// again; only incoming vectors are reduced.
class ModpEchelon {
  public:
    ModpEchelon(int dim, std::uint32_t p);

    // Consumes the scratch vector (entries reduced mod p); true if rank grew.
    bool insert(std::vector<std::uint32_t>& scratch);
    int rank() const { return rank_; }
    int dim() const { return dim_; }
    std::uint32_t prime() const { return p_; }
    bool full() const { return rank_ == dim_; }

    // Reduce a vector against the current rows without inserting.
    void reduce(std::vector<std::uint32_t>& v) const;

  private:
    int dim_;
    std::uint32_t p_;
    int rank_ = 0;
    std::vector<int> pivot_row_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

// Streaming integer echelon: maintains a triangular generating set of the
// lattice spanned by the inserted vectors, via unimodular two-row combines.
class IntEchelon {
  public:
    explicit IntEchelon(int dim);

    bool insert(std::vector<Int> v);
    int rank() const { return int(rows_.size()); }
    int dim() const { return dim_; }

    // Rows sorted by pivot column; a Z-basis of the lattice.
    std::vector<std::vector<Int>> triangular_rows() const;

  private:
    int dim_;
    std::map<int, std::vector<Int>> rows_;
};

// Elementary divisors d1 | d2 | ... (nonzero) of an integer matrix.
std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m);

// Merge per-block divisor lists into one global divisibility chain.
std::vector<Int> merge_divisors(const std::vector<std::vector<Int>>& lists);

struct Cokernel {
    long long free_rank = 0;
    std::vector<Int> torsion;  // divisors > 1, in chain order
};

// Integer kernel of the linear map sending source basis vector j to the
// sparse target vector columns[j]. Returns independent integer kernel
// vectors, one per free column.
std::vector<std::vector<Int>> int_kernel(int target_dim,
                                         const std::vector<std::vector<std::pair<int, Int>>>& columns);

// Reduced row echelon form over Q, used for quotient-space projections.
class RationalRref {
  public:
    explicit RationalRref(int dim);
    bool insert(std::vector<Rational> v);
    int rank() const { return int(pivots_.size()); }
    // Canonical representative of v modulo the row space.
    std::vector<Rational> project(std::vector<Rational> v) const;
    const std::vector<int>& pivots() const { return pivots_; }
    // Coordinates not used as pivots, i.e. a basis of the quotient.
    std::vector<int> free_coords() const;

  private:
    int dim_;
    std::vector<int> pivots_;                       // sorted insertion history
    std::map<int, std::vector<Rational>> rows_;     // pivot -> normalized reduced row
};

}  // namespace derilab
