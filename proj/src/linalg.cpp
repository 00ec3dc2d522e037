#include "derilab/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace derilab {

ModpEchelon::ModpEchelon(int dim, std::uint32_t p) : dim_(dim), p_(p), pivot_row_(dim, -1) {
    if (p < 2 || p >= (1u << 30)) throw range_error("ModpEchelon: prime must be < 2^30");
}

void ModpEchelon::reduce(std::vector<std::uint32_t>& v) const {
    for (int c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        int r = pivot_row_[c];
        if (r < 0) continue;
        std::uint32_t a = p_ - v[c];
        kernels::modp_axpy(v.data() + c, rows_[r].data() + c, a, std::size_t(dim_ - c), p_);
    }
}

bool ModpEchelon::insert(std::vector<std::uint32_t>& scratch) {
    for (int c = 0; c < dim_; ++c) {
        if (scratch[c] == 0) continue;
        int r = pivot_row_[c];
        if (r >= 0) {
            std::uint32_t a = p_ - scratch[c];
            kernels::modp_axpy(scratch.data() + c, rows_[r].data() + c, a, std::size_t(dim_ - c), p_);
        } else {
            std::uint32_t inv = kernels::modp_inv(scratch[c], p_);
            kernels::modp_scale(scratch.data() + c, inv, std::size_t(dim_ - c), p_);
            pivot_row_[c] = int(rows_.size());
            rows_.push_back(std::move(scratch));
            scratch.clear();
            ++rank_;
            return true;
        }
    }
    return false;
}

namespace {

void xgcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    g = old_r;
    x = old_s;
    y = old_t;
    if (g < 0) {
        g = -g;
        x = -x;
        y = -y;
    }
}

}  // namespace

IntEchelon::IntEchelon(int dim) : dim_(dim) {}

bool IntEchelon::insert(std::vector<Int> v) {
    for (int c = 0; c < dim_; ++c) {
        if (v[c] == 0) continue;
        auto it = rows_.find(c);
        if (it == rows_.end()) {
            if (v[c] < 0)
                for (auto& e : v) e = -e;
            rows_.emplace(c, std::move(v));
            return true;
        }
        std::vector<Int>& row = it->second;
        Int a = row[c], b = v[c];
        if (b % a == 0) {
            Int q = b / a;
            for (int i = c; i < dim_; ++i) v[i] -= q * row[i];
        } else {
            // unimodular combine: (x*row + y*v, (a/g)*v - (b/g)*row)
            Int g, x, y;
            xgcd(a, b, g, x, y);
            Int af = a / g, bf = b / g;
            std::vector<Int> nrow(dim_);
            for (int i = c; i < dim_; ++i) {
                nrow[i] = x * row[i] + y * v[i];
                v[i] = af * v[i] - bf * row[i];
            }
            row = std::move(nrow);
        }
    }
    return false;
}

std::vector<std::vector<Int>> IntEchelon::triangular_rows() const {
    std::vector<std::vector<Int>> out;
    out.reserve(rows_.size());
    for (const auto& [c, row] : rows_) out.push_back(row);
    return out;
}

namespace {

Int int_abs(const Int& v) { return v < 0 ? Int(-v) : v; }

}  // namespace

std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m) {
    const int rows = int(m.size());
    const int cols = rows ? int(m[0].size()) : 0;
    std::vector<Int> divisors;
    int t = 0;
    while (t < rows && t < cols) {
        // locate the minimal nonzero entry in the trailing submatrix
        int pi = -1, pj = -1;
        Int best = 0;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi < 0 || int_abs(m[i][j]) < best)) {
                    pi = i;
                    pj = j;
                    best = int_abs(m[i][j]);
                }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
        if (m[t][t] < 0)
            for (int j = t; j < cols; ++j) m[t][j] = -m[t][j];

        bool clean = true;
        for (int i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            Int q = m[i][t] / m[t][t];
            for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;
        }
        for (int j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            Int q = m[t][j] / m[t][t];
            for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;

        // enforce divisibility of the remaining block
        bool fixed = false;
        for (int i = t + 1; i < rows && !fixed; ++i)
            for (int j = t + 1; j < cols && !fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    fixed = true;
                }
        if (fixed) continue;
        divisors.push_back(m[t][t]);
        ++t;
    }
    return divisors;
}

std::vector<Int> merge_divisors(const std::vector<std::vector<Int>>& lists) {
    std::vector<Int> all;
    for (const auto& l : lists)
        for (const auto& d : l) all.push_back(int_abs(d));
    if (all.empty()) return all;
    // repair the divisibility chain by gcd/lcm exchanges; the product is
    // invariant and each exchange strictly reduces earlier entries
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(all.begin(), all.end());
        for (std::size_t i = 0; i + 1 < all.size(); ++i) {
            for (std::size_t j = i + 1; j < all.size(); ++j) {
                if (all[j] % all[i] != 0) {
                    Int g = boost::multiprecision::gcd(all[i], all[j]);
                    Int l = all[i] / g * all[j];
                    all[i] = g;
                    all[j] = l;
                    changed = true;
                }
            }
        }
    }
    return all;
}

std::vector<std::vector<Int>> int_kernel(
    int target_dim, const std::vector<std::vector<std::pair<int, Int>>>& columns) {
    const int src = int(columns.size());
    const int width = target_dim + src;
    // Augmented rows [image | combination]; pivots live in the image part
    // only, so a row whose image empties out exposes a kernel combination.
    std::map<int, std::vector<Int>> rows;
    std::vector<std::vector<Int>> kernel;
    for (int j = 0; j < src; ++j) {
        std::vector<Int> v(width, 0);
        for (const auto& [r, c] : columns[j]) v[r] += c;
        v[target_dim + j] = 1;
        bool stored = false;
        for (int c = 0; c < target_dim; ++c) {
            if (v[c] == 0) continue;
            auto it = rows.find(c);
            if (it == rows.end()) {
                if (v[c] < 0)
                    for (auto& e : v) e = -e;
                rows.emplace(c, std::move(v));
                stored = true;
                break;
            }
            std::vector<Int>& row = it->second;
            Int a = row[c], b = v[c];
            if (b % a == 0) {
                Int q = b / a;
                for (int i = c; i < width; ++i) v[i] -= q * row[i];
            } else {
                Int g, x, y;
                xgcd(a, b, g, x, y);
                Int af = a / g, bf = b / g;
                std::vector<Int> nrow(width);
                for (int i = c; i < width; ++i) {
                    nrow[i] = x * row[i] + y * v[i];
                    v[i] = af * v[i] - bf * row[i];
                }
                row = std::move(nrow);
            }
        }
        if (!stored) kernel.emplace_back(v.begin() + target_dim, v.end());
    }
    return kernel;
}

RationalRref::RationalRref(int dim) : dim_(dim) {}

bool RationalRref::insert(std::vector<Rational> v) {
    v = project(std::move(v));
    int pivot = -1;
    for (int c = 0; c < dim_; ++c)
        if (v[c] != 0) {
            pivot = c;
            break;
        }
    if (pivot < 0) return false;
    Rational lead = v[pivot];
    for (auto& e : v) e /= lead;
    // reduce existing rows against the new pivot
    for (auto& [pc, row] : rows_) {
        if (row[pivot] == 0) continue;
        Rational f = row[pivot];
        for (int c = 0; c < dim_; ++c) row[c] -= f * v[c];
    }
    rows_.emplace(pivot, std::move(v));
    pivots_.push_back(pivot);
    std::sort(pivots_.begin(), pivots_.end());
    return true;
}

std::vector<Rational> RationalRref::project(std::vector<Rational> v) const {
    for (const auto& [pc, row] : rows_) {
        if (v[pc] == 0) continue;
        Rational f = v[pc];
        for (int c = 0; c < dim_; ++c) v[c] -= f * row[c];
    }
    return v;
}

std::vector<int> RationalRref::free_coords() const {
    std::vector<int> out;
    std::size_t pi = 0;
    for (int c = 0; c < dim_; ++c) {
        if (pi < pivots_.size() && pivots_[pi] == c) {
            ++pi;
            continue;
        }
        out.push_back(c);
    }
    return out;
}

}  // namespace derilab
