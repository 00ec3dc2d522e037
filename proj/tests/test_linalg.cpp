#include <doctest.h>

#include <random>

#include "derilab/homology.hpp"
#include "derilab/kernels/modp.hpp"
#include "derilab/linalg.hpp"

using namespace derilab;

namespace {

// reference elimination oracle: dense fraction-free rank over Q
long long dense_rank(std::vector<std::vector<long long>> m) {
    const int rows = int(m.size());
    if (rows == 0) return 0;
    const int cols = int(m[0].size());
    std::vector<std::vector<double>> a(rows, std::vector<double>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = double(m[i][j]);
    long long rank = 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        double best = 1e-9;
        for (int i = r; i < rows; ++i)
            if (std::abs(a[i][c]) > best) {
                best = std::abs(a[i][c]);
                piv = i;
            }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            double f = a[i][c] / a[r][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// textbook dense integer smith form, no pivot strategy: the reference oracle
std::vector<Int> naive_snf(std::vector<std::vector<Int>> m) {
    const int rows = int(m.size());
    const int cols = rows ? int(m[0].size()) : 0;
    std::vector<Int> out;
    int t = 0;
    while (t < rows && t < cols) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows && pi < 0; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        std::swap(m[t], m[pi]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pj]);
        bool again = true;
        while (again) {
            again = false;
            for (int i = t + 1; i < rows; ++i)
                while (m[i][t] != 0) {
                    Int q = m[i][t] / m[t][t];
                    for (int j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                    if (m[i][t] != 0) {
                        std::swap(m[t], m[i]);
                        again = true;
                    }
                }
            for (int j = t + 1; j < cols; ++j)
                while (m[t][j] != 0) {
                    Int q = m[t][j] / m[t][t];
                    for (int i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                    if (m[t][j] != 0) {
                        for (int i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                        again = true;
                    }
                }
        }
        bool fixed = false;
        for (int i = t + 1; i < rows && !fixed; ++i)
            for (int j = t + 1; j < cols && !fixed; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (int jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    fixed = true;
                }
        if (fixed) continue;
        if (m[t][t] < 0) m[t][t] = -m[t][t];
        out.push_back(m[t][t]);
        ++t;
    }
    return out;
}

}  // namespace

TEST_CASE("modular kernels: dispatched backend equals the scalar reference") {
    std::mt19937_64 rng(71);
    for (std::uint32_t p : kDefaultPrimes) {
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 1 + rng() % 300;
            std::vector<std::uint32_t> x(n), y0(n);
            for (auto& v : x) v = std::uint32_t(rng() % p);
            for (auto& v : y0) v = std::uint32_t(rng() % p);
            std::uint32_t a = std::uint32_t(rng() % p);
            std::vector<std::uint32_t> y1 = y0, y2 = y0;
            kernels::modp_axpy_scalar(y1.data(), x.data(), a, n, p);
            kernels::modp_axpy(y2.data(), x.data(), a, n, p);
            CHECK(y1 == y2);
            std::vector<std::uint32_t> z1 = y0, z2 = y0;
            kernels::modp_scale_scalar(z1.data(), a, n, p);
            kernels::modp_scale(z2.data(), a, n, p);
            CHECK(z1 == z2);
        }
    }
#if defined(__x86_64__)
    if (kernels::avx2_available()) {
        CHECK(std::string(kernels::active_backend()) == "avx2");
        std::mt19937_64 r2(5);
        const std::uint32_t p = kDefaultPrimes[0];
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t n = 1 + r2() % 200;
            std::vector<std::uint32_t> x(n), y(n);
            for (auto& v : x) v = std::uint32_t(r2() % p);
            for (auto& v : y) v = std::uint32_t(r2() % p);
            std::uint32_t a = std::uint32_t(r2() % p);
            std::vector<std::uint32_t> ys = y, yv = y;
            kernels::modp_axpy_scalar(ys.data(), x.data(), a, n, p);
            kernels::modp_axpy_avx2(yv.data(), x.data(), a, n, p);
            CHECK(ys == yv);
        }
    }
#endif
}

TEST_CASE("modular inverse") {
    for (std::uint32_t p : kDefaultPrimes)
        for (std::uint32_t a : {1u, 2u, 12345u, p - 1})
            CHECK(std::uint64_t(a) * kernels::modp_inv(a, p) % p == 1);
}

TEST_CASE("streaming modular echelon ranks match the dense oracle") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        int dim = 3 + int(rng() % 12);
        int ncols = 1 + int(rng() % 25);
        std::vector<std::vector<long long>> cols(ncols, std::vector<long long>(dim, 0));
        for (auto& col : cols)
            for (auto& v : col) v = (rng() % 4 == 0) ? (long long)(rng() % 11) - 5 : 0;
        // sprinkle exact duplicates and negations
        if (ncols > 2) cols[ncols - 1] = cols[0];
        ModpEchelon acc(dim, kDefaultPrimes[0]);
        for (const auto& col : cols) {
            std::vector<std::uint32_t> scratch(dim);
            for (int i = 0; i < dim; ++i) {
                long long cc = col[i] % (long long)kDefaultPrimes[0];
                if (cc < 0) cc += kDefaultPrimes[0];
                scratch[i] = std::uint32_t(cc);
            }
            acc.insert(scratch);
        }
        std::vector<std::vector<long long>> m(dim, std::vector<long long>(ncols));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
        CHECK(acc.rank() == dense_rank(m));
    }
}

TEST_CASE("identity ranks and early exit") {
    ModpEchelon acc(5, kDefaultPrimes[1]);
    for (int i = 0; i < 5; ++i) {
        std::vector<std::uint32_t> e(5, 0);
        e[i] = 1;
        CHECK(acc.insert(e));
    }
    CHECK(acc.full());
    CHECK(acc.rank() == 5);
}

TEST_CASE("integer echelon: lattice rank matches the rational rank") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 30; ++trial) {
        int dim = 3 + int(rng() % 8);
        int ncols = 1 + int(rng() % 14);
        std::vector<std::vector<long long>> cols(ncols, std::vector<long long>(dim, 0));
        for (auto& col : cols)
            for (auto& v : col) v = (rng() % 3 == 0) ? (long long)(rng() % 9) - 4 : 0;
        IntEchelon ech(dim);
        for (const auto& col : cols) {
            std::vector<Int> v(dim);
            for (int i = 0; i < dim; ++i) v[i] = col[i];
            ech.insert(std::move(v));
        }
        std::vector<std::vector<long long>> m(dim, std::vector<long long>(ncols));
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < ncols; ++j) m[i][j] = cols[j][i];
        CHECK(ech.rank() == dense_rank(m));
    }
}

TEST_CASE("smith divisors on pinned instances") {
    {
        std::vector<std::vector<Int>> id3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
        auto d = smith_divisors(id3);
        CHECK(d == std::vector<Int>{1, 1, 1});
    }
    {
        // diag(2, 0): cokernel Z + Z/2
        std::vector<std::vector<Int>> m{{2, 0}, {0, 0}};
        auto d = smith_divisors(m);
        CHECK(d == std::vector<Int>{2});
    }
    {
        std::vector<std::vector<Int>> m{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
        auto d = smith_divisors(m);
        REQUIRE(d.size() == 3);
        CHECK(d[0] == 2);
        CHECK(d[1] == 2);
        CHECK(d[2] == 156);
    }
}

TEST_CASE("smith form of random sparse matrices matches the dense reference") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 25; ++trial) {
        int rows = 4 + int(rng() % 17);  // up to 20
        int cols = 6 + int(rng() % 25);  // up to 30
        std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols, 0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng() % 4 == 0) m[i][j] = Int(int(rng() % 13) - 6);
        CHECK(smith_divisors(m) == naive_snf(m));
    }
}

TEST_CASE("smith form is stable under column permutation") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 15; ++trial) {
        int dim = 5 + int(rng() % 6);
        int ncols = 8 + int(rng() % 10);
        std::vector<SparseCol> cols(ncols);
        for (auto& col : cols)
            for (int i = 0; i < dim; ++i)
                if (rng() % 3 == 0) col.emplace_back(i, (long long)(rng() % 9) - 4);
        SnfResult a = snf_of_columns(dim, cols);
        for (std::size_t t = cols.size(); t > 1; --t) std::swap(cols[t - 1], cols[rng() % t]);
        SnfResult b = snf_of_columns(dim, cols);
        CHECK(a.rank == b.rank);
        CHECK(a.divisors == b.divisors);
        CHECK(a.free_rank == b.free_rank);
    }
}

TEST_CASE("divisor merge repairs the divisibility chain") {
    auto merged = merge_divisors({{2}, {3}});
    CHECK(merged == std::vector<Int>{1, 6});
    merged = merge_divisors({{1, 2}, {4}});
    CHECK(merged == std::vector<Int>{1, 2, 4});
    merged = merge_divisors({{6}, {10}});
    CHECK(merged == std::vector<Int>{2, 30});
    // against the naive oracle: block-diagonal matrices
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<std::vector<Int>> blocks[2];
        std::vector<std::vector<Int>> full;
        int d0 = 2 + int(rng() % 3), d1 = 2 + int(rng() % 3);
        auto rnd = [&](int r, int c) {
            std::vector<std::vector<Int>> m(r, std::vector<Int>(c, 0));
            for (auto& row : m)
                for (auto& v : row) v = Int(int(rng() % 9) - 4);
            return m;
        };
        blocks[0] = rnd(d0, d0);
        blocks[1] = rnd(d1, d1);
        full.assign(d0 + d1, std::vector<Int>(d0 + d1, 0));
        for (int i = 0; i < d0; ++i)
            for (int j = 0; j < d0; ++j) full[i][j] = blocks[0][i][j];
        for (int i = 0; i < d1; ++i)
            for (int j = 0; j < d1; ++j) full[d0 + i][d0 + j] = blocks[1][i][j];
        auto got = merge_divisors({smith_divisors(blocks[0]), smith_divisors(blocks[1])});
        auto want = naive_snf(full);
        CHECK(got == want);
    }
}

TEST_CASE("integer kernel of explicit maps") {
    // map Z^3 -> Z^2: (x,y,z) -> (x+z, y+z): kernel spanned by (1,1,-1)
    std::vector<std::vector<std::pair<int, Int>>> cols{
        {{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}};
    auto ker = int_kernel(2, cols);
    REQUIRE(ker.size() == 1);
    std::vector<Int> v = ker[0];
    CHECK(v[0] == v[1]);
    CHECK(v[2] == -v[0]);
    CHECK(v[0] != 0);
    // kernel members really map to zero
    std::mt19937_64 rng(93);
    for (int trial = 0; trial < 20; ++trial) {
        int target = 3 + int(rng() % 4);
        int src = 5 + int(rng() % 6);
        std::vector<std::vector<std::pair<int, Int>>> c(src);
        for (auto& col : c)
            for (int r = 0; r < target; ++r)
                if (rng() % 3 == 0) col.emplace_back(r, Int(int(rng() % 7) - 3));
        auto k = int_kernel(target, c);
        for (const auto& v2 : k) {
            std::vector<Int> image(target, 0);
            for (int j = 0; j < src; ++j)
                for (const auto& [r, cc] : c[j]) image[r] += cc * v2[j];
            for (const auto& e : image) CHECK(e == 0);
        }
        // dimension agrees with the rank-nullity count
        std::vector<std::vector<long long>> m(target, std::vector<long long>(src, 0));
        for (int j = 0; j < src; ++j)
            for (const auto& [r, cc] : c[j]) m[r][j] = to_ll(cc);
        CHECK((long long)k.size() == src - dense_rank(m));
    }
}

TEST_CASE("rational reduced echelon projects onto the quotient") {
    RationalRref rref(4);
    CHECK(rref.insert({1, 2, 0, 0}));
    CHECK(rref.insert({0, 1, 1, 0}));
    CHECK_FALSE(rref.insert({1, 3, 1, 0}));  // dependent
    CHECK(rref.rank() == 2);
    auto free_cols = rref.free_coords();
    REQUIRE(free_cols.size() == 2);
    // projection is idempotent and kills the row space
    auto p = rref.project({1, 2, 0, 0});
    for (const auto& e : p) CHECK(e == 0);
    auto v = rref.project({0, 0, 0, 5});
    CHECK(v[3] == 5);
}
