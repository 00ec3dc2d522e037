#include <doctest.h>

#include <map>
#include <random>

#include "derilab/lie.hpp"
#include "derilab/lyndon.hpp"
#include "derilab/tensor.hpp"

using namespace derilab;

namespace {

// brute-force oracle: count words strictly smaller than all proper rotations
long long lyndon_count_brute(int n, int k) {
    std::vector<int> idx(k, 0);
    long long count = 0;
    while (true) {
        Word w(k);
        for (int i = 0; i < k; ++i) w[i] = Letter(1 + idx[i]);
        if (is_lyndon(w)) ++count;
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    return count;
}

TensorElement random_tensor(std::mt19937_64& rng, int n, int len, int terms) {
    std::vector<TensorElement::Term> raw;
    for (int t = 0; t < terms; ++t) {
        Word w(len);
        for (auto& l : w) l = Letter(1 + rng() % n);
        raw.emplace_back(std::move(w), Int(int(rng() % 9) - 4));
    }
    return TensorElement::from_raw(std::move(raw));
}

}  // namespace

TEST_CASE("sparse combos stay canonical") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        TensorElement a = random_tensor(rng, 3, 2, 4);
        TensorElement b = random_tensor(rng, 3, 2, 4);
        TensorElement c = random_tensor(rng, 3, 2, 4);
        TensorElement ab = a + b;
        for (const auto& [w, coeff] : ab.terms()) {
            (void)w;
            CHECK(coeff != 0);
        }
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("tensor product is graded concatenation") {
    TensorElement x1 = tensor_word(make_word({1}));
    TensorElement x2 = tensor_word(make_word({2}));
    CHECK(tensor_product(x1, x2) == tensor_word(make_word({1, 2})));
    CHECK(commutator(x1, x2) ==
          tensor_word(make_word({1, 2})) - tensor_word(make_word({2, 1})));
}

TEST_CASE("lyndon basis: degree-1 and degree-2 instances") {
    auto b21 = lyndon_basis(2, 1);
    REQUIRE(b21.size() == 2);
    CHECK(b21[0] == make_word({1}));
    CHECK(b21[1] == make_word({2}));
    auto b22 = lyndon_basis(2, 2);
    REQUIRE(b22.size() == 1);
    CHECK(b22[0] == make_word({1, 2}));
    CHECK(lyndon_basis(4, 3).size() == 20);
}

TEST_CASE("lyndon counts match the witt numbers and the rotation scan") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= 6; ++k) {
            if (n >= 5 && k >= 6) continue;  // keep the brute scan quick
            long long witt = witt_dimension(n, k);
            CHECK((long long)lyndon_basis(n, k).size() == witt);
            CHECK(lyndon_count_brute(n, k) == witt);
        }
    CHECK((long long)lyndon_basis(5, 6).size() == witt_dimension(5, 6));
    CHECK((long long)lyndon_basis(6, 6).size() == witt_dimension(6, 6));
}

TEST_CASE("standard factorization splits off the longest lyndon suffix") {
    auto [u, v] = standard_factorization(make_word({1, 2}));
    CHECK(u == make_word({1}));
    CHECK(v == make_word({2}));
    for (const Word& w : lyndon_basis(3, 5)) {
        auto [a, b] = standard_factorization(w);
        CHECK(is_lyndon(a));
        CHECK(is_lyndon(b));
        CHECK(concat(a, b) == w);
        CHECK(a < b);
    }
    CHECK_THROWS_AS(lyndon_basis(1, 2), range_error);
    CHECK_THROWS_AS(lyndon_basis(2, 0), range_error);
}

TEST_CASE("bracket of generators is the two-letter basis word") {
    LieElement x1 = lie_generator(1), x2 = lie_generator(2);
    CHECK(lie_bracket(x1, x2) == lie_basis_element(make_word({1, 2})));
    CHECK(lie_bracket(x2, x1) == -lie_basis_element(make_word({1, 2})));
    CHECK(lie_bracket(x1, x1).is_zero());
}

TEST_CASE("the embedding turns brackets into commutators") {
    CHECK(lie_to_tensor(lie_generator(1)) == tensor_word(make_word({1})));
    CHECK(lie_to_tensor(lie_bracket(lie_generator(1), lie_generator(2))) ==
          commutator(tensor_word(make_word({1})), tensor_word(make_word({2}))));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 2 + int(rng() % 3);
        auto rand_lie = [&](int deg) {
            auto words = lyndon_basis(n, deg);
            std::vector<LieElement::Term> raw;
            for (int t = 0; t < 3; ++t)
                raw.emplace_back(words[rng() % words.size()], Int(int(rng() % 7) - 3));
            return LieElement::from_raw(std::move(raw));
        };
        LieElement a = rand_lie(1 + int(rng() % 3));
        LieElement b = rand_lie(1 + int(rng() % 3));
        CHECK(lie_to_tensor(lie_bracket(a, b)) ==
              commutator(lie_to_tensor(a), lie_to_tensor(b)));
    }
}

TEST_CASE("basis brackets rewrite to their own standard factorization") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 2; k <= 5; ++k)
            for (const Word& w : lyndon_basis(n, k)) {
                auto [u, v] = standard_factorization(w);
                CHECK(lie_bracket(lie_basis_element(u), lie_basis_element(v)) ==
                      lie_basis_element(w));
            }
}

TEST_CASE("exhaustive bracket pairs agree with the tensor commutator") {
    const int n = 3;
    for (int p = 1; p <= 3; ++p)
        for (int q = p; p + q <= 6; ++q)
            for (const Word& u : lyndon_basis(n, p))
                for (const Word& v : lyndon_basis(n, q)) {
                    LieElement a = lie_basis_element(u), b = lie_basis_element(v);
                    CHECK(lie_to_tensor(lie_bracket(a, b)) ==
                          commutator(lie_to_tensor(a), lie_to_tensor(b)));
                }
}

TEST_CASE("jacobi identity holds exactly on random homogeneous inputs") {
    std::mt19937_64 rng(1234);
    int done = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + int(rng() % 2);
        LieElement a = lie_generator(Letter(1 + rng() % n));
        LieElement b = lie_generator(Letter(1 + rng() % n));
        LieElement c = lie_generator(Letter(1 + rng() % n));
        LieElement jac = lie_bracket(a, lie_bracket(b, c)) +
                         lie_bracket(b, lie_bracket(c, a)) +
                         lie_bracket(c, lie_bracket(a, b));
        CHECK(jac.is_zero());
        ++done;
    }
    CHECK(done == 1000);
}

TEST_CASE("tensor_to_lie inverts the embedding and rejects non-lie tensors") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + int(rng() % 2);
        int deg = 1 + int(rng() % 4);
        auto words = lyndon_basis(n, deg);
        std::vector<LieElement::Term> raw;
        for (int t = 0; t < 3; ++t)
            raw.emplace_back(words[rng() % words.size()], Int(int(rng() % 7) - 3));
        LieElement a = LieElement::from_raw(std::move(raw));
        CHECK(tensor_to_lie(lie_to_tensor(a)) == a);
    }
    CHECK_THROWS_AS(tensor_to_lie(tensor_word(make_word({2, 1}))), oracle_error);
}

TEST_CASE("the embedding is injective on the lyndon basis") {
    // image vectors of the degree-k basis are linearly independent: the
    // leading (minimal) word of each expansion is the basis word itself
    for (int n = 2; n <= 4; ++n)
        for (int k = 1; k <= 5; ++k) {
            std::map<Word, int> leading;
            for (const Word& w : lyndon_basis(n, k)) {
                TensorElement t = lie_to_tensor(lie_basis_element(w));
                const auto& [lead, c] = t.terms().front();
                CHECK(lead == w);
                CHECK(c == 1);
                ++leading[lead];
            }
            for (const auto& [w, cnt] : leading) {
                (void)w;
                CHECK(cnt == 1);
            }
        }
}
