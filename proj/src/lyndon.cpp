#include "derilab/lyndon.hpp"

#include <algorithm>

namespace derilab {

bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    const std::size_t k = w.size();
    Word rot(w);
    for (std::size_t r = 1; r < k; ++r) {
        std::rotate_copy(w.begin(), w.begin() + r, w.end(), rot.begin());
        if (!(w < rot)) return false;
    }
    return true;
}

std::vector<Word> lyndon_basis(int n, int k) {
    if (n < 2) throw range_error("lyndon_basis: rank must be >= 2");
    if (k < 1) throw range_error("lyndon_basis: degree must be >= 1");
    std::vector<Word> out;
    // Duval's algorithm, restricted to words of length exactly k.
    std::vector<int> w{0};
    while (!w.empty()) {
        if (int(w.size()) == k) {
            Word lw(w.size());
            for (std::size_t i = 0; i < w.size(); ++i) lw[i] = Letter(w[i] + 1);
            out.push_back(std::move(lw));
        }
        int m = int(w.size());
        while (int(w.size()) < k) w.push_back(w[int(w.size()) - m]);
        while (!w.empty() && w.back() == n - 1) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

int moebius(int d) {
    int m = 1;
    for (int p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            d /= p;
            if (d % p == 0) return 0;
            m = -m;
        }
    }
    if (d > 1) m = -m;
    return m;
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

long long witt_dimension(int n, int k) {
    long long acc = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d) continue;
        acc += moebius(d) * ipow(n, k / d);
    }
    return acc / k;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw range_error("standard_factorization: need length >= 2");
    // The right factor is the longest proper Lyndon suffix.
    for (std::size_t i = 1; i < w.size(); ++i) {
        Word v(w.begin() + i, w.end());
        if (is_lyndon(v)) return {Word(w.begin(), w.begin() + i), std::move(v)};
    }
    throw range_error("standard_factorization: input is not Lyndon");
}

}  // namespace derilab
