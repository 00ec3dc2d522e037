#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace derilab {

// Exact integer coefficients everywhere; rationals are never needed because
// all basis normalizations are chosen integral.
using Int = boost::multiprecision::cpp_int;

struct range_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct oracle_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// FNV-1a, used for hashed sparse-map keys and cache digests.
class Fnv1a {
  public:
    void feed_bytes(const void* data, std::size_t len) {
        auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t i = 0; i < len; ++i) {
            state_ ^= p[i];
            state_ *= 1099511628211ull;
        }
    }
    void feed_u64(std::uint64_t v) { feed_bytes(&v, sizeof v); }
    void feed_i64(std::int64_t v) { feed_u64(static_cast<std::uint64_t>(v)); }
    void feed_str(const std::string& s) {
        feed_u64(s.size());
        feed_bytes(s.data(), s.size());
    }
    std::uint64_t digest() const { return state_; }

  private:
    std::uint64_t state_ = 1469598103934665603ull;
};

std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

long long to_ll(const Int& v);

std::string hex_digest(std::uint64_t d);

}  // namespace derilab
