#pragma once

#include <cstddef>
#include <cstdint>

// Vector kernels for row operations mod p, p < 2^30. Inputs are assumed
// reduced mod p. Scalar reference implementations are always available; on
// x86-64 an AVX2 variant is selected at runtime and is equivalence-tested
// against the scalar path.
namespace derilab::kernels {

// y[i] = (y[i] + a*x[i]) mod p
void modp_axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
                      std::uint32_t p);
// y[i] = (a*y[i]) mod p
void modp_scale_scalar(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);

#if defined(__x86_64__)
bool avx2_available();
void modp_axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
                    std::uint32_t p);
void modp_scale_avx2(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);
#endif

// Dispatched entry points.
void modp_axpy(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
               std::uint32_t p);
void modp_scale(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p);

const char* active_backend();

std::uint32_t modp_inv(std::uint32_t a, std::uint32_t p);

}  // namespace derilab::kernels
