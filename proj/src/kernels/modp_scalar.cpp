#include "derilab/kernels/modp.hpp"

namespace derilab::kernels {

void modp_axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
                      std::uint32_t p) {
    if (a == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = std::uint32_t((std::uint64_t(a) * x[i] + y[i]) % p);
    }
}

void modp_scale_scalar(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = std::uint32_t(std::uint64_t(a) * y[i] % p);
    }
}

namespace {

using AxpyFn = void (*)(std::uint32_t*, const std::uint32_t*, std::uint32_t, std::size_t, std::uint32_t);
using ScaleFn = void (*)(std::uint32_t*, std::uint32_t, std::size_t, std::uint32_t);

struct Dispatch {
    AxpyFn axpy = modp_axpy_scalar;
    ScaleFn scale = modp_scale_scalar;
    const char* name = "scalar";
    Dispatch() {
#if defined(__x86_64__)
        if (avx2_available()) {
            axpy = modp_axpy_avx2;
            scale = modp_scale_avx2;
            name = "avx2";
        }
#endif
    }
};

const Dispatch& dispatch() {
    static const Dispatch d;
    return d;
}

}  // namespace

void modp_axpy(std::uint32_t* y, const std::uint32_t* x, std::uint32_t a, std::size_t n,
               std::uint32_t p) {
    dispatch().axpy(y, x, a, n, p);
}

void modp_scale(std::uint32_t* y, std::uint32_t a, std::size_t n, std::uint32_t p) {
    dispatch().scale(y, a, n, p);
}

const char* active_backend() { return dispatch().name; }

std::uint32_t modp_inv(std::uint32_t a, std::uint32_t p) {
    // p prime; binary exponentiation a^(p-2)
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return std::uint32_t(r);
}

}  // namespace derilab::kernels
