#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace bellswap::kernels {

// Dense complex arithmetic kernels on split re/im storage (row-major, n x n).
// Every kernel exists as a scalar reference implementation plus optional SIMD
// variants (AVX2 on x86-64, NEON on aarch64) selected at runtime. All variants
// perform the same per-element operation sequence, so their outputs are
// bit-identical; the equivalence tests assert exactly that.
//
// Output buffers must not alias the inputs.

// C = A * B
using gemm_fn = void (*)(int n, const double* are, const double* aim,
                         const double* bre, const double* bim,
                         double* cre, double* cim);

// C = A (x) B, Kronecker product; A is na x na, B is nb x nb,
// C is (na*nb) x (na*nb) with A's indices major.
using kron_fn = void (*)(int na, int nb, const double* are, const double* aim,
                         const double* bre, const double* bim,
                         double* cre, double* cim);

// C += s * A over len complex entries, s real.
using axpy_fn = void (*)(std::size_t len, double s,
                         const double* are, const double* aim,
                         double* cre, double* cim);

struct Backend {
    const char* name;
    gemm_fn gemm;
    kron_fn kron;
    axpy_fn axpy;
};

const Backend& scalar_backend();

// Non-scalar backends; nullptr when not compiled in or the CPU lacks support.
const Backend* avx2_backend();
const Backend* neon_backend();

// The backend all higher-level code routes through. Selected once on first
// use: the BELLSWAP_KERNEL environment variable ("scalar", "avx2", "neon",
// "auto") wins, otherwise the best available variant. Not intended to be
// switched while kernels are executing on other threads.
const Backend& active();
void select_backend(std::string_view name);

std::vector<const Backend*> available_backends();

}  // namespace bellswap::kernels
