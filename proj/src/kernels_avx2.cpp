#include "bellswap/kernels.hpp"

// AVX2 variants. Compiled with -mavx2 only (no FMA, -ffp-contract=off) so the
// rounding of every element matches the scalar reference exactly.

#if defined(BELLSWAP_HAVE_AVX2)

#include <immintrin.h>

namespace bellswap::kernels {

namespace {

void gemm_avx2(int n, const double* are, const double* aim,
               const double* bre, const double* bim,
               double* cre, double* cim) {
    for (int i = 0; i < n * n; ++i) {
        cre[i] = 0.0;
        cim[i] = 0.0;
    }
    for (int i = 0; i < n; ++i) {
        double* crow = cre + static_cast<std::size_t>(i) * n;
        double* cirow = cim + static_cast<std::size_t>(i) * n;
        for (int k = 0; k < n; ++k) {
            const double ar = are[static_cast<std::size_t>(i) * n + k];
            const double ai = aim[static_cast<std::size_t>(i) * n + k];
            const double* brow = bre + static_cast<std::size_t>(k) * n;
            const double* birow = bim + static_cast<std::size_t>(k) * n;
            const __m256d arv = _mm256_set1_pd(ar);
            const __m256d aiv = _mm256_set1_pd(ai);
            int j = 0;
            for (; j + 4 <= n; j += 4) {
                const __m256d br = _mm256_loadu_pd(brow + j);
                const __m256d bi = _mm256_loadu_pd(birow + j);
                __m256d cr = _mm256_loadu_pd(crow + j);
                __m256d ci = _mm256_loadu_pd(cirow + j);
                cr = _mm256_add_pd(cr, _mm256_sub_pd(_mm256_mul_pd(arv, br),
                                                     _mm256_mul_pd(aiv, bi)));
                ci = _mm256_add_pd(ci, _mm256_add_pd(_mm256_mul_pd(arv, bi),
                                                     _mm256_mul_pd(aiv, br)));
                _mm256_storeu_pd(crow + j, cr);
                _mm256_storeu_pd(cirow + j, ci);
            }
            for (; j < n; ++j) {
                crow[j] += ar * brow[j] - ai * birow[j];
                cirow[j] += ar * birow[j] + ai * brow[j];
            }
        }
    }
}

void kron_avx2(int na, int nb, const double* are, const double* aim,
               const double* bre, const double* bim,
               double* cre, double* cim) {
    const int n = na * nb;
    for (int ia = 0; ia < na; ++ia) {
        for (int ja = 0; ja < na; ++ja) {
            const double ar = are[static_cast<std::size_t>(ia) * na + ja];
            const double ai = aim[static_cast<std::size_t>(ia) * na + ja];
            const __m256d arv = _mm256_set1_pd(ar);
            const __m256d aiv = _mm256_set1_pd(ai);
            for (int ib = 0; ib < nb; ++ib) {
                const double* brow = bre + static_cast<std::size_t>(ib) * nb;
                const double* birow = bim + static_cast<std::size_t>(ib) * nb;
                double* crow =
                    cre + static_cast<std::size_t>(ia * nb + ib) * n + static_cast<std::size_t>(ja) * nb;
                double* cirow =
                    cim + static_cast<std::size_t>(ia * nb + ib) * n + static_cast<std::size_t>(ja) * nb;
                int jb = 0;
                for (; jb + 4 <= nb; jb += 4) {
                    const __m256d br = _mm256_loadu_pd(brow + jb);
                    const __m256d bi = _mm256_loadu_pd(birow + jb);
                    const __m256d cr = _mm256_sub_pd(_mm256_mul_pd(arv, br),
                                                     _mm256_mul_pd(aiv, bi));
                    const __m256d ci = _mm256_add_pd(_mm256_mul_pd(arv, bi),
                                                     _mm256_mul_pd(aiv, br));
                    _mm256_storeu_pd(crow + jb, cr);
                    _mm256_storeu_pd(cirow + jb, ci);
                }
                for (; jb < nb; ++jb) {
                    crow[jb] = ar * brow[jb] - ai * birow[jb];
                    cirow[jb] = ar * birow[jb] + ai * brow[jb];
                }
            }
        }
    }
}

void axpy_avx2(std::size_t len, double s, const double* are, const double* aim,
               double* cre, double* cim) {
    const __m256d sv = _mm256_set1_pd(s);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256d cr = _mm256_loadu_pd(cre + i);
        __m256d ci = _mm256_loadu_pd(cim + i);
        cr = _mm256_add_pd(cr, _mm256_mul_pd(sv, _mm256_loadu_pd(are + i)));
        ci = _mm256_add_pd(ci, _mm256_mul_pd(sv, _mm256_loadu_pd(aim + i)));
        _mm256_storeu_pd(cre + i, cr);
        _mm256_storeu_pd(cim + i, ci);
    }
    for (; i < len; ++i) {
        cre[i] += s * are[i];
        cim[i] += s * aim[i];
    }
}

}  // namespace

const Backend* avx2_backend() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const Backend backend{"avx2", gemm_avx2, kron_avx2, axpy_avx2};
    return &backend;
}

}  // namespace bellswap::kernels

#else

namespace bellswap::kernels {
const Backend* avx2_backend() { return nullptr; }
}  // namespace bellswap::kernels

#endif
