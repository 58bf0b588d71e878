#include "bellswap/kernels.hpp"

// NEON variants (aarch64), 2 doubles per vector. Same expression shapes as
// the scalar reference; vmulq/vaddq only, never vfmaq, to keep rounding
// identical.

#if defined(BELLSWAP_HAVE_NEON)

#include <arm_neon.h>

namespace bellswap::kernels {

namespace {

void gemm_neon(int n, const double* are, const double* aim,
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
            const float64x2_t arv = vdupq_n_f64(ar);
            const float64x2_t aiv = vdupq_n_f64(ai);
            int j = 0;
            for (; j + 2 <= n; j += 2) {
                const float64x2_t br = vld1q_f64(brow + j);
                const float64x2_t bi = vld1q_f64(birow + j);
                float64x2_t cr = vld1q_f64(crow + j);
                float64x2_t ci = vld1q_f64(cirow + j);
                cr = vaddq_f64(cr, vsubq_f64(vmulq_f64(arv, br), vmulq_f64(aiv, bi)));
                ci = vaddq_f64(ci, vaddq_f64(vmulq_f64(arv, bi), vmulq_f64(aiv, br)));
                vst1q_f64(crow + j, cr);
                vst1q_f64(cirow + j, ci);
            }
            for (; j < n; ++j) {
                crow[j] += ar * brow[j] - ai * birow[j];
                cirow[j] += ar * birow[j] + ai * brow[j];
            }
        }
    }
}

void kron_neon(int na, int nb, const double* are, const double* aim,
               const double* bre, const double* bim,
               double* cre, double* cim) {
    const int n = na * nb;
    for (int ia = 0; ia < na; ++ia) {
        for (int ja = 0; ja < na; ++ja) {
            const double ar = are[static_cast<std::size_t>(ia) * na + ja];
            const double ai = aim[static_cast<std::size_t>(ia) * na + ja];
            const float64x2_t arv = vdupq_n_f64(ar);
            const float64x2_t aiv = vdupq_n_f64(ai);
            for (int ib = 0; ib < nb; ++ib) {
                const double* brow = bre + static_cast<std::size_t>(ib) * nb;
                const double* birow = bim + static_cast<std::size_t>(ib) * nb;
                double* crow =
                    cre + static_cast<std::size_t>(ia * nb + ib) * n + static_cast<std::size_t>(ja) * nb;
                double* cirow =
                    cim + static_cast<std::size_t>(ia * nb + ib) * n + static_cast<std::size_t>(ja) * nb;
                int jb = 0;
                for (; jb + 2 <= nb; jb += 2) {
                    const float64x2_t br = vld1q_f64(brow + jb);
                    const float64x2_t bi = vld1q_f64(birow + jb);
                    const float64x2_t cr = vsubq_f64(vmulq_f64(arv, br), vmulq_f64(aiv, bi));
                    const float64x2_t ci = vaddq_f64(vmulq_f64(arv, bi), vmulq_f64(aiv, br));
                    vst1q_f64(crow + jb, cr);
                    vst1q_f64(cirow + jb, ci);
                }
                for (; jb < nb; ++jb) {
                    crow[jb] = ar * brow[jb] - ai * birow[jb];
                    cirow[jb] = ar * birow[jb] + ai * brow[jb];
                }
            }
        }
    }
}

void axpy_neon(std::size_t len, double s, const double* are, const double* aim,
               double* cre, double* cim) {
    const float64x2_t sv = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        float64x2_t cr = vld1q_f64(cre + i);
        float64x2_t ci = vld1q_f64(cim + i);
        cr = vaddq_f64(cr, vmulq_f64(sv, vld1q_f64(are + i)));
        ci = vaddq_f64(ci, vmulq_f64(sv, vld1q_f64(aim + i)));
        vst1q_f64(cre + i, cr);
        vst1q_f64(cim + i, ci);
    }
    for (; i < len; ++i) {
        cre[i] += s * are[i];
        cim[i] += s * aim[i];
    }
}

}  // namespace

const Backend* neon_backend() {
    static const Backend backend{"neon", gemm_neon, kron_neon, axpy_neon};
    return &backend;
}

}  // namespace bellswap::kernels

#else

namespace bellswap::kernels {
const Backend* neon_backend() { return nullptr; }
}  // namespace bellswap::kernels

#endif
