#include "bellswap/kernels.hpp"

// Reference kernels. The expression shapes here are the contract the SIMD
// variants reproduce: each output element sees the same operations in the
// same order, so results match bit for bit.

namespace bellswap::kernels {

namespace {

void gemm_scalar(int n, const double* are, const double* aim,
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
            for (int j = 0; j < n; ++j) {
                crow[j] += ar * brow[j] - ai * birow[j];
                cirow[j] += ar * birow[j] + ai * brow[j];
            }
        }
    }
}

void kron_scalar(int na, int nb, const double* are, const double* aim,
                 const double* bre, const double* bim,
                 double* cre, double* cim) {
    const int n = na * nb;
    for (int ia = 0; ia < na; ++ia) {
        for (int ja = 0; ja < na; ++ja) {
            const double ar = are[static_cast<std::size_t>(ia) * na + ja];
            const double ai = aim[static_cast<std::size_t>(ia) * na + ja];
            for (int ib = 0; ib < nb; ++ib) {
                const double* brow = bre + static_cast<std::size_t>(ib) * nb;
                const double* birow = bim + static_cast<std::size_t>(ib) * nb;
                double* crow =
                    cre + static_cast<std::size_t>(ia * nb + ib) * n + static_cast<std::size_t>(ja) * nb;
                double* cirow =
                    cim + static_cast<std::size_t>(ia * nb + ib) * n + static_cast<std::size_t>(ja) * nb;
                for (int jb = 0; jb < nb; ++jb) {
                    crow[jb] = ar * brow[jb] - ai * birow[jb];
                    cirow[jb] = ar * birow[jb] + ai * brow[jb];
                }
            }
        }
    }
}

void axpy_scalar(std::size_t len, double s, const double* are, const double* aim,
                 double* cre, double* cim) {
    for (std::size_t i = 0; i < len; ++i) {
        cre[i] += s * are[i];
        cim[i] += s * aim[i];
    }
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend backend{"scalar", gemm_scalar, kron_scalar, axpy_scalar};
    return backend;
}

}  // namespace bellswap::kernels
