#include "bellswap/matrix.hpp"

#include <cassert>
#include <cmath>

#include "bellswap/kernels.hpp"

namespace bellswap {

std::complex<double> ComplexMatrix::trace() const {
    double tr = 0.0, ti = 0.0;
    for (int i = 0; i < dim_; ++i) {
        tr += re_at(i, i);
        ti += im_at(i, i);
    }
    return {tr, ti};
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r) {
        for (int c = 0; c < dim_; ++c) {
            out.re_at(r, c) = re_at(c, r);
            out.im_at(r, c) = -im_at(c, r);
        }
    }
    return out;
}

ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.dim() == b.dim());
    ComplexMatrix c(a.dim());
    kernels::active().gemm(a.dim(), a.re_data(), a.im_data(), b.re_data(),
                           b.im_data(), c.re_data(), c.im_data());
    return c;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.dim() * b.dim());
    kernels::active().kron(a.dim(), b.dim(), a.re_data(), a.im_data(),
                           b.re_data(), b.im_data(), c.re_data(), c.im_data());
    return c;
}

void accumulate(ComplexMatrix& acc, const ComplexMatrix& m, double s) {
    assert(acc.dim() == m.dim());
    const std::size_t len = static_cast<std::size_t>(m.dim()) * m.dim();
    kernels::active().axpy(len, s, m.re_data(), m.im_data(), acc.re_data(),
                           acc.im_data());
}

ComplexMatrix scale(const ComplexMatrix& m, double s) {
    ComplexMatrix out(m.dim());
    accumulate(out, m, s);
    return out;
}

ComplexMatrix conjugate_with(const ComplexMatrix& a, const ComplexMatrix& b) {
    return mul(mul(a, b), a.adjoint());
}

std::complex<double> trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.dim() == b.dim());
    double tr = 0.0, ti = 0.0;
    for (int r = 0; r < a.dim(); ++r) {
        for (int c = 0; c < a.dim(); ++c) {
            const double ar = a.re_at(r, c), ai = a.im_at(r, c);
            const double br = b.re_at(c, r), bi = b.im_at(c, r);
            tr += ar * br - ai * bi;
            ti += ar * bi + ai * br;
        }
    }
    return {tr, ti};
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    assert(a.dim() == b.dim());
    double m = 0.0;
    for (int r = 0; r < a.dim(); ++r) {
        for (int c = 0; c < a.dim(); ++c) {
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
        }
    }
    return m;
}

double hermiticity_defect(const ComplexMatrix& m) {
    double d = 0.0;
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return d;
}

}  // namespace bellswap
