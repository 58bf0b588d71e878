#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace bellswap {

// Dense square complex matrix, split re/im planes, row-major. The split
// layout is what the SIMD kernels consume; element access goes through
// std::complex for everything else.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim)
        : dim_(dim),
          re_(static_cast<std::size_t>(dim) * dim, 0.0),
          im_(static_cast<std::size_t>(dim) * dim, 0.0) {}

    static ComplexMatrix identity(int dim) {
        ComplexMatrix m(dim);
        for (int i = 0; i < dim; ++i) m.re_at(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }

    std::complex<double> operator()(int r, int c) const {
        const std::size_t i = idx(r, c);
        return {re_[i], im_[i]};
    }
    void set(int r, int c, std::complex<double> z) {
        const std::size_t i = idx(r, c);
        re_[i] = z.real();
        im_[i] = z.imag();
    }

    double& re_at(int r, int c) { return re_[idx(r, c)]; }
    double& im_at(int r, int c) { return im_[idx(r, c)]; }
    double re_at(int r, int c) const { return re_[idx(r, c)]; }
    double im_at(int r, int c) const { return im_[idx(r, c)]; }

    const double* re_data() const { return re_.data(); }
    const double* im_data() const { return im_.data(); }
    double* re_data() { return re_.data(); }
    double* im_data() { return im_.data(); }

    std::complex<double> trace() const;
    ComplexMatrix adjoint() const;

    bool operator==(const ComplexMatrix& o) const {
        return dim_ == o.dim_ && re_ == o.re_ && im_ == o.im_;
    }

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * dim_ + c;
    }

    int dim_ = 0;
    std::vector<double> re_, im_;
};

// C = A * B through the active kernel backend.
ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product, a's indices major.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// acc += s * m
void accumulate(ComplexMatrix& acc, const ComplexMatrix& m, double s = 1.0);

ComplexMatrix scale(const ComplexMatrix& m, double s);

// A * B * A^dagger
ComplexMatrix conjugate_with(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(A * B) without forming the product.
std::complex<double> trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// max_ij |m_ij - conj(m_ji)|
double hermiticity_defect(const ComplexMatrix& m);

}  // namespace bellswap
