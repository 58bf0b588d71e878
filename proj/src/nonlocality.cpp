#include "bellswap/nonlocality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bellswap/errors.hpp"

namespace bellswap {

namespace {

constexpr double kFlagSlack = 1e-12;

ComplexMatrix pauli(int i) {
    ComplexMatrix m(2);
    switch (i) {
        case 0:  // X
            m.re_at(0, 1) = 1.0;
            m.re_at(1, 0) = 1.0;
            break;
        case 1:  // Y
            m.im_at(0, 1) = -1.0;
            m.im_at(1, 0) = 1.0;
            break;
        default:  // Z
            m.re_at(0, 0) = 1.0;
            m.re_at(1, 1) = -1.0;
            break;
    }
    return m;
}

// sigma_i x sigma_j for all nine (i, j), built once.
const std::array<ComplexMatrix, 9>& pauli_products() {
    static const std::array<ComplexMatrix, 9> cache = [] {
        std::array<ComplexMatrix, 9> out;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                out[static_cast<std::size_t>(3 * i + j)] = tensor(pauli(i), pauli(j));
            }
        }
        return out;
    }();
    return cache;
}

double bell_diag_m(const std::array<double, 4>& p) {
    const double t1 = p[0] - p[1] + p[2] - p[3];
    const double t2 = -p[0] + p[1] + p[2] - p[3];
    const double t3 = p[0] + p[1] - p[2] - p[3];
    std::array<double, 3> sq{t1 * t1, t2 * t2, t3 * t3};
    std::sort(sq.begin(), sq.end());
    return sq[1] + sq[2];
}

}  // namespace

CorrelationMatrix correlation_matrix(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw domain_error("correlation_matrix expects a two-qubit state");
    CorrelationMatrix out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const std::complex<double> v =
                trace_product(rho.mat(), pauli_products()[static_cast<std::size_t>(3 * i + j)]);
            if (std::abs(v.imag()) > 1e-9) {
                throw validation_error("correlation entry has imaginary part " +
                                       std::to_string(v.imag()));
            }
            if (std::abs(v.real()) > 1.0 + 1e-9) {
                throw validation_error("correlation entry out of range: " +
                                       std::to_string(v.real()));
            }
            out.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v.real();
        }
    }
    return out;
}

double horodecki_M(const DensityMatrix& rho) {
    const CorrelationMatrix corr = correlation_matrix(rho);
    ComplexMatrix tt(3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) {
                s += corr.t[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] *
                     corr.t[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
            }
            tt.re_at(i, j) = s;
        }
    }
    const EigenSystem eig = hermitian_eigensystem(tt);
    return eig.values[0] + eig.values[1];
}

double abs_local_lhs(const std::array<double, 4>& v) {
    for (int i = 0; i + 1 < 4; ++i) {
        if (v[static_cast<std::size_t>(i)] < v[static_cast<std::size_t>(i) + 1] - 1e-12) {
            throw domain_error("abs_local_lhs: spectrum not sorted in decreasing order");
        }
    }
    const double u = 2.0 * v[0] + 2.0 * v[1] - 1.0;
    const double w = 2.0 * v[0] + 2.0 * v[2] - 1.0;
    return u * u + w * w;
}

double abs_local_lhs(const Spectrum& spec) { return abs_local_lhs(spec.values()); }

LocalityReport analyze(const DensityMatrix& rho) {
    LocalityReport r;
    r.horodecki_M = horodecki_M(rho);
    r.chsh_max = 2.0 * std::sqrt(std::max(0.0, r.horodecki_M));
    r.spectrum = rho.spectrum();
    r.abs_lhs = abs_local_lhs(r.spectrum);
    r.is_chsh_violating = r.horodecki_M > 1.0 + kFlagSlack;
    r.is_absolutely_local = r.abs_lhs <= 1.0 + kFlagSlack;
    return r;
}

XLocality l_abs_x(const XStateParams& s) {
    const DensityMatrix rho = x_state(s);  // validates the parameters
    XLocality out;
    out.theta1 = std::sqrt((s.a - s.d) * (s.a - s.d) + 4.0 * s.p * s.p);
    out.theta2 = std::sqrt((s.b - s.c) * (s.b - s.c) + 4.0 * s.q * s.q);
    out.theta3 = s.a + s.d - s.b - s.c;
    const double diff = out.theta1 - out.theta2;
    out.first_branch = out.theta3 * out.theta3 >= diff * diff;
    if (out.first_branch) {
        const double sum = out.theta1 + out.theta2;
        out.l_abs = sum * sum + out.theta3 * out.theta3;
    } else {
        out.l_abs = out.theta1 * out.theta1 + out.theta2 * out.theta2;
    }
    out.spectral_lhs = abs_local_lhs(rho.spectrum());
    return out;
}

double lhv_threshold_gamma(double beta) {
    if (!(beta >= 0.0 && beta <= 1.5707963267948966 + 1e-12)) {
        throw domain_error("beta = " + std::to_string(beta) + " outside [0, pi/2]");
    }
    return 1.0 / (1.0 + std::sin(2.0 * beta));
}

bool has_lhv(double gamma, double beta) {
    return gamma <= lhv_threshold_gamma(beta) + 1e-12;
}

OptimalUnitary optimal_global_unitary(const DensityMatrix& rho) {
    if (rho.dim() != 4) throw domain_error("optimal_global_unitary expects a two-qubit state");
    const EigenSystem eig = hermitian_eigensystem(rho.mat());

    std::array<int, 4> perm{0, 1, 2, 3};
    std::array<int, 4> best_perm = perm;
    double best_m = -1.0;
    do {
        std::array<double, 4> p{};
        for (int i = 0; i < 4; ++i) {
            p[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                eig.values[static_cast<std::size_t>(i)];
        }
        const double m = bell_diag_m(p);
        if (m > best_m) {
            best_m = m;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    // U maps the i-th eigenvector onto the assigned Bell vector:
    // U = B_perm V^dagger.
    ComplexMatrix bcols(4);
    for (int i = 0; i < 4; ++i) {
        const auto vec = bell_vector(kBellLabels[static_cast<std::size_t>(
            best_perm[static_cast<std::size_t>(i)])]);
        for (int r = 0; r < 4; ++r) {
            bcols.set(r, i, vec[static_cast<std::size_t>(r)]);
        }
    }
    ComplexMatrix u = mul(bcols, eig.vectors.adjoint());
    DensityMatrix sigma = validate_density(conjugate_with(u, rho.mat()));
    OptimalUnitary out{std::move(u), std::move(sigma), 0.0};
    out.m = horodecki_M(out.state);
    return out;
}

}  // namespace bellswap
