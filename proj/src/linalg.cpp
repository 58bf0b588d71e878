#include "bellswap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "bellswap/errors.hpp"

namespace bellswap {

namespace {

constexpr double kJacobiOffTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

int qubit_count(int dim) {
    int nq = 0;
    while ((1 << nq) < dim) ++nq;
    return nq;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
    ComplexMatrix a(m.dim());
    for (int r = 0; r < m.dim(); ++r) {
        for (int c = 0; c < m.dim(); ++c) {
            a.set(r, c, 0.5 * (m(r, c) + std::conj(m(c, r))));
        }
    }
    return a;
}

double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.dim(); ++p) {
        for (int q = p + 1; q < a.dim(); ++q) {
            const double re = a.re_at(p, q), im = a.im_at(p, q);
            s += 2.0 * (re * re + im * im);
        }
    }
    return std::sqrt(s);
}

}  // namespace

Spectrum Spectrum::from_sorted(const std::array<double, 4>& values) {
    for (int i = 0; i + 1 < 4; ++i) {
        if (values[static_cast<std::size_t>(i)] <
            values[static_cast<std::size_t>(i) + 1] - 1e-12) {
            throw domain_error("spectrum is not sorted in decreasing order");
        }
    }
    double sum = 0.0;
    for (double v : values) {
        if (v < -kValidationTol || v > 1.0 + kValidationTol) {
            throw domain_error("spectrum value outside [0, 1]: " + std::to_string(v));
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kValidationTol) {
        throw domain_error("spectrum does not sum to 1: " + std::to_string(sum));
    }
    Spectrum s;
    s.v_ = values;
    return s;
}

Spectrum DensityMatrix::spectrum() const {
    if (dim() != 4) throw domain_error("spectrum requires a two-qubit state");
    const EigenSystem eig = hermitian_eigensystem(mat_);
    return Spectrum::from_sorted({eig.values[0], eig.values[1], eig.values[2], eig.values[3]});
}

DensityMatrix validate_density(const ComplexMatrix& m) {
    if (!is_power_of_two(m.dim()) || m.dim() < 2) {
        throw validation_error("density matrix dimension must be a power of two, got " +
                               std::to_string(m.dim()));
    }
    const double herm = hermiticity_defect(m);
    if (herm > kValidationTol) {
        std::ostringstream os;
        os << "matrix is not Hermitian: max |m - m^dagger| = " << herm;
        throw validation_error(os.str());
    }
    const std::complex<double> tr = m.trace();
    if (std::abs(tr - 1.0) > kValidationTol) {
        std::ostringstream os;
        os << "trace is not 1: |trace - 1| = " << std::abs(tr - 1.0);
        throw validation_error(os.str());
    }
    const EigenSystem eig = hermitian_eigensystem(symmetrized(m));
    const double min_eig = eig.values.back();
    if (min_eig < -kValidationTol) {
        std::ostringstream os;
        os << "matrix is not positive semidefinite: smallest eigenvalue = " << min_eig;
        throw validation_error(os.str());
    }
    return DensityMatrix(m, qubit_count(m.dim()));
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
    const int n = m.dim();
    const double herm = hermiticity_defect(m);
    if (herm > kValidationTol) {
        std::ostringstream os;
        os << "eigensystem input not Hermitian: max |m - m^dagger| = " << herm;
        throw validation_error(os.str());
    }

    ComplexMatrix a = symmetrized(m);
    ComplexMatrix v = ComplexMatrix::identity(n);

    int sweep = 0;
    for (; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kJacobiOffTol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double gr = a.re_at(p, q);
                const double gi = a.im_at(p, q);
                const double g = std::hypot(gr, gi);
                if (g < 1e-300) {
                    a.set(p, q, 0.0);
                    a.set(q, p, 0.0);
                    continue;
                }
                // Phase of a_pq; absorbing it reduces the pivot to the real
                // symmetric case.
                const double ur = gr / g, ui = gi / g;
                const double app = a.re_at(p, p);
                const double aqq = a.re_at(q, q);
                const double zeta = (aqq - app) / (2.0 * g);
                const double t =
                    (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int r = 0; r < n; ++r) {
                    if (r == p || r == q) continue;
                    const std::complex<double> arp = a(r, p);
                    const std::complex<double> arq = a(r, q);
                    const std::complex<double> u{ur, ui};
                    const std::complex<double> nrp = c * arp - s * std::conj(u) * arq;
                    const std::complex<double> nrq = s * u * arp + c * arq;
                    a.set(r, p, nrp);
                    a.set(p, r, std::conj(nrp));
                    a.set(r, q, nrq);
                    a.set(q, r, std::conj(nrq));
                }
                a.set(p, p, app - t * g);
                a.set(q, q, aqq + t * g);
                a.set(p, q, 0.0);
                a.set(q, p, 0.0);

                for (int r = 0; r < n; ++r) {
                    const std::complex<double> vrp = v(r, p);
                    const std::complex<double> vrq = v(r, q);
                    const std::complex<double> u{ur, ui};
                    v.set(r, p, c * vrp - s * std::conj(u) * vrq);
                    v.set(r, q, s * u * vrp + c * vrq);
                }
            }
        }
    }
    if (off_diagonal_norm(a) > kJacobiOffTol) {
        throw std::runtime_error("jacobi eigensolver did not converge in 100 sweeps");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a.re_at(i, i) > a.re_at(j, j); });

    EigenSystem out;
    out.values.resize(static_cast<std::size_t>(n));
    out.vectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.values[static_cast<std::size_t>(k)] = a.re_at(order[static_cast<std::size_t>(k)],
                                                          order[static_cast<std::size_t>(k)]);
        for (int r = 0; r < n; ++r) {
            out.vectors.set(r, k, v(r, order[static_cast<std::size_t>(k)]));
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, int num_qubits,
                            std::span<const int> keep) {
    const int dim = 1 << num_qubits;
    if (m.dim() != dim) {
        throw domain_error("matrix dimension does not match qubit count");
    }
    if (keep.empty()) throw std::out_of_range("partial_trace: keep set is empty");
    std::vector<bool> seen(static_cast<std::size_t>(num_qubits), false);
    for (int q : keep) {
        if (q < 0 || q >= num_qubits) {
            throw std::out_of_range("partial_trace: qubit index " + std::to_string(q) +
                                    " out of range");
        }
        if (seen[static_cast<std::size_t>(q)]) {
            throw std::out_of_range("partial_trace: duplicate qubit index " + std::to_string(q));
        }
        seen[static_cast<std::size_t>(q)] = true;
    }

    std::vector<int> traced;
    for (int q = 0; q < num_qubits; ++q) {
        if (!seen[static_cast<std::size_t>(q)]) traced.push_back(q);
    }

    const int nk = static_cast<int>(keep.size());
    const int nt = static_cast<int>(traced.size());
    const int out_dim = 1 << nk;

    // Qubit q occupies bit (num_qubits - 1 - q); kept qubit j occupies output
    // bit (nk - 1 - j).
    auto full_index = [&](int kept_bits, int traced_bits) {
        int idx = 0;
        for (int j = 0; j < nk; ++j) {
            const int bit = (kept_bits >> (nk - 1 - j)) & 1;
            idx |= bit << (num_qubits - 1 - keep[static_cast<std::size_t>(j)]);
        }
        for (int j = 0; j < nt; ++j) {
            const int bit = (traced_bits >> (nt - 1 - j)) & 1;
            idx |= bit << (num_qubits - 1 - traced[static_cast<std::size_t>(j)]);
        }
        return idx;
    };

    ComplexMatrix out(out_dim);
    for (int r = 0; r < out_dim; ++r) {
        for (int c = 0; c < out_dim; ++c) {
            std::complex<double> sum = 0.0;
            for (int t = 0; t < (1 << nt); ++t) {
                sum += m(full_index(r, t), full_index(c, t));
            }
            out.set(r, c, sum);
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
    return validate_density(partial_trace(rho.mat(), rho.num_qubits(), keep));
}

}  // namespace bellswap
