#include "bellswap/channels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bellswap/errors.hpp"

namespace bellswap {

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : ops_(std::move(operators)) {
    if (ops_.empty()) throw domain_error("KrausSet: no operators");
    const int d = ops_.front().dim();
    ComplexMatrix sum(d);
    for (const auto& k : ops_) {
        if (k.dim() != d) throw domain_error("KrausSet: mixed operator dimensions");
        accumulate(sum, mul(k.adjoint(), k));
    }
    const double defect = max_abs_diff(sum, ComplexMatrix::identity(d));
    if (defect > 1e-12) {
        std::ostringstream os;
        os << "KrausSet: completeness defect " << defect;
        throw domain_error(os.str());
    }
}

KrausSet amplitude_damping_kraus(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw domain_error("gamma = " + std::to_string(gamma) + " outside [0, 1]");
    }
    ComplexMatrix k0(2);
    k0.re_at(0, 0) = 1.0;
    k0.re_at(1, 1) = std::sqrt(1.0 - gamma);
    ComplexMatrix k1(2);
    k1.re_at(0, 1) = std::sqrt(gamma);
    return KrausSet({k0, k1});
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& kraus, int qubit) {
    const int nq = rho.num_qubits();
    if (qubit < 0 || qubit >= nq) {
        throw std::out_of_range("apply_channel: qubit index " + std::to_string(qubit) +
                                " out of range");
    }
    ComplexMatrix out(rho.dim());
    for (const auto& k : kraus.operators()) {
        ComplexMatrix full = qubit == 0 ? k : ComplexMatrix::identity(2);
        for (int q = 1; q < nq; ++q) {
            full = tensor(full, q == qubit ? k : ComplexMatrix::identity(2));
        }
        accumulate(out, conjugate_with(full, rho.mat()));
    }
    return validate_density(out);
}

DensityMatrix damp_both(const DensityMatrix& rho, double gamma) {
    if (rho.num_qubits() != 2) throw domain_error("damp_both expects a two-qubit state");
    const KrausSet kraus = amplitude_damping_kraus(gamma);
    return apply_channel(apply_channel(rho, kraus, 0), kraus, 1);
}

}  // namespace bellswap
