#pragma once

#include <vector>

#include "bellswap/linalg.hpp"

namespace bellswap {

// Single-qubit Kraus decomposition; completeness sum_i K_i^dagger K_i = I
// is checked to 1e-12 on construction.
class KrausSet {
public:
    explicit KrausSet(std::vector<ComplexMatrix> operators);
    const std::vector<ComplexMatrix>& operators() const { return ops_; }

private:
    std::vector<ComplexMatrix> ops_;
};

// K0 = diag(1, sqrt(1-gamma)), K1 = sqrt(gamma) |0><1|.
KrausSet amplitude_damping_kraus(double gamma);

// sum_i (I x ... x K_i x ... x I) rho (...)^dagger on one qubit.
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausSet& kraus, int qubit);

// Same-noise amplitude damping on both qubits of a two-qubit state.
DensityMatrix damp_both(const DensityMatrix& rho, double gamma);

}  // namespace bellswap
