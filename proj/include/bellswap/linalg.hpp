#pragma once

#include <array>
#include <span>
#include <vector>

#include "bellswap/matrix.hpp"

namespace bellswap {

inline constexpr double kValidationTol = 1e-9;

// Eigenvalues of a two-qubit density matrix, sorted in decreasing order.
// Default-constructed instances are all-zero placeholders; go through
// from_sorted for a checked value.
class Spectrum {
public:
    Spectrum() = default;

    // Validates ordering, range and unit sum.
    static Spectrum from_sorted(const std::array<double, 4>& values);

    const std::array<double, 4>& values() const { return v_; }
    double operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }

private:
    std::array<double, 4> v_{};
};

// Validated state: Hermitian, unit trace, positive semidefinite (each within
// kValidationTol), over num_qubits two-level subsystems.
class DensityMatrix {
public:
    const ComplexMatrix& mat() const { return mat_; }
    int dim() const { return mat_.dim(); }
    int num_qubits() const { return num_qubits_; }
    Spectrum spectrum() const;

private:
    friend DensityMatrix validate_density(const ComplexMatrix& m);
    DensityMatrix(ComplexMatrix m, int nq) : mat_(std::move(m)), num_qubits_(nq) {}

    ComplexMatrix mat_;
    int num_qubits_ = 0;
};

// Checks all three invariants at kValidationTol and wraps the matrix.
// Dimension must be a power of two (2, 4, 16 in practice). Throws
// validation_error naming the violated invariant and its magnitude.
DensityMatrix validate_density(const ComplexMatrix& m);

struct EigenSystem {
    std::vector<double> values;  // decreasing
    ComplexMatrix vectors;       // columns; unitary
};

// Cyclic complex Jacobi for Hermitian matrices (n <= 16). Input must be
// Hermitian within kValidationTol; it is symmetrized before rotating.
// Stops when the off-diagonal Frobenius norm drops below 1e-12 (at most
// 100 sweeps).
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

// Trace out all qubits not in `keep`; the result's factors follow keep's
// order. Qubit 0 is the leftmost (most significant) factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, int num_qubits,
                            std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);

}  // namespace bellswap
