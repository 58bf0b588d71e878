#pragma once

#include <array>

#include "bellswap/linalg.hpp"
#include "bellswap/states.hpp"

namespace bellswap {

// Spin correlation matrix t_ij = Tr[rho (sigma_i x sigma_j)], Pauli order
// (X, Y, Z).
struct CorrelationMatrix {
    std::array<std::array<double, 3>, 3> t{};
};

CorrelationMatrix correlation_matrix(const DensityMatrix& rho);

// Horodecki criterion value: sum of the two largest eigenvalues of T^t T.
// CHSH is violated iff M > 1; the maximal CHSH expectation is 2*sqrt(M).
double horodecki_M(const DensityMatrix& rho);

// (2a1+2a2-1)^2 + (2a1+2a3-1)^2 for a decreasing spectrum a1..a4. The state
// is absolutely Bell-CHSH local iff this is <= 1.
double abs_local_lhs(const Spectrum& spec);
double abs_local_lhs(const std::array<double, 4>& sorted_descending);

struct LocalityReport {
    double horodecki_M = 0;
    double chsh_max = 0;  // 2*sqrt(M)
    Spectrum spectrum;
    double abs_lhs = 0;
    bool is_chsh_violating = false;   // M > 1 + 1e-12
    bool is_absolutely_local = true;  // abs_lhs <= 1 + 1e-12
};

LocalityReport analyze(const DensityMatrix& rho);

// X-state absolute-locality shortcut. `l_abs` is the branch formula built
// from Theta1 = sqrt((a-d)^2+4p^2), Theta2 = sqrt((b-c)^2+4q^2),
// Theta3 = a+d-b-c; ties between branches take the first. `spectral_lhs` is
// the canonical criterion on the state's spectrum, reported alongside
// because the two disagree on the second branch (the branch formula comes
// out at half the spectral value there). The spectral value is the one the
// rest of the pipeline gates on.
struct XLocality {
    double l_abs = 0;
    double spectral_lhs = 0;
    bool first_branch = true;
    double theta1 = 0, theta2 = 0, theta3 = 0;
};

XLocality l_abs_x(const XStateParams& params);

// Largest gamma for which the lhv_state family keeps a projective-measurement
// LHV model at this beta: 1 / (1 + sin 2 beta).
double lhv_threshold_gamma(double beta);
bool has_lhv(double gamma, double beta);

// Global unitary rotating rho to the Bell-diagonal state of the same
// spectrum whose CHSH value is maximal over the 24 eigenvalue-to-Bell-state
// assignments. That maximum equals abs_local_lhs of the spectrum.
struct OptimalUnitary {
    ComplexMatrix unitary;
    DensityMatrix state;
    double m = 0;  // horodecki_M of state
};

OptimalUnitary optimal_global_unitary(const DensityMatrix& rho);

}  // namespace bellswap
