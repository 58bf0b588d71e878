#pragma once

#include <array>
#include <optional>

#include "bellswap/nonlocality.hpp"

namespace bellswap {

// Probability below which an outcome is reported without a conditional state.
inline constexpr double kSwapProbFloor = 1e-12;

struct SwapOutcome {
    BellLabel label = BellLabel::b00;
    double probability = 0;
    std::optional<DensityMatrix> conditional_state;  // over qubits (A, C)
};

// Bell-basis measurement on Bob's two qubits of rho_AB (x) rho_BC.
// Qubit order of the joint state is (A, B1, B2, C): B1 is the second qubit
// of rho_AB and B2 the first qubit of rho_BC. Outcomes come back in fixed
// label order b00, b01, b10, b11.
std::array<SwapOutcome, 4> swap_outcomes(const DensityMatrix& rho_ab,
                                         const DensityMatrix& rho_bc);

struct SwapAnalysis {
    SwapOutcome outcome;
    std::optional<LocalityReport> report;               // of the conditional state
    std::optional<LocalityReport> post_unitary_report;  // after optimal_global_unitary
};

std::array<SwapAnalysis, 4> swap_then_analyze(const DensityMatrix& rho_ab,
                                              const DensityMatrix& rho_bc);

}  // namespace bellswap
