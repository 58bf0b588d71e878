#include "bellswap/swap.hpp"

#include "bellswap/errors.hpp"

namespace bellswap {

namespace {

// I2 x |b><b| x I2 for each Bell label.
const std::array<ComplexMatrix, 4>& bell_projectors16() {
    static const std::array<ComplexMatrix, 4> cache = [] {
        std::array<ComplexMatrix, 4> out;
        const ComplexMatrix eye2 = ComplexMatrix::identity(2);
        for (int i = 0; i < 4; ++i) {
            const ComplexMatrix proj = bell_state(kBellLabels[static_cast<std::size_t>(i)]).mat();
            out[static_cast<std::size_t>(i)] = tensor(tensor(eye2, proj), eye2);
        }
        return out;
    }();
    return cache;
}

}  // namespace

std::array<SwapOutcome, 4> swap_outcomes(const DensityMatrix& rho_ab,
                                         const DensityMatrix& rho_bc) {
    if (rho_ab.dim() != 4 || rho_bc.dim() != 4) {
        throw domain_error("swap requires two two-qubit states");
    }
    const ComplexMatrix joint = tensor(rho_ab.mat(), rho_bc.mat());
    static constexpr std::array<int, 2> kKeepAC{0, 3};

    std::array<SwapOutcome, 4> out;
    for (int i = 0; i < 4; ++i) {
        const ComplexMatrix& proj = bell_projectors16()[static_cast<std::size_t>(i)];
        const ComplexMatrix projected = mul(mul(proj, joint), proj);
        const double p = projected.trace().real();
        SwapOutcome& o = out[static_cast<std::size_t>(i)];
        o.label = kBellLabels[static_cast<std::size_t>(i)];
        o.probability = p;
        if (p >= kSwapProbFloor) {
            const ComplexMatrix reduced = partial_trace(projected, 4, kKeepAC);
            o.conditional_state = validate_density(scale(reduced, 1.0 / p));
        }
    }
    return out;
}

std::array<SwapAnalysis, 4> swap_then_analyze(const DensityMatrix& rho_ab,
                                              const DensityMatrix& rho_bc) {
    std::array<SwapOutcome, 4> outcomes = swap_outcomes(rho_ab, rho_bc);
    std::array<SwapAnalysis, 4> out;
    for (int i = 0; i < 4; ++i) {
        SwapAnalysis& a = out[static_cast<std::size_t>(i)];
        a.outcome = std::move(outcomes[static_cast<std::size_t>(i)]);
        if (a.outcome.conditional_state) {
            a.report = analyze(*a.outcome.conditional_state);
            a.post_unitary_report =
                analyze(optimal_global_unitary(*a.outcome.conditional_state).state);
        }
    }
    return out;
}

}  // namespace bellswap
