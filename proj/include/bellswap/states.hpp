#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include "bellswap/linalg.hpp"

namespace bellswap {

// Bob's Bell outcomes: b00 |phi+>, b01 |phi->, b10 |psi+>, b11 |psi->.
enum class BellLabel { b00, b01, b10, b11 };

inline constexpr std::array<BellLabel, 4> kBellLabels{BellLabel::b00, BellLabel::b01,
                                                      BellLabel::b10, BellLabel::b11};

std::string_view to_string(BellLabel label);
BellLabel bell_label_from_string(std::string_view s);

// X-state parameters: populations a,b,c,d on the diagonal, coherences p
// (|00><11|) and q (|01><10|). Positivity requires p^2 <= ad and q^2 <= bc.
struct XStateParams {
    double a = 0, b = 0, c = 0, d = 0;
    double p = 0, q = 0;
};

// Unit vector in the computational basis |00>,|01>,|10>,|11>.
std::array<std::complex<double>, 4> bell_vector(BellLabel label);

DensityMatrix werner(double alpha);
DensityMatrix x_state(const XStateParams& params);
DensityMatrix diag_state(double a, double b, double c, double d);
DensityMatrix gisin(double lambda, double alpha);
DensityMatrix lhv_state(double gamma, double beta);
DensityMatrix bell_state(BellLabel label);
DensityMatrix bell_diagonal(double p1, double p2, double p3, double p4);

// G G^dagger / Tr(G G^dagger) with G a 4x4 standard-normal complex matrix.
// Normals come from mt19937_64(seed) via 53-bit uniforms and Box-Muller, so
// the draw is reproducible from the seed alone.
DensityMatrix random_density(std::uint64_t seed);

// Family spec strings: "werner:alpha=0.7", "gisin:lambda=0.5,alpha=0.3",
// "x:a=..,b=..,c=..,d=..,p=..,q=..", "diag:a=..,b=..,c=..,d=..",
// "lhv:gamma=..,beta=..", "bell:b00".
DensityMatrix parse_state_spec(std::string_view spec);

}  // namespace bellswap
