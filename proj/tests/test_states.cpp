#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bellswap/errors.hpp"
#include "bellswap/states.hpp"
#include "test_util.hpp"

using namespace bellswap;
namespace tu = bellswap::testutil;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("werner fixed points") {
    CHECK(max_abs_diff(werner(0.0).mat(), scale(ComplexMatrix::identity(4), 0.25)) == 0.0);
    CHECK(max_abs_diff(werner(1.0).mat(), bell_state(BellLabel::b11).mat()) < 1e-15);

    const ComplexMatrix w = werner(0.5).mat();
    CHECK(w(0, 0).real() == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(w(1, 1).real() == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(w(2, 2).real() == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(w(3, 3).real() == doctest::Approx(0.125).epsilon(1e-15));
    CHECK(w(1, 2).real() == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK(w(0, 3) == std::complex<double>(0, 0));

    CHECK_THROWS_AS((void)werner(-0.01), domain_error);
    CHECK_THROWS_AS((void)werner(1.01), domain_error);
}

TEST_CASE("werner equals its x-state parameterization on a 101-point grid") {
    for (int i = 0; i <= 100; ++i) {
        const double alpha = i / 100.0;
        const XStateParams p{(1 - alpha) / 4, (1 + alpha) / 4, (1 + alpha) / 4,
                             (1 - alpha) / 4, 0.0, -alpha / 2};
        CHECK(max_abs_diff(werner(alpha).mat(), x_state(p).mat()) <= 1e-12);
    }
}

TEST_CASE("x_state layout and domain checks") {
    CHECK(max_abs_diff(x_state({1, 0, 0, 0, 0, 0}).mat(), [] {
              ComplexMatrix m(4);
              m.re_at(0, 0) = 1.0;
              return m;
          }()) == 0.0);

    // Bell-diagonal X state: corners p=0.4 split 0.8 phi+ against 0.1 psi+/psi-
    const DensityMatrix lhs = x_state({0.4, 0.1, 0.1, 0.4, 0.4, 0.0});
    const DensityMatrix rhs = bell_diagonal(0.8, 0.0, 0.1, 0.1);
    CHECK(max_abs_diff(lhs.mat(), rhs.mat()) < 1e-15);

    CHECK_THROWS_WITH_AS((void)x_state({0.5, 0.5, 0.0, 0.0, 0.1, 0.0}),
                         doctest::Contains("p^2 <= a*d"), domain_error);
    CHECK_THROWS_WITH_AS((void)x_state({0.25, 0.25, 0.25, 0.25, 0.0, 0.3}),
                         doctest::Contains("q^2 <= b*c"), domain_error);
    CHECK_THROWS_AS((void)x_state({0.5, 0.5, 0.1, -0.1, 0.0, 0.0}), domain_error);
    CHECK_THROWS_AS((void)x_state({0.5, 0.4, 0.0, 0.0, 0.0, 0.0}), domain_error);
}

TEST_CASE("diag_state") {
    CHECK(max_abs_diff(diag_state(0.25, 0.25, 0.25, 0.25).mat(),
                       scale(ComplexMatrix::identity(4), 0.25)) == 0.0);
    const ComplexMatrix m = diag_state(1, 0, 0, 0).mat();
    CHECK(m(0, 0).real() == 1.0);
    CHECK_THROWS_AS((void)diag_state(0.5, 0.5, 0.5, -0.5), domain_error);
}

TEST_CASE("gisin fixed points and spectrum") {
    const ComplexMatrix g0 = gisin(0.0, 0.3).mat();
    CHECK(g0(0, 0).real() == doctest::Approx(0.5));
    CHECK(g0(3, 3).real() == doctest::Approx(0.5));
    CHECK(g0(1, 1).real() == doctest::Approx(0.0));

    CHECK(max_abs_diff(gisin(1.0, kPi / 4).mat(), bell_state(BellLabel::b10).mat()) < 1e-15);

    for (int i = 0; i < 50; ++i) {
        for (int j = 0; j < 50; ++j) {
            const double lam = i / 49.0;
            const double alpha = (kPi / 4) * j / 49.0;
            const Spectrum s = gisin(lam, alpha).spectrum();
            std::array<double, 4> want{lam, (1 - lam) / 2, (1 - lam) / 2, 0.0};
            std::sort(want.begin(), want.end(), std::greater<>());
            for (int k = 0; k < 4; ++k) {
                CHECK(std::abs(s[k] - want[static_cast<std::size_t>(k)]) <= 1e-9);
            }
        }
    }
    CHECK_THROWS_AS((void)gisin(0.5, 1.0), domain_error);  // alpha > pi/4
    CHECK_THROWS_AS((void)gisin(1.5, 0.1), domain_error);
}

TEST_CASE("lhv_state fixed points") {
    const ComplexMatrix l0 = lhv_state(0.5, 0.0).mat();
    CHECK(l0(0, 0).real() == doctest::Approx(0.5));
    CHECK(l0(1, 1).real() == doctest::Approx(0.5));
    CHECK(l0(2, 2).real() == doctest::Approx(0.0));
    CHECK(std::abs(l0(1, 2)) == doctest::Approx(0.0));

    CHECK(max_abs_diff(lhv_state(1.0, kPi / 4).mat(), bell_state(BellLabel::b11).mat()) <
          1e-15);

    // gamma = 1/2 member written out: prefactor 1/2 on every term
    const double beta = 0.7;
    const ComplexMatrix l = lhv_state(0.5, beta).mat();
    CHECK(l(0, 0).real() == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(l(1, 1).real() ==
          doctest::Approx(0.5 * std::cos(beta) * std::cos(beta)).epsilon(1e-15));
    CHECK(l(2, 2).real() ==
          doctest::Approx(0.5 * std::sin(beta) * std::sin(beta)).epsilon(1e-15));
    CHECK(l(1, 2).real() ==
          doctest::Approx(-0.5 * std::sin(beta) * std::cos(beta)).epsilon(1e-15));
    CHECK_THROWS_AS((void)lhv_state(0.5, 2.0), domain_error);
}

TEST_CASE("bell states: entries, completeness, orthonormality") {
    const ComplexMatrix phi_plus = bell_state(BellLabel::b00).mat();
    CHECK(phi_plus(0, 3).real() == doctest::Approx(0.5));
    CHECK(phi_plus(3, 0).real() == doctest::Approx(0.5));
    CHECK(phi_plus(0, 0).real() == doctest::Approx(0.5));

    CHECK(max_abs_diff(bell_state(BellLabel::b11).mat(), werner(1.0).mat()) < 1e-15);

    ComplexMatrix sum(4);
    for (BellLabel l : kBellLabels) accumulate(sum, bell_state(l).mat());
    CHECK(max_abs_diff(sum, ComplexMatrix::identity(4)) < 1e-15);

    for (BellLabel li : kBellLabels) {
        const ComplexMatrix pi = bell_state(li).mat();
        CHECK(max_abs_diff(mul(pi, pi), pi) <= 1e-12);                    // idempotent
        CHECK(std::abs(pi.trace() - 1.0) <= 1e-12);                      // rank 1
        for (BellLabel lj : kBellLabels) {
            const double overlap = std::abs(trace_product(pi, bell_state(lj).mat()));
            CHECK(std::abs(overlap - (li == lj ? 1.0 : 0.0)) <= 1e-12);  // orthogonal
        }
    }
}

TEST_CASE("bell_diagonal") {
    CHECK(max_abs_diff(bell_diagonal(0.25, 0.25, 0.25, 0.25).mat(),
                       scale(ComplexMatrix::identity(4), 0.25)) < 1e-15);
    CHECK(max_abs_diff(bell_diagonal(1, 0, 0, 0).mat(), bell_state(BellLabel::b00).mat()) <
          1e-15);
    CHECK_THROWS_AS((void)bell_diagonal(0.5, 0.5, 0.5, -0.5), domain_error);
}

TEST_CASE("random_density: deterministic, valid, generically non-degenerate") {
    const DensityMatrix a = random_density(424242);
    const DensityMatrix b = random_density(424242);
    CHECK(max_abs_diff(a.mat(), b.mat()) == 0.0);
    CHECK(max_abs_diff(a.mat(), random_density(424243).mat()) > 1e-3);

    int tight_gaps = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const Spectrum s = random_density(seed).spectrum();  // construction validates
        double min_gap = 1.0;
        for (int i = 0; i + 1 < 4; ++i) min_gap = std::min(min_gap, s[i] - s[i + 1]);
        if (min_gap <= 1e-6) ++tight_gaps;
    }
    CHECK(tight_gaps == 0);
}

TEST_CASE("state spec parsing") {
    CHECK(max_abs_diff(parse_state_spec("werner:alpha=0.7").mat(), werner(0.7).mat()) == 0.0);
    CHECK(max_abs_diff(parse_state_spec("gisin:lambda=0.5,alpha=0.3").mat(),
                       gisin(0.5, 0.3).mat()) == 0.0);
    CHECK(max_abs_diff(parse_state_spec("x:a=0.4,b=0.1,c=0.1,d=0.4,p=0.4,q=0").mat(),
                       x_state({0.4, 0.1, 0.1, 0.4, 0.4, 0}).mat()) == 0.0);
    CHECK(max_abs_diff(parse_state_spec("diag:a=0.25,b=0.25,c=0.25,d=0.25").mat(),
                       diag_state(0.25, 0.25, 0.25, 0.25).mat()) == 0.0);
    CHECK(max_abs_diff(parse_state_spec("lhv:gamma=0.5,beta=0.3").mat(),
                       lhv_state(0.5, 0.3).mat()) == 0.0);
    CHECK(max_abs_diff(parse_state_spec("bell:b01").mat(), bell_state(BellLabel::b01).mat()) ==
          0.0);

    CHECK_THROWS_AS((void)parse_state_spec("werner"), parse_error);
    CHECK_THROWS_AS((void)parse_state_spec("foo:alpha=1"), parse_error);
    CHECK_THROWS_AS((void)parse_state_spec("werner:"), parse_error);
    CHECK_THROWS_AS((void)parse_state_spec("werner:alpha=abc"), parse_error);
    CHECK_THROWS_AS((void)parse_state_spec("werner:alpha=0.5,alpha=0.6"), parse_error);
    CHECK_THROWS_AS((void)parse_state_spec("werner:alpha=0.5,beta=1"), parse_error);
    CHECK_THROWS_AS((void)parse_state_spec("bell:b22"), parse_error);
    CHECK_THROWS_AS((void)parse_state_spec("werner:alpha=1.5"), domain_error);
}
