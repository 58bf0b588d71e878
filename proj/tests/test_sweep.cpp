#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "bellswap/channels.hpp"
#include "bellswap/errors.hpp"
#include "bellswap/nonlocality.hpp"
#include "bellswap/swap.hpp"
#include "bellswap/sweep.hpp"
#include "test_util.hpp"

using namespace bellswap;
namespace tu = bellswap::testutil;

TEST_CASE("grid points: inclusive endpoints with rounded step count") {
    const auto g1 = grid_points({"x", 0.0, 1.0, 0.1});
    CHECK(g1.size() == 11);
    CHECK(g1.front() == 0.0);
    CHECK(g1.back() == 1.0);

    // (stop-start)/step = 3.33 rounds to 3 steps -> 4 points
    const auto g2 = grid_points({"x", 0.0, 1.0, 0.3});
    CHECK(g2.size() == 4);
    CHECK(g2.back() == 1.0);

    const auto g3 = grid_points({"x", 0.5, 0.5, 0.1});
    CHECK(g3.size() == 1);
    CHECK(g3.front() == 0.5);

    CHECK_THROWS_AS((void)grid_points({"x", 0.0, 1.0, 0.0}), parse_error);
    CHECK_THROWS_AS((void)grid_points({"x", 1.0, 0.0, 0.1}), parse_error);
}

TEST_CASE("damp-werner sweep rows match direct evaluation") {
    SweepSpec spec;
    spec.scenario = Scenario::damp_werner;
    spec.grids.push_back({"alpha", 0.0, 1.0, 0.25});
    spec.fixed["gamma"] = 0.5;

    const auto rows = run_sweep_rows(spec);
    REQUIRE(rows.size() == 5);
    for (int i = 0; i < 5; ++i) {
        const SweepRow& r = rows[static_cast<std::size_t>(i)];
        const double alpha = 0.25 * i;
        CHECK(r.params[0] == alpha);
        CHECK(r.params[1] == 0.5);
        CHECK(r.outcome_label == "-");
        CHECK(r.probability == 1.0);
        CHECK(r.status == "ok");
        const LocalityReport want = analyze(damp_both(werner(alpha), 0.5));
        CHECK(r.m == doctest::Approx(want.horodecki_M).epsilon(1e-15));
        CHECK(r.abs_lhs == doctest::Approx(want.abs_lhs).epsilon(1e-15));
        CHECK(r.abs_local == want.is_absolutely_local);
    }
}

TEST_CASE("csv emission: header, formatting, error rows") {
    SweepSpec spec;
    spec.scenario = Scenario::swap_diag;
    spec.fixed = {{"a1", 0.2}, {"b1", 0.2}, {"c1", 0.1}};
    spec.grids.push_back({"c2", 0.0, 0.9, 0.3});  // last point pushes d2 below 0

    const std::string csv = run_sweep_csv(spec);
    CHECK(csv.rfind("scenario,a1,b1,c1,a2,b2,c2,outcome_label,probability,M,chsh_max,"
                    "abs_lhs,post_unitary_M,abs_local_flag,status\n", 0) == 0);
    CHECK(csv.find("domain_error") != std::string::npos);
    // the failed point contributes exactly one row with empty analysis cells
    CHECK(csv.find("swap-diag,0.2,0.2,0.1,0.2,0.2,0.9,-,,,,,,,domain_error\n") !=
          std::string::npos);
    // successful points carry four outcome rows each: 3 ok points x 4 + 1 error row
    const auto rows = run_sweep_rows(spec);
    CHECK(rows.size() == 13);
}

TEST_CASE("outcome filter and parameter validation") {
    SweepSpec spec;
    spec.scenario = Scenario::swap_lhv;
    spec.fixed = {{"gamma1", 0.5}};
    spec.grids.push_back({"beta1", 0.0, 1.5, 0.5});
    spec.outcome_filter = std::set<BellLabel>{BellLabel::b10, BellLabel::b11};

    const auto rows = run_sweep_rows(spec);
    CHECK(rows.size() == 8);  // 4 points x 2 labels
    for (const auto& r : rows) {
        const bool is_psi = r.outcome_label == "b10" || r.outcome_label == "b11";
        CHECK(is_psi);
    }

    SweepSpec bad = spec;
    bad.grids.push_back({"beta9", 0.0, 1.0, 0.5});
    CHECK_THROWS_AS((void)run_sweep_rows(bad), parse_error);

    SweepSpec missing;
    missing.scenario = Scenario::swap_lhv;
    missing.grids.push_back({"beta1", 0.0, 1.0, 0.5});
    CHECK_THROWS_AS((void)run_sweep_rows(missing), parse_error);  // gamma1 unresolved

    SweepSpec dup = spec;
    dup.fixed["beta1"] = 0.3;
    CHECK_THROWS_AS((void)run_sweep_rows(dup), parse_error);

    SweepSpec filter_on_plain;
    filter_on_plain.scenario = Scenario::damp_werner;
    filter_on_plain.grids.push_back({"alpha", 0.0, 1.0, 0.5});
    filter_on_plain.fixed["gamma"] = 0.1;
    filter_on_plain.outcome_filter = std::set<BellLabel>{BellLabel::b00};
    CHECK_THROWS_AS((void)run_sweep_rows(filter_on_plain), parse_error);
}

TEST_CASE("swap-lhv sweep reproduces the success-probability curve") {
    SweepSpec spec;
    spec.scenario = Scenario::swap_lhv;
    spec.fixed = {{"gamma1", 0.5}};
    spec.grids.push_back({"beta1", 0.0, tu::kPi / 2, (tu::kPi / 2) / 40.0});
    spec.outcome_filter = std::set<BellLabel>{BellLabel::b10, BellLabel::b11};

    for (const SweepRow& r : run_sweep_rows(spec)) {
        const double beta = r.params[1];
        CHECK(std::abs(r.probability - (7.0 + std::cos(4.0 * beta)) / 32.0) <= 1e-10);
    }
}

TEST_CASE("sweep output is bit-identical across runs and thread counts") {
    SweepSpec spec;
    spec.scenario = Scenario::swap_damped_werner;
    spec.grids.push_back({"alpha", 0.5, 1.0, 0.1});
    spec.grids.push_back({"gamma", 0.0, 0.6, 0.2});

    const std::string once = run_sweep_csv(spec);
    const std::string twice = run_sweep_csv(spec);
    CHECK(once == twice);

    SweepSpec threaded = spec;
    threaded.threads = 2;
    CHECK(run_sweep_csv(threaded) == once);

    threaded.threads = 7;
    CHECK(run_sweep_csv(threaded) == once);

    // row order: first grid is the outermost index
    const auto rows = run_sweep_rows(spec);
    REQUIRE(rows.size() >= 8u * 4u);
    CHECK(rows[0].params[0] == 0.5);
    CHECK(rows[0].params[1] == 0.0);
    CHECK(rows[4].params[1] == doctest::Approx(0.2));  // gamma advances first
}

TEST_CASE("json sweep output carries the same rows") {
    SweepSpec spec;
    spec.scenario = Scenario::damp_werner;
    spec.grids.push_back({"alpha", 0.0, 1.0, 0.5});
    spec.fixed["gamma"] = 0.25;
    const std::string json = run_sweep_json(spec);
    CHECK(json.find("\"alpha\": 0.5") != std::string::npos);
    CHECK(json.find("\"status\": \"ok\"") != std::string::npos);
}

TEST_CASE("diag swap sweep covers the shaded-region claims") {
    // c1 = 1/2 slice with mirrored copy-2 populations: both success groups
    // appear once the inputs are restricted to absolutely local pairs
    SweepSpec spec;
    spec.scenario = Scenario::swap_diag;
    spec.fixed = {{"c1", 0.5}};
    spec.grids.push_back({"a1", 0.02, 0.44, 0.042});
    spec.grids.push_back({"b1", 0.02, 0.44, 0.042});
    spec.grids.push_back({"c2", 0.02, 0.96, 0.094});

    bool phi_group = false, psi_group = false;
    for (const SweepRow& r : run_sweep_rows(spec)) {
        if (r.status != "ok" || r.abs_lhs <= 1.0 + 1e-9) continue;
        const double a1 = r.params[0], b1 = r.params[1], c2 = r.params[5];
        const DensityMatrix in1 = diag_state(a1, b1, 0.5, 0.5 - a1 - b1);
        const DensityMatrix in2 = diag_state(a1, b1, c2, 1.0 - a1 - b1 - c2);
        if (!analyze(in1).is_absolutely_local || !analyze(in2).is_absolutely_local) continue;
        if (r.outcome_label == "b00" || r.outcome_label == "b01") phi_group = true;
        if (r.outcome_label == "b10" || r.outcome_label == "b11") psi_group = true;
    }
    CHECK(phi_group);
    CHECK(psi_group);
}

TEST_CASE("identical diag copies: success groups never overlap") {
    int phi_pts = 0, psi_pts = 0, common = 0;
    for (int i = 0; i < 14; ++i) {
        for (int j = 0; j < 14; ++j) {
            for (int k = 0; k < 14; ++k) {
                const double a = 0.02 + 0.94 * i / 13.0;
                const double b = 0.02 + 0.94 * j / 13.0;
                const double c = 0.02 + 0.94 * k / 13.0;
                const double d = 1.0 - a - b - c;
                if (d < 0.0) continue;
                const DensityMatrix rho = diag_state(a, b, c, d);
                if (!analyze(rho).is_absolutely_local) continue;
                const auto outs = swap_then_analyze(rho, rho);
                const bool phi = (outs[0].report && outs[0].report->abs_lhs > 1 + 1e-9) ||
                                 (outs[1].report && outs[1].report->abs_lhs > 1 + 1e-9);
                const bool psi = (outs[2].report && outs[2].report->abs_lhs > 1 + 1e-9) ||
                                 (outs[3].report && outs[3].report->abs_lhs > 1 + 1e-9);
                phi_pts += phi;
                psi_pts += psi;
                common += phi && psi;
            }
        }
    }
    CHECK(phi_pts > 0);
    CHECK(psi_pts > 0);
    CHECK(common == 0);
}

TEST_CASE("threshold: undamped Werner boundary and failure modes") {
    ThresholdQuery q;
    q.scenario = Scenario::damp_werner;
    q.fixed["gamma"] = 0.0;
    q.scan_param = "alpha";
    q.lo = 0.5;
    q.hi = 0.9;
    const ThresholdResult res = run_threshold(q);
    CHECK(std::abs(res.root - 1.0 / std::sqrt(2.0)) <= 1e-6);
    CHECK(res.f_lo < 0);
    CHECK(res.f_hi > 0);
    const int bound = static_cast<int>(std::ceil(std::log2((q.hi - q.lo) / q.tolerance))) + 1;
    CHECK(res.iterations <= bound);

    ThresholdQuery degenerate = q;
    degenerate.lo = 0.1;
    degenerate.hi = 0.3;
    CHECK_THROWS_AS((void)run_threshold(degenerate), bracket_error);

    ThresholdQuery swap_no_outcome;
    swap_no_outcome.scenario = Scenario::swap_damped_werner;
    swap_no_outcome.fixed["gamma"] = 0.5;
    swap_no_outcome.scan_param = "alpha";
    CHECK_THROWS_AS((void)run_threshold(swap_no_outcome), parse_error);

    ThresholdQuery bad_scan = q;
    bad_scan.scan_param = "delta";
    CHECK_THROWS_AS((void)run_threshold(bad_scan), parse_error);
}

TEST_CASE("damped-Werner region boundary: spot points and the gamma scan") {
    // a strongly nonlocal Werner state that heavy damping pushes into the
    // absolutely local region, while light damping leaves it outside
    CHECK(analyze(werner(0.9)).is_chsh_violating);
    CHECK(analyze(damp_both(werner(0.9), 0.5)).is_absolutely_local);
    CHECK(!analyze(damp_both(werner(0.9), 0.01)).is_absolutely_local);

    ThresholdQuery q;
    q.scenario = Scenario::damp_werner;
    q.fixed["alpha"] = 0.9;
    q.scan_param = "gamma";
    q.lo = 0.0;
    q.hi = 0.5;
    const ThresholdResult res = run_threshold(q);
    CHECK(res.root == doctest::Approx(0.2896952).epsilon(1e-4));

    ThresholdQuery clash = q;
    clash.fixed["gamma"] = 0.3;
    CHECK_THROWS_AS((void)run_threshold(clash), parse_error);
    ThresholdQuery unknown_fix = q;
    unknown_fix.fixed["zeta"] = 0.1;
    CHECK_THROWS_AS((void)run_threshold(unknown_fix), parse_error);
}

TEST_CASE("threshold: swapped damped Werner reproduces the alpha star") {
    for (BellLabel outcome : {BellLabel::b10, BellLabel::b11}) {
        ThresholdQuery q;
        q.scenario = Scenario::swap_damped_werner;
        q.fixed["gamma"] = 0.5;
        q.scan_param = "alpha";
        q.lo = 0.8;
        q.hi = 1.0;
        q.outcome = outcome;
        const ThresholdResult res = run_threshold(q);
        CHECK(std::abs(res.root - 0.908433) <= 1e-4);
    }
}
