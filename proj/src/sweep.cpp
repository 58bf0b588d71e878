#include "bellswap/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "bellswap/channels.hpp"
#include "bellswap/errors.hpp"
#include "bellswap/matrix_io.hpp"
#include "bellswap/nonlocality.hpp"
#include "bellswap/swap.hpp"

namespace bellswap {

namespace {

using ParamMap = std::map<std::string, double>;

struct PointStates {
    std::optional<DensityMatrix> single;              // damp-werner
    std::optional<std::pair<DensityMatrix, DensityMatrix>> pair;  // swap scenarios
};

double get(const ParamMap& p, const std::string& name) {
    const auto it = p.find(name);
    if (it == p.end()) throw parse_error("missing parameter: " + name);
    return it->second;
}

DensityMatrix diag_from(const ParamMap& p, const char* a, const char* b, const char* c) {
    const double va = get(p, a), vb = get(p, b), vc = get(p, c);
    return diag_state(va, vb, vc, 1.0 - va - vb - vc);
}

PointStates build_point(Scenario scenario, const ParamMap& p) {
    PointStates out;
    switch (scenario) {
        case Scenario::damp_werner:
            out.single = damp_both(werner(get(p, "alpha")), get(p, "gamma"));
            break;
        case Scenario::swap_damped_werner: {
            DensityMatrix s = damp_both(werner(get(p, "alpha")), get(p, "gamma"));
            out.pair = {s, s};
            break;
        }
        case Scenario::swap_diag:
            out.pair = {diag_from(p, "a1", "b1", "c1"), diag_from(p, "a2", "b2", "c2")};
            break;
        case Scenario::swap_gisin:
            out.pair = {gisin(get(p, "lambda1"), get(p, "alpha1")),
                        gisin(get(p, "lambda2"), get(p, "alpha2"))};
            break;
        case Scenario::swap_lhv:
            out.pair = {lhv_state(get(p, "gamma1"), get(p, "beta1")),
                        lhv_state(get(p, "gamma2"), get(p, "beta2"))};
            break;
    }
    return out;
}

std::vector<double> param_values(const ScenarioInfo& info, const ParamMap& p) {
    std::vector<double> out;
    out.reserve(info.params.size());
    for (const auto& name : info.params) out.push_back(get(p, name));
    return out;
}

void fill_analysis(SweepRow& row, const LocalityReport& report, double post_m) {
    row.has_analysis = true;
    row.m = report.horodecki_M;
    row.chsh_max = report.chsh_max;
    row.abs_lhs = report.abs_lhs;
    row.post_unitary_m = post_m;
    row.abs_local = report.is_absolutely_local;
    row.status = "ok";
}

std::vector<SweepRow> evaluate_point(const SweepSpec& spec, const ScenarioInfo& info,
                                     const ParamMap& params) {
    std::vector<SweepRow> rows;
    SweepRow base;
    base.params = param_values(info, params);
    try {
        const PointStates states = build_point(spec.scenario, params);
        if (states.single) {
            SweepRow row = base;
            row.outcome_label = "-";
            row.has_probability = true;
            row.probability = 1.0;
            const LocalityReport report = analyze(*states.single);
            fill_analysis(row, report, optimal_global_unitary(*states.single).m);
            rows.push_back(std::move(row));
        } else {
            const auto analyses = swap_then_analyze(states.pair->first, states.pair->second);
            for (const SwapAnalysis& a : analyses) {
                if (spec.outcome_filter && !spec.outcome_filter->count(a.outcome.label)) {
                    continue;
                }
                SweepRow row = base;
                row.outcome_label = std::string(to_string(a.outcome.label));
                row.has_probability = true;
                row.probability = a.outcome.probability;
                if (a.report) {
                    fill_analysis(row, *a.report, a.post_unitary_report->horodecki_M);
                } else {
                    row.status = "zero_probability";
                }
                rows.push_back(std::move(row));
            }
        }
    } catch (const domain_error&) {
        base.status = "domain_error";
        rows.assign(1, base);
    } catch (const validation_error&) {
        base.status = "validation_error";
        rows.assign(1, base);
    }
    return rows;
}

// grids + fixed + mirrored copy-2 defaults; reject unknown or missing names.
void check_spec(const SweepSpec& spec, const ScenarioInfo& info) {
    std::set<std::string> provided;
    auto known = [&](const std::string& name) {
        return std::find(info.params.begin(), info.params.end(), name) != info.params.end();
    };
    for (const auto& g : spec.grids) {
        if (!known(g.name)) {
            throw parse_error("unknown parameter '" + g.name + "' for scenario " +
                              std::string(to_string(spec.scenario)));
        }
        if (!provided.insert(g.name).second) {
            throw parse_error("parameter '" + g.name + "' given more than once");
        }
    }
    for (const auto& [name, _] : spec.fixed) {
        if (!known(name)) {
            throw parse_error("unknown parameter '" + name + "' for scenario " +
                              std::string(to_string(spec.scenario)));
        }
        if (!provided.insert(name).second) {
            throw parse_error("parameter '" + name + "' given more than once");
        }
    }
    for (const auto& name : info.params) {
        if (provided.count(name)) continue;
        const auto mirror = info.mirrors.find(name);
        if (mirror == info.mirrors.end() || !provided.count(mirror->second)) {
            throw parse_error("parameter '" + name + "' is neither swept, fixed, nor mirrored");
        }
    }
    if (spec.outcome_filter && !info.is_swap) {
        throw parse_error("outcome filter only applies to swap scenarios");
    }
    if (spec.threads < 1) throw parse_error("thread count must be >= 1");
}

}  // namespace

std::string_view to_string(Scenario s) {
    switch (s) {
        case Scenario::damp_werner: return "damp-werner";
        case Scenario::swap_diag: return "swap-diag";
        case Scenario::swap_gisin: return "swap-gisin";
        case Scenario::swap_lhv: return "swap-lhv";
        case Scenario::swap_damped_werner: return "swap-damped-werner";
    }
    return "?";
}

Scenario scenario_from_string(std::string_view s) {
    for (Scenario sc : {Scenario::damp_werner, Scenario::swap_diag, Scenario::swap_gisin,
                        Scenario::swap_lhv, Scenario::swap_damped_werner}) {
        if (s == to_string(sc)) return sc;
    }
    throw parse_error("unknown scenario: " + std::string(s));
}

const ScenarioInfo& scenario_info(Scenario s) {
    static const ScenarioInfo damp{{"alpha", "gamma"}, {}, false};
    static const ScenarioInfo swap_damped{{"alpha", "gamma"}, {}, true};
    static const ScenarioInfo diag{{"a1", "b1", "c1", "a2", "b2", "c2"},
                                   {{"a2", "a1"}, {"b2", "b1"}, {"c2", "c1"}},
                                   true};
    static const ScenarioInfo gis{{"lambda1", "alpha1", "lambda2", "alpha2"},
                                  {{"lambda2", "lambda1"}, {"alpha2", "alpha1"}},
                                  true};
    static const ScenarioInfo lhv{{"gamma1", "beta1", "gamma2", "beta2"},
                                  {{"gamma2", "gamma1"}, {"beta2", "beta1"}},
                                  true};
    switch (s) {
        case Scenario::damp_werner: return damp;
        case Scenario::swap_diag: return diag;
        case Scenario::swap_gisin: return gis;
        case Scenario::swap_lhv: return lhv;
        case Scenario::swap_damped_werner: return swap_damped;
    }
    return damp;
}

std::vector<double> grid_points(const GridRange& g) {
    if (!(g.step > 0)) throw parse_error("grid step for '" + g.name + "' must be positive");
    if (g.stop < g.start) {
        throw parse_error("grid stop < start for '" + g.name + "'");
    }
    const long long count = std::llround((g.stop - g.start) / g.step);
    std::vector<double> pts;
    if (count <= 0) {
        pts.push_back(g.start);
        return pts;
    }
    pts.reserve(static_cast<std::size_t>(count) + 1);
    for (long long i = 0; i < count; ++i) {
        pts.push_back(g.start + static_cast<double>(i) * (g.stop - g.start) /
                                    static_cast<double>(count));
    }
    pts.push_back(g.stop);  // endpoint exact, not reconstructed
    return pts;
}

std::vector<SweepRow> run_sweep_rows(const SweepSpec& spec) {
    const ScenarioInfo& info = scenario_info(spec.scenario);
    check_spec(spec, info);

    std::vector<std::vector<double>> axes;
    axes.reserve(spec.grids.size());
    std::size_t total = 1;
    for (const auto& g : spec.grids) {
        axes.push_back(grid_points(g));
        total *= axes.back().size();
    }

    auto params_for = [&](std::size_t linear) {
        ParamMap p = spec.fixed;
        // first declared grid is the outermost index
        for (std::size_t a = spec.grids.size(); a-- > 0;) {
            const auto& axis = axes[a];
            p[spec.grids[a].name] = axis[linear % axis.size()];
            linear /= axis.size();
        }
        for (const auto& [name, source] : info.mirrors) {
            if (!p.count(name)) p[name] = p.at(source);
        }
        return p;
    };

    std::vector<std::vector<SweepRow>> per_point(total);
    const int threads = std::min<int>(spec.threads, static_cast<int>(total) > 0
                                                        ? static_cast<int>(total)
                                                        : 1);
    if (threads <= 1) {
        for (std::size_t i = 0; i < total; ++i) {
            per_point[i] = evaluate_point(spec, info, params_for(i));
        }
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                for (std::size_t i = static_cast<std::size_t>(t); i < total;
                     i += static_cast<std::size_t>(threads)) {
                    per_point[i] = evaluate_point(spec, info, params_for(i));
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<SweepRow> rows;
    for (auto& point_rows : per_point) {
        for (auto& r : point_rows) rows.push_back(std::move(r));
    }
    return rows;
}

std::string format_csv_number(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string sweep_csv_header(Scenario s) {
    std::string h = "scenario";
    for (const auto& p : scenario_info(s).params) h += "," + p;
    h += ",outcome_label,probability,M,chsh_max,abs_lhs,post_unitary_M,abs_local_flag,status";
    return h;
}

std::string run_sweep_csv(const SweepSpec& spec) {
    const std::vector<SweepRow> rows = run_sweep_rows(spec);
    std::string out = sweep_csv_header(spec.scenario) + "\n";
    for (const SweepRow& r : rows) {
        out += to_string(spec.scenario);
        for (double v : r.params) out += "," + format_csv_number(v);
        out += "," + r.outcome_label;
        out += ",";
        if (r.has_probability) out += format_csv_number(r.probability);
        for (const double* v : {&r.m, &r.chsh_max, &r.abs_lhs, &r.post_unitary_m}) {
            out += ",";
            if (r.has_analysis) out += format_csv_number(*v);
        }
        out += ",";
        if (r.has_analysis) out += r.abs_local ? "1" : "0";
        out += "," + r.status + "\n";
    }
    return out;
}

std::string run_sweep_json(const SweepSpec& spec) {
    const ScenarioInfo& info = scenario_info(spec.scenario);
    const std::vector<SweepRow> rows = run_sweep_rows(spec);
    std::string out = "[";
    bool first_row = true;
    for (const SweepRow& r : rows) {
        out += first_row ? "\n" : ",\n";
        first_row = false;
        out += "  {\"scenario\": \"" + std::string(to_string(spec.scenario)) + "\"";
        for (std::size_t i = 0; i < info.params.size(); ++i) {
            out += ", \"" + info.params[i] + "\": " + format_double_17(r.params[i]);
        }
        out += ", \"outcome_label\": \"" + r.outcome_label + "\"";
        if (r.has_probability) {
            out += ", \"probability\": " + format_double_17(r.probability);
        }
        if (r.has_analysis) {
            out += ", \"M\": " + format_double_17(r.m);
            out += ", \"chsh_max\": " + format_double_17(r.chsh_max);
            out += ", \"abs_lhs\": " + format_double_17(r.abs_lhs);
            out += ", \"post_unitary_M\": " + format_double_17(r.post_unitary_m);
            out += std::string(", \"abs_local_flag\": ") + (r.abs_local ? "true" : "false");
        }
        out += ", \"status\": \"" + r.status + "\"}";
    }
    out += "\n]\n";
    return out;
}

ThresholdResult bisect(const std::function<double(double)>& f, double lo, double hi,
                       double tolerance) {
    if (!(tolerance > 0)) throw parse_error("tolerance must be positive");
    if (!(hi > lo)) throw parse_error("bracket must satisfy lo < hi");
    ThresholdResult res;
    res.f_lo = f(lo);
    res.f_hi = f(hi);
    if (!(res.f_lo * res.f_hi < 0)) {
        std::ostringstream os;
        os << "no sign change in bracket: f(" << lo << ") = " << res.f_lo << ", f(" << hi
           << ") = " << res.f_hi;
        throw bracket_error(os.str());
    }
    const bool lo_negative = res.f_lo < 0;
    int iterations = 0;
    while (hi - lo > tolerance && iterations < 200) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == lo_negative) {
            lo = mid;
        } else {
            hi = mid;
        }
        ++iterations;
    }
    res.root = 0.5 * (lo + hi);
    res.iterations = iterations;
    res.lo = lo;
    res.hi = hi;
    return res;
}

ThresholdResult run_threshold(const ThresholdQuery& query) {
    const ScenarioInfo& info = scenario_info(query.scenario);
    if (info.is_swap && !query.outcome) {
        throw parse_error("swap scenarios need an outcome for threshold search");
    }
    if (!info.is_swap && query.outcome) {
        throw parse_error("outcome only applies to swap scenarios");
    }
    if (std::find(info.params.begin(), info.params.end(), query.scan_param) ==
        info.params.end()) {
        throw parse_error("unknown scan parameter '" + query.scan_param + "'");
    }
    if (query.fixed.count(query.scan_param)) {
        throw parse_error("scan parameter '" + query.scan_param + "' is also fixed");
    }
    for (const auto& [name, _] : query.fixed) {
        if (std::find(info.params.begin(), info.params.end(), name) == info.params.end()) {
            throw parse_error("unknown parameter '" + name + "' for scenario " +
                              std::string(to_string(query.scenario)));
        }
    }

    auto criterion = [&](double x) {
        ParamMap p = query.fixed;
        p[query.scan_param] = x;
        for (const auto& [name, source] : info.mirrors) {
            if (!p.count(name)) p[name] = p.at(source);
        }
        const PointStates states = build_point(query.scenario, p);
        if (states.single) {
            return abs_local_lhs(states.single->spectrum()) - 1.0;
        }
        const auto outcomes = swap_outcomes(states.pair->first, states.pair->second);
        for (const SwapOutcome& o : outcomes) {
            if (o.label != *query.outcome) continue;
            if (!o.conditional_state) {
                throw validation_error("outcome " + std::string(to_string(o.label)) +
                                       " has zero probability at scan value " +
                                       std::to_string(x));
            }
            return abs_local_lhs(o.conditional_state->spectrum()) - 1.0;
        }
        throw std::logic_error("unreachable: outcome not found");
    };

    return bisect(criterion, query.lo, query.hi, query.tolerance);
}

}  // namespace bellswap
