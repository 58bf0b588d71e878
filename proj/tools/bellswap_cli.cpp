// bellswap: two-qubit nonlocality toolkit.
//
// Subcommands: analyze, damp, swap, sweep, threshold, validate.
// Exit codes: 0 ok, 2 parse, 3 validation, 4 bracket, 5 I/O.

#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>

#include "bellswap/channels.hpp"
#include "bellswap/errors.hpp"
#include "bellswap/matrix_io.hpp"
#include "bellswap/nonlocality.hpp"
#include "bellswap/states.hpp"
#include "bellswap/swap.hpp"
#include "bellswap/sweep.hpp"

namespace {

using namespace bellswap;

DensityMatrix load_state(const std::string& arg) {
    static const std::set<std::string> families{"werner", "gisin", "x", "diag", "lhv", "bell"};
    const auto colon = arg.find(':');
    if (colon != std::string::npos && families.count(arg.substr(0, colon))) {
        return parse_state_spec(arg);
    }
    return validate_density(read_matrix_file(arg));
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw io_error("cannot open for writing: " + out_path);
    f << text;
    if (!f) throw io_error("write failed: " + out_path);
}

std::string json_bool(bool b) { return b ? "true" : "false"; }

std::string spectrum_json(const Spectrum& s) {
    std::string out = "[";
    for (int i = 0; i < 4; ++i) {
        if (i > 0) out += ", ";
        out += format_double_17(s[i]);
    }
    return out + "]";
}

std::string report_fields_json(const LocalityReport& r) {
    std::string out;
    out += "\"horodecki_M\": " + format_double_17(r.horodecki_M);
    out += ", \"chsh_max\": " + format_double_17(r.chsh_max);
    out += ", \"spectrum\": " + spectrum_json(r.spectrum);
    out += ", \"abs_lhs\": " + format_double_17(r.abs_lhs);
    out += ", \"is_chsh_violating\": " + json_bool(r.is_chsh_violating);
    out += ", \"is_absolutely_local\": " + json_bool(r.is_absolutely_local);
    return out;
}

std::string analyze_json(const DensityMatrix& rho) {
    const LocalityReport r = analyze(rho);
    const OptimalUnitary opt = optimal_global_unitary(rho);
    std::string out = "{";
    out += report_fields_json(r);
    out += ", \"post_unitary_M\": " + format_double_17(opt.m);
    return out + "}\n";
}

std::string analyze_csv(const DensityMatrix& rho) {
    const LocalityReport r = analyze(rho);
    const OptimalUnitary opt = optimal_global_unitary(rho);
    std::string out =
        "horodecki_M,chsh_max,a1,a2,a3,a4,abs_lhs,is_chsh_violating,is_absolutely_local,"
        "post_unitary_M\n";
    out += format_csv_number(r.horodecki_M) + "," + format_csv_number(r.chsh_max);
    for (int i = 0; i < 4; ++i) out += "," + format_csv_number(r.spectrum[i]);
    out += "," + format_csv_number(r.abs_lhs);
    out += r.is_chsh_violating ? ",1" : ",0";
    out += r.is_absolutely_local ? ",1" : ",0";
    out += "," + format_csv_number(opt.m) + "\n";
    return out;
}

std::string swap_json(const DensityMatrix& a, const DensityMatrix& b) {
    const auto analyses = swap_then_analyze(a, b);
    std::string out = "[";
    bool first = true;
    for (const SwapAnalysis& an : analyses) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "  {\"label\": \"" + std::string(to_string(an.outcome.label)) + "\"";
        out += ", \"probability\": " + format_double_17(an.outcome.probability);
        if (an.outcome.conditional_state) {
            out += ",\n   \"conditional_state\": " +
                   matrix_to_json(an.outcome.conditional_state->mat(), 0);
            out += ",\n   \"report\": {" + report_fields_json(*an.report) + "}";
            out += ",\n   \"post_unitary_report\": {" +
                   report_fields_json(*an.post_unitary_report) + "}";
        } else {
            out += ", \"conditional_state\": null";
        }
        out += "}";
    }
    return out + "\n]\n";
}

std::string swap_csv(const DensityMatrix& a, const DensityMatrix& b) {
    const auto analyses = swap_then_analyze(a, b);
    std::string out =
        "outcome_label,probability,M,chsh_max,abs_lhs,post_unitary_M,abs_local_flag,status\n";
    for (const SwapAnalysis& an : analyses) {
        out += std::string(to_string(an.outcome.label)) + "," +
               format_csv_number(an.outcome.probability);
        if (an.report) {
            out += "," + format_csv_number(an.report->horodecki_M);
            out += "," + format_csv_number(an.report->chsh_max);
            out += "," + format_csv_number(an.report->abs_lhs);
            out += "," + format_csv_number(an.post_unitary_report->horodecki_M);
            out += an.report->is_absolutely_local ? ",1" : ",0";
            out += ",ok\n";
        } else {
            out += ",,,,,,zero_probability\n";
        }
    }
    return out;
}

GridRange parse_grid_flag(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw parse_error("--grid expects name=start:stop:step, got '" + text + "'");
    }
    GridRange g;
    g.name = text.substr(0, eq);
    const std::string rest = text.substr(eq + 1);
    double vals[3];
    std::size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
        auto end = rest.find(':', pos);
        if (i < 2 && end == std::string::npos) {
            throw parse_error("--grid expects name=start:stop:step, got '" + text + "'");
        }
        if (i == 2) end = rest.size();
        const std::string item = rest.substr(pos, end - pos);
        char* parse_end = nullptr;
        vals[i] = std::strtod(item.c_str(), &parse_end);
        if (item.empty() || parse_end != item.c_str() + item.size()) {
            throw parse_error("bad number '" + item + "' in --grid " + text);
        }
        pos = end + 1;
    }
    g.start = vals[0];
    g.stop = vals[1];
    g.step = vals[2];
    return g;
}

std::pair<std::string, double> parse_fix_flag(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw parse_error("--fix expects name=value, got '" + text + "'");
    }
    const std::string val = text.substr(eq + 1);
    char* parse_end = nullptr;
    const double x = std::strtod(val.c_str(), &parse_end);
    if (val.empty() || parse_end != val.c_str() + val.size()) {
        throw parse_error("bad number '" + val + "' in --fix " + text);
    }
    return {text.substr(0, eq), x};
}

// name=lo:hi
void parse_scan_flag(const std::string& text, ThresholdQuery& q) {
    const auto eq = text.find('=');
    const auto colon = text.find(':', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || eq == 0 || colon == std::string::npos) {
        throw parse_error("--scan expects name=lo:hi, got '" + text + "'");
    }
    q.scan_param = text.substr(0, eq);
    const std::string lo = text.substr(eq + 1, colon - eq - 1);
    const std::string hi = text.substr(colon + 1);
    char* e1 = nullptr;
    char* e2 = nullptr;
    q.lo = std::strtod(lo.c_str(), &e1);
    q.hi = std::strtod(hi.c_str(), &e2);
    if (lo.empty() || hi.empty() || e1 != lo.c_str() + lo.size() ||
        e2 != hi.c_str() + hi.size()) {
        throw parse_error("bad bracket in --scan " + text);
    }
}

int run(int argc, char** argv) {
    CLI::App app{"two-qubit Bell-CHSH nonlocality toolkit"};
    app.require_subcommand(1);

    std::string out_path;
    std::string format = "json";

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "locality report for a state");
    std::string analyze_state;
    analyze_cmd->add_option("state", analyze_state, "family spec or matrix file")->required();
    analyze_cmd->add_option("--out", out_path, "output path (default stdout)");
    analyze_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // damp
    auto* damp_cmd = app.add_subcommand("damp", "amplitude-damp both qubits");
    std::string damp_state;
    double damp_gamma = 0;
    damp_cmd->add_option("state", damp_state, "family spec or matrix file")->required();
    damp_cmd->add_option("gamma", damp_gamma, "noise parameter in [0,1]")->required();
    std::string damp_matrix_out;
    damp_cmd->add_option("--out", damp_matrix_out, "write damped matrix file here");

    // swap
    auto* swap_cmd = app.add_subcommand("swap", "Bell measurement on the middle pair");
    std::string swap_a, swap_b;
    swap_cmd->add_option("state1", swap_a, "source S1 state")->required();
    swap_cmd->add_option("state2", swap_b, "source S2 state")->required();
    swap_cmd->add_option("--out", out_path, "output path (default stdout)");
    swap_cmd->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "grid sweep to CSV");
    std::string sweep_scenario;
    std::vector<std::string> grid_flags, fix_flags;
    std::string outcomes_flag;
    int threads = 1;
    sweep_cmd->add_option("--scenario", sweep_scenario, "damp-werner, swap-diag, swap-gisin, swap-lhv, swap-damped-werner")
        ->required();
    sweep_cmd->add_option("--grid", grid_flags, "name=start:stop:step (first is outermost)");
    sweep_cmd->add_option("--fix", fix_flags, "name=value");
    sweep_cmd->add_option("--outcomes", outcomes_flag, "comma list of Bell labels to keep");
    sweep_cmd->add_option("--threads", threads, "worker threads (output is identical)");
    sweep_cmd->add_option("--out", out_path, "output path (default stdout)");
    sweep_cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}));

    // threshold
    auto* thr_cmd = app.add_subcommand("threshold", "bisect the abs_lhs = 1 boundary");
    std::string thr_scenario, scan_flag, outcome_flag;
    std::vector<std::string> thr_fix_flags;
    double tol = 1e-6;
    thr_cmd->add_option("--scenario", thr_scenario, "scenario name")->required();
    thr_cmd->add_option("--scan", scan_flag, "name=lo:hi")->required();
    thr_cmd->add_option("--fix", thr_fix_flags, "name=value");
    thr_cmd->add_option("--outcome", outcome_flag, "Bell label (swap scenarios)");
    thr_cmd->add_option("--tol", tol, "bracket tolerance (default 1e-6)");
    thr_cmd->add_option("--out", out_path, "output path (default stdout)");

    // validate
    auto* val_cmd = app.add_subcommand("validate", "check density-matrix invariants");
    std::string val_state;
    val_cmd->add_option("state", val_state, "family spec or matrix file")->required();
    val_cmd->add_option("--out", out_path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*analyze_cmd) {
        const DensityMatrix rho = load_state(analyze_state);
        emit(format == "csv" ? analyze_csv(rho) : analyze_json(rho), out_path);
        return 0;
    }
    if (*damp_cmd) {
        const DensityMatrix rho = load_state(damp_state);
        const DensityMatrix damped = damp_both(rho, damp_gamma);
        if (!damp_matrix_out.empty()) write_matrix_file(damp_matrix_out, damped.mat());
        const LocalityReport r = analyze(damped);
        const OptimalUnitary opt = optimal_global_unitary(damped);
        std::string out = "{\"gamma\": " + format_double_17(damp_gamma);
        out += ", " + report_fields_json(r);
        out += ", \"post_unitary_M\": " + format_double_17(opt.m);
        out += ",\n \"state\": " + matrix_to_json(damped.mat(), 0) + "}\n";
        emit(out, "");
        return 0;
    }
    if (*swap_cmd) {
        const DensityMatrix a = load_state(swap_a);
        const DensityMatrix b = load_state(swap_b);
        emit(format == "csv" ? swap_csv(a, b) : swap_json(a, b), out_path);
        return 0;
    }
    if (*sweep_cmd) {
        SweepSpec spec;
        spec.scenario = scenario_from_string(sweep_scenario);
        for (const auto& g : grid_flags) spec.grids.push_back(parse_grid_flag(g));
        for (const auto& f : fix_flags) {
            const auto [name, value] = parse_fix_flag(f);
            if (!spec.fixed.emplace(name, value).second) {
                throw parse_error("duplicate --fix " + name);
            }
        }
        if (!outcomes_flag.empty()) {
            std::set<BellLabel> filter;
            std::size_t pos = 0;
            while (pos <= outcomes_flag.size()) {
                auto end = outcomes_flag.find(',', pos);
                if (end == std::string::npos) end = outcomes_flag.size();
                filter.insert(bell_label_from_string(outcomes_flag.substr(pos, end - pos)));
                pos = end + 1;
            }
            spec.outcome_filter = std::move(filter);
        }
        spec.threads = threads;
        if (format.empty() || (!sweep_cmd->count("--format"))) format = "csv";
        emit(format == "json" ? run_sweep_json(spec) : run_sweep_csv(spec), out_path);
        return 0;
    }
    if (*thr_cmd) {
        ThresholdQuery q;
        q.scenario = scenario_from_string(thr_scenario);
        parse_scan_flag(scan_flag, q);
        for (const auto& f : thr_fix_flags) {
            const auto [name, value] = parse_fix_flag(f);
            q.fixed.emplace(name, value);
        }
        if (!outcome_flag.empty()) q.outcome = bell_label_from_string(outcome_flag);
        q.tolerance = tol;
        const ThresholdResult res = run_threshold(q);
        std::string out = "{\"scenario\": \"" + thr_scenario + "\"";
        out += ", \"scan\": \"" + q.scan_param + "\"";
        if (q.outcome) out += ", \"outcome\": \"" + std::string(to_string(*q.outcome)) + "\"";
        out += ", \"tolerance\": " + format_double_17(q.tolerance);
        out += ", \"root\": " + format_double_17(res.root);
        out += ", \"f_lo\": " + format_double_17(res.f_lo);
        out += ", \"f_hi\": " + format_double_17(res.f_hi);
        out += ", \"iterations\": " + std::to_string(res.iterations);
        out += ", \"bracket\": [" + format_double_17(res.lo) + ", " + format_double_17(res.hi) +
               "]}\n";
        emit(out, out_path);
        return 0;
    }
    if (*val_cmd) {
        const DensityMatrix rho = load_state(val_state);
        std::string out = "{\"ok\": true, \"dim\": " + std::to_string(rho.dim());
        out += ", \"num_qubits\": " + std::to_string(rho.num_qubits()) + "}\n";
        emit(out, out_path);
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const bracket_error& e) {
        std::cerr << "bracket error: " << e.what() << "\n";
        return 4;
    } catch (const io_error& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
