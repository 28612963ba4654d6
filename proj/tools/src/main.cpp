// ioncoupler: coupling between two trapped ions through a floating
// disk-wire-disk pickup, in both the linear-response and the lumped-circuit
// picture, plus the supporting electrostatics and dynamics checks.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ioncoupler/bem.hpp"
#include "ioncoupler/causal.hpp"
#include "ioncoupler/config.hpp"
#include "ioncoupler/errors.hpp"
#include "ioncoupler/image_charge.hpp"
#include "ioncoupler/linear.hpp"
#include "ioncoupler/log.hpp"
#include "ioncoupler/oscillators.hpp"
#include "ioncoupler/report.hpp"
#include "ioncoupler/sweep.hpp"
#include "ioncoupler/version.hpp"

namespace {

using namespace ioncoupler;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw validation_error("cannot open output file: " + path);
    out << text;
    if (!out)
        throw validation_error("failed writing output file: " + path);
}

system_config load_and_warn(const std::string& path) {
    std::vector<std::string> warnings;
    auto config = load_config_file(path, &warnings);
    for (const auto& w : warnings)
        log::warn(w);
    return config;
}

struct compute_args {
    std::string config_path;
    std::string model = "both";
    std::string format = "json";
    std::string output;
    bool no_timestamp = false;
};

int run_compute(const compute_args& args) {
    const auto config = load_and_warn(args.config_path);
    report_options options;
    options.model = compute_model_from_name(args.model);
    options.include_timestamp = !args.no_timestamp;
    const auto report = build_report(config, options);

    std::string text;
    if (args.format == "json")
        text = to_json(report);
    else if (args.format == "csv")
        text = to_csv(report);
    else if (args.format == "text")
        text = to_text(report);
    else
        throw validation_error("unknown format '" + args.format + "'; expected json, csv, or text");
    write_output(text, args.output);
    return 0;
}

struct sweep_args {
    std::string config_path;
    std::string parameter;
    double from = 0.0;
    double to = 0.0;
    int steps = 0;
    std::string scale = "linear";
    std::string output;
};

int run_sweep_cmd(const sweep_args& args) {
    const auto config = load_and_warn(args.config_path);
    const auto parameter = sweep_parameter_from_name(args.parameter);
    const auto scale = grid_scale_from_name(args.scale);
    write_output(run_sweep(config, parameter, args.from, args.to, args.steps, scale),
                 args.output);
    return 0;
}

struct simulate_args {
    std::string config_path;
    double duration_s = 0.0;
    double dt_s = 0.0;
    std::size_t stride = 1;
    std::string integrator = "composed4";
    std::optional<double> gamma_n_per_m;
    double x1_m = 1e-9;
    double v1_mps = 0.0;
    double x2_m = 0.0;
    double v2_mps = 0.0;
    std::string output;
};

int run_simulate(const simulate_args& args) {
    const auto config = load_and_warn(args.config_path);
    require_valid(config);

    oscillator_pair system;
    system.mass1_kg = config.ion1.mass_kg;
    system.mass2_kg = config.ion2.mass_kg;
    system.k1_n_per_m = spring_constant(config.ion1, config.trap1);
    system.k2_n_per_m = spring_constant(config.ion2, config.trap2);
    if (args.gamma_n_per_m) {
        system.coupling_n_per_m = *args.gamma_n_per_m;
    } else {
        const auto caps = compute_self_capacitances(config.geometry);
        system.coupling_n_per_m = build_linear_elements(config, caps).coupling_n_per_m;
    }

    integrator_scheme scheme;
    if (args.integrator == "composed4")
        scheme = integrator_scheme::composed_4th;
    else if (args.integrator == "verlet")
        scheme = integrator_scheme::velocity_verlet;
    else
        throw validation_error("unknown integrator '" + args.integrator +
                               "'; expected composed4 or verlet");

    const phase_state initial{args.x1_m, args.v1_mps, args.x2_m, args.v2_mps};
    const auto traj = simulate(system, initial, args.duration_s, args.dt_s, args.stride, scheme);

    std::ostringstream out;
    out << "t_s,x1_m,v1_mps,x2_m,v2_mps,e1_j,e2_j,etot_j\n";
    for (const auto& s : traj.samples) {
        out << format_number(s.t_s) << ',' << format_number(s.x1_m) << ','
            << format_number(s.v1_mps) << ',' << format_number(s.x2_m) << ','
            << format_number(s.v2_mps) << ',' << format_number(s.e1_j) << ','
            << format_number(s.e2_j) << ',' << format_number(s.e_total_j) << '\n';
    }
    write_output(out.str(), args.output);
    return 0;
}

struct oracle_args {
    std::string config_path;
    std::size_t rings = 256;
    int points = 1;
    std::optional<double> d_from;
    std::optional<double> d_to;
    std::string output;
};

// Induced-charge comparison between the infinite-plane window formula and the
// finite-disk boundary-element solve, at the config's ion-1 geometry or over
// a log grid of heights.
int run_oracle(const oracle_args& args) {
    const auto config = load_and_warn(args.config_path);
    require_valid(config);
    const double q = config.ion1.charge_c();
    const double r = config.geometry.r1_m;

    if (args.d_from.has_value() != args.d_to.has_value())
        throw validation_error("--d-from and --d-to must be given together");

    std::vector<double> heights;
    if (args.d_from) {
        heights = make_grid(*args.d_from, *args.d_to, args.points, grid_scale::log);
    } else {
        if (args.points != 1)
            throw validation_error("--points needs a height range (--d-from/--d-to)");
        heights.push_back(config.geometry.d_eq1_m);
    }

    std::ostringstream out;
    out << "d_m,r_m,q_c,q_analytic_c,q_bem_c,rel_diff\n";
    for (const double d : heights) {
        const double analytic = induced_charge_plane_window(q, d, r);
        const auto bem = solve_grounded_disk(q, d, r, args.rings);
        const double rel = (bem.induced_charge_c - analytic) / std::abs(analytic);
        out << format_number(d) << ',' << format_number(r) << ',' << format_number(q) << ','
            << format_number(analytic) << ',' << format_number(bem.induced_charge_c) << ','
            << format_number(rel) << '\n';
    }
    write_output(out.str(), args.output);
    return 0;
}

struct causal_check_args {
    std::string script_path;
    bool json = false;
};

int run_causal_check(const causal_check_args& args) {
    std::ifstream in(args.script_path, std::ios::binary);
    if (!in)
        throw validation_error("cannot open script file: " + args.script_path);
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const auto script = causal::parse_script(buffer.str());
    const auto report = causal::check_derivation(script);

    if (args.json) {
        nlohmann::ordered_json doc;
        doc["claims"] = nlohmann::ordered_json::array();
        for (const auto& v : report.verdicts) {
            nlohmann::ordered_json claim;
            claim["claim"] = causal::serialize(v.claim);
            claim["derivable"] = v.derivable;
            if (v.derivable)
                claim["rule"] = v.rule;
            doc["claims"].push_back(claim);
        }
        doc["derived"] = nlohmann::ordered_json::array();
        for (const auto& d : report.derived)
            doc["derived"].push_back(causal::serialize(d.rel));
        doc["all_derivable"] = report.all_derivable();
        std::cout << doc.dump(2) << "\n";
    } else {
        int failures = 0;
        for (const auto& v : report.verdicts) {
            if (v.derivable) {
                std::cout << "DERIVABLE      " << causal::serialize(v.claim) << "  via "
                          << v.rule << "\n";
            } else {
                std::cout << "NOT-DERIVABLE  " << causal::serialize(v.claim) << "\n";
                ++failures;
            }
        }
        if (failures == 0)
            std::cout << "all " << report.verdicts.size() << " claim(s) derivable\n";
        else
            std::cout << failures << " claim(s) not derivable\n";
    }
    return report.all_derivable() ? 0 : 3;
}

struct causal_compose_args {
    std::string rel1;
    std::string rel2;
    bool json = false;
};

int run_causal_compose(const causal_compose_args& args) {
    const auto r1 = causal::parse_relation(args.rel1);
    const auto r2 = causal::parse_relation(args.rel2);
    const auto result = causal::compose(r1, r2);

    if (args.json) {
        nlohmann::ordered_json doc;
        if (const auto* rel = std::get_if<causal::relation>(&result))
            doc["result"] = causal::serialize(*rel);
        else
            doc["no_relation"] = std::get<causal::no_relation>(result).reason;
        std::cout << doc.dump(2) << "\n";
    } else {
        if (const auto* rel = std::get_if<causal::relation>(&result))
            std::cout << causal::serialize(*rel) << "\n";
        else
            std::cout << "no relation (" << std::get<causal::no_relation>(result).reason
                      << ")\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coupling of two trapped ions through a floating disk-wire-disk pickup"};
    app.set_version_flag("--version", std::string(ioncoupler::version));
    app.require_subcommand(1);

    compute_args compute;
    auto* compute_cmd =
        app.add_subcommand("compute", "Evaluate the coupling models for one configuration");
    compute_cmd->add_option("--config", compute.config_path, "JSON config file")->required();
    compute_cmd->add_option("--model", compute.model, "linear, lumped, or both")
        ->capture_default_str();
    compute_cmd->add_option("--format", compute.format, "json, csv, or text")
        ->capture_default_str();
    compute_cmd->add_option("--output", compute.output, "Output file (default: stdout)");
    compute_cmd->add_flag("--no-timestamp", compute.no_timestamp,
                          "Omit the timestamp for reproducible output");

    sweep_args sweep;
    auto* sweep_cmd =
        app.add_subcommand("sweep", "Vary one config field over a grid, emit CSV");
    sweep_cmd->add_option("--config", sweep.config_path, "JSON config file")->required();
    sweep_cmd->add_option("--parameter", sweep.parameter, "Field to vary: " + sweepable_names())
        ->required();
    sweep_cmd->add_option("--from", sweep.from, "First grid value")->required();
    sweep_cmd->add_option("--to", sweep.to, "Last grid value")->required();
    sweep_cmd->add_option("--steps", sweep.steps, "Number of grid points (>= 2)")->required();
    sweep_cmd->add_option("--scale", sweep.scale, "linear or log")->capture_default_str();
    sweep_cmd->add_option("--output", sweep.output, "Output file (default: stdout)");

    simulate_args sim;
    auto* sim_cmd = app.add_subcommand(
        "simulate", "Integrate the two coupled oscillators, emit a trajectory CSV");
    sim_cmd->add_option("--config", sim.config_path, "JSON config file")->required();
    sim_cmd->add_option("--duration-s", sim.duration_s, "Integration time [s]")->required();
    sim_cmd->add_option("--dt-s", sim.dt_s, "Step size [s], at most fast_period/100")->required();
    sim_cmd->add_option("--stride", sim.stride, "Record every Nth step")->capture_default_str();
    sim_cmd->add_option("--integrator", sim.integrator, "composed4 or verlet")
        ->capture_default_str();
    sim_cmd->add_option("--gamma-n-per-m", sim.gamma_n_per_m,
                        "Coupling override [N/m] (default: linear-model value)");
    sim_cmd->add_option("--x1-m", sim.x1_m, "Initial ion-1 displacement [m]")
        ->capture_default_str();
    sim_cmd->add_option("--v1-mps", sim.v1_mps, "Initial ion-1 velocity [m/s]")
        ->capture_default_str();
    sim_cmd->add_option("--x2-m", sim.x2_m, "Initial ion-2 displacement [m]")
        ->capture_default_str();
    sim_cmd->add_option("--v2-mps", sim.v2_mps, "Initial ion-2 velocity [m/s]")
        ->capture_default_str();
    sim_cmd->add_option("--output", sim.output, "Output file (default: stdout)");

    oracle_args oracle;
    auto* oracle_cmd = app.add_subcommand(
        "oracle", "Compare plane-window and finite-disk induced charge, emit CSV");
    oracle_cmd->add_option("--config", oracle.config_path, "JSON config file")->required();
    oracle_cmd->add_option("--rings", oracle.rings, "Boundary-element rings (16..4096)")
        ->capture_default_str();
    oracle_cmd->add_option("--points", oracle.points, "Grid points for a height sweep")
        ->capture_default_str();
    oracle_cmd->add_option("--d-from", oracle.d_from, "Height sweep start [m]");
    oracle_cmd->add_option("--d-to", oracle.d_to, "Height sweep end [m]");
    oracle_cmd->add_option("--output", oracle.output, "Output file (default: stdout)");

    auto* causal_cmd = app.add_subcommand("causal", "Arrow-annotated equality calculus");
    causal_cmd->require_subcommand(1);
    causal_check_args check;
    auto* check_cmd =
        causal_cmd->add_subcommand("check", "Verify the claims of a derivation script");
    check_cmd->add_option("file", check.script_path, "Script: given/claim lines")->required();
    check_cmd->add_flag("--json", check.json, "Emit the verdicts as JSON");
    causal_compose_args comp;
    auto* compose_cmd =
        causal_cmd->add_subcommand("compose", "Combine two relations sharing a left variable");
    compose_cmd->add_option("rel1", comp.rel1, "First relation, e.g. \"y ->= f\"")->required();
    compose_cmd->add_option("rel2", comp.rel2, "Second relation, e.g. \"y <-= g\"")->required();
    compose_cmd->add_flag("--json", comp.json, "Emit the result as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e); // --help / --version
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*compute_cmd)
            return run_compute(compute);
        if (*sweep_cmd)
            return run_sweep_cmd(sweep);
        if (*sim_cmd)
            return run_simulate(sim);
        if (*oracle_cmd)
            return run_oracle(oracle);
        if (*check_cmd)
            return run_causal_check(check);
        if (*compose_cmd)
            return run_causal_compose(comp);
    } catch (const ioncoupler::numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ioncoupler::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
