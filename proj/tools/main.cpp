#include "operator_file.hpp"

#include <entprod/measure.hpp>
#include <entprod/models.hpp>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace entprod;
using json = nlohmann::ordered_json;

constexpr int exit_usage = 2;
constexpr int exit_numerical = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CommonOpts {
    double p = 2.0;
    std::string p_raw = "2";
    std::string log_base = "e";
    std::string format;
    std::string out = "stdout";
    std::optional<long> seed;
};

LogBase parse_base(const std::string& s) {
    if (s == "e") return LogBase::natural;
    if (s == "2") return LogBase::two;
    if (s == "10") return LogBase::ten;
    throw UsageError("--log-base must be one of e, 2, 10");
}

double parse_p(const std::string& s) {
    if (s == "inf") return schatten_inf;
    try {
        const double p = std::stod(s);
        if (p >= 1.0) return p;
    } catch (const std::exception&) {
    }
    throw UsageError("--p must be a real >= 1 or 'inf'");
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--p", opts.p_raw, "Schatten index (real >= 1 or 'inf')")
        ->capture_default_str();
    cmd->add_option("--log-base", opts.log_base, "Logarithm base")
        ->check(CLI::IsMember({"e", "2", "10"}))
        ->capture_default_str();
    cmd->add_option("--format", opts.format, "Output format (csv or json)")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out, "Output path, or 'stdout'")->capture_default_str();
    cmd->add_option("--seed", opts.seed, "Seed for seeded models");
}

void emit(const CommonOpts& opts, const std::string& text) {
    if (opts.out == "stdout") {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream out(opts.out, std::ios::binary);
    if (!out) {
        throw UsageError(fmt::format("cannot open output file '{}'", opts.out));
    }
    out << text;
}

std::string num(double v) { return fmt::format("{}", v); }

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    long points = 1;

    std::vector<double> values() const {
        if (points < 1) throw UsageError("--points must be >= 1");
        if (start > stop) throw UsageError("grid start must not exceed stop");
        if (points == 1 && start != stop) {
            throw UsageError("a single-point grid requires start == stop");
        }
        std::vector<double> v(static_cast<std::size_t>(points));
        for (long k = 0; k < points; ++k) {
            v[static_cast<std::size_t>(k)] =
                points == 1 ? start
                            : start + (stop - start) * static_cast<double>(k) /
                                  static_cast<double>(points - 1);
        }
        return v;
    }
};

struct ModelOpts {
    std::string model = "ising2";
    double h = 1.0;
    double j = 1.0;
    int n = 2;
    std::string file;
    std::string units = "J";

    void add(CLI::App* cmd) {
        cmd->add_option("--model", model, "ising2, ising_chain, or file")
            ->check(CLI::IsMember({"ising2", "ising_chain", "file"}))
            ->capture_default_str();
        cmd->add_option("--h", h, "External field h")->capture_default_str();
        cmd->add_option("--J", j, "Interaction strength J")->capture_default_str();
        cmd->add_option("--n", n, "Chain length (ising_chain)")->capture_default_str();
        cmd->add_option("--file", file, "Operator file holding the Hamiltonian");
    }

    OperatorOnSpace hamiltonian() const {
        if (model == "ising2") return ising2_hamiltonian({h, j});
        if (model == "ising_chain") return ising_chain_hamiltonian(n, h, j);
        if (file.empty()) throw UsageError("--model file requires --file");
        return cli::read_operator_file(file);
    }

    // Grid times are in units of 1/J for the two-qubit model (J != 0).
    double time_scale() const {
        if (units == "J" && model == "ising2" && j != 0.0) return 1.0 / std::abs(j);
        return 1.0;
    }
};

// ---- evolve ---------------------------------------------------------------

struct EvolveRow {
    double t;
    bool degenerate = false;
    double epsilon = 0.0;
    double norm_num = 0.0;
    double norm_den = 0.0;
    std::optional<double> closed_form;
};

int run_evolve(const ModelOpts& model, const Grid& grid, const CommonOpts& opts) {
    const double p = parse_p(opts.p_raw);
    const LogBase base = parse_base(opts.log_base);
    const OperatorOnSpace ham = model.hamiltonian();
    const double scale = model.time_scale();

    std::vector<EvolveRow> rows;
    for (double t : grid.values()) {
        const double t_phys = t * scale;
        EvolveRow row{t};
        try {
            if (p == 2.0) {
                const MeasureResult m = evolutional_measure(ham, t_phys, base);
                row.epsilon = m.epsilon;
                row.norm_num = m.norm_numerator;
                row.norm_den = m.norm_denominator;
            } else {
                OperatorOnSpace u(evolve_operator(ham.matrix, t_phys), ham.structure);
                const MeasureResult m = entanglement_production(u, p, base);
                row.epsilon = m.epsilon;
                row.norm_num = m.norm_numerator;
                row.norm_den = m.norm_denominator;
            }
            if (model.model == "ising2" && p == 2.0) {
                row.closed_form =
                    ising2_measure_closed_form({model.h, model.j}, t_phys, base);
            }
        } catch (const TracelessOperatorError&) {
            row.degenerate = true;
        } catch (const NumericalInstabilityError& e) {
            throw NumericalError(fmt::format("at t = {}: {}", num(t), e.what()));
        }
        rows.push_back(row);
    }

    std::string text;
    if (opts.format == "json") {
        json arr = json::array();
        for (const EvolveRow& r : rows) {
            json obj;
            obj["t"] = r.t;
            if (r.degenerate) {
                obj["epsilon"] = nullptr;
            } else {
                obj["epsilon"] = r.epsilon;
                obj["norm_num"] = r.norm_num;
                obj["norm_den"] = r.norm_den;
                if (r.closed_form) {
                    obj["closed_form"] = *r.closed_form;
                    obj["abs_diff"] = std::abs(*r.closed_form - r.epsilon);
                }
            }
            obj["trace_degenerate"] = r.degenerate;
            arr.push_back(obj);
        }
        text = arr.dump(2) + "\n";
    } else {
        text = "t,epsilon,norm_num,norm_den,closed_form,abs_diff,trace_degenerate\n";
        for (const EvolveRow& r : rows) {
            if (r.degenerate) {
                text += fmt::format("{},NA,NA,NA,NA,NA,1\n", num(r.t));
            } else {
                const std::string cf = r.closed_form ? num(*r.closed_form) : "";
                const std::string diff =
                    r.closed_form ? num(std::abs(*r.closed_form - r.epsilon)) : "";
                text += fmt::format("{},{},{},{},{},{},0\n", num(r.t), num(r.epsilon),
                                    num(r.norm_num), num(r.norm_den), cf, diff);
            }
        }
    }
    emit(opts, text);
    return 0;
}

// ---- thermal --------------------------------------------------------------

int run_thermal(const ModelOpts& model, const Grid& grid, const CommonOpts& opts) {
    const LogBase base = parse_base(opts.log_base);
    if (grid.start < 0.0) throw UsageError("beta grid must be >= 0");
    const OperatorOnSpace ham = model.hamiltonian();

    constexpr double route_tol = 1e-10;
    std::string worst_row;
    double worst_diff = 0.0;

    std::string text;
    json arr = json::array();
    const bool as_json = opts.format == "json";
    if (!as_json) text = "beta,epsilon_direct,epsilon_partition,Z,abs_diff\n";
    for (double beta : grid.values()) {
        const ThermalResult direct = thermal_measure_direct(ham, beta, base);
        const ThermalResult partition = thermal_measure_partition(ham, beta, base);
        const double diff = std::abs(direct.epsilon - partition.epsilon);
        if (diff > worst_diff) {
            worst_diff = diff;
            worst_row = num(beta);
        }
        if (as_json) {
            json obj;
            obj["beta"] = beta;
            obj["epsilon_direct"] = direct.epsilon;
            obj["epsilon_partition"] = partition.epsilon;
            obj["Z"] = direct.partition_function;
            obj["abs_diff"] = diff;
            arr.push_back(obj);
        } else {
            text += fmt::format("{},{},{},{},{}\n", num(beta), num(direct.epsilon),
                                num(partition.epsilon), num(direct.partition_function),
                                num(diff));
        }
    }
    if (as_json) text = arr.dump(2) + "\n";
    emit(opts, text);
    if (worst_diff >= route_tol) {
        throw NumericalError(fmt::format(
            "thermal route disagreement {} at beta = {}", num(worst_diff), worst_row));
    }
    return 0;
}

// ---- period ---------------------------------------------------------------

bool verify_period(const Ising2Params& normalized, double period) {
    constexpr int points = 1000;
    double worst = 0.0;
    for (int k = 0; k < points; ++k) {
        const double t = period * static_cast<double>(k) / points;
        try {
            const double a = ising2_measure_closed_form(normalized, t);
            const double b = ising2_measure_closed_form(normalized, t + period);
            worst = std::max(worst, std::abs(a - b));
        } catch (const TracelessOperatorError&) {
            // Isolated trace-degenerate grid points carry no information.
        }
    }
    return worst < 1e-9;
}

int run_period(double h, double j, double tolerance, const CommonOpts& opts) {
    const PeriodClass cls = classify_periodicity({h, j}, tolerance);
    json obj;
    switch (cls.kind) {
        case PeriodKind::degenerate:
            obj["kind"] = "degenerate";
            break;
        case PeriodKind::quasi_periodic:
            obj["kind"] = "quasi_periodic";
            break;
        case PeriodKind::periodic:
            obj["kind"] = "periodic";
            obj["period"] = cls.period;
            obj["p"] = cls.p;
            obj["q"] = cls.q;
            obj["verified"] = verify_period({h / j, 1.0}, cls.period);
            break;
    }
    std::string text;
    if (opts.format == "csv") {
        text = "kind,period,p,q,verified\n";
        if (cls.kind == PeriodKind::periodic) {
            text += fmt::format("periodic,{},{},{},{}\n", num(cls.period), cls.p, cls.q,
                                obj["verified"].get<bool>() ? 1 : 0);
        } else {
            text += fmt::format("{},,,,\n", obj["kind"].get<std::string>());
        }
    } else {
        text = obj.dump(2) + "\n";
    }
    emit(opts, text);
    return 0;
}

// ---- measure --------------------------------------------------------------

int run_measure(const std::string& path, const CommonOpts& opts) {
    const double p = parse_p(opts.p_raw);
    const LogBase base = parse_base(opts.log_base);
    const OperatorOnSpace op = cli::read_operator_file(path);
    const MeasureResult m = entanglement_production(op, p, base);
    const Complex tr = trace(op.matrix);

    json obj;
    obj["epsilon"] = m.epsilon;
    obj["norm_num"] = m.norm_numerator;
    obj["norm_den"] = m.norm_denominator;
    obj["trace_re"] = tr.real();
    obj["trace_im"] = tr.imag();
    obj["p"] = std::isinf(p) ? json("inf") : json(p);
    obj["log_base"] = opts.log_base;

    std::string text;
    if (opts.format == "csv") {
        text = "epsilon,norm_num,norm_den,trace_re,trace_im,p,log_base\n";
        text += fmt::format("{},{},{},{},{},{},{}\n", num(m.epsilon), num(m.norm_numerator),
                            num(m.norm_denominator), num(tr.real()), num(tr.imag()),
                            opts.p_raw, opts.log_base);
    } else {
        text = obj.dump(2) + "\n";
    }
    emit(opts, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entanglement-production measure of operators on tensor-product spaces"};
    app.require_subcommand(1);
    // --h is a model parameter, so help lives on --help only.
    app.set_help_flag("--help", "Print help and exit");
    app.option_defaults()->ignore_case(false);

    CommonOpts evolve_opts, thermal_opts, period_opts, measure_opts;
    ModelOpts evolve_model, thermal_model;
    Grid evolve_grid, thermal_grid;
    double period_h = 1.0, period_j = 1.0, period_tol = 1e-9;
    std::string measure_file;

    CLI::App* evolve = app.add_subcommand(
        "evolve", "Sweep the evolutional measure epsilon(t) over a time grid");
    evolve_model.add(evolve);
    evolve->add_option("--tmin", evolve_grid.start, "Grid start")->capture_default_str();
    evolve->add_option("--tmax", evolve_grid.stop, "Grid stop")->capture_default_str();
    evolve->add_option("--points", evolve_grid.points, "Grid size")->capture_default_str();
    evolve->add_option("--units", evolve_model.units, "Time units: J (1/J) or abs")
        ->check(CLI::IsMember({"J", "abs"}))
        ->capture_default_str();
    add_common(evolve, evolve_opts);

    CLI::App* thermal = app.add_subcommand(
        "thermal", "Sweep the thermal measure over an inverse-temperature grid");
    thermal_model.add(thermal);
    thermal->add_option("--bmin", thermal_grid.start, "Grid start")->capture_default_str();
    thermal->add_option("--bmax", thermal_grid.stop, "Grid stop")->capture_default_str();
    thermal->add_option("--points", thermal_grid.points, "Grid size")->capture_default_str();
    add_common(thermal, thermal_opts);

    CLI::App* period = app.add_subcommand(
        "period", "Classify the two-qubit measure as periodic or quasi-periodic");
    period->add_option("--h", period_h, "External field h")->capture_default_str();
    period->add_option("--J", period_j, "Interaction strength J")->capture_default_str();
    period->add_option("--tolerance", period_tol, "Rationality tolerance on h/J")
        ->capture_default_str();
    add_common(period, period_opts);

    CLI::App* measure = app.add_subcommand(
        "measure", "Evaluate the entanglement-production measure of an operator file");
    measure->add_option("--file", measure_file, "Operator file")->required();
    add_common(measure, measure_opts);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->set_help_flag("--help", "Print help and exit");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return exit_usage;
    }

    try {
        if (evolve->parsed()) return run_evolve(evolve_model, evolve_grid, evolve_opts);
        if (thermal->parsed()) return run_thermal(thermal_model, thermal_grid, thermal_opts);
        if (period->parsed()) return run_period(period_h, period_j, period_tol, period_opts);
        if (measure->parsed()) return run_measure(measure_file, measure_opts);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const entprod::cli::OperatorFileError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_usage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const TracelessOperatorError& e) {
        std::cerr << "numerical failure: " << e.what()
                  << " (the measure requires 0 != |Tr A| < inf)\n";
        return exit_numerical;
    } catch (const NumericalInstabilityError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return 0;
}
