// obfcap: beam outage probabilities and outage capacities for opportunistic
// beamforming with Poisson-distributed user locations.
//
// Subcommands:
//   outage    analytic outage probability across a rate grid
//   capacity  outage capacity, single point or parameter sweep
//   simulate  Monte Carlo rate CDF with analytic overlay and KS distance
//   validate  full invariant/property suite
//
// Exit codes: 0 success, 1 validation or goodness-of-fit failure, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "obf/obf.hpp"

namespace {

using nlohmann::json;

struct ModelSpec {
    obf::PathLossKind kind;
    double d0 = 0.0;

    std::string canonical() const {
        if (kind == obf::PathLossKind::GuardZone)
            return std::string("guard:") + obf::format_double(d0);
        return obf::to_string(kind);
    }
};

ModelSpec parse_model(const std::string& s) {
    if (s == "unbounded") return {obf::PathLossKind::Unbounded};
    if (s == "bounded") return {obf::PathLossKind::Bounded};
    if (s == "shifted") return {obf::PathLossKind::Shifted};
    if (s.rfind("guard:", 0) == 0) {
        double d0 = obf::detail::parse_double(std::string_view(s).substr(6), "guard distance");
        if (!(d0 >= 0.0))
            throw std::invalid_argument("model: guard distance must be >= 0");
        return {obf::PathLossKind::GuardZone, d0};
    }
    throw std::invalid_argument("model: expected unbounded|bounded|guard:<d0>|shifted, got '" + s + "'");
}

obf::CellRadius parse_radius(const std::string& s) {
    if (s == "inf" || s == "infinite")
        return obf::CellRadius::infinite();
    return obf::CellRadius::finite(obf::detail::parse_double(s, "radius"));
}

obf::SimMode parse_mode(const std::string& s) {
    if (s == "projection") return obf::SimMode::Projection;
    if (s == "explicit") return obf::SimMode::ExplicitBeams;
    throw std::invalid_argument("mode: expected projection|explicit, got '" + s + "'");
}

// Shared numeric flags; every command validates the subset it uses.
struct CommonArgs {
    std::vector<double> lambdas{1.0};
    std::string radius = "1";
    int beams = 2;
    double power = 1.0;
    double alpha = 4.0;
    std::vector<std::string> models{"unbounded"};
    double epsilon = 0.1;
    bool bits = false;
    bool as_json = false;
    std::string out_path;
};

void add_common_flags(CLI::App* cmd, CommonArgs& a, bool multi_model, bool multi_lambda) {
    if (multi_lambda)
        cmd->add_option("--lambda", a.lambdas, "user intensity per unit area (repeatable)");
    else
        cmd->add_option("--lambda", a.lambdas, "user intensity per unit area")->expected(1);
    cmd->add_option("--radius", a.radius, "cell radius, or 'inf' for the large-system limit");
    cmd->add_option("--beams", a.beams, "number of orthonormal beams (>= 1)");
    cmd->add_option("--power", a.power, "per-beam transmit power, linear scale");
    cmd->add_option("--alpha", a.alpha, "path-loss exponent (> 2)");
    if (multi_model)
        cmd->add_option("--model", a.models, "path-loss law: unbounded|bounded|guard:<d0>|shifted (repeatable)");
    else
        cmd->add_option("--model", a.models, "path-loss law: unbounded|bounded|guard:<d0>|shifted")->expected(1);
    cmd->add_flag("--bits", a.bits, "report rates/capacities in bits/s/Hz instead of nats/s/Hz");
    cmd->add_flag("--json", a.as_json, "emit JSON instead of CSV");
    cmd->add_option("--out", a.out_path, "write output to this path instead of stdout");
}

void emit(const obf::CsvReport& report, bool as_json, const std::string& out_path) {
    std::ostringstream body;
    if (as_json) {
        json j;
        j["metadata"] = json::object();
        for (const auto& [k, v] : report.metadata())
            j["metadata"][k] = v;
        j["columns"] = report.header();
        json rows = json::array();
        for (const auto& row : report.rows()) {
            json jr = json::array();
            for (double v : row) {
                // JSON has no literal for non-finite values; keep them readable
                if (std::isfinite(v))
                    jr.push_back(v);
                else
                    jr.push_back(obf::format_double(v));
            }
            rows.push_back(std::move(jr));
        }
        j["rows"] = std::move(rows);
        body << j.dump(2) << "\n";
    } else {
        report.write(body);
    }
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open output file " + out_path);
        f << body.str();
    }
}

double display_rate(double nats, bool bits) { return bits ? nats / std::numbers::ln2 : nats; }

void add_config_metadata(obf::CsvReport& rep, const CommonArgs& a, const std::string& model_list) {
    rep.add_metadata("tool", std::string("obfcap ") + obf::version_string);
    rep.add_metadata("model", model_list);
    rep.add_metadata("radius", a.radius == "infinite" ? "inf" : a.radius);
    rep.add_metadata("beams", std::to_string(a.beams));
    rep.add_metadata("power", a.power);
    rep.add_metadata("alpha", a.alpha);
    rep.add_metadata("units", a.bits ? "bits/s/Hz" : "nats/s/Hz");
}

// ---- outage ---------------------------------------------------------------

struct OutageArgs {
    CommonArgs common;
    double rate = -1.0;
    std::string rate_grid;
};

int cmd_outage(const OutageArgs& a) {
    std::vector<double> rates;
    if (!a.rate_grid.empty() && a.rate >= 0.0)
        throw std::invalid_argument("outage: give either --rate or --rate-grid, not both");
    if (!a.rate_grid.empty())
        rates = obf::parse_grid(a.rate_grid);
    else if (a.rate >= 0.0)
        rates = {a.rate};
    else
        throw std::invalid_argument("outage: need --rate or --rate-grid");
    for (double r : rates)
        if (!(r >= 0.0))
            throw std::invalid_argument("outage: rates must be >= 0");

    const obf::CellRadius radius = parse_radius(a.common.radius);
    struct Column {
        ModelSpec model;
        double lambda;
        std::string name;
        obf::SystemConfig cfg;
    };
    std::vector<Column> cols;
    std::string model_list;
    for (const auto& ms : a.common.models) {
        ModelSpec spec = parse_model(ms);
        if (radius.is_infinite() && spec.kind != obf::PathLossKind::Unbounded &&
            spec.kind != obf::PathLossKind::Bounded)
            throw std::invalid_argument("outage: infinite radius supports only the unbounded and bounded models");
        if (!model_list.empty())
            model_list += ";";
        model_list += spec.canonical();
        for (double lam : a.common.lambdas) {
            obf::SystemConfig cfg(lam, radius, a.common.beams, a.common.power);
            std::string name = "F_" + spec.canonical() + "_l" + obf::format_double(lam);
            for (auto& c : name)
                if (c == ':')
                    c = '-';
            cols.push_back({spec, lam, name, cfg});
        }
    }

    obf::CsvReport rep;
    add_config_metadata(rep, a.common, model_list);
    {
        std::string lam_list;
        for (double lam : a.common.lambdas)
            lam_list += (lam_list.empty() ? "" : ";") + obf::format_double(lam);
        rep.add_metadata("lambda", lam_list);
    }
    std::string cmd = "obfcap outage";
    for (const auto& ms : a.common.models)
        cmd += " --model " + parse_model(ms).canonical();
    for (double lam : a.common.lambdas)
        cmd += " --lambda " + obf::format_double(lam);
    cmd += " --radius " + a.common.radius + " --beams " + std::to_string(a.common.beams)
         + " --power " + obf::format_double(a.common.power)
         + " --alpha " + obf::format_double(a.common.alpha);
    cmd += a.rate_grid.empty() ? (" --rate " + obf::format_double(a.rate)) : (" --rate-grid " + a.rate_grid);
    if (a.common.bits) cmd += " --bits";
    if (a.common.as_json) cmd += " --json";
    rep.add_metadata("command", cmd);

    std::vector<std::string> header{"rate"};
    for (const auto& c : cols)
        header.push_back(c.name);
    rep.set_header(header);
    for (double r : rates) {
        std::vector<double> row{display_rate(r, a.common.bits)};
        for (const auto& c : cols) {
            obf::OutageResult res;
            switch (c.model.kind) {
                case obf::PathLossKind::Unbounded:
                    res = obf::rate_outage_unbounded(c.cfg, a.common.alpha, r);
                    break;
                case obf::PathLossKind::Bounded:
                    res = obf::rate_outage_bounded(c.cfg, a.common.alpha, r);
                    break;
                default: {
                    obf::PathLossModel m = c.model.kind == obf::PathLossKind::GuardZone
                                               ? obf::PathLossModel::guard_zone(a.common.alpha, c.model.d0)
                                               : obf::PathLossModel::shifted(a.common.alpha);
                    res = obf::rate_outage(c.cfg, m, r);
                    break;
                }
            }
            row.push_back(res.rate_cdf_value);
        }
        rep.add_row(std::move(row));
    }
    // record which evaluation path produced each column
    for (const auto& c : cols) {
        obf::OutageMethod method;
        if (c.model.kind == obf::PathLossKind::Unbounded)
            method = c.cfg.radius.is_infinite() ? obf::OutageMethod::LargeSystemUnbounded
                                                : obf::OutageMethod::ClosedFormUnbounded;
        else if (c.model.kind == obf::PathLossKind::Bounded)
            method = c.cfg.radius.is_infinite() ? obf::OutageMethod::LargeSystemBounded
                                                : obf::OutageMethod::ClosedFormBounded;
        else
            method = obf::OutageMethod::Quadrature;
        rep.add_metadata("method." + c.name, obf::to_string(method));
    }
    emit(rep, a.common.as_json, a.common.out_path);
    return 0;
}

// ---- capacity ---------------------------------------------------------------

struct CapacityArgs {
    CommonArgs common;
    std::string sweep;
    std::string grid;
};

int cmd_capacity(const CapacityArgs& a) {
    const ModelSpec spec = parse_model(a.common.models.at(0));
    const bool closed_form_kind = spec.kind == obf::PathLossKind::Unbounded ||
                                  spec.kind == obf::PathLossKind::Bounded;
    const obf::CapacityKind kind = spec.kind == obf::PathLossKind::Bounded
                                       ? obf::CapacityKind::Bounded
                                       : obf::CapacityKind::Unbounded;
    if (a.sweep.empty() != a.grid.empty())
        throw std::invalid_argument("capacity: --sweep and --grid must be given together");

    obf::CellRadius base_radius = parse_radius(a.common.radius);
    if (base_radius.is_infinite() && !closed_form_kind)
        throw std::invalid_argument("capacity: infinite radius supports only the unbounded and bounded models");
    const double base_lambda = a.common.lambdas.at(0);

    std::optional<obf::SweepSpec> sweep;
    if (!a.sweep.empty()) {
        obf::SweepVariable var = obf::parse_sweep_variable(a.sweep);
        if (var == obf::SweepVariable::Rate)
            throw std::invalid_argument("capacity: rate is not a sweepable variable here");
        sweep.emplace(var, obf::parse_grid(a.grid));
    }

    auto make_model = [&](double alpha) {
        switch (spec.kind) {
            case obf::PathLossKind::Unbounded: return obf::PathLossModel::unbounded(alpha);
            case obf::PathLossKind::Bounded: return obf::PathLossModel::bounded(alpha);
            case obf::PathLossKind::GuardZone: return obf::PathLossModel::guard_zone(alpha, spec.d0);
            case obf::PathLossKind::Shifted: return obf::PathLossModel::shifted(alpha);
        }
        throw std::logic_error("capacity: unreachable");
    };

    const bool doubling_cols = sweep && sweep->variable == obf::SweepVariable::Lambda &&
                               base_radius.is_infinite() && closed_form_kind;

    obf::CsvReport rep;
    add_config_metadata(rep, a.common, spec.canonical());
    rep.add_metadata("lambda", base_lambda);
    rep.add_metadata("epsilon", a.common.epsilon);
    std::string cmd = "obfcap capacity --model " + spec.canonical()
                    + " --lambda " + obf::format_double(base_lambda)
                    + " --radius " + a.common.radius
                    + " --beams " + std::to_string(a.common.beams)
                    + " --power " + obf::format_double(a.common.power)
                    + " --alpha " + obf::format_double(a.common.alpha)
                    + " --epsilon " + obf::format_double(a.common.epsilon);
    if (sweep)
        cmd += " --sweep " + a.sweep + " --grid " + a.grid;
    if (a.common.bits) cmd += " --bits";
    if (a.common.as_json) cmd += " --json";
    rep.add_metadata("command", cmd);

    const char* cap_name = a.common.bits ? "capacity_bits" : "capacity_nats";
    std::vector<std::string> header{"lambda", "radius", "alpha", "epsilon",
                                    cap_name, "y_star", "residual", "iterations", "outage_floor"};
    if (closed_form_kind)
        header.push_back(a.common.bits ? "asymptote_bits" : "asymptote_nats");
    if (doubling_cols) {
        header.push_back(a.common.bits ? "capacity_at_lambda_sq_bits" : "capacity_at_lambda_sq_nats");
        header.push_back("doubling_gap");
        header.push_back("doubling_statistic");
        header.push_back("doubling_target");
    }
    rep.set_header(header);

    std::vector<double> points = sweep ? sweep->grid : std::vector<double>{0.0};
    for (double p : points) {
        double lam = base_lambda;
        obf::CellRadius radius = base_radius;
        double alpha = a.common.alpha;
        double eps = a.common.epsilon;
        if (sweep) {
            switch (sweep->variable) {
                case obf::SweepVariable::Lambda: lam = p; break;
                case obf::SweepVariable::Radius: radius = obf::CellRadius::finite(p); break;
                case obf::SweepVariable::Alpha: alpha = p; break;
                case obf::SweepVariable::Epsilon: eps = p; break;
                case obf::SweepVariable::Rate: break;
            }
        }
        obf::SystemConfig cfg(lam, radius, a.common.beams, a.common.power);
        obf::PathLossModel model = make_model(alpha);
        obf::CapacitySolution sol = obf::capacity_finite_d(cfg, model, eps);
        std::vector<double> row{lam,
                                radius.is_infinite() ? std::numeric_limits<double>::infinity()
                                                     : radius.value(),
                                alpha, eps,
                                display_rate(sol.capacity_nats, a.common.bits),
                                sol.y_star, sol.residual,
                                static_cast<double>(sol.iterations),
                                sol.outage_floor ? 1.0 : 0.0};
        if (closed_form_kind) {
            obf::CapacityEquation eq(lam, alpha, a.common.power, a.common.beams, eps, kind);
            double asym = (kind == obf::CapacityKind::Unbounded ? obf::solve_capacity_unbounded(eq)
                                                                : obf::solve_capacity_bounded(eq))
                              .capacity_nats;
            row.push_back(display_rate(asym, a.common.bits));
        }
        if (doubling_cols) {
            auto rows = obf::scaling_diagnostic(kind, alpha, a.common.power, a.common.beams, eps,
                                                {lam / 2.0, lam, lam * 2.0});
            const obf::ScalingRow& sr = rows[1];
            row.push_back(display_rate(sr.capacity_at_lambda_sq, a.common.bits));
            row.push_back(display_rate(sr.gap, a.common.bits));
            row.push_back(sr.statistic);
            row.push_back(sr.target);
        }
        rep.add_row(std::move(row));
    }
    emit(rep, a.common.as_json, a.common.out_path);
    return 0;
}

// ---- simulate ---------------------------------------------------------------

struct SimulateArgs {
    CommonArgs common;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::string mode = "projection";
    int cdf_points = 256;
    int threads = 1;
    std::string dump_samples;
};

int cmd_simulate(const SimulateArgs& a) {
    if (a.trials < 1000)
        throw std::invalid_argument("simulate: need at least 1000 trials for a meaningful CDF");
    if (a.cdf_points < 2)
        throw std::invalid_argument("simulate: --cdf-points must be >= 2");
    if (a.threads < 1)
        throw std::invalid_argument("simulate: --threads must be >= 1");
    const obf::CellRadius radius = parse_radius(a.common.radius);
    if (radius.is_infinite())
        throw std::invalid_argument("simulate: requires a finite cell radius");
    const ModelSpec spec = parse_model(a.common.models.at(0));
    const double lam = a.common.lambdas.at(0);
    obf::SystemConfig cfg(lam, radius, a.common.beams, a.common.power);
    obf::PathLossModel model = [&] {
        switch (spec.kind) {
            case obf::PathLossKind::Unbounded: return obf::PathLossModel::unbounded(a.common.alpha);
            case obf::PathLossKind::Bounded: return obf::PathLossModel::bounded(a.common.alpha);
            case obf::PathLossKind::GuardZone: return obf::PathLossModel::guard_zone(a.common.alpha, spec.d0);
            case obf::PathLossKind::Shifted: return obf::PathLossModel::shifted(a.common.alpha);
        }
        throw std::logic_error("simulate: unreachable");
    }();
    const obf::SimMode mode = parse_mode(a.mode);
    const obf::OutageQuery query(0.0, a.common.epsilon);

    obf::SimSeed seed{a.seed};
    auto outcomes = obf::run_trials(cfg, model, a.trials, seed, mode, a.threads);
    std::vector<double> rates;
    rates.reserve(outcomes.size());
    for (const auto& t : outcomes)
        rates.push_back(t.rate_beam1);
    obf::EmpiricalCdf cdf(std::move(rates));

    auto analytic = [&](double rate) -> double {
        switch (spec.kind) {
            case obf::PathLossKind::Unbounded:
                return obf::rate_outage_unbounded(cfg, a.common.alpha, rate).rate_cdf_value;
            case obf::PathLossKind::Bounded:
                return obf::rate_outage_bounded(cfg, a.common.alpha, rate).rate_cdf_value;
            default:
                return obf::rate_outage(cfg, model, rate).rate_cdf_value;
        }
    };
    // the rate law has a single atom at 0 (empty cell)
    auto analytic_left = [&](double rate) { return rate == 0.0 ? 0.0 : analytic(rate); };
    const double ks = cdf.ks_distance(analytic, analytic_left);
    const double band = obf::ks_band_99(cdf.size());

    const double emp_cap = obf::empirical_outage_capacity(cdf, query.epsilon);
    const double ana_cap = obf::capacity_finite_d(cfg, model, query.epsilon).capacity_nats;

    obf::CsvReport rep;
    add_config_metadata(rep, a.common, spec.canonical());
    rep.add_metadata("lambda", lam);
    rep.add_metadata("epsilon", query.epsilon);
    rep.add_metadata("trials", std::to_string(a.trials));
    rep.add_metadata("seed", std::to_string(a.seed));
    rep.add_metadata("mode", obf::to_string(mode));
    rep.add_metadata("cdf_points", std::to_string(a.cdf_points));
    std::string cmd = "obfcap simulate --model " + spec.canonical()
                    + " --lambda " + obf::format_double(lam)
                    + " --radius " + a.common.radius
                    + " --beams " + std::to_string(a.common.beams)
                    + " --power " + obf::format_double(a.common.power)
                    + " --alpha " + obf::format_double(a.common.alpha)
                    + " --epsilon " + obf::format_double(query.epsilon)
                    + " --trials " + std::to_string(a.trials)
                    + " --seed " + std::to_string(a.seed)
                    + " --mode " + obf::to_string(mode)
                    + " --cdf-points " + std::to_string(a.cdf_points);
    if (a.common.bits) cmd += " --bits";
    if (a.common.as_json) cmd += " --json";
    rep.add_metadata("command", cmd);
    rep.add_metadata("ks_distance", ks);
    rep.add_metadata("ks_band_99", band);
    rep.add_metadata("empirical_capacity", display_rate(emp_cap, a.common.bits));
    rep.add_metadata("analytic_capacity", display_rate(ana_cap, a.common.bits));
    rep.add_metadata("empty_cell_rate_fraction", cdf.value_at(0.0));

    rep.set_header({"rate", "F_empirical", "F_analytic"});
    const std::size_t n = cdf.size();
    const std::size_t points = std::min<std::size_t>(static_cast<std::size_t>(a.cdf_points), n);
    for (std::size_t i = 0; i < points; ++i) {
        // evenly spaced ranks hit both tails exactly
        const std::size_t idx = points == 1 ? n - 1 : (i * (n - 1)) / (points - 1);
        const double r = cdf.samples()[idx];
        // value_at gives the right-continuous rank, correct when samples tie
        rep.add_row({display_rate(r, a.common.bits), cdf.value_at(r), analytic(r)});
    }
    emit(rep, a.common.as_json, a.common.out_path);

    if (!a.dump_samples.empty()) {
        std::ofstream f(a.dump_samples, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open sample dump file " + a.dump_samples);
        for (double r : cdf.samples())
            f << obf::format_double(display_rate(r, a.common.bits)) << "\n";
    }
    return ks <= band ? 0 : 1;
}

// ---- validate ---------------------------------------------------------------

struct ValidateArgs {
    bool quick = false;
    bool as_json = false;
    std::uint64_t seed = 2026;
    int threads = 1;
    std::string out_path;
};

int cmd_validate(const ValidateArgs& a) {
    obf::ValidationOptions opt;
    opt.quick = a.quick;
    opt.seed = a.seed;
    opt.workers = a.threads;
    auto results = obf::run_validation(opt);
    int failures = 0;
    std::ostringstream body;
    if (a.as_json) {
        json j = json::array();
        for (const auto& r : results) {
            j.push_back({{"name", r.name}, {"passed", r.passed}, {"details", r.details}});
            failures += !r.passed;
        }
        json doc;
        doc["properties"] = j;
        doc["total"] = results.size();
        doc["failed"] = failures;
        doc["mode"] = a.quick ? "quick" : "full";
        body << doc.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            body << (r.passed ? "[PASS] " : "[FAIL] ") << r.name;
            if (!r.details.empty())
                body << " - " << r.details;
            body << "\n";
            failures += !r.passed;
        }
        body << (failures == 0 ? "all properties passed" : "FAILURES: " + std::to_string(failures))
             << " (" << results.size() << " properties, " << (a.quick ? "quick" : "full") << " mode)\n";
    }
    if (a.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(a.out_path, std::ios::binary);
        if (!f)
            throw std::runtime_error("cannot open output file " + a.out_path);
        f << body.str();
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"beam outage probability and outage capacity calculator for opportunistic "
                 "beamforming with Poisson user locations"};
    app.require_subcommand(1);

    OutageArgs oa;
    CLI::App* outage = app.add_subcommand("outage", "analytic outage probability across a rate grid");
    add_common_flags(outage, oa.common, /*multi_model=*/true, /*multi_lambda=*/true);
    outage->add_option("--rate", oa.rate, "single rate threshold (nats/s/Hz)");
    outage->add_option("--rate-grid", oa.rate_grid,
                       "rate grid: lin:start:stop:count, log:start:stop:count, or v1,v2,...");

    CapacityArgs ca;
    CLI::App* capacity = app.add_subcommand("capacity", "outage capacity, single point or sweep");
    add_common_flags(capacity, ca.common, /*multi_model=*/false, /*multi_lambda=*/false);
    capacity->add_option("--epsilon", ca.common.epsilon, "outage tolerance in (0,1)");
    capacity->add_option("--sweep", ca.sweep, "sweep variable: lambda|radius|alpha|epsilon");
    capacity->add_option("--grid", ca.grid, "sweep grid (same grammar as --rate-grid)");

    SimulateArgs sa;
    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo rate CDF vs the analytic law");
    add_common_flags(simulate, sa.common, /*multi_model=*/false, /*multi_lambda=*/false);
    simulate->add_option("--epsilon", sa.common.epsilon, "outage tolerance for the quantile capacity");
    simulate->add_option("--trials", sa.trials, "number of Monte Carlo trials (>= 1000)");
    simulate->add_option("--seed", sa.seed, "master seed; trials derive independent streams");
    simulate->add_option("--mode", sa.mode, "sampling mode: projection|explicit");
    simulate->add_option("--cdf-points", sa.cdf_points, "number of CDF rows to emit");
    simulate->add_option("--threads", sa.threads, "worker threads (output is identical for any value)");
    simulate->add_option("--dump-samples", sa.dump_samples, "also write raw sorted rates, one per line");

    ValidateArgs va;
    CLI::App* validate = app.add_subcommand("validate", "run the full invariant/property suite");
    validate->add_flag("--quick", va.quick, "subsampled grids and smaller Monte Carlo runs");
    validate->add_flag("--json", va.as_json, "machine-readable results, one record per property");
    validate->add_option("--seed", va.seed, "master seed for the stochastic properties");
    validate->add_option("--threads", va.threads, "worker threads for Monte Carlo properties");
    validate->add_option("--out", va.out_path, "write the report to this path instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(outage))
            return cmd_outage(oa);
        if (app.got_subcommand(capacity))
            return cmd_capacity(ca);
        if (app.got_subcommand(simulate))
            return cmd_simulate(sa);
        if (app.got_subcommand(validate))
            return cmd_validate(va);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
