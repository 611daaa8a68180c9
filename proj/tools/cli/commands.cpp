#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <memory>
#include <vector>

#include <fracdiff.h>

#include "csv.hpp"

namespace fdcli {

namespace {

void check_fd(fd_status status, const std::string& what) {
    if (status == FD_OK) return;
    std::string msg = what + ": " + fd_status_name(status) + " (" + fd_last_error() + ")";
    if (status == FD_ERR_DOMAIN) throw ConfigError(msg);
    throw NumericError(msg);
}

std::string time_label(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", t);
    return buf;
}

std::string out_path(const GlobalOptions& opts, const std::string& name) {
    std::filesystem::create_directories(opts.out_dir);
    return (std::filesystem::path(opts.out_dir) / name).string();
}

// --seed flag wins over [global] seed; randomized commands refuse to run
// without one (no wall-clock seeding).
struct GlobalSection {
    std::uint64_t seed = 0;
    bool has_seed = false;
    MetadataList echo;
};

GlobalSection read_global(const RawConfig& cfg, const GlobalOptions& opts, bool seed_required) {
    SectionReader global(cfg, "global");
    GlobalSection g;
    auto file_seed = global.optional_u64("seed");
    if (opts.seed) {
        g.seed = *opts.seed;
        g.has_seed = true;
    } else if (file_seed) {
        g.seed = *file_seed;
        g.has_seed = true;
    }
    if (seed_required && !g.has_seed)
        throw ConfigError("this command is randomized: provide --seed or a [global] seed "
                          "(wall-clock seeding is not supported)");
    cfg.reject_unused("global");
    g.echo.emplace_back("out", opts.out_dir);
    g.echo.emplace_back("format", opts.format);
    if (g.has_seed) g.echo.emplace_back("seed", std::to_string(g.seed));
    return g;
}

void require_csv_format(const GlobalOptions& opts) {
    if (opts.format != "csv") throw ConfigError("unsupported output format: " + opts.format);
}

// cumulative trapezoid of a tabulated density, normalized to a CDF
std::vector<double> tabulated_cdf(const std::vector<double>& xs, const std::vector<double>& ys) {
    std::vector<double> cum(xs.size(), 0.0);
    for (std::size_t i = 1; i < xs.size(); ++i)
        cum[i] = cum[i - 1] + 0.5 * (ys[i] + ys[i - 1]) * (xs[i] - xs[i - 1]);
    double total = cum.back();
    if (!(total > 0.0)) throw ConfigError("density table integrates to zero");
    for (double& c : cum) c /= total;
    return cum;
}

double interp(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = (std::size_t)(it - xs.begin());
    double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
    return ys[i - 1] * (1.0 - w) + ys[i] * w;
}

double ks_vs_tabulated(std::vector<double> sample, const std::vector<double>& xs,
                       const std::vector<double>& cdf) {
    std::sort(sample.begin(), sample.end());
    double n = (double)sample.size();
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        double f = interp(xs, cdf, sample[i]);
        d = std::max(d, std::abs((double)(i + 1) / n - f));
        d = std::max(d, std::abs(f - (double)i / n));
    }
    return d;
}

int cmd_sample(const RawConfig& cfg, const GlobalOptions& opts) {
    require_csv_format(opts);
    GlobalSection global = read_global(cfg, opts, true);
    SectionReader sec(cfg, "sample");

    std::string family = sec.get_string("family", "stable");
    sec.check(family == "stable" || family == "one_sided" || family == "subgaussian", "family",
              "must be stable, one_sided or subgaussian");
    long n = sec.require_long("n");
    sec.check(n >= 1, "n", "must be >= 1");
    double alpha = sec.require_double("alpha");
    std::uint64_t stream = sec.get_u64("stream", 0);

    CsvDocument doc("sample");
    std::vector<double> flat;
    bool planar = false;

    if (family == "stable") {
        double beta = sec.get_double("beta", 0.0);
        double sigma = sec.get_double("sigma", 1.0);
        double mu = sec.get_double("mu", 0.0);
        sec.check(alpha > 0.0 && alpha <= 2.0, "alpha", "outside (0, 2]");
        sec.check(beta >= -1.0 && beta <= 1.0, "beta", "outside [-1, 1]");
        sec.check(sigma > 0.0, "sigma", "must be positive");
        flat.resize(n);
        check_fd(fd_stable_sample(alpha, beta, sigma, mu, global.seed, stream, flat.size(),
                                  flat.data()),
                 "sample");
    } else if (family == "one_sided") {
        sec.check(alpha > 0.0 && alpha < 2.0, "alpha", "outside (0, 2)");
        flat.resize(n);
        check_fd(fd_one_sided_sample(alpha, global.seed, stream, flat.size(), flat.data()),
                 "sample");
    } else {
        sec.check(alpha > 0.0 && alpha <= 2.0, "alpha", "outside (0, 2]");
        double q[3] = {sec.get_double("q11", 1.0), sec.get_double("q12", 0.0),
                       sec.get_double("q22", 1.0)};
        double mu[2] = {sec.get_double("mu_x", 0.0), sec.get_double("mu_y", 0.0)};
        flat.resize(2 * n);
        check_fd(fd_subgaussian2d_sample(alpha, q, mu, global.seed, stream, n, flat.data()),
                 "sample");
        planar = true;
    }
    cfg.reject_unused("sample");

    doc.add_metadata(sec.echo());
    doc.add_metadata(global.echo);
    if (planar) {
        doc.set_header("index,x,y");
        for (long i = 0; i < n; ++i)
            doc.add_row({(double)i, flat[2 * i], flat[2 * i + 1]});
    } else {
        doc.set_header("index,value");
        for (long i = 0; i < n; ++i) doc.add_row({(double)i, flat[i]});
    }
    doc.write(out_path(opts, "samples.csv"));
    return kExitOk;
}

int cmd_ml_eval(const RawConfig& cfg, const GlobalOptions& opts) {
    require_csv_format(opts);
    GlobalSection global = read_global(cfg, opts, false);
    SectionReader sec(cfg, "ml-eval");

    std::string mode = sec.get_string("mode", "ml");
    sec.check(mode == "ml" || mode == "derivative" || mode == "pmf", "mode",
              "must be ml, derivative or pmf");
    double beta = sec.require_double("beta");
    sec.check(beta > 0.0 && beta <= 2.0, "beta", "outside (0, 2]");

    CsvDocument doc("ml-eval");
    if (mode == "pmf") {
        sec.check(beta <= 1.0, "beta", "outside (0, 1] for the jump-count law");
        double t = sec.require_double("t");
        sec.check(t >= 0.0, "t", "must be non-negative");
        long n_max = sec.get_long("n_max", 30);
        sec.check(n_max >= 0, "n_max", "must be >= 0");
        cfg.reject_unused("ml-eval");
        doc.add_metadata(sec.echo());
        doc.add_metadata(global.echo);
        doc.set_header("n,probability");
        for (long n = 0; n <= n_max; ++n) {
            double p;
            check_fd(fd_jump_count_pmf(beta, t, (unsigned)n, &p), "ml-eval");
            doc.add_row({(double)n, p});
        }
        doc.write(out_path(opts, "pmf.csv"));
        return kExitOk;
    }

    double z_min = sec.require_double("z_min");
    double z_max = sec.get_double("z_max", z_min);
    long points = sec.get_long("points", 1);
    sec.check(points >= 1, "points", "must be >= 1");
    sec.check(z_max >= z_min, "z_max", "must be >= z_min");
    long order = sec.get_long("order", 1); // only used by the derivative mode
    sec.check(order >= 0, "order", "must be >= 0");
    cfg.reject_unused("ml-eval");

    doc.add_metadata(sec.echo());
    doc.add_metadata(global.echo);
    doc.set_header("z,value");
    for (long i = 0; i < points; ++i) {
        double z = (points == 1) ? z_min : z_min + (z_max - z_min) * i / (points - 1);
        double v;
        if (mode == "ml")
            check_fd(fd_ml(beta, z, &v), "ml-eval");
        else
            check_fd(fd_ml_derivative(beta, (unsigned)order, z, &v), "ml-eval");
        doc.add_row({z, v});
    }
    doc.write(out_path(opts, "ml.csv"));
    return kExitOk;
}

int cmd_green(const RawConfig& cfg, const GlobalOptions& opts) {
    require_csv_format(opts);
    GlobalSection global = read_global(cfg, opts, false);
    SectionReader sec(cfg, "green");

    std::string kind = sec.get_string("kind", "green");
    sec.check(kind == "green" || kind == "levy" || kind == "gaussian", "kind",
              "must be green, levy or gaussian");
    double x_min = sec.require_double("x_min");
    double x_max = sec.require_double("x_max");
    sec.check(x_max > x_min, "x_max", "must exceed x_min");
    long points = sec.get_long("points", 201);
    sec.check(points >= 2, "points", "must be >= 2");

    // every key of the section stays valid whatever the kind; unused ones
    // are consumed with their defaults and echoed
    double alpha = (kind == "gaussian") ? sec.get_double("alpha", 2.0)
                                        : sec.require_double("alpha");
    sec.check(alpha > 0.0 && alpha <= 2.0, "alpha", "outside (0, 2]");
    double beta = sec.get_double("beta", 1.0);
    if (kind == "green") sec.check(beta > 0.0 && beta <= 1.0, "beta", "outside (0, 1]");
    double t = (kind == "levy") ? sec.get_double("t", 1.0) : sec.require_double("t");
    sec.check(t > 0.0, "t", "must be positive");
    cfg.reject_unused("green");

    CsvDocument doc("green");
    doc.add_metadata(sec.echo());
    doc.add_metadata(global.echo);
    doc.set_header("x,density");
    for (long i = 0; i < points; ++i) {
        double x = x_min + (x_max - x_min) * i / (points - 1);
        double v;
        if (kind == "levy")
            check_fd(fd_levy_pdf(alpha, x, &v), "green");
        else if (kind == "gaussian")
            check_fd(fd_gaussian_green(x, t, &v), "green");
        else
            check_fd(fd_green_pdf(alpha, beta, x, t, &v), "green");
        doc.add_row({x, v});
    }
    doc.write(out_path(opts, "green.csv"));
    return kExitOk;
}

struct SolverSetup {
    double a, b, final_time, alpha, diffusion, sigma0;
    long cells, steps;
    MetadataList echo;
    std::unique_ptr<fd_solver, void (*)(fd_solver*)> handle{nullptr, fd_solver_destroy};
};

SolverSetup make_solver(const RawConfig& cfg) {
    SectionReader sec(cfg, "solve");
    SolverSetup s{0, 0, 0, 0, 0, 0, 0, 0, {}, {nullptr, fd_solver_destroy}};
    s.alpha = sec.require_double("alpha");
    sec.check(s.alpha > 1.0 && s.alpha <= 2.0, "alpha", "outside (1, 2]");
    s.diffusion = sec.require_double("d");
    sec.check(s.diffusion > 0.0, "d", "must be positive");
    s.a = sec.get_double("a", -3.0);
    s.b = sec.get_double("b", 3.0);
    sec.check(s.b > s.a, "b", "must exceed a");
    s.cells = sec.get_long("cells", 300);
    sec.check(s.cells > 0 && s.cells % 2 == 0, "cells", "must be positive and even");
    s.steps = sec.get_long("steps", 199);
    sec.check(s.steps >= 1, "steps", "must be >= 1");
    s.final_time = sec.get_double("final_time", 0.005);
    sec.check(s.final_time > 0.0, "final_time", "must be positive");
    s.sigma0 = sec.get_double("sigma0", 0.2);
    sec.check(s.sigma0 > 0.0, "sigma0", "must be positive");
    s.echo = sec.echo();

    fd_solver* raw = nullptr;
    check_fd(fd_solver_create(s.a, s.b, s.cells, s.steps, s.final_time, s.alpha, s.diffusion,
                              &raw),
             "solve");
    s.handle.reset(raw);
    check_fd(fd_solver_set_initial_gaussian(raw, s.sigma0), "solve");
    return s;
}

int cmd_solve(const RawConfig& cfg, const GlobalOptions& opts) {
    require_csv_format(opts);
    GlobalSection global = read_global(cfg, opts, false);
    SectionReader snap_sec(cfg, "solve");
    SolverSetup s = make_solver(cfg);
    auto snapshot_times =
        snap_sec.get_double_list("snapshot_times", {0.0, s.final_time});
    cfg.reject_unused("solve");

    double tau = s.final_time / s.steps;
    double boundary_ratio = 0.0;
    check_fd(fd_solver_boundary_ratio(s.handle.get(), &boundary_ratio), "solve");
    if (boundary_ratio > 1e-6)
        std::fprintf(stderr,
                     "warning: initial density at the domain endpoints is %.3g of its peak; "
                     "the periodic wrap will recirculate it\n",
                     boundary_ratio);
    double growth = 0.0;
    check_fd(fd_solver_growth_factor(s.handle.get(), &growth), "solve");

    struct Request {
        long step;
        double requested;
    };
    std::vector<Request> requests;
    for (double t : snapshot_times) {
        if (t < -0.5 * tau || t > s.final_time + 0.5 * tau)
            throw ConfigError("snapshot time " + format_double(t) + " outside [0, T]");
        long step = std::clamp<long>((long)std::llround(t / tau), 0, s.steps);
        requests.push_back({step, t});
    }
    std::sort(requests.begin(), requests.end(),
              [](const Request& x, const Request& y) { return x.step < y.step; });

    std::vector<double> xs(s.cells + 1), us(s.cells + 1);
    check_fd(fd_solver_grid(s.handle.get(), xs.data(), xs.size()), "solve");
    for (const auto& req : requests) {
        long now = fd_solver_step_index(s.handle.get());
        check_fd(fd_solver_advance(s.handle.get(), req.step - now), "solve");
        check_fd(fd_solver_values(s.handle.get(), us.data(), us.size()), "solve");

        CsvDocument doc("solve");
        doc.add_metadata(s.echo);
        doc.add_metadata(snap_sec.echo());
        doc.add_metadata(global.echo);
        doc.add_metadata("snapshot_requested_t", format_double(req.requested));
        doc.add_metadata("snapshot_step", std::to_string(req.step));
        doc.add_metadata("snapshot_actual_t", format_double(req.step * tau));
        doc.add_metadata("tau", format_double(tau));
        doc.add_metadata("h", format_double((s.b - s.a) / s.cells));
        doc.add_metadata("growth_factor", format_double(growth));
        doc.add_metadata("boundary_warning", boundary_ratio > 1e-6 ? "1" : "0");
        doc.set_header("x,density");
        for (std::size_t i = 0; i < xs.size(); ++i) doc.add_row({xs[i], us[i]});
        doc.write(out_path(opts, "macro_t" + time_label(req.requested) + ".csv"));
    }
    return kExitOk;
}

int cmd_mass_report(const RawConfig& cfg, const GlobalOptions& opts) {
    require_csv_format(opts);
    GlobalSection global = read_global(cfg, opts, false);
    SolverSetup s = make_solver(cfg);
    (void)cfg.find("solve", "snapshot_times"); // shared [solve] key, not used here
    cfg.reject_unused("solve");
    cfg.reject_unused("mass-report");

    double tau = s.final_time / s.steps;
    std::vector<double> masses;
    double m = 0.0;
    check_fd(fd_solver_mass(s.handle.get(), &m), "mass-report");
    masses.push_back(m);
    for (long n = 1; n <= s.steps; ++n) {
        check_fd(fd_solver_advance(s.handle.get(), 1), "mass-report");
        check_fd(fd_solver_mass(s.handle.get(), &m), "mass-report");
        masses.push_back(m);
    }

    double rel_change = (masses.back() - masses.front()) / masses.front();
    bool monotone = true;
    for (std::size_t i = 1; i < masses.size(); ++i)
        if (masses[i] > masses[i - 1] + 1e-15) monotone = false;

    CsvDocument doc("mass-report");
    doc.add_metadata(s.echo);
    doc.add_metadata(global.echo);
    doc.add_metadata("relative_change", format_double(rel_change));
    doc.add_metadata("monotone_nonincreasing", monotone ? "1" : "0");
    doc.set_header("step,time,mass");
    for (std::size_t n = 0; n < masses.size(); ++n)
        doc.add_row({(double)n, (double)n * tau, masses[n]});
    doc.write(out_path(opts, "mass.csv"));
    return kExitOk;
}

int cmd_agents(const RawConfig& cfg, const GlobalOptions& opts) {
    require_csv_format(opts);
    GlobalSection global = read_global(cfg, opts, true);
    SectionReader sec(cfg, "agents");

    double alpha = sec.require_double("alpha");
    sec.check(alpha > 0.0 && alpha <= 2.0, "alpha", "outside (0, 2]");
    double dt = sec.require_double("dt");
    sec.check(dt > 0.0, "dt", "must be positive");
    double final_time = sec.require_double("final_time");
    sec.check(final_time >= dt, "final_time", "must be >= dt");
    long count = sec.require_long("count");
    sec.check(count >= 1, "count", "must be >= 1");
    double q[3] = {sec.get_double("q11", 1.0), sec.get_double("q12", 0.0),
                   sec.get_double("q22", 1.0)};
    sec.check(q[0] > 0.0 && q[0] * q[2] - q[1] * q[1] > 0.0, "q11",
              "Q must be symmetric positive definite");
    auto snapshot_times = sec.get_double_list("snapshot_times", {final_time});
    cfg.reject_unused("agents");

    long total_steps = (long)std::llround(final_time / dt);
    struct Request {
        long step;
        double requested;
    };
    std::vector<Request> requests;
    for (double t : snapshot_times) {
        if (t < 0.0 || t > final_time + 0.5 * dt)
            throw ConfigError("snapshot time " + format_double(t) + " outside [0, T]");
        requests.push_back({std::clamp<long>((long)std::llround(t / dt), 0, total_steps), t});
    }
    std::sort(requests.begin(), requests.end(),
              [](const Request& x, const Request& y) { return x.step < y.step; });

    fd_ensemble* raw = nullptr;
    check_fd(fd_ensemble_create(alpha, q, dt, count, global.seed, &raw), "agents");
    std::unique_ptr<fd_ensemble, void (*)(fd_ensemble*)> ensemble(raw, fd_ensemble_destroy);

    std::vector<double> xy(2 * count);
    for (const auto& req : requests) {
        long now = fd_ensemble_step_index(ensemble.get());
        check_fd(fd_ensemble_advance(ensemble.get(), req.step - now), "agents");
        check_fd(fd_ensemble_positions(ensemble.get(), xy.data(), xy.size()), "agents");

        CsvDocument doc("agents");
        doc.add_metadata(sec.echo());
        doc.add_metadata(global.echo);
        doc.add_metadata("snapshot_requested_t", format_double(req.requested));
        doc.add_metadata("snapshot_step", std::to_string(req.step));
        doc.add_metadata("snapshot_actual_t", format_double(req.step * dt));
        doc.set_header("agent_id,x,y");
        for (long i = 0; i < count; ++i)
            doc.add_row({(double)i, xy[2 * i], xy[2 * i + 1]});
        doc.write(out_path(opts, "agents_t" + time_label(req.requested) + ".csv"));
    }

    // Tukey summaries of the final snapshot, one row per axis
    CsvDocument stats_doc("agents");
    stats_doc.add_metadata(sec.echo());
    stats_doc.add_metadata(global.echo);
    stats_doc.set_header("axis,median,q1,q3,whisker_lo,whisker_hi,outliers");
    std::vector<double> axis_vals(count);
    const char* axis_names[2] = {"x", "y"};
    for (int axis = 0; axis < 2; ++axis) {
        for (long i = 0; i < count; ++i) axis_vals[i] = xy[2 * i + axis];
        double st[7];
        check_fd(fd_boxplot(axis_vals.data(), axis_vals.size(), st), "agents");
        std::string row = std::string(axis_names[axis]);
        for (int k : {0, 1, 2, 4, 5, 6}) row += "," + format_double(st[k]);
        stats_doc.add_row_text(row);
    }
    stats_doc.write(out_path(opts, "agents_stats.csv"));
    return kExitOk;
}

int cmd_ctrw(const RawConfig& cfg, const GlobalOptions& opts) {
    require_csv_format(opts);
    GlobalSection global = read_global(cfg, opts, true);
    SectionReader sec(cfg, "ctrw");

    double rate = sec.require_double("rate");
    sec.check(rate > 0.0, "rate", "must be positive");
    double alpha = sec.require_double("alpha");
    sec.check(alpha > 0.0 && alpha <= 2.0, "alpha", "outside (0, 2]");
    double jump_scale = sec.get_double("jump_scale", 1.0);
    sec.check(jump_scale > 0.0, "jump_scale", "must be positive");
    double final_time = sec.require_double("final_time");
    sec.check(final_time > 0.0, "final_time", "must be positive");
    long count = sec.require_long("count");
    sec.check(count >= 1, "count", "must be >= 1");
    std::uint64_t stream = sec.get_u64("stream", 0);
    cfg.reject_unused("ctrw");

    std::vector<double> xs(count);
    check_fd(fd_ctrw_simulate(rate, alpha, jump_scale, final_time, count, global.seed, stream,
                              xs.data()),
             "ctrw");

    CsvDocument doc("ctrw");
    doc.add_metadata(sec.echo());
    doc.add_metadata(global.echo);
    doc.set_header("walker_id,position");
    for (long i = 0; i < count; ++i) doc.add_row({(double)i, xs[i]});
    doc.write(out_path(opts, "ctrw.csv"));
    return kExitOk;
}

int cmd_compare(const RawConfig& cfg, const GlobalOptions& opts) {
    require_csv_format(opts);
    GlobalSection global = read_global(cfg, opts, false);
    SectionReader sec(cfg, "compare");

    std::string agents_path = sec.require_string("agents_csv");
    std::string macro_path = sec.require_string("macro_csv");
    std::string axis = sec.get_string("axis", "x");
    sec.check(axis == "x" || axis == "y", "axis", "must be x or y");
    double oracle_alpha = sec.require_double("oracle_alpha");
    sec.check(oracle_alpha > 0.0 && oracle_alpha <= 2.0, "oracle_alpha", "outside (0, 2]");
    double oracle_time = sec.require_double("oracle_time");
    sec.check(oracle_time > 0.0, "oracle_time", "must be positive");
    double oracle_diffusion = sec.get_double("oracle_diffusion", 1.0);
    sec.check(oracle_diffusion > 0.0, "oracle_diffusion", "must be positive");
    long bins = sec.get_long("bins", 0);
    auto thresholds = sec.get_double_list("thresholds", {1.5});
    std::string mass_path = sec.get_string("mass_csv", "");
    cfg.reject_unused("compare");

    CsvTable agents = CsvTable::read(agents_path);
    int axis_col = agents.column(axis);
    if (axis_col < 0) throw ConfigError(agents_path + ": no '" + axis + "' column");
    std::vector<double> sample;
    sample.reserve(agents.rows.size());
    for (const auto& row : agents.rows) sample.push_back(row[axis_col]);
    if (sample.empty()) throw ConfigError(agents_path + ": no agent rows");

    CsvTable macro = CsvTable::read(macro_path);
    int xc = macro.column("x"), dc = macro.column("density");
    if (xc < 0 || dc < 0) throw ConfigError(macro_path + ": expected x,density columns");
    std::vector<double> xs, macro_density;
    for (const auto& row : macro.rows) {
        xs.push_back(row[xc]);
        macro_density.push_back(row[dc]);
    }
    if (xs.size() < 3) throw ConfigError(macro_path + ": too few grid rows");
    for (std::size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw ConfigError(macro_path + ": x column must be strictly increasing");

    double lo = xs.front(), hi = xs.back();
    long inside = std::count_if(sample.begin(), sample.end(),
                                [lo, hi](double v) { return v >= lo && v < hi; });
    if ((double)inside < 0.5 * (double)sample.size())
        throw ConfigError("range mismatch: fewer than half of the agent positions fall inside "
                          "the macro grid [" + format_double(lo) + ", " + format_double(hi) + "]");

    if (bins <= 0) bins = (long)std::ceil(2.0 * std::cbrt((double)sample.size()));
    std::vector<double> hist(bins);
    check_fd(fd_histogram(sample.data(), sample.size(), lo, hi, bins, hist.data()), "compare");

    // oracle density: the beta = 1 green function with time rescaled by the
    // diffusion coefficient. It is analytic, so its CDF is tabulated on a
    // refined grid; a narrow kernel must not be under-resolved by the macro
    // grid spacing.
    double eff_t = oracle_diffusion * oracle_time;
    std::vector<double> oracle_density(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        check_fd(fd_scaled_green(oracle_alpha, xs[i], eff_t, &oracle_density[i]), "compare");
    const std::size_t n_fine = 2001;
    std::vector<double> fine_xs(n_fine), fine_oracle(n_fine);
    for (std::size_t i = 0; i < n_fine; ++i) {
        fine_xs[i] = lo + (hi - lo) * (double)i / (double)(n_fine - 1);
        check_fd(fd_scaled_green(oracle_alpha, fine_xs[i], eff_t, &fine_oracle[i]), "compare");
    }

    double width = (hi - lo) / bins;
    double l1_macro = 0.0, l1_oracle = 0.0;
    for (long b = 0; b < bins; ++b) {
        double xc_b = lo + (b + 0.5) * width;
        double om;
        check_fd(fd_scaled_green(oracle_alpha, xc_b, eff_t, &om), "compare");
        l1_macro += std::abs(hist[b] - interp(xs, macro_density, xc_b)) * width;
        l1_oracle += std::abs(hist[b] - om) * width;
    }

    auto macro_cdf = tabulated_cdf(xs, macro_density);
    auto oracle_cdf = tabulated_cdf(fine_xs, fine_oracle);
    double ks_macro = ks_vs_tabulated(sample, xs, macro_cdf);
    double ks_oracle = ks_vs_tabulated(sample, fine_xs, oracle_cdf);

    CsvDocument doc("compare");
    doc.add_metadata(sec.echo());
    doc.add_metadata(global.echo);
    doc.add_metadata("bins_used", std::to_string(bins));
    doc.set_header("metric,value");
    auto add_metric = [&doc](const std::string& name, double value) {
        doc.add_row_text(name + "," + format_double(value));
    };
    add_metric("l1_hist_vs_macro", l1_macro);
    add_metric("l1_hist_vs_oracle", l1_oracle);
    add_metric("ks_vs_macro", ks_macro);
    add_metric("ks_vs_oracle", ks_oracle);
    for (double thr : thresholds) {
        double macro_tail = 0.0, oracle_tail = 0.0;
        for (std::size_t i = 1; i < xs.size(); ++i) {
            double mid = 0.5 * (xs[i] + xs[i - 1]);
            double dx = xs[i] - xs[i - 1];
            if (std::abs(mid) > thr) {
                macro_tail += 0.5 * (macro_density[i] + macro_density[i - 1]) * dx;
                oracle_tail += 0.5 * (oracle_density[i] + oracle_density[i - 1]) * dx;
            }
        }
        long n_tail = std::count_if(sample.begin(), sample.end(),
                                    [thr](double v) { return std::abs(v) > thr; });
        std::string suffix = "_beyond_" + time_label(thr);
        add_metric("tail_mass_macro" + suffix, macro_tail);
        add_metric("tail_mass_oracle" + suffix, oracle_tail);
        add_metric("tail_fraction_agents" + suffix, (double)n_tail / (double)sample.size());
    }
    if (!mass_path.empty()) {
        CsvTable mass = CsvTable::read(mass_path);
        int mc = mass.column("mass");
        if (mc < 0 || mass.rows.empty())
            throw ConfigError(mass_path + ": expected a mass column with rows");
        double m0 = mass.rows.front()[mc], m1 = mass.rows.back()[mc];
        add_metric("mass_initial", m0);
        add_metric("mass_final", m1);
        add_metric("mass_relative_change", (m1 - m0) / m0);
    }
    doc.write(out_path(opts, "compare.csv"));
    return kExitOk;
}

} // namespace

int run_command(const std::string& name, const RawConfig& cfg, const GlobalOptions& opts) {
    if (name == "sample") return cmd_sample(cfg, opts);
    if (name == "ml-eval") return cmd_ml_eval(cfg, opts);
    if (name == "green") return cmd_green(cfg, opts);
    if (name == "solve") return cmd_solve(cfg, opts);
    if (name == "agents") return cmd_agents(cfg, opts);
    if (name == "ctrw") return cmd_ctrw(cfg, opts);
    if (name == "compare") return cmd_compare(cfg, opts);
    if (name == "mass-report") return cmd_mass_report(cfg, opts);
    throw ConfigError("unknown command: " + name);
}

} // namespace fdcli
