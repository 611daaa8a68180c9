#include "fracdiff.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <span>
#include <string>

#include "fracdiff/agents.hpp"
#include "fracdiff/errors.hpp"
#include "fracdiff/green.hpp"
#include "fracdiff/mittag_leffler.hpp"
#include "fracdiff/riesz.hpp"
#include "fracdiff/stable.hpp"
#include "fracdiff/stats.hpp"

namespace {

thread_local std::string g_last_error;

template <typename Fn>
fd_status guarded(Fn&& fn) {
    try {
        fn();
        return FD_OK;
    } catch (const fracdiff::instability_error& e) {
        g_last_error = e.what();
        return FD_ERR_UNSTABLE;
    } catch (const fracdiff::eval_error& e) {
        g_last_error = e.what();
        return FD_ERR_EVAL;
    } catch (const fracdiff::domain_error& e) {
        g_last_error = e.what();
        return FD_ERR_DOMAIN;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FD_ERR_INTERNAL;
    }
}

fd_status null_arg() {
    g_last_error = "null pointer argument";
    return FD_ERR_NULL_ARG;
}

} // namespace

struct fd_solver {
    fracdiff::GridSpec grid;
    double alpha;
    double diffusion;
    fracdiff::SchemeKernel kernel;
    fracdiff::DensityField field;
    double initial_boundary_ratio = 0.0;
    bool has_initial = false;
};

struct fd_ensemble {
    fracdiff::AgentConfig config;
    fracdiff::AgentEnsemble state;
    std::vector<fracdiff::RandomStream> streams;
};

extern "C" {

const char* fd_status_name(fd_status status) {
    switch (status) {
        case FD_OK: return "ok";
        case FD_ERR_DOMAIN: return "domain error";
        case FD_ERR_EVAL: return "evaluation error";
        case FD_ERR_UNSTABLE: return "instability";
        case FD_ERR_NULL_ARG: return "null argument";
        case FD_ERR_INTERNAL: return "internal error";
    }
    return "unknown";
}

const char* fd_last_error(void) { return g_last_error.c_str(); }

fd_status fd_stable_cf(double alpha, double beta, double sigma, double mu, double t,
                       double* out_re, double* out_im) {
    if (!out_re || !out_im) return null_arg();
    return guarded([&] {
        auto v = fracdiff::characteristic_function({alpha, beta, sigma, mu}, t);
        *out_re = v.real();
        *out_im = v.imag();
    });
}

fd_status fd_stable_sample(double alpha, double beta, double sigma, double mu, uint64_t seed,
                           uint64_t stream, size_t n, double* out) {
    if (!out) return null_arg();
    return guarded([&] {
        fracdiff::RandomStream rng(seed, stream);
        auto v = fracdiff::sample_stable({alpha, beta, sigma, mu}, rng, n);
        std::memcpy(out, v.data(), n * sizeof(double));
    });
}

fd_status fd_one_sided_sample(double alpha_target, uint64_t seed, uint64_t stream, size_t n,
                              double* out) {
    if (!out) return null_arg();
    return guarded([&] {
        fracdiff::RandomStream rng(seed, stream);
        auto v = fracdiff::sample_one_sided(alpha_target, rng, n);
        std::memcpy(out, v.data(), n * sizeof(double));
    });
}

fd_status fd_subgaussian2d_sample(double alpha, const double q[3], const double mu[2],
                                  uint64_t seed, uint64_t stream, size_t n, double* out_xy) {
    if (!out_xy || !q || !mu) return null_arg();
    return guarded([&] {
        fracdiff::EllipticalParams p{alpha, q[0], q[1], q[2], mu[0], mu[1]};
        fracdiff::RandomStream rng(seed, stream);
        auto v = fracdiff::sample_subgaussian_2d(p, rng, n);
        for (size_t i = 0; i < n; ++i) {
            out_xy[2 * i] = v[i].x;
            out_xy[2 * i + 1] = v[i].y;
        }
    });
}

fd_status fd_ml(double beta, double z, double* out) {
    if (!out) return null_arg();
    return guarded([&] { *out = fracdiff::ml(beta, z); });
}

fd_status fd_ml_derivative(double beta, unsigned order, double z, double* out) {
    if (!out) return null_arg();
    return guarded([&] { *out = fracdiff::ml_derivative(beta, (int)order, z); });
}

fd_status fd_jump_count_pmf(double beta, double t, unsigned n, double* out) {
    if (!out) return null_arg();
    return guarded([&] { *out = fracdiff::jump_count_pmf(beta, t, (int)n); });
}

fd_status fd_gaussian_green(double x, double t, double* out) {
    if (!out) return null_arg();
    return guarded([&] { *out = fracdiff::gaussian_green(x, t); });
}

fd_status fd_levy_pdf(double alpha, double x, double* out) {
    if (!out) return null_arg();
    return guarded([&] { *out = fracdiff::levy_pdf(alpha, x); });
}

fd_status fd_levy_cdf(double alpha, double x, double* out) {
    if (!out) return null_arg();
    return guarded([&] { *out = fracdiff::levy_cdf(alpha, x); });
}

fd_status fd_scaled_green(double alpha, double x, double t, double* out) {
    if (!out) return null_arg();
    return guarded([&] { *out = fracdiff::scaled_green(alpha, x, t); });
}

fd_status fd_green_pdf(double alpha, double beta, double x, double t, double* out) {
    if (!out) return null_arg();
    return guarded([&] { *out = fracdiff::green_pdf(alpha, beta, x, t); });
}

fd_status fd_solver_create(double a, double b, int64_t cells, int64_t steps, double final_time,
                           double alpha, double diffusion, fd_solver** out) {
    if (!out) return null_arg();
    *out = nullptr;
    return guarded([&] {
        fracdiff::GridSpec grid{a, b, (int)cells, (int)steps, final_time};
        grid.validate();
        auto solver = std::make_unique<fd_solver>();
        solver->grid = grid;
        solver->alpha = alpha;
        solver->diffusion = diffusion;
        solver->kernel = fracdiff::build_kernel(alpha, grid, diffusion);
        solver->field.grid = grid;
        solver->field.values.assign(grid.cells + 1, 0.0);
        *out = solver.release();
    });
}

void fd_solver_destroy(fd_solver* solver) { delete solver; }

fd_status fd_solver_set_initial_gaussian(fd_solver* solver, double sigma0) {
    if (!solver) return null_arg();
    return guarded([&] {
        if (!(sigma0 > 0.0)) throw fracdiff::domain_error("initial sigma must be positive");
        auto& f = solver->field;
        f.step_index = 0;
        double peak = 0.0;
        for (int i = 0; i <= solver->grid.cells; ++i) {
            double x = solver->grid.x(i);
            f.values[i] = std::exp(-x * x / (2.0 * sigma0 * sigma0));
            peak = std::max(peak, f.values[i]);
        }
        solver->initial_boundary_ratio =
            std::max(f.values.front(), f.values.back()) / std::max(peak, 1e-300);
        solver->has_initial = true;
    });
}

fd_status fd_solver_set_initial(fd_solver* solver, const double* values, size_t len) {
    if (!solver || !values) return null_arg();
    return guarded([&] {
        if ((int)len != solver->grid.cells + 1)
            throw fracdiff::domain_error("initial data must have cells + 1 entries");
        auto& f = solver->field;
        f.step_index = 0;
        double peak = 0.0;
        for (size_t i = 0; i < len; ++i) {
            if (!std::isfinite(values[i]))
                throw fracdiff::domain_error("initial data must be finite");
            f.values[i] = values[i];
            peak = std::max(peak, std::abs(values[i]));
        }
        solver->initial_boundary_ratio =
            std::max(std::abs(f.values.front()), std::abs(f.values.back())) /
            std::max(peak, 1e-300);
        solver->has_initial = true;
    });
}

fd_status fd_solver_advance(fd_solver* solver, int64_t steps) {
    if (!solver) return null_arg();
    return guarded([&] {
        if (!solver->has_initial)
            throw fracdiff::domain_error("solver has no initial data");
        if (steps < 0) throw fracdiff::domain_error("steps must be >= 0");
        double init_max = 0.0;
        for (double v : solver->field.values) init_max = std::max(init_max, std::abs(v));
        double abort_level = 1e6 * std::max(init_max, 1e-300);
        for (int64_t s = 0; s < steps; ++s) {
            solver->field = fracdiff::step(solver->field, solver->kernel);
            double mx = 0.0;
            for (double v : solver->field.values) mx = std::max(mx, std::abs(v));
            if (mx > abort_level)
                throw fracdiff::instability_error("solver: instability detected",
                                                  solver->field.step_index, mx);
        }
    });
}

fd_status fd_solver_values(const fd_solver* solver, double* out, size_t len) {
    if (!solver || !out) return null_arg();
    return guarded([&] {
        if (len != solver->field.values.size())
            throw fracdiff::domain_error("output buffer must have cells + 1 entries");
        std::memcpy(out, solver->field.values.data(), len * sizeof(double));
    });
}

fd_status fd_solver_grid(const fd_solver* solver, double* out_x, size_t len) {
    if (!solver || !out_x) return null_arg();
    return guarded([&] {
        if ((int)len != solver->grid.cells + 1)
            throw fracdiff::domain_error("output buffer must have cells + 1 entries");
        for (size_t i = 0; i < len; ++i) out_x[i] = solver->grid.x((int)i);
    });
}

int64_t fd_solver_step_index(const fd_solver* solver) {
    return solver ? solver->field.step_index : -1;
}

fd_status fd_solver_mass(const fd_solver* solver, double* out) {
    if (!solver || !out) return null_arg();
    return guarded([&] { *out = fracdiff::total_mass(solver->field); });
}

fd_status fd_solver_growth_factor(const fd_solver* solver, double* out) {
    if (!solver || !out) return null_arg();
    return guarded([&] { *out = fracdiff::growth_factor(solver->kernel); });
}

fd_status fd_solver_boundary_ratio(const fd_solver* solver, double* out) {
    if (!solver || !out) return null_arg();
    return guarded([&] {
        if (!solver->has_initial)
            throw fracdiff::domain_error("solver has no initial data");
        *out = solver->initial_boundary_ratio;
    });
}

fd_status fd_ensemble_create(double alpha, const double q[3], double dt, size_t count,
                             uint64_t seed, fd_ensemble** out) {
    if (!out || !q) return null_arg();
    *out = nullptr;
    return guarded([&] {
        fracdiff::AgentConfig cfg;
        cfg.alpha = alpha;
        cfg.q11 = q[0];
        cfg.q12 = q[1];
        cfg.q22 = q[2];
        cfg.dt = dt;
        cfg.final_time = dt; // per-call stepping; final_time is not used here
        cfg.count = count;
        cfg.seed = seed;
        cfg.validate();
        auto e = std::make_unique<fd_ensemble>();
        e->config = cfg;
        e->state.positions.assign(count, fracdiff::Vec2{0.0, 0.0});
        e->streams.reserve(count);
        for (size_t i = 0; i < count; ++i) e->streams.emplace_back(seed, i);
        *out = e.release();
    });
}

void fd_ensemble_destroy(fd_ensemble* ensemble) { delete ensemble; }

fd_status fd_ensemble_advance(fd_ensemble* ensemble, int64_t steps) {
    if (!ensemble) return null_arg();
    return guarded([&] {
        if (steps < 0) throw fracdiff::domain_error("steps must be >= 0");
        for (int64_t s = 0; s < steps; ++s)
            fracdiff::fsde_step(ensemble->state, ensemble->config, ensemble->streams);
    });
}

fd_status fd_ensemble_positions(const fd_ensemble* ensemble, double* out_xy, size_t len) {
    if (!ensemble || !out_xy) return null_arg();
    return guarded([&] {
        if (len != 2 * ensemble->state.positions.size())
            throw fracdiff::domain_error("output buffer must have 2 * count entries");
        for (size_t i = 0; i < ensemble->state.positions.size(); ++i) {
            out_xy[2 * i] = ensemble->state.positions[i].x;
            out_xy[2 * i + 1] = ensemble->state.positions[i].y;
        }
    });
}

int64_t fd_ensemble_step_index(const fd_ensemble* ensemble) {
    return ensemble ? ensemble->state.step_index : -1;
}

double fd_ensemble_time(const fd_ensemble* ensemble) {
    return ensemble ? ensemble->state.time : -1.0;
}

fd_status fd_ctrw_simulate(double rate, double alpha, double jump_scale, double final_time,
                           size_t count, uint64_t seed, uint64_t stream, double* out) {
    if (!out) return null_arg();
    return guarded([&] {
        auto v = fracdiff::ctrw_simulate(rate, alpha, jump_scale, final_time, count, seed, stream);
        std::memcpy(out, v.data(), count * sizeof(double));
    });
}

fd_status fd_boxplot(const double* data, size_t n, double out_stats[7]) {
    if (!data || !out_stats) return null_arg();
    return guarded([&] {
        auto s = fracdiff::boxplot_stats(std::span<const double>(data, n));
        out_stats[0] = s.median;
        out_stats[1] = s.q1;
        out_stats[2] = s.q3;
        out_stats[3] = s.iqr;
        out_stats[4] = s.whisker_lo;
        out_stats[5] = s.whisker_hi;
        out_stats[6] = (double)s.outlier_count;
    });
}

fd_status fd_histogram(const double* data, size_t n, double lo, double hi, size_t bins,
                       double* out_density) {
    if (!data || !out_density) return null_arg();
    return guarded([&] {
        auto h = fracdiff::histogram(std::span<const double>(data, n), lo, hi, (int)bins);
        std::memcpy(out_density, h.density.data(), bins * sizeof(double));
    });
}

} // extern "C"
