/* fracdiff: fractional-diffusion numerics toolkit, C interface.
 *
 * Every function returns fd_status; outputs go through pointers. A failing
 * call leaves a human-readable message retrievable with fd_last_error()
 * (thread local). Handles are opaque and must be released with the matching
 * _destroy call.
 */
#ifndef FRACDIFF_H
#define FRACDIFF_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FD_API __declspec(dllexport)
#else
#define FD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
    FD_OK = 0,
    FD_ERR_DOMAIN = 1,    /* parameter outside its admissible range */
    FD_ERR_EVAL = 2,      /* a numerical routine failed to converge */
    FD_ERR_UNSTABLE = 3,  /* explicit time stepping blew up */
    FD_ERR_NULL_ARG = 4,
    FD_ERR_INTERNAL = 5
} fd_status;

FD_API const char* fd_status_name(fd_status status);
FD_API const char* fd_last_error(void);

/* ---- stable laws ------------------------------------------------------- */

/* characteristic function of the four-parameter stable law */
FD_API fd_status fd_stable_cf(double alpha, double beta, double sigma, double mu, double t,
                              double* out_re, double* out_im);

/* n draws via the Chambers-Mallows-Stuck transform */
FD_API fd_status fd_stable_sample(double alpha, double beta, double sigma, double mu,
                                  uint64_t seed, uint64_t stream, size_t n, double* out);

/* positive mixing variable S of the subgaussian construction, alpha in (0,2) */
FD_API fd_status fd_one_sided_sample(double alpha_target, uint64_t seed, uint64_t stream,
                                     size_t n, double* out);

/* 2-d elliptical stable draws; q = {q11, q12, q22}, out_xy has 2n entries */
FD_API fd_status fd_subgaussian2d_sample(double alpha, const double q[3], const double mu[2],
                                         uint64_t seed, uint64_t stream, size_t n,
                                         double* out_xy);

/* ---- Mittag-Leffler ----------------------------------------------------- */

FD_API fd_status fd_ml(double beta, double z, double* out);
FD_API fd_status fd_ml_derivative(double beta, unsigned order, double z, double* out);
FD_API fd_status fd_jump_count_pmf(double beta, double t, unsigned n, double* out);

/* ---- Green-function oracle ---------------------------------------------- */

FD_API fd_status fd_gaussian_green(double x, double t, double* out);
FD_API fd_status fd_levy_pdf(double alpha, double x, double* out);
FD_API fd_status fd_levy_cdf(double alpha, double x, double* out);
FD_API fd_status fd_scaled_green(double alpha, double x, double t, double* out);
FD_API fd_status fd_green_pdf(double alpha, double beta, double x, double t, double* out);

/* ---- Riesz-fractional solver -------------------------------------------- */

typedef struct fd_solver fd_solver;

FD_API fd_status fd_solver_create(double a, double b, int64_t cells, int64_t steps,
                                  double final_time, double alpha, double diffusion,
                                  fd_solver** out);
FD_API void fd_solver_destroy(fd_solver* solver);

/* initial density exp(-x^2 / (2 sigma0^2)), unnormalized */
FD_API fd_status fd_solver_set_initial_gaussian(fd_solver* solver, double sigma0);
/* initial density sampled on the grid, len = cells + 1 */
FD_API fd_status fd_solver_set_initial(fd_solver* solver, const double* values, size_t len);

FD_API fd_status fd_solver_advance(fd_solver* solver, int64_t steps);
FD_API fd_status fd_solver_values(const fd_solver* solver, double* out, size_t len);
FD_API fd_status fd_solver_grid(const fd_solver* solver, double* out_x, size_t len);
FD_API int64_t fd_solver_step_index(const fd_solver* solver);
FD_API fd_status fd_solver_mass(const fd_solver* solver, double* out);
/* max eigenvalue magnitude of the circulant update (stability diagnostic) */
FD_API fd_status fd_solver_growth_factor(const fd_solver* solver, double* out);
/* max(phi0(a), phi0(b)) / max phi0 of the current initial data */
FD_API fd_status fd_solver_boundary_ratio(const fd_solver* solver, double* out);

/* ---- agent ensemble ------------------------------------------------------ */

typedef struct fd_ensemble fd_ensemble;

FD_API fd_status fd_ensemble_create(double alpha, const double q[3], double dt, size_t count,
                                    uint64_t seed, fd_ensemble** out);
FD_API void fd_ensemble_destroy(fd_ensemble* ensemble);
FD_API fd_status fd_ensemble_advance(fd_ensemble* ensemble, int64_t steps);
/* out_xy has 2*count entries: x0, y0, x1, y1, ... */
FD_API fd_status fd_ensemble_positions(const fd_ensemble* ensemble, double* out_xy, size_t len);
FD_API int64_t fd_ensemble_step_index(const fd_ensemble* ensemble);
FD_API double fd_ensemble_time(const fd_ensemble* ensemble);

/* ---- CTRW ---------------------------------------------------------------- */

FD_API fd_status fd_ctrw_simulate(double rate, double alpha, double jump_scale,
                                  double final_time, size_t count, uint64_t seed,
                                  uint64_t stream, double* out);

/* ---- descriptive statistics ---------------------------------------------- */

/* out_stats = {median, q1, q3, iqr, whisker_lo, whisker_hi, outlier_count} */
FD_API fd_status fd_boxplot(const double* data, size_t n, double out_stats[7]);

/* left-closed uniform bins, density normalized by n * width */
FD_API fd_status fd_histogram(const double* data, size_t n, double lo, double hi, size_t bins,
                              double* out_density);

#ifdef __cplusplus
}
#endif

#endif /* FRACDIFF_H */
