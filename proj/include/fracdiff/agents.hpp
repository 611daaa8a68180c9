#ifndef FRACDIFF_AGENTS_HPP
#define FRACDIFF_AGENTS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "fracdiff/rng.hpp"
#include "fracdiff/stable.hpp"
#include "fracdiff/stats.hpp"

namespace fracdiff {

// 2-d fractional-SDE ensemble: X_{t+dt} = X_t + dt^{1/alpha} Z with Z drawn
// from the elliptical stable law of shape Q (Brownian stepping at alpha = 2).
struct AgentConfig {
    double alpha = 1.5;
    double dt = 1e-8;
    double final_time = 1e-4;
    std::size_t count = 100;
    double q11 = 1.0;
    double q12 = 0.0;
    double q22 = 1.0;
    std::uint64_t seed = 0;
    std::vector<double> snapshot_times;

    void validate() const; // throws domain_error
};

struct AgentEnsemble {
    std::vector<Vec2> positions;
    double time = 0.0;
    long step_index = 0;
};

struct AgentSnapshot {
    double requested_time = 0.0;
    double actual_time = 0.0;
    long step = 0;
    std::vector<Vec2> positions;
};

// Advances every agent by one dt. Agent i consumes only streams[i], so the
// result does not depend on iteration order.
void fsde_step(AgentEnsemble& ensemble, const AgentConfig& config,
               std::vector<RandomStream>& streams);

// Per-agent substreams RandomStream(seed, i); all agents start at the origin.
// Snapshot times round to the nearest step.
std::vector<AgentSnapshot> run_ensemble(const AgentConfig& config);

// Uncoupled CTRW: exponential(rate) waiting times, symmetric alpha-stable
// jumps of scale jump_scale; returns walker positions at final_time.
// Walker i uses RandomStream(seed, stream_base + i).
std::vector<double> ctrw_simulate(double rate, double alpha, double jump_scale, double final_time,
                                  std::size_t count, std::uint64_t seed,
                                  std::uint64_t stream_base = 0);

// Normalized histogram of one coordinate (axis 0 = x, 1 = y); feeds the
// micro-macro comparisons.
Histogram marginal_histogram(std::span<const Vec2> positions, int axis, double lo, double hi,
                             int bins);

} // namespace fracdiff

#endif
