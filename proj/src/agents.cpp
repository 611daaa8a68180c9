#include "fracdiff/agents.hpp"

#include <algorithm>
#include <cmath>

#include "fracdiff/errors.hpp"

namespace fracdiff {

void AgentConfig::validate() const {
    EllipticalParams p{alpha, q11, q12, q22, 0.0, 0.0};
    p.validate();
    if (!(dt > 0.0)) throw domain_error("agents: dt must be positive");
    if (!(final_time >= dt)) throw domain_error("agents: final time must be >= dt");
    if (count < 1) throw domain_error("agents: count must be >= 1");
}

void fsde_step(AgentEnsemble& ensemble, const AgentConfig& config,
               std::vector<RandomStream>& streams) {
    if (streams.size() != ensemble.positions.size())
        throw domain_error("fsde_step: one stream per agent required");
    EllipticalParams law{config.alpha, config.q11, config.q12, config.q22, 0.0, 0.0};
    double scale = std::pow(config.dt, 1.0 / config.alpha);
    for (std::size_t i = 0; i < ensemble.positions.size(); ++i) {
        Vec2 z = sample_subgaussian_2d_one(law, streams[i]);
        ensemble.positions[i].x += scale * z.x;
        ensemble.positions[i].y += scale * z.y;
    }
    ensemble.step_index += 1;
    ensemble.time = ensemble.step_index * config.dt;
}

std::vector<AgentSnapshot> run_ensemble(const AgentConfig& config) {
    config.validate();
    long total_steps = (long)std::llround(config.final_time / config.dt);

    struct Request {
        long step;
        double requested;
    };
    std::vector<Request> requests;
    for (double t : config.snapshot_times) {
        if (t < 0.0 || t > config.final_time + 0.5 * config.dt)
            throw domain_error("agents: snapshot time outside [0, T]");
        long s = std::clamp<long>(std::llround(t / config.dt), 0, total_steps);
        requests.push_back({s, t});
    }
    std::sort(requests.begin(), requests.end(),
              [](const Request& a, const Request& b) { return a.step < b.step; });

    AgentEnsemble ensemble;
    ensemble.positions.assign(config.count, Vec2{0.0, 0.0});
    std::vector<RandomStream> streams;
    streams.reserve(config.count);
    for (std::size_t i = 0; i < config.count; ++i) streams.emplace_back(config.seed, i);

    std::vector<AgentSnapshot> out;
    std::size_t next = 0;
    auto emit = [&](long step) {
        while (next < requests.size() && requests[next].step == step) {
            out.push_back({requests[next].requested, step * config.dt, step, ensemble.positions});
            ++next;
        }
    };
    emit(0);
    for (long s = 1; s <= total_steps && next < requests.size(); ++s) {
        fsde_step(ensemble, config, streams);
        emit(s);
    }
    return out;
}

Histogram marginal_histogram(std::span<const Vec2> positions, int axis, double lo, double hi,
                             int bins) {
    if (axis != 0 && axis != 1) throw domain_error("marginal_histogram: axis must be 0 or 1");
    std::vector<double> vals(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        vals[i] = (axis == 0) ? positions[i].x : positions[i].y;
    return histogram(vals, lo, hi, bins);
}

std::vector<double> ctrw_simulate(double rate, double alpha, double jump_scale, double final_time,
                                  std::size_t count, std::uint64_t seed,
                                  std::uint64_t stream_base) {
    if (!(rate > 0.0)) throw domain_error("ctrw: rate must be positive");
    if (!(final_time > 0.0)) throw domain_error("ctrw: final time must be positive");
    if (count < 1) throw domain_error("ctrw: count must be >= 1");
    StableParams jump{alpha, 0.0, jump_scale, 0.0};
    jump.validate();

    std::vector<double> out(count, 0.0);
    for (std::size_t i = 0; i < count; ++i) {
        RandomStream stream(seed, stream_base + i);
        double t = stream.next_exponential() / rate;
        double x = 0.0;
        while (t <= final_time) {
            x += sample_stable_one(jump, stream);
            t += stream.next_exponential() / rate;
        }
        out[i] = x;
    }
    return out;
}

} // namespace fracdiff
