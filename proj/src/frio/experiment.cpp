// Copyright 2026 The FRIO Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "frio/experiment.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <thread>

#include "frio/error.hpp"
#include "frio/rng.hpp"
#include "frio/strategy.hpp"

namespace frio {

namespace {

constexpr uint64_t kOpticalStream = 0x0F7100000000ULL;

/// Runs fn(j) for j in [0, n) on up to `threads` workers. Each j writes only
/// its own output slot, so the result equals the sequential one.
template <typename Fn>
void for_each_state(int n, int threads, Fn fn) {
    if (threads <= 1 || n <= 1) {
        for (int j = 0; j < n; ++j) {
            fn(j);
        }
        return;
    }
    std::vector<std::thread> pool;
    int workers = std::min(threads, n);
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([=, &fn] {
            for (int j = w; j < n; j += workers) {
                fn(j);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

const IntensityPattern &find_pattern(const std::vector<IntensityPattern> &patterns, int j, Branch b) {
    for (const auto &p : patterns) {
        if (p.state_index == j && p.branch == b) {
            return p;
        }
    }
    throw DomainError("estimate: missing " + branch_name(b) + " pattern for state " + std::to_string(j));
}

}  // namespace

std::string mode_name(Mode m) {
    switch (m) {
        case Mode::Analytic:
            return "analytic";
        case Mode::MonteCarlo:
            return "montecarlo";
        case Mode::Optical:
            return "optical";
    }
    return "analytic";
}

Mode parse_mode(const std::string &s) {
    if (s == "analytic") {
        return Mode::Analytic;
    }
    if (s == "montecarlo") {
        return Mode::MonteCarlo;
    }
    if (s == "optical") {
        return Mode::Optical;
    }
    throw ConfigError("unknown mode '" + s + "' (expected analytic, montecarlo or optical)");
}

void RunConfig::finalize() {
    if (n_states.empty()) {
        throw ConfigError("n_states must not be empty");
    }
    for (int n : n_states) {
        if (n < 2 || n > kMaxStates) {
            throw ConfigError("n_states entries must lie in [2, " + std::to_string(kMaxStates) + "]");
        }
    }
    if (!(theta_deg > 0 && theta_deg <= 45.0)) {
        throw ConfigError("theta_deg must lie in (0, 45]");
    }
    if (shots_per_state < 1) {
        throw ConfigError("shots_per_state must be at least 1");
    }
    if (threads < 1) {
        throw ConfigError("threads must be at least 1");
    }
    if (modes.empty()) {
        throw ConfigError("at least one mode is required");
    }
    if (!(camera.peak_counts > 0) || !(camera.background >= 0)) {
        throw ConfigError("camera: peak_counts must be positive and background non-negative");
    }
    if (!(ramp.epsilon_max >= 0 && ramp.epsilon_max <= 1) || ramp.end_gray <= ramp.start_gray) {
        throw ConfigError("depolarization ramp is malformed");
    }
    optics.validate();
    if (!noise.table) {
        noise.table = std::make_shared<const CalibrationTable>(default_calibration_table(ramp));
    }
    noise.validate();
    if (schedule_deg.empty() && gray_levels.empty()) {
        for (const auto &p : operating_points()) {
            schedule_deg.push_back(p.theta_out_deg);
        }
    }
    for (double d : schedule_deg) {
        if (!(d >= theta_deg - 1e-9 && d <= 45.0 + 1e-9)) {
            throw ConfigError("schedule angles must lie in [theta, 45] degrees");
        }
    }
}

std::vector<ScheduleEntry> resolve_schedule(const RunConfig &cfg) {
    std::vector<ScheduleEntry> out;
    const CalibrationTable &table = *cfg.noise.table;
    const double theta = cfg.theta();
    if (!cfg.gray_levels.empty()) {
        for (int gl : cfg.gray_levels) {
            ScheduleEntry e;
            e.gray_level = gl;
            e.theta_out = std::min(theta_from_gray(gl, theta, table), kPi / 4);
            if (e.theta_out < theta) {
                throw ConfigError("gray level " + std::to_string(gl) + " gives theta' below theta");
            }
            e.phase = wrap_two_pi(table.at(gl).phase);
            out.push_back(e);
        }
        return out;
    }
    for (double deg : cfg.schedule_deg) {
        ScheduleEntry e;
        e.theta_out = std::clamp(deg_to_rad(deg), theta, kPi / 4);
        try {
            e.gray_level = table.gray_for_theta(e.theta_out, theta);
            e.phase = wrap_two_pi(table.at(e.gray_level).phase);
        } catch (const DomainError &) {
            if (cfg.noise.depolarization) {
                throw ConfigError("separation angle " + std::to_string(deg) +
                                  " deg is not reachable with the calibration table");
            }
            e.gray_level = -1;
            e.phase = 0;
        }
        out.push_back(e);
    }
    return out;
}

PointModel model_point(const RunConfig &cfg, int n, const ScheduleEntry &entry) {
    SymmetricEnsemble ens = symmetric_ensemble(n, cfg.theta(), entry.phase);
    SeparationMap map(cfg.theta(), entry.theta_out, entry.phase);
    PointModel pm;
    pm.n = n;
    pm.entry = entry;
    for (int j = 0; j < n; ++j) {
        NoisySeparation sep = noisy_separation(j, ens, map, cfg.noise, entry.gray_level);
        pm.success.push_back(success_branch(sep, cfg.noise));
        pm.failure.push_back(failure_branch(sep, cfg.noise));
    }
    return pm;
}

std::vector<TrialRecord> run_montecarlo(const RunConfig &cfg, int n, size_t t_index) {
    std::vector<ScheduleEntry> sched = resolve_schedule(cfg);
    if (t_index >= sched.size()) {
        throw ConfigError("schedule index out of range");
    }
    PointModel pm = model_point(cfg, n, sched[t_index]);
    const auto shots = static_cast<size_t>(cfg.shots_per_state);
    std::vector<TrialRecord> records(shots * static_cast<size_t>(n));

    std::vector<std::vector<double>> cdf(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<double> probs = detector_probabilities(pm.success[static_cast<size_t>(j)].state, cfg.optics, n);
        std::partial_sum(probs.begin(), probs.end(), std::back_inserter(cdf[static_cast<size_t>(j)]));
    }

    for_each_state(n, cfg.threads, [&](int j) {
        SplitMix64 rng(substream_key(cfg.seed, {static_cast<uint64_t>(n), t_index, static_cast<uint64_t>(j)}));
        const double ps = pm.success[static_cast<size_t>(j)].weight;
        const auto &c = cdf[static_cast<size_t>(j)];
        TrialRecord *out = records.data() + static_cast<size_t>(j) * shots;
        for (size_t s = 0; s < shots; ++s) {
            TrialRecord &r = out[s];
            r.prepared = j;
            if (rng.uniform() < ps) {
                r.branch = Branch::Success;
                double u = rng.uniform() * c.back();
                auto it = std::upper_bound(c.begin(), c.end(), u);
                r.detector = static_cast<int>(std::min<ptrdiff_t>(it - c.begin(), n - 1));
            } else {
                r.branch = Branch::Failure;
                r.detector = -1;
            }
        }
    });
    return records;
}

std::vector<IntensityPattern> run_optical(const RunConfig &cfg, int n, size_t t_index, bool shot_noise) {
    std::vector<ScheduleEntry> sched = resolve_schedule(cfg);
    if (t_index >= sched.size()) {
        throw ConfigError("schedule index out of range");
    }
    PointModel pm = model_point(cfg, n, sched[t_index]);
    const std::vector<double> grid = camera_grid(cfg.optics);
    std::vector<IntensityPattern> out(static_cast<size_t>(2 * n));

    for_each_state(n, cfg.threads, [&](int j) {
        const auto uj = static_cast<size_t>(j);
        IntensityPattern s = intensity_pattern(pm.success[uj].state, cfg.optics, pm.success[uj].weight, grid);
        IntensityPattern f = intensity_pattern(pm.failure[uj].state, cfg.optics, pm.failure[uj].weight, grid);
        double peak = std::max(*std::max_element(s.values.begin(), s.values.end()),
                               *std::max_element(f.values.begin(), f.values.end()));
        double scale = peak > 0 ? cfg.camera.peak_counts / peak : 0.0;
        SplitMix64 rng(substream_key(cfg.seed, {static_cast<uint64_t>(n), t_index, static_cast<uint64_t>(j), kOpticalStream}));
        for (IntensityPattern *p : {&s, &f}) {
            for (double &v : p->values) {
                double mean = scale * v + cfg.camera.background;
                double counts = mean;
                if (shot_noise) {
                    std::poisson_distribution<long long> pois(mean);
                    counts = mean > 0 ? static_cast<double>(pois(rng)) : 0.0;
                }
                v = counts - cfg.camera.background;
            }
        }
        s.state_index = j;
        s.branch = Branch::Success;
        f.state_index = j;
        f.branch = Branch::Failure;
        out[2 * uj] = std::move(s);
        out[2 * uj + 1] = std::move(f);
    });
    return out;
}

EstimateSet estimate(const std::vector<TrialRecord> &records, int n) {
    check_state_count(n);
    if (records.empty()) {
        throw DomainError("estimate: no records");
    }
    std::vector<double> shots(static_cast<size_t>(n), 0.0);
    std::vector<double> successes(static_cast<size_t>(n), 0.0);
    std::vector<std::vector<double>> hits(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    for (const TrialRecord &r : records) {
        if (r.prepared < 0 || r.prepared >= n) {
            throw DomainError("estimate: record with prepared index out of range");
        }
        const auto j = static_cast<size_t>(r.prepared);
        shots[j] += 1;
        if (r.branch == Branch::Success) {
            if (r.detector < 0 || r.detector >= n) {
                throw DomainError("estimate: successful record without a valid detector");
            }
            successes[j] += 1;
            hits[j][static_cast<size_t>(r.detector)] += 1;
        }
    }

    EstimateSet e;
    e.p_jk.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    double var_ps = 0;
    double var_pc = 0;
    for (int jj = 0; jj < n; ++jj) {
        const auto j = static_cast<size_t>(jj);
        if (shots[j] == 0) {
            throw ComputeError("estimate: no shots for state " + std::to_string(jj));
        }
        if (successes[j] == 0) {
            throw ComputeError("estimate: no successful separations for state " + std::to_string(jj));
        }
        double psj = successes[j] / shots[j];
        e.p_sj.push_back(psj);
        for (size_t k = 0; k < static_cast<size_t>(n); ++k) {
            e.p_jk[j][k] = hits[j][k] / successes[j];
        }
        var_ps += psj * (1.0 - psj) / shots[j];
        var_pc += e.p_jk[j][j] * (1.0 - e.p_jk[j][j]) / successes[j];
    }
    double pc_sum = 0;
    for (size_t j = 0; j < static_cast<size_t>(n); ++j) {
        pc_sum += e.p_jk[j][j];
    }
    e.p_s_hat = std::accumulate(e.p_sj.begin(), e.p_sj.end(), 0.0) / n;
    e.p_c_beta_hat = pc_sum / n;
    e.p_e_hat = e.p_s_hat * (1.0 - e.p_c_beta_hat);
    e.p_c_hat = e.p_s_hat * e.p_c_beta_hat;
    e.q_hat = 1.0 - e.p_s_hat;
    e.stderr_ps = std::sqrt(var_ps) / n;
    e.stderr_pc = std::sqrt(var_pc) / n;
    e.stderr_q = e.stderr_ps;
    e.stderr_pe = std::hypot((1.0 - e.p_c_beta_hat) * e.stderr_ps, e.p_s_hat * e.stderr_pc);
    return e;
}

Characterization characterize(const std::vector<IntensityPattern> &patterns, int n, double theta_out,
                              const OpticsConfig &optics) {
    check_state_count(n);
    Characterization c;
    for (int j = 0; j < n; ++j) {
        c.fits.push_back(fit_pattern(find_pattern(patterns, j, Branch::Success), optics));
    }
    c.correction = phase_correction(c.fits, n);
    for (const FitResult &f : c.fits) {
        c.states.push_back(reconstruct_density(theta_out, f, c.correction.phi_corr));
    }
    return c;
}

EstimateSet estimate(const std::vector<IntensityPattern> &patterns, int n, const OpticsConfig &optics) {
    check_state_count(n);
    if (patterns.empty()) {
        throw DomainError("estimate: no patterns");
    }
    std::vector<FitResult> fits;
    for (int j = 0; j < n; ++j) {
        fits.push_back(fit_pattern(find_pattern(patterns, j, Branch::Success), optics));
    }
    const PhaseCorrection corr = phase_correction(fits, n);
    const double shift = corr.phi_corr / optics.fringe_frequency();
    const std::vector<double> xk = detector_positions(n, optics);

    EstimateSet e;
    e.p_jk.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
    double var_ps = 0;
    double var_pc = 0;
    for (int jj = 0; jj < n; ++jj) {
        const auto j = static_cast<size_t>(jj);
        const IntensityPattern &s = find_pattern(patterns, jj, Branch::Success);
        const IntensityPattern &f = find_pattern(patterns, jj, Branch::Failure);
        double is = std::max(0.0, s.total());
        double ifail = std::max(0.0, f.total());
        if (!(is + ifail > 0)) {
            throw ComputeError("estimate: zero total intensity for state " + std::to_string(jj));
        }
        double psj = is / (is + ifail);
        e.p_sj.push_back(psj);
        var_ps += psj * (1.0 - psj) / (is + ifail);

        std::vector<double> comp(static_cast<size_t>(n));
        std::vector<double> var(static_cast<size_t>(n));
        for (size_t k = 0; k < static_cast<size_t>(n); ++k) {
            double chi = compensation_factor(xk[k], optics);
            double raw = std::max(0.0, sample_at(s, xk[k] + shift));
            comp[k] = raw / chi;
            var[k] = std::max(raw, 1.0) / (chi * chi);
        }
        double total = std::accumulate(comp.begin(), comp.end(), 0.0);
        if (!(total > 0)) {
            throw ComputeError("estimate: no light at the detectors for state " + std::to_string(jj));
        }
        double vj = 0;
        for (size_t k = 0; k < static_cast<size_t>(n); ++k) {
            e.p_jk[j][k] = comp[k] / total;
            double d = ((k == j ? total : 0.0) - comp[j]) / (total * total);
            vj += d * d * var[k];
        }
        var_pc += vj;
    }
    double pc_sum = 0;
    for (size_t j = 0; j < static_cast<size_t>(n); ++j) {
        pc_sum += e.p_jk[j][j];
    }
    e.p_s_hat = std::accumulate(e.p_sj.begin(), e.p_sj.end(), 0.0) / n;
    e.p_c_beta_hat = pc_sum / n;
    e.p_e_hat = e.p_s_hat * (1.0 - e.p_c_beta_hat);
    e.p_c_hat = e.p_s_hat * e.p_c_beta_hat;
    e.q_hat = 1.0 - e.p_s_hat;
    e.stderr_ps = std::sqrt(var_ps) / n;
    e.stderr_pc = std::sqrt(var_pc) / n;
    e.stderr_q = e.stderr_ps;
    e.stderr_pe = std::hypot((1.0 - e.p_c_beta_hat) * e.stderr_ps, e.p_s_hat * e.stderr_pc);
    return e;
}

std::vector<SweepRow> sweep(const RunConfig &cfg) {
    std::vector<ScheduleEntry> sched = resolve_schedule(cfg);
    std::vector<SweepRow> rows;
    for (int n : cfg.n_states) {
        for (size_t t = 0; t < sched.size(); ++t) {
            for (Mode mode : cfg.modes) {
                SweepRow row;
                row.n = n;
                row.theta_out_deg = rad_to_deg(sched[t].theta_out);
                row.mode = mode;
                if (mode == Mode::Analytic) {
                    FrioProbabilities fp = frio_probabilities(n, cfg.theta(), sched[t].theta_out);
                    row.p_s = success_probability(cfg.theta(), sched[t].theta_out);
                    row.p_c_beta = 1.0 - me_error_rate(n, sched[t].theta_out);
                    row.p_e = fp.p_error;
                    row.q = fp.q_inconclusive;
                } else {
                    EstimateSet e = mode == Mode::MonteCarlo ? estimate(run_montecarlo(cfg, n, t), n)
                                                             : estimate(run_optical(cfg, n, t), n, cfg.optics);
                    row.p_s = e.p_s_hat;
                    row.p_c_beta = e.p_c_beta_hat;
                    row.p_e = e.p_e_hat;
                    row.q = e.q_hat;
                    row.stderr_ps = e.stderr_ps;
                    row.stderr_pc = e.stderr_pc;
                }
                rows.push_back(row);
            }
        }
    }
    return rows;
}

}  // namespace frio
