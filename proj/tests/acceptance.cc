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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes. Reference values come from test_util.hpp, which
// shares no code with the library.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "frio/commands.hpp"
#include "frio/experiment.hpp"
#include "frio/oracle.hpp"
#include "test_util.hpp"

using namespace frio;
using frio_test::deg;
using frio_test::sq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char *f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), f, a, b, c);
    return buf;
}

const double kTheta = deg(19.5);
const std::vector<int> kNs{2, 3, 5, 7};

std::vector<double> table_angles() {
    std::vector<double> out;
    for (const auto &p : operating_points()) out.push_back(p.theta_out_deg);
    return out;
}

Outcome c1() {
    double q = q_mc(kTheta);
    return {std::abs(q - 0.7771) <= 5e-5, fmt("q_mc(19.5 deg) = %.6f (want 0.7771 +- 5e-5)", q)};
}

/// Montecarlo sweep shared by criteria 2 and 3.
std::vector<SweepRow> mc_rows() {
    static std::vector<SweepRow> rows = [] {
        RunConfig c;
        c.n_states = kNs;
        c.modes = {Mode::Analytic, Mode::MonteCarlo};
        c.shots_per_state = 100000;
        c.finalize();
        return sweep(c);
    }();
    return rows;
}

Outcome c2() {
    double worst_exact = 0;
    double worst_sigma = 0;
    double largest_se = 0;
    for (const SweepRow &r : mc_rows()) {
        double tp = deg(r.theta_out_deg);
        double ps = frio_test::ref_ps(kTheta, tp);
        double pc = (1 + std::sin(2 * tp)) / r.n;
        if (r.mode == Mode::Analytic) {
            worst_exact = std::max({worst_exact, std::abs(r.p_s - ps), std::abs(r.p_c_beta - pc)});
        } else {
            double m = 100000.0 * r.n;
            double se_ps = std::sqrt(ps * (1 - ps) / m);
            double se_pc = std::sqrt(pc * (1 - pc) / (m * ps));
            largest_se = std::max({largest_se, se_ps, se_pc});
            auto z = [](double d, double se) { return se > 0 ? d / se : (d <= 1e-12 ? 0.0 : 1e9); };
            worst_sigma = std::max({worst_sigma, z(std::abs(r.p_s - ps), se_ps), z(std::abs(r.p_c_beta - pc), se_pc)});
        }
    }
    return {worst_exact <= 1e-14 && worst_sigma <= 3.0,
            fmt("analytic max |err| = %.2e; montecarlo max deviation = %.2f sigma (largest stderr %.2e)", worst_exact,
                worst_sigma, largest_se)};
}

Outcome c3() {
    const double qmc = q_mc(kTheta);
    double worst_sigma = 0;
    for (const SweepRow &r : mc_rows()) {
        if (r.mode != Mode::MonteCarlo) continue;
        double m = 100000.0 * r.n;
        double qt = frio_test::ref_q(kTheta, deg(r.theta_out_deg));
        double pe = frio_test::ref_pe_min(r.n, qt, qmc);
        double se_q = std::sqrt(qt * (1 - qt) / m);
        double se_pe = std::sqrt(pe * (1 - pe) / m);
        auto z = [](double d, double se) { return se > 0 ? d / se : (d <= 1e-12 ? 0.0 : 1e9); };
        worst_sigma = std::max({worst_sigma, z(std::abs(r.q - qt), se_q), z(std::abs(r.p_e - pe), se_pe)});
    }
    double worst_end = 0;
    RunConfig c;
    c.n_states = kNs;
    c.modes = {Mode::Analytic};
    c.schedule_deg = {19.5, 45.0};
    c.finalize();
    for (const SweepRow &r : sweep(c)) {
        double want = r.theta_out_deg < 20 ? 1 - (1 + std::sin(2 * kTheta)) / r.n : (1 - qmc) * (1 - 2.0 / r.n);
        worst_end = std::max(worst_end, std::abs(r.p_e - want));
        worst_end = std::max(worst_end, std::abs(pe_min(r.n, r.q, qmc) - want));
    }
    return {worst_sigma <= 3.0 && worst_end <= 1e-3,
            fmt("montecarlo (Q, P_e) max deviation from curve = %.2f sigma; endpoint max |err| = %.2e", worst_sigma,
                worst_end)};
}

Outcome c4() {
    const double qmc = q_mc(kTheta);
    double lo = 1, hi = -1;
    int runs = 0;
    auto take = [&](int n, OracleFamily f) {
        for (double q : {0.0, 0.2, 0.4, 0.6, qmc}) {
            OracleReport r = brute_force_pe(n, kTheta, q, f);
            lo = std::min(lo, r.gap);
            hi = std::max(hi, r.gap);
            ++runs;
        }
    };
    take(2, OracleFamily::Unconstrained);
    take(2, OracleFamily::Covariant);
    take(3, OracleFamily::Covariant);
    return {lo >= -1e-6 && hi <= 2e-3, fmt("%g oracle runs, gap in [%.2e, %.2e] (want [-1e-6, 2e-3])", runs, lo, hi)};
}

Outcome c5() {
    double worst = 0;
    for (int n = 2; n <= 10; ++n) {
        auto basis = fourier_basis(n);
        Povm me = me_povm(n);
        for (int i = 0; i < 20; ++i) {
            double tp = kTheta + (kPi / 4 - kTheta) * i / 19;
            for (int j = 0; j < n; ++j) {
                PureQubit b = separated_state(n, j, tp);
                for (int k = 0; k < n; ++k) {
                    double lhs = naimark_probability(basis[size_t(k)], b);
                    double rhs = born_probability(b, me.elements[size_t(k)]);
                    worst = std::max({worst, std::abs(lhs - rhs), std::abs(lhs - frio_test::ref_fourier_prob(n, k, j, tp)),
                                      std::abs(rhs - frio_test::ref_me_prob(n, k, j, tp))});
                }
            }
        }
    }
    return {worst <= 1e-12, fmt("max |<mu_k|beta_j>|^2 - <beta_j|Pi_k|beta_j>| = %.2e over N = 2..10", worst)};
}

QubitDensity pure(int n, int j, double tp) {
    auto k = frio_test::symmetric_ket(n, j, tp);
    return to_density(PureQubit(k[0], k[1]));
}

Outcome c6() {
    OpticsConfig c;
    double clean = 0;
    for (int n : kNs) {
        for (double td : table_angles()) {
            double tp = deg(td);
            for (int j = 0; j < n; ++j) {
                Mat2 m = pure(n, j, tp).matrix();
                for (double shrink : {1.0, 0.5}) {
                    Mat2 r = m;
                    r(0, 1) *= shrink;
                    r(1, 0) *= shrink;
                    FitResult f = fit_pattern(intensity_pattern(QubitDensity(r), c), c);
                    clean = std::max(clean, trace_distance(reconstruct_density(tp, f, 0).matrix(), r));
                }
            }
        }
    }
    double noisy = 0;
    const double tp = deg(29.5);
    Mat2 target = pure(3, 1, tp).matrix();
    IntensityPattern base = intensity_pattern(QubitDensity(target), c);
    double peak = *std::max_element(base.values.begin(), base.values.end());
    for (uint64_t seed = 0; seed < 100; ++seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0, 0.01 * peak);
        IntensityPattern p = base;
        for (double &v : p.values) v += g(rng);
        FitResult f = fit_pattern(p, c);
        noisy = std::max(noisy, trace_distance(reconstruct_density(tp, f, 0).matrix(), target));
    }
    double born = 0;
    for (int n : kNs) {
        for (double td : table_angles()) {
            for (int j = 0; j < n; ++j) {
                auto p = detector_probabilities(pure(n, j, deg(td)), c, n);
                for (int k = 0; k < n; ++k) {
                    born = std::max(born, std::abs(p[size_t(k)] - frio_test::ref_fourier_prob(n, k, j, deg(td))));
                }
            }
        }
    }
    return {clean <= 1e-6 && noisy <= 0.02 && born <= 1e-6,
            fmt("noiseless trace distance %.2e; 1%% noise worst of 100 runs %.4f; detector vs Born %.2e", clean, noisy,
                born)};
}

Outcome c7() {
    double worst = 0;
    for (int n : kNs) {
        for (int i = 0; i < 10; ++i) {
            double tp = kTheta + (kPi / 4 - kTheta) * i / 9;
            auto ens = symmetric_ensemble(n, kTheta, 0);
            FrioProbabilities b = povm_probabilities(frio_povm(n, kTheta, tp), ens.states);
            double ps = frio_test::ref_ps(kTheta, tp);
            double pe = frio_test::ref_pe(n, kTheta, tp);
            worst = std::max({worst, std::abs(b.p_error - pe), std::abs(b.p_correct - (ps - pe)),
                              std::abs(b.q_inconclusive - (1 - ps))});
        }
    }
    return {worst <= 1e-10, fmt("max |Born - closed form| = %.2e", worst)};
}

Outcome c8() {
    RunConfig c;
    c.n_states = kNs;
    c.noise.depolarization = true;
    c.finalize();
    auto sched = resolve_schedule(c);
    double unchanged = 0;
    double min_drop = 1;
    for (int n : kNs) {
        for (size_t t = 0; t < sched.size(); ++t) {
            PointModel pm = model_point(c, n, sched[t]);
            double ideal = std::sin(2 * sched[t].theta_out);
            for (const BranchState &b : pm.success) {
                double v = b.visibility();
                if (t < 5) {
                    unchanged = std::max(unchanged, std::abs(v - ideal));
                } else {
                    min_drop = std::min(min_drop, ideal - v);
                }
            }
        }
    }
    return {unchanged <= 1e-9 && min_drop > 0,
            fmt("t1-t5 max |V - sin 2theta'| = %.2e; t6-t7 smallest drop = %.4f", unchanged, min_drop)};
}

Outcome c9() {
    AppConfig a;
    a.run.n_states = {3, 5};
    a.run.shots_per_state = 20000;
    a.run.modes = {Mode::MonteCarlo, Mode::Optical};
    a.run.noise.depolarization = true;
    a.run.finalize();
    AppConfig b = a;
    b.run.threads = 4;
    size_t files = 0;
    bool same = true;
    for (const char *verb : {"sweep", "fitdemo", "bloch"}) {
        CommandResult x = run_command(verb, a);
        CommandResult y = run_command(verb, b);
        same = same && x.artifacts.size() == y.artifacts.size();
        for (size_t i = 0; same && i < x.artifacts.size(); ++i) {
            same = x.artifacts[i].name == y.artifacts[i].name && x.artifacts[i].content == y.artifacts[i].content;
        }
        files += x.artifacts.size();
    }
    return {same, fmt("%g files from sweep/fitdemo/bloch compared byte for byte (1 vs 4 threads)", double(files))};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *name;
        std::function<Outcome()> fn;
    };
    std::vector<Criterion> all{
        {1, "endpoint q_mc", c1},        {2, "success and conditional curves", c2},
        {3, "error vs inconclusive rate", c3}, {4, "oracle optimality", c4},
        {5, "Naimark equivalence", c5},  {6, "optics round trip", c6},
        {7, "two-path POVM equality", c7}, {8, "depolarization pattern", c8},
        {9, "determinism", c9},
    };
    int failed = 0;
    for (const auto &c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] criterion %d (%s): %s [%.1f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", int(all.size()) - failed, all.size());
    return failed == 0 ? 0 : 1;
}
