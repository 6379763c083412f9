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

#include "frio/oracle.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <vector>

#include "frio/error.hpp"

namespace frio {

namespace {

constexpr double kValidTol = 1e-10;

// ---------------------------------------------------------------------------
// Covariant family
// ---------------------------------------------------------------------------

struct CovariantCandidate {
    double a = 0;
    double gamma = 0;
    double pe = std::numeric_limits<double>::infinity();
    double q = 0;
};

Povm covariant_povm(int n, double a, double b, double gamma) {
    // Pi_? = diag(a, b); conclusive weight M = I - Pi_? spread covariantly.
    Vec2 w(std::sqrt(1.0 - a), std::sqrt(1.0 - b) * std::polar(1.0, gamma));
    w /= std::sqrt(2.0);
    Mat2 base = (2.0 / n) * (w * w.adjoint());
    Mat2 v = symmetry_unitary(n);
    Povm p;
    p.has_inconclusive = true;
    Mat2 vj = Mat2::Identity();
    for (int j = 0; j < n; ++j) {
        p.elements.push_back(vj * base * vj.adjoint());
        vj = v * vj;
    }
    Mat2 inc = Mat2::Zero();
    inc(0, 0) = a;
    inc(1, 1) = b;
    p.elements.push_back(inc);
    return p;
}

void covariant_scan(int n, const std::vector<PureQubit> &states, double q, double a_lo, double a_hi, double g_lo,
                    double g_hi, int points, CovariantCandidate &best, OracleReport &rep) {
    const double c2 = std::norm(states[0].amp0());
    const double s2 = std::norm(states[0].amp1());
    for (int ia = 0; ia < points; ++ia) {
        double a = points > 1 ? a_lo + (a_hi - a_lo) * ia / (points - 1) : a_lo;
        double b = (q - a * c2) / s2;
        if (a < 0 || a > 1 || b < -1e-15 || b > 1 + 1e-15) {
            continue;
        }
        b = std::clamp(b, 0.0, 1.0);
        for (int ig = 0; ig < points; ++ig) {
            double g = points > 1 ? g_lo + (g_hi - g_lo) * ig / (points - 1) : g_lo;
            Povm p = covariant_povm(n, a, b, g);
            ++rep.evaluated;
            if (!verify_povm(p).valid(kValidTol)) {
                ++rep.rejected;
                continue;
            }
            FrioProbabilities fp = povm_probabilities(p, states);
            if (fp.p_error < best.pe) {
                best = {a, g, fp.p_error, fp.q_inconclusive};
            }
        }
    }
}

OracleReport covariant_search(int n, double theta, double q, const OracleResolution &res) {
    OracleReport rep;
    SymmetricEnsemble ens = symmetric_ensemble(n, theta, 0.0);
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    double a_lo = std::max(0.0, (q - s2) / c2);
    double a_hi = std::min(1.0, q / c2);
    double g_lo = 0;
    double g_hi = kTwoPi;
    const int pts = std::max(3, res.covariant_points);

    CovariantCandidate best;
    covariant_scan(n, ens.states, q, a_lo, a_hi, g_lo, g_hi, pts, best, rep);
    double da = (a_hi - a_lo) / (pts - 1);
    double dg = (g_hi - g_lo) / (pts - 1);
    for (int level = 0; level < res.refine_levels && std::isfinite(best.pe); ++level) {
        CovariantCandidate center = best;
        double lo = std::max(a_lo, center.a - da);
        double hi = std::min(a_hi, center.a + da);
        covariant_scan(n, ens.states, q, lo, hi, center.gamma - dg, center.gamma + dg, pts, best, rep);
        da = (hi - lo) / (pts - 1);
        dg = 2.0 * dg / (pts - 1);
    }
    if (!std::isfinite(best.pe)) {
        throw ComputeError("oracle: no valid covariant strategy found");
    }
    rep.pe_bruteforce = best.pe;
    rep.achieved_q = best.q;
    std::ostringstream r;
    r << "covariant grid " << pts << "x" << pts << " over (a, gamma), " << res.refine_levels << " refinement level(s)";
    rep.search_resolution = r.str();
    return rep;
}

// ---------------------------------------------------------------------------
// Unconstrained n = 2 family
// ---------------------------------------------------------------------------

// Extremal 3-outcome qubit POVMs have rank-one elements a_k (I + n_k . sigma)
// with coplanar unit Bloch vectors, sum a_k = 1 and sum a_k n_k = 0. The
// parameters are the plane normal (alpha, beta) and the in-plane angles of
// n_0, n_1, n_?. Every 3-outcome POVM is a mixture of extremal ones, so the
// best error at fixed Q is the lower convex hull of the (Q, P_e) pairs.

using Params = std::array<double, 5>;

struct Point {
    double q = 0;
    double pe = 0;
    Params params{};
};

struct Bloch3 {
    double x, y, z;
};

struct Extremal {
    std::array<double, 3> weight;
    std::array<Bloch3, 3> dir;
};

bool make_extremal(const Params &p, Extremal &out) {
    const double alpha = p[0];
    const double beta = p[1];
    Bloch3 nu{std::sin(alpha) * std::cos(beta), std::sin(alpha) * std::sin(beta), std::cos(alpha)};
    // e1 = normalize(z x nu), falling back to x when nu is along z.
    Bloch3 e1{-nu.y, nu.x, 0.0};
    double len = std::hypot(e1.x, e1.y);
    if (len < 1e-12) {
        e1 = {1.0, 0.0, 0.0};
    } else {
        e1 = {e1.x / len, e1.y / len, 0.0};
    }
    Bloch3 e2{nu.y * e1.z - nu.z * e1.y, nu.z * e1.x - nu.x * e1.z, nu.x * e1.y - nu.y * e1.x};

    std::array<double, 3> cs{};
    std::array<double, 3> sn{};
    for (int k = 0; k < 3; ++k) {
        cs[static_cast<size_t>(k)] = std::cos(p[static_cast<size_t>(2 + k)]);
        sn[static_cast<size_t>(k)] = std::sin(p[static_cast<size_t>(2 + k)]);
        out.dir[static_cast<size_t>(k)] = {cs[static_cast<size_t>(k)] * e1.x + sn[static_cast<size_t>(k)] * e2.x,
                                           cs[static_cast<size_t>(k)] * e1.y + sn[static_cast<size_t>(k)] * e2.y,
                                           cs[static_cast<size_t>(k)] * e1.z + sn[static_cast<size_t>(k)] * e2.z};
    }
    auto cross = [&](size_t i, size_t j) { return cs[i] * sn[j] - sn[i] * cs[j]; };
    std::array<double, 3> w{cross(1, 2), cross(2, 0), cross(0, 1)};
    for (double &v : w) {
        if (std::abs(v) < 1e-14) {
            v = 0.0;
        }
    }
    double sum = w[0] + w[1] + w[2];
    if (sum < 0) {
        for (double &v : w) {
            v = -v;
        }
        sum = -sum;
    }
    if (!(sum > 1e-12) || w[0] < 0 || w[1] < 0 || w[2] < 0) {
        return false;
    }
    for (size_t k = 0; k < 3; ++k) {
        out.weight[k] = w[k] / sum;
    }
    return true;
}

/// Same quantities verify_povm reports, computed from the Bloch form.
PovmCheck check_extremal(const Extremal &e) {
    double sw = 0;
    Bloch3 sv{0, 0, 0};
    double min_eig = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < 3; ++k) {
        double a = e.weight[k];
        const Bloch3 &d = e.dir[k];
        sw += a;
        sv.x += a * d.x;
        sv.y += a * d.y;
        sv.z += a * d.z;
        double r = std::sqrt(d.x * d.x + d.y * d.y + d.z * d.z);
        min_eig = std::min(min_eig, a * (1.0 - r));
    }
    PovmCheck c;
    c.completeness_deviation = std::abs(sw - 1.0) + std::sqrt(sv.x * sv.x + sv.y * sv.y + sv.z * sv.z);
    c.min_eigenvalue = min_eig;
    return c;
}

Povm extremal_povm(const Extremal &e) {
    Povm p;
    p.has_inconclusive = true;
    for (size_t k = 0; k < 3; ++k) {
        const Bloch3 &d = e.dir[k];
        Mat2 m;
        m(0, 0) = 1.0 + d.z;
        m(1, 1) = 1.0 - d.z;
        m(0, 1) = cdouble(d.x, -d.y);
        m(1, 0) = cdouble(d.x, d.y);
        p.elements.push_back(e.weight[k] * m);
    }
    return p;
}

struct TwoStateProblem {
    Bloch3 r0;
    Bloch3 r1;

    /// (Q, P_e) of an extremal POVM: Tr(rho Pi_k) = a_k (1 + n_k . r).
    std::pair<double, double> score(const Extremal &e) const {
        auto tr = [&](size_t k, const Bloch3 &r) {
            const Bloch3 &d = e.dir[k];
            return e.weight[k] * (1.0 + d.x * r.x + d.y * r.y + d.z * r.z);
        };
        double pe = 0.5 * (tr(0, r1) + tr(1, r0));
        double q = 0.5 * (tr(2, r0) + tr(2, r1));
        return {q, pe};
    }
};

bool lex_less(const Params &a, const Params &b) { return a < b; }

class HullCollector {
   public:
    explicit HullCollector(int bins) : bins_(static_cast<size_t>(bins)) {}

    void add(const Point &p) {
        size_t idx = std::min(bins_.size() - 1, static_cast<size_t>(std::max(0.0, p.q) * static_cast<double>(bins_.size())));
        auto &slot = bins_[idx];
        if (!slot.has || p.pe < slot.point.pe || (p.pe == slot.point.pe && lex_less(p.params, slot.point.params))) {
            slot.has = true;
            slot.point = p;
        }
        // Exact endpoints are kept separately so q = 0 and q = 1 are never lost to binning.
        if (p.q == 0.0) {
            keep_min(zero_, p);
        }
    }

    void add_fixed(const Point &p) { fixed_.push_back(p); }

    /// Lower convex hull evaluated at q; returns the two supporting points and the value.
    bool evaluate(double q, double &value, Point &left, Point &right) const {
        std::vector<Point> pts = fixed_;
        for (const auto &s : bins_) {
            if (s.has) {
                pts.push_back(s.point);
            }
        }
        if (zero_.has) {
            pts.push_back(zero_.point);
        }
        std::sort(pts.begin(), pts.end(), [](const Point &a, const Point &b) {
            if (a.q != b.q) {
                return a.q < b.q;
            }
            if (a.pe != b.pe) {
                return a.pe < b.pe;
            }
            return lex_less(a.params, b.params);
        });
        std::vector<Point> hull;
        for (const Point &p : pts) {
            if (!hull.empty() && hull.back().q == p.q) {
                continue;
            }
            while (hull.size() >= 2) {
                const Point &a = hull[hull.size() - 2];
                const Point &b = hull.back();
                double cross = (b.q - a.q) * (p.pe - a.pe) - (b.pe - a.pe) * (p.q - a.q);
                if (cross <= 0) {
                    hull.pop_back();
                } else {
                    break;
                }
            }
            hull.push_back(p);
        }
        if (hull.empty() || q < hull.front().q || q > hull.back().q) {
            return false;
        }
        for (size_t i = 0; i + 1 < hull.size(); ++i) {
            if (q >= hull[i].q && q <= hull[i + 1].q) {
                left = hull[i];
                right = hull[i + 1];
                double t = (q - left.q) / (right.q - left.q);
                value = left.pe + t * (right.pe - left.pe);
                return true;
            }
        }
        left = right = hull.back();
        value = hull.back().pe;
        return true;
    }

   private:
    struct Slot {
        bool has = false;
        Point point;
    };
    static void keep_min(Slot &s, const Point &p) {
        if (!s.has || p.pe < s.point.pe || (p.pe == s.point.pe && lex_less(p.params, s.point.params))) {
            s.has = true;
            s.point = p;
        }
    }
    std::vector<Slot> bins_;
    std::vector<Point> fixed_;
    Slot zero_;
};

void scan_box(const TwoStateProblem &prob, const Params &lo, const std::array<double, 5> &step,
              const std::array<int, 5> &count, HullCollector &hull, OracleReport &rep) {
    Params p{};
    Extremal e{};
    for (int i0 = 0; i0 < count[0]; ++i0) {
        p[0] = lo[0] + step[0] * i0;
        for (int i1 = 0; i1 < count[1]; ++i1) {
            p[1] = lo[1] + step[1] * i1;
            for (int i2 = 0; i2 < count[2]; ++i2) {
                p[2] = lo[2] + step[2] * i2;
                for (int i3 = 0; i3 < count[3]; ++i3) {
                    p[3] = lo[3] + step[3] * i3;
                    for (int i4 = 0; i4 < count[4]; ++i4) {
                        p[4] = lo[4] + step[4] * i4;
                        ++rep.evaluated;
                        if (!make_extremal(p, e) || !check_extremal(e).valid(kValidTol)) {
                            ++rep.rejected;
                            continue;
                        }
                        auto [q, pe] = prob.score(e);
                        hull.add({q, pe, p});
                    }
                }
            }
        }
    }
}

OracleReport unconstrained_search(double theta, double q, const OracleResolution &res) {
    OracleReport rep;
    const double s2t = std::sin(2.0 * theta);
    const double c2t = std::cos(2.0 * theta);
    TwoStateProblem prob{{s2t, 0.0, c2t}, {-s2t, 0.0, c2t}};

    HullCollector hull(4000);
    // Trivial extremal POVMs: always answer 0, always 1, always inconclusive.
    hull.add_fixed({0.0, 0.5, {-1, -1, -1, -1, 0}});
    hull.add_fixed({0.0, 0.5, {-1, -1, -1, -1, 1}});
    hull.add_fixed({1.0, 0.0, {-1, -1, -1, -1, 2}});

    const int kpsi = std::max(8, res.unconstrained_points);
    const int kalpha = std::max(3, kpsi / 4 + 1);
    const int kbeta = std::max(4, kpsi / 2);
    std::array<double, 5> step{kPi / 2 / (kalpha - 1), kTwoPi / kbeta, kTwoPi / kpsi, kTwoPi / kpsi, kTwoPi / kpsi};
    scan_box(prob, {0, 0, 0, 0, 0}, step, {kalpha, kbeta, kpsi, kpsi, kpsi}, hull, rep);

    const int kref = 9;
    for (int level = 0; level < res.refine_levels; ++level) {
        double value = 0;
        Point left;
        Point right;
        if (!hull.evaluate(q, value, left, right)) {
            break;
        }
        std::array<double, 5> fine{};
        for (size_t d = 0; d < 5; ++d) {
            fine[d] = 2.0 * step[d] / (kref - 1);
        }
        for (const Point *c : {&left, &right}) {
            if (c->params[0] < 0) {
                continue;  // trivial POVM, nothing to refine
            }
            Params lo{};
            for (size_t d = 0; d < 5; ++d) {
                lo[d] = c->params[d] - step[d];
            }
            scan_box(prob, lo, fine, {kref, kref, kref, kref, kref}, hull, rep);
        }
        step = fine;
    }

    double value = 0;
    Point left;
    Point right;
    if (!hull.evaluate(q, value, left, right)) {
        throw ComputeError("oracle: target rate is outside the explored (Q, P_e) region");
    }
    // The mixture of the two supporting strategies must itself be a valid POVM.
    for (const Point *c : {&left, &right}) {
        if (c->params[0] < 0) {
            continue;
        }
        Extremal e{};
        if (!make_extremal(c->params, e) || !verify_povm(extremal_povm(e)).valid(kValidTol)) {
            throw ComputeError("oracle: supporting strategy failed POVM verification");
        }
    }
    rep.pe_bruteforce = value;
    rep.achieved_q = q;
    std::ostringstream r;
    r << "extremal 3-outcome POVMs, base grid " << kalpha << "x" << kbeta << "x" << kpsi << "^3 over (alpha, beta, "
      << "psi_0, psi_1, psi_?), " << res.refine_levels << " refinement level(s) of " << kref << "^5, convex hull";
    rep.search_resolution = r.str();
    return rep;
}

}  // namespace

PovmCheck verify_povm(const Povm &p) {
    require(!p.elements.empty(), "verify_povm: empty POVM");
    Mat2 sum = Mat2::Zero();
    PovmCheck c;
    c.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (const Mat2 &e : p.elements) {
        sum += e;
        double lo = hermitian_eigenvalues(e)[0] - hermiticity_defect(e);
        c.min_eigenvalue = std::min(c.min_eigenvalue, lo);
    }
    Mat2 dev = sum - Mat2::Identity();
    c.completeness_deviation = hermitian_norm(dev) + hermiticity_defect(dev);
    return c;
}

std::string family_name(OracleFamily f) { return f == OracleFamily::Covariant ? "covariant" : "unconstrained"; }

OracleFamily parse_family(const std::string &s) {
    if (s == "covariant") {
        return OracleFamily::Covariant;
    }
    if (s == "unconstrained") {
        return OracleFamily::Unconstrained;
    }
    throw ConfigError("unknown oracle family '" + s + "'");
}

OracleReport brute_force_pe(int n, double theta, double q_target, OracleFamily family, const OracleResolution &res) {
    check_state_count(n);
    require(theta > 0 && theta <= kPi / 4, "brute_force_pe: theta must lie in (0, pi/4]");
    const double qmc = q_mc(theta);
    if (!(q_target >= 0 && q_target <= qmc + 1e-12)) {
        throw DomainError("brute_force_pe: q_target must lie in [0, cos 2 theta]");
    }
    q_target = std::min(q_target, qmc);
    if (family == OracleFamily::Unconstrained && n != 2) {
        throw DomainError("brute_force_pe: the unconstrained search is implemented for n = 2 only");
    }
    OracleReport rep = family == OracleFamily::Covariant ? covariant_search(n, theta, q_target, res)
                                                         : unconstrained_search(theta, q_target, res);
    rep.n = n;
    rep.theta = theta;
    rep.q_target = q_target;
    rep.family = family;
    rep.pe_formula = pe_min(n, q_target, qmc);
    rep.gap = rep.pe_bruteforce - rep.pe_formula;
    return rep;
}

}  // namespace frio
