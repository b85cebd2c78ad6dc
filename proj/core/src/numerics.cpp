#include "logfront/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "logfront/elimination.hpp"
#include "logfront/error.hpp"
#include "logfront/lattice.hpp"
#include "logfront/logfront.hpp"
#include "logfront/parallel.hpp"

namespace logfront {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = std::numbers::pi;

// splitmix64: deterministic per-index randomness independent of scheduling.
uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double uniform01(uint64_t& state) {
    state = splitmix64(state);
    return static_cast<double>(state >> 11) * 0x1.0p-53;
}

cplx poly_eval(const std::vector<cplx>& coeffs, cplx x) {
    cplx acc = 0.0;
    for (size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
    return acc;
}

double residual_scale(const std::vector<cplx>& coeffs, cplx x) {
    double ax = std::abs(x), p = 1.0, s = 0.0;
    for (const auto& c : coeffs) {
        s += std::abs(c) * p;
        p *= ax;
    }
    return std::max(s, 1e-300);
}

}  // namespace

// --- univariate roots -----------------------------------------------------------

std::vector<RootCluster> univariate_roots(const std::vector<cplx>& coeffs_in,
                                          const NumericsConfig& config) {
    std::vector<cplx> coeffs = coeffs_in;
    while (!coeffs.empty() && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1)
        throw Error("numerics", "degree_zero", "root finding needs degree >= 1");

    // Exact zero low-order coefficients give roots at the origin.
    int zero_roots = 0;
    while (std::abs(coeffs.front()) == 0.0) {
        coeffs.erase(coeffs.begin());
        ++zero_roots;
    }

    std::vector<cplx> roots;
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n > 0) {
        std::vector<cplx> deriv(n);
        for (int k = 1; k <= n; ++k) deriv[k - 1] = coeffs[k] * static_cast<double>(k);

        double radius = 0.0;
        for (int k = 0; k < n; ++k)
            radius = std::max(radius, std::pow(std::abs(coeffs[k] / coeffs[n]), 1.0 / (n - k)));
        radius = 2.0 * std::max(radius, 0.5);

        roots.resize(n);
        for (int i = 0; i < n; ++i) {
            double ang = 2.0 * kPi * i / n + 0.42;
            roots[i] = radius * cplx(std::cos(ang), std::sin(ang));
        }

        bool converged = false;
        for (int iter = 0; iter < config.root_max_iter && !converged; ++iter) {
            converged = true;
            for (int i = 0; i < n; ++i) {
                cplx pv = poly_eval(coeffs, roots[i]);
                cplx dv = poly_eval(deriv, roots[i]);
                cplx newton = dv == 0.0 ? cplx(1e-12, 1e-12) : pv / dv;
                cplx repel = 0.0;
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    cplx diff = roots[i] - roots[j];
                    if (std::abs(diff) < 1e-100) diff = cplx(1e-100, 0);
                    repel += 1.0 / diff;
                }
                cplx denom = 1.0 - newton * repel;
                cplx step = std::abs(denom) < 1e-100 ? newton : newton / denom;
                roots[i] -= step;
                if (std::abs(step) > 1e-14 * (1.0 + std::abs(roots[i]))) converged = false;
            }
        }

        for (const auto& r : roots) {
            double res = std::abs(poly_eval(coeffs, r)) / residual_scale(coeffs, r);
            if (res > config.root_residual_tol) {
                std::ostringstream os;
                os << "root residual " << res << " above tolerance; partial roots:";
                for (const auto& x : roots) os << " (" << x.real() << "," << x.imag() << ")";
                throw Error("numerics", "no_convergence", os.str());
            }
        }
    }

    // Cluster nearby roots; multiplicity = cluster size.
    std::vector<RootCluster> clusters;
    if (zero_roots > 0) clusters.push_back({cplx(0, 0), zero_roots});
    std::vector<bool> used(roots.size(), false);
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        cplx sum = roots[i];
        int count = 1;
        used[i] = true;
        for (size_t j = i + 1; j < roots.size(); ++j) {
            if (used[j]) continue;
            double tol = config.root_cluster_tol * std::max(1.0, std::abs(roots[i]));
            if (std::abs(roots[j] - roots[i]) <= tol) {
                used[j] = true;
                sum += roots[j];
                ++count;
            }
        }
        clusters.push_back({sum / static_cast<double>(count), count});
    }
    return clusters;
}

// --- fibers ------------------------------------------------------------------------

namespace {

std::vector<cplx> specialize_univariate(const SparsePoly& p, Var v,
                                        const std::array<std::optional<cplx>, kVarCount>& point) {
    auto coeff_polys = coefficients_in(p, v);
    std::vector<cplx> out(coeff_polys.size(), 0.0);
    for (size_t k = 0; k < coeff_polys.size(); ++k)
        if (!coeff_polys[k].is_zero()) out[k] = coeff_polys[k].evaluate(point);
    return out;
}

}  // namespace

std::vector<FiberSolution> fiber_solutions(const SparsePoly& p, const SparsePoly& q, cplx a,
                                           cplx b, const NumericsConfig& config) {
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0)
        throw Error("numerics", "outside_torus", "dilation parameters must be nonzero");
    SparsePoly r1 = compute_R1(p, q);
    std::array<std::optional<cplx>, kVarCount> ab{};
    ab[static_cast<int>(Var::a)] = a;
    ab[static_cast<int>(Var::b)] = b;

    std::vector<cplx> r1z = specialize_univariate(r1, Var::z, ab);
    double magnitude = 0;
    for (const auto& c : r1z) magnitude = std::max(magnitude, std::abs(c));
    if (magnitude == 0.0)
        throw Error("numerics", "degenerate_specialization",
                    "eliminant vanishes identically at this dilation");

    std::vector<RootCluster> zroots;
    try {
        zroots = univariate_roots(r1z, config);
    } catch (const Error& e) {
        if (e.code() == "degree_zero") return {};
        throw;
    }

    SparsePoly pd = dilate(p);
    std::vector<FiberSolution> out;
    for (const auto& zr : zroots) {
        if (std::abs(zr.value) < 1e-14) continue;  // torus point required
        std::array<std::optional<cplx>, kVarCount> zpoint{};
        zpoint[static_cast<int>(Var::z)] = zr.value;
        std::vector<cplx> qw = specialize_univariate(q, Var::w, zpoint);
        std::vector<RootCluster> wroots;
        try {
            wroots = univariate_roots(qw, config);
        } catch (const Error&) {
            continue;
        }
        for (const auto& wr : wroots) {
            if (std::abs(wr.value) < 1e-14) continue;
            std::array<std::optional<cplx>, kVarCount> full{};
            full[static_cast<int>(Var::a)] = a;
            full[static_cast<int>(Var::b)] = b;
            full[static_cast<int>(Var::z)] = zr.value;
            full[static_cast<int>(Var::w)] = wr.value;
            double scale_p = 0, scale_q = 0;
            for (const auto& term : pd.terms()) scale_p += std::abs(term.second.to_double());
            for (const auto& term : q.terms()) scale_q += std::abs(term.second.to_double());
            double vp = std::abs(pd.evaluate(full));
            double vq = std::abs(q.evaluate(full));
            if (vp < config.fiber_verify_tol * std::max(1.0, scale_p) &&
                vq < config.fiber_verify_tol * std::max(1.0, scale_q)) {
                out.push_back({zr.value, wr.value, zr.multiplicity});
            }
        }
    }
    return out;
}

double tangency_residual(const SparsePoly& p, const SparsePoly& q, cplx a, cplx b,
                         const NumericsConfig& config) {
    auto fiber = fiber_solutions(p, q, a, b, config);
    if (fiber.empty()) return std::numeric_limits<double>::infinity();
    SparsePoly pd = dilate(p);
    SparsePoly t1 = pd.derivative(Var::z) * q.derivative(Var::w);
    SparsePoly t2 = pd.derivative(Var::w) * q.derivative(Var::z);
    double best = std::numeric_limits<double>::infinity();
    for (const auto& sol : fiber) {
        std::array<std::optional<cplx>, kVarCount> point{};
        point[static_cast<int>(Var::a)] = a;
        point[static_cast<int>(Var::b)] = b;
        point[static_cast<int>(Var::z)] = sol.z;
        point[static_cast<int>(Var::w)] = sol.w;
        cplx v1 = t1.evaluate(point), v2 = t2.evaluate(point);
        double res = std::abs(v1 - v2) / (1.0 + std::abs(v1) + std::abs(v2));
        best = std::min(best, res);
    }
    return best;
}

// --- marching squares ------------------------------------------------------------------

TraceSet trace_real_locus(const std::function<double(double, double)>& f, const Window& window,
                          int resolution, const NumericsConfig& config, const std::string& tag) {
    if (resolution < 8)
        throw Error("numerics", "bad_resolution", "trace resolution must be at least 8");
    if (!(window.x0 < window.x1) || !(window.y0 < window.y1))
        throw Error("numerics", "bad_window", "window must have positive extent");

    const int n = resolution;
    const double dx = window.width() / n, dy = window.height() / n;
    auto gx = [&](int i) { return window.x0 + i * dx; };
    auto gy = [&](int j) { return window.y0 + j * dy; };

    std::vector<double> values(static_cast<size_t>(n + 1) * (n + 1));
    parallel_for(static_cast<size_t>(n + 1), [&](size_t j) {
        for (int i = 0; i <= n; ++i) values[j * (n + 1) + i] = f(gx(i), gy(static_cast<int>(j)));
    });
    auto value_at = [&](int i, int j) { return values[static_cast<size_t>(j) * (n + 1) + i]; };
    auto sign_at = [&](int i, int j) { return value_at(i, j) < 0.0; };

    // One refined crossing per sign-changing grid edge. Key: (i, j, horizontal).
    struct Crossing {
        TracePoint pt;
        int id = -1;
    };
    std::map<std::tuple<int, int, int>, Crossing> crossings;
    auto refine_on_edge = [&](double ax, double ay, double bx, double by, double fa,
                              double fb) -> TracePoint {
        double scale = std::max({1.0, std::abs(fa), std::abs(fb)});
        double mx = ax, my = ay, fm = fa;
        for (int it = 0; it < 80; ++it) {
            mx = 0.5 * (ax + bx);
            my = 0.5 * (ay + by);
            fm = f(mx, my);
            if (std::abs(fm) <= config.trace_residual_tol * scale) break;
            if ((fm < 0) == (fa < 0)) {
                ax = mx;
                ay = my;
                fa = fm;
            } else {
                bx = mx;
                by = my;
            }
        }
        return {mx, my, std::abs(fm)};
    };
    auto crossing_for = [&](int i, int j, bool horizontal) -> Crossing& {
        auto key = std::make_tuple(i, j, horizontal ? 1 : 0);
        auto it = crossings.find(key);
        if (it != crossings.end()) return it->second;
        double ax = gx(i), ay = gy(j);
        double bx = horizontal ? gx(i + 1) : gx(i);
        double by = horizontal ? gy(j) : gy(j + 1);
        double fa = value_at(i, j);
        double fb = horizontal ? value_at(i + 1, j) : value_at(i, j + 1);
        Crossing c;
        c.pt = refine_on_edge(ax, ay, bx, by, fa, fb);
        return crossings.emplace(key, c).first->second;
    };

    // Cell segments between edge crossings; saddles resolved by center sign.
    std::vector<std::pair<std::tuple<int, int, int>, std::tuple<int, int, int>>> segments;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            int code = (sign_at(i, j) ? 1 : 0) | (sign_at(i + 1, j) ? 2 : 0) |
                       (sign_at(i + 1, j + 1) ? 4 : 0) | (sign_at(i, j + 1) ? 8 : 0);
            if (code == 0 || code == 15) continue;
            auto bottom = std::make_tuple(i, j, 1);
            auto top = std::make_tuple(i, j + 1, 1);
            auto left = std::make_tuple(i, j, 0);
            auto right = std::make_tuple(i + 1, j, 0);
            auto add = [&](auto e1, auto e2) { segments.emplace_back(e1, e2); };
            switch (code) {
                case 1: case 14: add(left, bottom); break;
                case 2: case 13: add(bottom, right); break;
                case 3: case 12: add(left, right); break;
                case 4: case 11: add(right, top); break;
                case 6: case 9: add(bottom, top); break;
                case 7: case 8: add(left, top); break;
                case 5: case 10: {
                    bool center_neg = f(gx(i) + 0.5 * dx, gy(j) + 0.5 * dy) < 0.0;
                    // Saddle: the center sample decides which pair of arcs
                    // separates the like-signed corners.
                    if ((code == 5) == center_neg) {
                        add(bottom, right);
                        add(left, top);
                    } else {
                        add(left, bottom);
                        add(right, top);
                    }
                    break;
                }
                default: break;
            }
        }
    }

    // Materialize crossings and chain segments into polylines.
    for (auto& [e1, e2] : segments) {
        crossing_for(std::get<0>(e1), std::get<1>(e1), std::get<2>(e1) == 1);
        crossing_for(std::get<0>(e2), std::get<1>(e2), std::get<2>(e2) == 1);
    }
    std::map<std::tuple<int, int, int>, std::vector<size_t>> adjacency;
    for (size_t s = 0; s < segments.size(); ++s) {
        adjacency[segments[s].first].push_back(s);
        adjacency[segments[s].second].push_back(s);
    }

    TraceSet trace;
    trace.window = window;
    trace.resolution = resolution;
    trace.tag = tag;
    std::vector<bool> seg_used(segments.size(), false);

    auto walk = [&](std::tuple<int, int, int> start) {
        std::vector<TracePoint> line;
        line.push_back(crossings[start].pt);
        auto cur = start;
        while (true) {
            size_t next_seg = SIZE_MAX;
            for (size_t s : adjacency[cur])
                if (!seg_used[s]) {
                    next_seg = s;
                    break;
                }
            if (next_seg == SIZE_MAX) break;
            seg_used[next_seg] = true;
            auto nxt = segments[next_seg].first == cur ? segments[next_seg].second
                                                       : segments[next_seg].first;
            line.push_back(crossings[nxt].pt);
            cur = nxt;
        }
        if (line.size() >= 2) trace.polylines.push_back(std::move(line));
    };

    // Open chains first (endpoints of odd degree), then leftover cycles.
    for (const auto& [node, segs] : adjacency) {
        size_t unused = 0;
        for (size_t s : segs)
            if (!seg_used[s]) ++unused;
        if (unused == 1) walk(node);
    }
    for (const auto& [node, segs] : adjacency) {
        for (size_t s : segs)
            if (!seg_used[s]) {
                walk(node);
                break;
            }
    }
    return trace;
}

std::vector<CuspCandidate> cusp_detect(const TraceSet& trace, double angle_threshold) {
    std::vector<CuspCandidate> out;
    const double cell_x = trace.window.width() / std::max(trace.resolution, 1);
    const double cell_y = trace.window.height() / std::max(trace.resolution, 1);
    for (const auto& line : trace.polylines) {
        for (size_t i = 1; i + 1 < line.size(); ++i) {
            double v1x = line[i].x - line[i - 1].x, v1y = line[i].y - line[i - 1].y;
            double v2x = line[i + 1].x - line[i].x, v2y = line[i + 1].y - line[i].y;
            double n1 = std::hypot(v1x, v1y), n2 = std::hypot(v2x, v2y);
            if (n1 == 0 || n2 == 0) continue;
            double crossv = v1x * v2y - v1y * v2x, dotv = v1x * v2x + v1y * v2y;
            double turning = std::atan2(std::abs(crossv), dotv);
            if (turning <= angle_threshold) continue;
            CuspCandidate cand;
            cand.x = line[i].x;
            cand.y = line[i].y;
            cand.turning_angle = turning;
            cand.confidence = std::min(n1, n2) / std::max(n1, n2);
            // Deduplicate within one grid cell, keeping the sharper corner.
            bool merged = false;
            for (auto& existing : out) {
                if (std::abs(existing.x - cand.x) <= cell_x &&
                    std::abs(existing.y - cand.y) <= cell_y) {
                    if (cand.turning_angle > existing.turning_angle) existing = cand;
                    merged = true;
                    break;
                }
            }
            if (!merged) out.push_back(cand);
        }
    }
    return out;
}

// --- argument sweeps (amoebas, algae, Harnack fibers) -----------------------------------

namespace {

// Roots of P(z0, w) for fixed z0, with warm starting between sweep steps.
struct WSolver {
    std::vector<SparsePoly> wcoeffs;  // coefficients of w^k, polynomials in z
    NumericsConfig config;

    explicit WSolver(const SparsePoly& p, const NumericsConfig& cfg)
        : wcoeffs(coefficients_in(p, Var::w)), config(cfg) {}

    std::vector<cplx> roots_at(cplx z0) const {
        std::array<std::optional<cplx>, kVarCount> point{};
        point[static_cast<int>(Var::z)] = z0;
        std::vector<cplx> coeffs(wcoeffs.size());
        for (size_t k = 0; k < wcoeffs.size(); ++k)
            coeffs[k] = wcoeffs[k].is_zero() ? cplx(0) : wcoeffs[k].evaluate(point);
        auto clusters = univariate_roots(coeffs, config);
        std::vector<cplx> out;
        for (const auto& c : clusters)
            for (int m = 0; m < c.multiplicity; ++m) out.push_back(c.value);
        return out;
    }
};

// Nearest-neighbour matching of two root sets; fails when assignments are
// ambiguous (root collision between sweep steps).
bool match_roots(const std::vector<cplx>& prev, const std::vector<cplx>& next,
                 std::vector<int>& perm) {
    const size_t n = prev.size();
    if (next.size() != n) return false;
    perm.assign(n, -1);
    std::vector<bool> taken(n, false);
    struct Cand {
        double d;
        size_t i, j;
    };
    std::vector<Cand> cands;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) cands.push_back({std::abs(prev[i] - next[j]), i, j});
    std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.d < y.d; });
    std::vector<bool> src_done(n, false);
    for (const auto& c : cands) {
        if (src_done[c.i] || taken[c.j]) continue;
        src_done[c.i] = true;
        taken[c.j] = true;
        perm[c.i] = static_cast<int>(c.j);
    }
    // Ambiguity check: each assignment must be clearly better than swapping
    // with any other root of the new set.
    double min_sep = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            min_sep = std::min(min_sep, std::abs(next[i] - next[j]));
    for (size_t i = 0; i < n; ++i) {
        double moved = std::abs(prev[i] - next[perm[i]]);
        if (n > 1 && moved > 0.45 * min_sep && moved > 1e-9) return false;
    }
    return true;
}

// Branch curves log|w_j(theta)| over one full sweep of arg z at fixed |z|.
// Returns per-branch sampled values, matched continuously and cyclically.
struct SweepResult {
    std::vector<std::vector<double>> branch_logs;  // [branch][sample]
    bool closed = false;
};

SweepResult sweep_column(const WSolver& solver, double x, const NumericsConfig& config) {
    SweepResult out;
    const int m = std::max(config.theta_samples, 8);
    std::vector<double> thetas(m);
    for (int i = 0; i < m; ++i) thetas[i] = 2.0 * kPi * i / m;

    auto z_at = [&](double theta) { return std::exp(x) * cplx(std::cos(theta), std::sin(theta)); };

    std::vector<cplx> prev;
    try {
        prev = solver.roots_at(z_at(thetas[0]));
    } catch (const Error&) {
        return out;  // fibre degenerates at this column; caller treats as empty
    }
    if (prev.empty()) return out;
    const size_t branches = prev.size();
    out.branch_logs.assign(branches, {});
    std::vector<cplx> first = prev;
    for (size_t b = 0; b < branches; ++b)
        out.branch_logs[b].push_back(std::log(std::max(std::abs(prev[b]), 1e-300)));

    std::vector<int> perm;
    std::vector<size_t> identity(branches);
    for (size_t b = 0; b < branches; ++b) identity[b] = b;
    std::vector<size_t> track = identity;  // track[b] = column of branch b in `prev`

    auto advance = [&](double t0, double t1, auto&& self) -> bool {
        std::vector<cplx> next;
        try {
            next = solver.roots_at(z_at(t1));
        } catch (const Error&) {
            return false;
        }
        if (match_roots(prev, next, perm)) {
            std::vector<cplx> reordered(branches);
            for (size_t b = 0; b < branches; ++b) reordered[b] = next[perm[b]];
            prev = reordered;
            return true;
        }
        if (t1 - t0 < config.min_theta_step)
            throw Error("numerics", "branch_collision",
                        "root tracking failed below the minimum sweep step");
        double mid = 0.5 * (t0 + t1);
        return self(t0, mid, self) && self(mid, t1, self);
    };

    for (int i = 1; i <= m; ++i) {
        double t0 = thetas[i - 1];
        double t1 = i == m ? 2.0 * kPi : thetas[i];
        if (!advance(t0, t1, advance)) return SweepResult{};
        if (i < m)
            for (size_t b = 0; b < branches; ++b)
                out.branch_logs[b].push_back(std::log(std::max(std::abs(prev[b]), 1e-300)));
    }
    // Close the cycle: the final matching maps branches back onto the start
    // permutation; crossing counts only need the sampled values plus wrap.
    for (size_t b = 0; b < branches; ++b)
        out.branch_logs[b].push_back(std::log(std::max(std::abs(prev[b]), 1e-300)));
    out.closed = true;
    return out;
}

int crossings_at_level(const SweepResult& sweep, double y) {
    int count = 0;
    for (const auto& branch : sweep.branch_logs) {
        for (size_t i = 0; i + 1 < branch.size(); ++i) {
            bool s0 = branch[i] < y, s1 = branch[i + 1] < y;
            if (s0 != s1) ++count;
        }
    }
    return count;
}

}  // namespace

int fiber_point_count(const SparsePoly& p, double x, double y, const NumericsConfig& config) {
    WSolver solver(p, config);
    SweepResult sweep = sweep_column(solver, x, config);
    if (!sweep.closed) return 0;
    return crossings_at_level(sweep, y);
}

HarnackFiberReport harnack_fiber_test(const SparsePoly& p, const Window& window, int grid,
                                      const NumericsConfig& config) {
    if (grid < 2) throw Error("numerics", "bad_grid", "fiber test grid must be at least 2");
    WSolver solver(p, config);
    HarnackFiberReport report;
    report.grid_x0 = window.x0;
    report.grid_x1 = window.x1;
    report.grid_y0 = window.y0;
    report.grid_y1 = window.y1;

    std::vector<int> col_max(grid, 0);
    std::vector<std::string> col_error(grid);
    parallel_for(static_cast<size_t>(grid), [&](size_t ix) {
        double x = window.x0 + window.width() * (ix + 0.5) / grid;
        try {
            SweepResult sweep = sweep_column(solver, x, config);
            if (!sweep.closed) return;
            int best = 0;
            for (int iy = 0; iy < grid; ++iy) {
                double y = window.y0 + window.height() * (iy + 0.5) / grid;
                best = std::max(best, crossings_at_level(sweep, y));
            }
            col_max[ix] = best;
        } catch (const Error& e) {
            col_error[ix] = e.what();
        }
    });
    for (const auto& err : col_error)
        if (!err.empty()) throw Error("numerics", "branch_collision", err);
    report.max_fiber = *std::max_element(col_max.begin(), col_max.end());
    report.pass = report.max_fiber <= 2;
    return report;
}

std::vector<CloudPoint> amoeba_sample(const SparsePoly& p, const Window& window,
                                      int modulus_samples, int angle_samples,
                                      const NumericsConfig& config) {
    if (p.is_zero()) throw Error("numerics", "zero_polynomial", "amoeba of zero polynomial");
    WSolver solver(p, config);
    std::vector<std::vector<CloudPoint>> rows(modulus_samples);
    parallel_for(static_cast<size_t>(modulus_samples), [&](size_t ix) {
        double x = window.x0 + window.width() * (ix + 0.5) / modulus_samples;
        for (int it = 0; it < angle_samples; ++it) {
            double theta = 2.0 * kPi * it / angle_samples;
            cplx z = std::exp(x) * cplx(std::cos(theta), std::sin(theta));
            std::vector<cplx> roots;
            try {
                roots = solver.roots_at(z);
            } catch (const Error&) {
                continue;
            }
            for (const auto& w : roots) {
                double aw = std::abs(w);
                if (aw < 1e-300) continue;
                std::array<std::optional<cplx>, kVarCount> pt{};
                pt[static_cast<int>(Var::z)] = z;
                pt[static_cast<int>(Var::w)] = w;
                rows[ix].push_back({x, std::log(aw), std::abs(p.evaluate(pt))});
            }
        }
    });
    std::vector<CloudPoint> out;
    for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

std::vector<CloudPoint> alga_sample(const SparsePoly& p, int modulus_samples, int angle_samples,
                                    const NumericsConfig& config) {
    if (p.is_zero()) throw Error("numerics", "zero_polynomial", "alga of zero polynomial");
    WSolver solver(p, config);
    auto mod_pi = [](double t) {
        double r = std::fmod(t, kPi);
        if (r < 0) r += kPi;
        return r;
    };
    std::vector<std::vector<CloudPoint>> rows(modulus_samples);
    parallel_for(static_cast<size_t>(modulus_samples), [&](size_t ix) {
        double x = -2.0 + 4.0 * (ix + 0.5) / modulus_samples;
        for (int it = 0; it < angle_samples; ++it) {
            double theta = 2.0 * kPi * it / angle_samples;
            cplx z = std::exp(x) * cplx(std::cos(theta), std::sin(theta));
            std::vector<cplx> roots;
            try {
                roots = solver.roots_at(z);
            } catch (const Error&) {
                continue;
            }
            for (const auto& w : roots) {
                if (std::abs(w) < 1e-300) continue;
                std::array<std::optional<cplx>, kVarCount> pt{};
                pt[static_cast<int>(Var::z)] = z;
                pt[static_cast<int>(Var::w)] = w;
                rows[ix].push_back(
                    {mod_pi(std::arg(z)), mod_pi(std::arg(w)), std::abs(p.evaluate(pt))});
            }
        }
    });
    std::vector<CloudPoint> out;
    for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
    return out;
}

AmoebaAreaReport amoeba_area_estimate(const SparsePoly& p, const Window& window, uint64_t n,
                                      const NumericsConfig& config, int columns) {
    if (n < 10000)
        throw Error("numerics", "too_few_samples", "area estimate needs at least 10^4 samples");
    if (columns < 64) columns = 64;

    LatticePolygon delta = newton_polygon(p);
    AmoebaAreaReport report;
    report.samples = n;
    report.expected = kPi * kPi * 0.5 * static_cast<double>(delta.area2());
    // Tentacle tails outside the window thin out exponentially; crude bound
    // proportional to the boundary lattice length at the window margin.
    double margin = std::min({std::abs(window.x0), std::abs(window.x1), std::abs(window.y0),
                              std::abs(window.y1)});
    report.bias_bound = 4.0 * static_cast<double>(delta.lattice_perimeter()) * std::exp(-margin);

    // Column oracle: per x-column the slice of the amoeba is a finite union of
    // intervals in y, reconstructed from the swept branch segments.
    WSolver solver(p, config);
    std::vector<std::vector<std::pair<double, double>>> slices(columns);
    parallel_for(static_cast<size_t>(columns), [&](size_t ix) {
        double x = window.x0 + window.width() * (ix + 0.5) / columns;
        SweepResult sweep = sweep_column(solver, x, config);
        if (!sweep.closed) return;
        std::vector<std::pair<double, double>> intervals;
        for (const auto& branch : sweep.branch_logs)
            for (size_t i = 0; i + 1 < branch.size(); ++i)
                intervals.emplace_back(std::min(branch[i], branch[i + 1]),
                                       std::max(branch[i], branch[i + 1]));
        std::sort(intervals.begin(), intervals.end());
        std::vector<std::pair<double, double>> merged;
        for (const auto& iv : intervals) {
            if (!merged.empty() && iv.first <= merged.back().second)
                merged.back().second = std::max(merged.back().second, iv.second);
            else
                merged.push_back(iv);
        }
        slices[ix] = std::move(merged);
    });

    auto member = [&](double x, double y) {
        int ix = static_cast<int>((x - window.x0) / window.width() * columns);
        ix = std::clamp(ix, 0, columns - 1);
        for (const auto& iv : slices[ix])
            if (y >= iv.first && y <= iv.second) return true;
        return false;
    };

    std::vector<uint8_t> hits(n, 0);
    parallel_for(n, [&](size_t i) {
        uint64_t state = config.seed * 0x9e3779b97f4a7c15ULL + i;
        double x = window.x0 + window.width() * uniform01(state);
        double y = window.y0 + window.height() * uniform01(state);
        hits[i] = member(x, y) ? 1 : 0;
    });
    uint64_t hit_count = 0;
    for (uint8_t h : hits) hit_count += h;
    double fraction = static_cast<double>(hit_count) / static_cast<double>(n);
    report.area = fraction * window.area();
    report.stderr_estimate =
        window.area() * std::sqrt(std::max(fraction * (1 - fraction), 0.0) / static_cast<double>(n));
    report.harnack_area_verdict = std::abs(report.area - report.expected) <= 0.05 * report.expected;
    return report;
}

// --- sample verification --------------------------------------------------------------

SampleReport verify_tangency(const SparsePoly& p, const SparsePoly& q, const SparsePoly& r,
                             uint64_t samples, double tol, double off_tol, double off_distance,
                             const NumericsConfig& config) {
    SampleReport report;
    auto rb = coefficients_in(r, Var::b);
    uint64_t state = splitmix64(config.seed + 0x5151);

    // On-curve points: random a, b solved from R(a, .) = 0.
    uint64_t found = 0, attempts = 0;
    while (found < samples && attempts < samples * 50) {
        ++attempts;
        double radius = 0.3 + 2.4 * uniform01(state);
        double ang = 2.0 * kPi * uniform01(state);
        cplx a = radius * cplx(std::cos(ang), std::sin(ang));
        std::array<std::optional<cplx>, kVarCount> pa{};
        pa[static_cast<int>(Var::a)] = a;
        std::vector<cplx> coeffs(rb.size());
        for (size_t k = 0; k < rb.size(); ++k)
            coeffs[k] = rb[k].is_zero() ? cplx(0) : rb[k].evaluate(pa);
        std::vector<RootCluster> broots;
        try {
            broots = univariate_roots(coeffs, config);
        } catch (const Error&) {
            continue;
        }
        for (const auto& root : broots) {
            if (found >= samples) break;
            if (std::abs(root.value) < 1e-9) continue;
            double res = tangency_residual(p, q, a, root.value, config);
            ++found;
            report.max_on_curve_residual = std::max(report.max_on_curve_residual, res);
            if (!(res < tol))
                report.failures.push_back(
                    {a.real(), a.imag(), root.value.real(), root.value.imag(), res});
        }
    }
    report.samples_on_curve = found;

    // Off-curve points: random (a,b) rejected while within off_distance of a
    // root of R(a, .).
    report.min_off_curve_residual = std::numeric_limits<double>::infinity();
    uint64_t off_found = 0;
    attempts = 0;
    while (off_found < samples && attempts < samples * 200) {
        ++attempts;
        double radius = 0.3 + 2.4 * uniform01(state);
        double ang = 2.0 * kPi * uniform01(state);
        cplx a = radius * cplx(std::cos(ang), std::sin(ang));
        cplx b = (0.3 + 2.4 * uniform01(state)) *
                 cplx(std::cos(2.0 * kPi * uniform01(state)), std::sin(2.0 * kPi * uniform01(state)));
        std::array<std::optional<cplx>, kVarCount> pa{};
        pa[static_cast<int>(Var::a)] = a;
        std::vector<cplx> coeffs(rb.size());
        for (size_t k = 0; k < rb.size(); ++k)
            coeffs[k] = rb[k].is_zero() ? cplx(0) : rb[k].evaluate(pa);
        bool near_curve = false;
        try {
            for (const auto& root : univariate_roots(coeffs, config))
                if (std::abs(root.value - b) < off_distance) near_curve = true;
        } catch (const Error&) {
            continue;
        }
        if (near_curve) continue;
        double res = tangency_residual(p, q, a, b, config);
        ++off_found;
        report.min_off_curve_residual = std::min(report.min_off_curve_residual, res);
        if (!(res > off_tol))
            report.failures.push_back({a.real(), a.imag(), b.real(), b.imag(), res});
    }
    report.samples_off_curve = off_found;
    report.pass = report.failures.empty() && found == samples && off_found == samples;
    return report;
}

// --- writers -----------------------------------------------------------------------------

namespace {

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string trace_to_csv(const TraceSet& trace) {
    std::ostringstream os;
    os << "x,y,residual\n";
    for (const auto& line : trace.polylines)
        for (const auto& pt : line)
            os << format17(pt.x) << "," << format17(pt.y) << "," << format17(pt.residual) << "\n";
    return os.str();
}

std::string cloud_to_csv(const std::vector<CloudPoint>& cloud) {
    std::ostringstream os;
    os << "x,y,residual\n";
    for (const auto& pt : cloud)
        os << format17(pt.x) << "," << format17(pt.y) << "," << format17(pt.residual) << "\n";
    return os.str();
}

std::string trace_to_svg(const TraceSet& trace, const std::vector<CuspCandidate>& cusps) {
    const Window& w = trace.window;
    const double width = 800.0;
    const double height = width * w.height() / w.width();
    auto sx = [&](double x) { return (x - w.x0) / w.width() * width; };
    auto sy = [&](double y) { return height - (y - w.y0) / w.height() * height; };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << format17(width) << " "
       << format17(height) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (const auto& line : trace.polylines) {
        os << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"1\" points=\"";
        for (size_t i = 0; i < line.size(); ++i) {
            if (i) os << " ";
            os << format17(sx(line[i].x)) << "," << format17(sy(line[i].y));
        }
        os << "\"/>\n";
    }
    for (const auto& c : cusps)
        os << "<circle cx=\"" << format17(sx(c.x)) << "\" cy=\"" << format17(sy(c.y))
           << "\" r=\"4\" fill=\"none\" stroke=\"red\" stroke-width=\"1.5\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace logfront
