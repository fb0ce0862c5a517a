#include "positioning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "errors.hpp"

namespace wpt {

namespace {

bool finite_point(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

double sq(double v) { return v * v; }

// Real roots of a*t^2 + b*t + c = 0, robust against cancellation and a ~ 0.
int quadratic_roots(double a, double b, double c, double out[2]) {
    if (a == 0.0) {
        if (b == 0.0) return 0;
        out[0] = -c / b;
        return 1;
    }
    const double disc = b * b - 4.0 * a * c;
    if (disc < 0.0) return 0;
    const double s = std::sqrt(disc);
    const double q = -0.5 * (b + (b >= 0.0 ? s : -s));
    int n = 0;
    if (q != 0.0) out[n++] = c / q;
    out[n++] = q / a;
    return n;
}

}  // namespace

Point Box::clamp(Point p) const {
    return {std::min(std::max(p.x, x_min), x_max), std::min(std::max(p.y, y_min), y_max)};
}

double pathloss(Point tx, Point rx) {
    return sq(tx.x - rx.x) + sq(tx.y - rx.y);
}

Scenario make_scenario(std::vector<Point> receivers, double q0_dbm,
                       std::optional<Box> box, const RectifierParams& params,
                       const Waveform& waveform, std::optional<double> tx_power_dbm) {
    if (receivers.empty()) {
        throw ValidationError("scenario: needs at least one receiver");
    }
    for (std::size_t n = 0; n < receivers.size(); ++n) {
        if (!finite_point(receivers[n])) {
            throw ValidationError("scenario: receiver " + std::to_string(n) +
                                  " has non-finite coordinates");
        }
    }
    if (!std::isfinite(q0_dbm)) {
        throw ValidationError("scenario: q0_dbm must be finite");
    }
    const double q0_w = std::pow(10.0, (q0_dbm - 30.0) / 10.0);
    if (!std::isfinite(q0_w) || q0_w <= 0.0) {
        throw ValidationError("scenario: q0_dbm yields an unusable linear power");
    }
    if (tx_power_dbm && !std::isfinite(*tx_power_dbm)) {
        throw ValidationError("scenario: tx_power_dbm must be finite");
    }

    Box resolved;
    if (box) {
        resolved = *box;
        if (!resolved.valid()) {
            throw ValidationError("scenario: box has min greater than max");
        }
        if (!std::isfinite(resolved.x_min) || !std::isfinite(resolved.x_max) ||
            !std::isfinite(resolved.y_min) || !std::isfinite(resolved.y_max)) {
            throw ValidationError("scenario: box bounds must be finite");
        }
        for (std::size_t n = 0; n < receivers.size(); ++n) {
            if (!resolved.contains(receivers[n])) {
                throw ValidationError("scenario: receiver " + std::to_string(n) +
                                      " lies outside the box");
            }
        }
    } else {
        resolved.x_min = resolved.x_max = receivers[0].x;
        resolved.y_min = resolved.y_max = receivers[0].y;
        for (const Point& r : receivers) {
            resolved.x_min = std::min(resolved.x_min, r.x);
            resolved.x_max = std::max(resolved.x_max, r.x);
            resolved.y_min = std::min(resolved.y_min, r.y);
            resolved.y_max = std::max(resolved.y_max, r.y);
        }
    }

    Scenario sc{std::move(receivers), q0_dbm, q0_w, resolved,
                waveform,             build_model(params, waveform), tx_power_dbm};
    return sc;
}

Scenario generate_scenario(int n_receivers, double width, std::uint64_t seed) {
    if (n_receivers < 1) {
        throw ValidationError("generate_scenario: need at least one receiver");
    }
    if (!std::isfinite(width) || width <= 0.0) {
        throw ValidationError("generate_scenario: width must be positive and finite");
    }
    // Fixed mapping from raw engine output to [0, 1): portable across
    // standard libraries, unlike the distribution adaptors.
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Point> receivers(static_cast<std::size_t>(n_receivers));
    for (auto& r : receivers) {
        r.x = width * unit();
        r.y = width * unit();
    }
    return make_scenario(std::move(receivers), 10.0, std::nullopt, RectifierParams{},
                         Waveform::builtin(WaveformKind::ContinuousWave,
                                           RectifierParams{}.trunc_order));
}

double min_harvest(const Scenario& sc, Point p) {
    if (!finite_point(p)) {
        throw DomainError("min_harvest: position must be finite");
    }
    // p_dc increases with input power, so the minimum over receivers is
    // attained by the largest (clamped) pathloss; one solve suffices.
    double d_max = kPathlossFloor;
    for (const Point& r : sc.receivers) {
        d_max = std::max(d_max, pathloss(p, r));
    }
    return p_dc(sc.model, sc.q0_w / d_max);
}

double Surrogate::term_value(std::size_t n, Point p) const {
    const SurrogateTerm& t = terms[n];
    const double d = std::max(pathloss(p, t.center), kPathlossFloor);
    return t.p0 + t.alpha * (t.d0 - d);
}

double Surrogate::value(Point p) const {
    double v = std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < terms.size(); ++n) {
        v = std::min(v, term_value(n, p));
    }
    return v;
}

Surrogate build_surrogate(const Scenario& sc, Point anchor) {
    if (!finite_point(anchor)) {
        throw ValidationError("build_surrogate: anchor must be finite");
    }
    if (!sc.box.contains(anchor)) {
        throw ValidationError("build_surrogate: anchor lies outside the box");
    }
    Surrogate surr;
    surr.anchor = anchor;
    surr.terms.reserve(sc.receivers.size());
    for (const Point& r : sc.receivers) {
        SurrogateTerm t;
        t.center = r;
        const double raw = pathloss(anchor, r);
        if (raw < kPathlossFloor) surr.floor_clamped = true;
        t.d0 = std::max(raw, kPathlossFloor);
        t.p0 = p_dc(sc.model, sc.q0_w / t.d0);
        t.alpha = -dpdc_dd(sc.model, sc.q0_w, t.d0);
        surr.terms.push_back(t);
    }
    return surr;
}

namespace {

// Candidate positions where the constrained maximizer of min_n g_n can sit:
// every combination of active tangent terms and active box faces allowed by
// the first-order conditions of the max-min program.
std::vector<Point> subproblem_candidates(const Box& box, const Surrogate& surr) {
    const std::size_t n_terms = surr.terms.size();
    std::vector<Point> cand;
    cand.reserve(8 + 3 * n_terms * n_terms);

    cand.push_back(surr.anchor);
    for (const auto& t : surr.terms) cand.push_back(box.clamp(t.center));
    cand.push_back({box.x_min, box.y_min});
    cand.push_back({box.x_max, box.y_min});
    cand.push_back({box.x_min, box.y_max});
    cand.push_back({box.x_max, box.y_max});

    // Unclamped tangent of term n is g_n(p) = b_n - alpha_n * |p - c_n|^2.
    std::vector<double> b(n_terms);
    for (std::size_t n = 0; n < n_terms; ++n) {
        b[n] = surr.terms[n].p0 + surr.terms[n].alpha * surr.terms[n].d0;
    }

    // Two active terms, interior: the equalizer on the segment between the
    // two centers (the gradient condition forces the point onto it).
    for (std::size_t A = 0; A < n_terms; ++A) {
        for (std::size_t B = A + 1; B < n_terms; ++B) {
            const Point ca = surr.terms[A].center;
            const Point cb = surr.terms[B].center;
            const double dx = cb.x - ca.x, dy = cb.y - ca.y;
            const double L2 = dx * dx + dy * dy;
            if (L2 < 1e-30) continue;
            const double aA = surr.terms[A].alpha, aB = surr.terms[B].alpha;
            double roots[2];
            const int nr = quadratic_roots((aA - aB) * L2, 2.0 * aB * L2,
                                           b[B] - b[A] - aB * L2, roots);
            for (int k = 0; k < nr; ++k) {
                const double s = roots[k];
                if (!std::isfinite(s)) continue;
                cand.push_back({ca.x + s * dx, ca.y + s * dy});
            }
        }
    }

    // One or two active terms on a box edge: equalizer along the edge.
    const Point corners[4] = {{box.x_min, box.y_min},
                              {box.x_max, box.y_min},
                              {box.x_max, box.y_max},
                              {box.x_min, box.y_max}};
    const Point dirs[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
    const double lens[4] = {box.x_max - box.x_min, box.y_max - box.y_min,
                            box.x_max - box.x_min, box.y_max - box.y_min};
    for (int e = 0; e < 4; ++e) {
        if (lens[e] <= 0.0) continue;
        const Point e0 = corners[e];
        const Point dir = dirs[e];
        for (std::size_t A = 0; A < n_terms; ++A) {
            for (std::size_t B = A + 1; B < n_terms; ++B) {
                const double aA = surr.terms[A].alpha, aB = surr.terms[B].alpha;
                const Point ca = surr.terms[A].center, cb = surr.terms[B].center;
                const double vA = sq(e0.x - ca.x) + sq(e0.y - ca.y);
                const double vB = sq(e0.x - cb.x) + sq(e0.y - cb.y);
                const double wA = dir.x * (e0.x - ca.x) + dir.y * (e0.y - ca.y);
                const double wB = dir.x * (e0.x - cb.x) + dir.y * (e0.y - cb.y);
                double roots[2];
                const int nr = quadratic_roots(aB - aA, 2.0 * (aB * wB - aA * wA),
                                               aB * vB - aA * vA + b[A] - b[B], roots);
                for (int k = 0; k < nr; ++k) {
                    const double t = roots[k];
                    if (!std::isfinite(t) || t < 0.0 || t > lens[e]) continue;
                    cand.push_back({e0.x + t * dir.x, e0.y + t * dir.y});
                }
            }
        }
    }

    // Three active terms, interior: the pairwise ties are linear in
    // (x, y, r) with r = |p|^2; solve the linear pair, then close the system
    // with r = |p(r)|^2.
    for (std::size_t A = 0; A < n_terms; ++A) {
        for (std::size_t B = A + 1; B < n_terms; ++B) {
            for (std::size_t C = B + 1; C < n_terms; ++C) {
                const auto tie = [&](std::size_t m, std::size_t n, double& u, double vx2[2],
                                     double& w) {
                    const double am = surr.terms[m].alpha, an = surr.terms[n].alpha;
                    const Point cm = surr.terms[m].center, cn = surr.terms[n].center;
                    u = an - am;
                    vx2[0] = 2.0 * (am * cm.x - an * cn.x);
                    vx2[1] = 2.0 * (am * cm.y - an * cn.y);
                    w = b[m] - b[n] - am * (sq(cm.x) + sq(cm.y)) + an * (sq(cn.x) + sq(cn.y));
                };
                double u1, v1[2], w1, u2, v2[2], w2;
                tie(A, B, u1, v1, w1);
                tie(A, C, u2, v2, w2);
                const double det = v1[0] * v2[1] - v1[1] * v2[0];
                const double scale = std::max(std::max(std::abs(v1[0]), std::abs(v1[1])),
                                              std::max(std::abs(v2[0]), std::abs(v2[1])));
                if (std::abs(det) <= 1e-14 * scale * scale) continue;
                // x(r) = x0 + r * x1 from the two linear ties.
                const double x0x = (-w1 * v2[1] + w2 * v1[1]) / det;
                const double x0y = (-w2 * v1[0] + w1 * v2[0]) / det;
                const double x1x = (-u1 * v2[1] + u2 * v1[1]) / det;
                const double x1y = (-u2 * v1[0] + u1 * v2[0]) / det;
                // Close with r = |x(r)|^2.
                double roots[2];
                const int nr = quadratic_roots(x1x * x1x + x1y * x1y,
                                               2.0 * (x0x * x1x + x0y * x1y) - 1.0,
                                               x0x * x0x + x0y * x0y, roots);
                for (int k = 0; k < nr; ++k) {
                    const double r = roots[k];
                    if (!std::isfinite(r) || r < 0.0) continue;
                    cand.push_back({x0x + r * x1x, x0y + r * x1y});
                }
            }
        }
    }

    return cand;
}

}  // namespace

SubproblemResult solve_subproblem(const Scenario& sc, const Surrogate& surr) {
    if (surr.terms.size() != sc.receivers.size()) {
        throw ValidationError("solve_subproblem: surrogate does not match the scenario");
    }
    SubproblemResult best;
    best.value = -std::numeric_limits<double>::infinity();
    for (Point p : subproblem_candidates(sc.box, surr)) {
        if (!finite_point(p)) continue;
        p = sc.box.clamp(p);  // roots on the boundary may land an ulp outside
        const double v = surr.value(p);
        if (v > best.value) {
            best.value = v;
            best.position = p;
        }
    }
    return best;
}

SiaTrace sia_solve(const Scenario& sc, Point init, int max_iters, double rel_tol) {
    if (!finite_point(init) || !sc.box.contains(init)) {
        throw ValidationError("sia_solve: init must lie inside the box");
    }
    if (max_iters < 1 || max_iters > 100000) {
        throw ValidationError("sia_solve: max_iters must lie in [1, 100000]");
    }
    if (!(rel_tol > 0.0) || rel_tol >= 1.0) {
        throw ValidationError("sia_solve: rel_tol must lie in (0, 1)");
    }

    const auto slopes = [](const Surrogate& s) {
        std::vector<double> a;
        a.reserve(s.terms.size());
        for (const auto& t : s.terms) a.push_back(t.alpha);
        return a;
    };

    SiaTrace trace;
    Surrogate surr = build_surrogate(sc, init);
    // The surrogate touches the objective at its anchor, so the initial
    // certified bound is the true objective there.
    double bound = min_harvest(sc, init);
    trace.iterations.push_back({init, bound, bound, slopes(surr), surr.floor_clamped});

    Point pos = init;
    for (int it = 1; it <= max_iters; ++it) {
        const SubproblemResult res = solve_subproblem(sc, surr);
        // The anchor itself is among the candidates, so res.value >= bound up
        // to rounding; a sub-rounding regression means the surrogate cannot
        // certify any further progress.
        if (res.value < bound) {
            trace.converged = true;
            trace.stop = SiaStop::ToleranceMet;
            break;
        }
        const double gain = res.value - bound;
        const double moved = std::hypot(res.position.x - pos.x, res.position.y - pos.y);
        pos = res.position;
        bound = res.value;
        trace.iterations.push_back(
            {pos, bound, min_harvest(sc, pos), slopes(surr), surr.floor_clamped});
        if (gain <= rel_tol * std::max(bound, std::numeric_limits<double>::min()) ||
            moved <= 1e-12) {
            trace.converged = true;
            trace.stop = SiaStop::ToleranceMet;
            break;
        }
        if (it < max_iters) surr = build_surrogate(sc, pos);
    }
    trace.position = trace.iterations.back().position;
    trace.value = trace.iterations.back().surrogate_value;
    return trace;
}

GridResult exhaustive_search(const Scenario& sc, double resolution, bool allow_large) {
    if (!std::isfinite(resolution) || resolution <= 0.0) {
        throw ValidationError("exhaustive_search: resolution must be positive and finite");
    }
    const double span_x = sc.box.x_max - sc.box.x_min;
    const double span_y = sc.box.y_max - sc.box.y_min;
    const auto steps = [&](double span) {
        return static_cast<std::uint64_t>(std::floor(span / resolution + 1e-9)) + 1;
    };
    const std::uint64_t nx = steps(span_x);
    const std::uint64_t ny = steps(span_y);
    const std::uint64_t cells = nx * ny;
    if (cells > kGridCellCap && !allow_large) {
        throw GridSizeError(cells, kGridCellCap);
    }

    const auto coord_x = [&](std::uint64_t ix) {
        return std::min(sc.box.x_min + static_cast<double>(ix) * resolution, sc.box.x_max);
    };
    const auto coord_y = [&](std::uint64_t iy) {
        return std::min(sc.box.y_min + static_cast<double>(iy) * resolution, sc.box.y_max);
    };

    struct Local {
        double value = -std::numeric_limits<double>::infinity();
        std::uint64_t ix = 0, iy = 0;
    };

    // Rows are scanned in row-major order (y outer, x inner) and the first
    // strictly larger value wins, so the winner is independent of how rows
    // are split across workers.
    const auto scan_rows = [&](std::uint64_t y_begin, std::uint64_t y_end, Local& out) {
        Local loc;
        for (std::uint64_t iy = y_begin; iy < y_end; ++iy) {
            const double y = coord_y(iy);
            for (std::uint64_t ix = 0; ix < nx; ++ix) {
                const double v = min_harvest(sc, {coord_x(ix), y});
                if (v > loc.value) loc = {v, ix, iy};
            }
        }
        out = loc;
    };

    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const std::uint64_t n_workers = std::min<std::uint64_t>(hw, ny);
    std::vector<Local> locals(n_workers);
    if (n_workers <= 1) {
        scan_rows(0, ny, locals[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        const std::uint64_t chunk = (ny + n_workers - 1) / n_workers;
        for (std::uint64_t w = 0; w < n_workers; ++w) {
            const std::uint64_t y0 = w * chunk;
            const std::uint64_t y1 = std::min(ny, y0 + chunk);
            pool.emplace_back(scan_rows, y0, y1, std::ref(locals[w]));
        }
        for (auto& t : pool) t.join();
    }

    Local best;
    for (const Local& loc : locals) {
        if (loc.value > best.value) best = loc;
    }

    GridResult res;
    res.best = {coord_x(best.ix), coord_y(best.iy)};
    res.best_value = best.value;
    res.resolution = resolution;
    res.cells = cells;
    res.neighbor_rel_diff = 0.0;
    const std::int64_t bx = static_cast<std::int64_t>(best.ix);
    const std::int64_t by = static_cast<std::int64_t>(best.iy);
    const std::int64_t offs[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
    for (const auto& o : offs) {
        const std::int64_t jx = bx + o[0], jy = by + o[1];
        if (jx < 0 || jy < 0 || jx >= static_cast<std::int64_t>(nx) ||
            jy >= static_cast<std::int64_t>(ny)) {
            continue;
        }
        const double v = min_harvest(sc, {coord_x(static_cast<std::uint64_t>(jx)),
                                          coord_y(static_cast<std::uint64_t>(jy))});
        res.neighbor_rel_diff =
            std::max(res.neighbor_rel_diff, std::abs(best.value - v) / best.value);
    }
    return res;
}

}  // namespace wpt
