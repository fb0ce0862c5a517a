#include "calculus.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace wpt {

double diout_drho(const HarvestModel& m, double q_rf) {
    const double i = solve_iout(m, q_rf);
    const double a = m.exp_rate();
    const double rho_v = rho(m, q_rf);
    const double ai = a * i;
    if (ai > 700.0) {
        // exp(a*i) = rho / (i + i_s) at the solution; use the identity where
        // the direct exponential would overflow.
        return 1.0 / (a * rho_v + rho_v / (i + m.params().i_s));
    }
    return 1.0 / (a * rho_v + std::exp(ai));
}

double dpdc_dd(const HarvestModel& m, double q0, double d) {
    if (!std::isfinite(q0) || q0 <= 0.0) {
        throw DomainError("dpdc_dd: q0 must be positive and finite");
    }
    if (!std::isfinite(d) || d <= 0.0) {
        throw DomainError("dpdc_dd: pathloss d must be positive and finite");
    }
    const double q = q0 / d;
    const double i = solve_iout(m, q);
    const double didrho = diout_drho(m, q);
    const double dq_dd = -q0 / (d * d);
    return 2.0 * m.params().r_load * i * didrho * rho_prime(m, q) * dq_dd;
}

ParamCurve ParamCurve::reciprocal(double a) {
    if (!std::isfinite(a) || a <= 0.0) {
        throw ValidationError("ParamCurve::reciprocal: scale must be positive and finite");
    }
    ParamCurve c;
    c.analytic_ = true;
    c.a_ = a;
    return c;
}

ParamCurve ParamCurve::custom(std::function<double(double)> q_of_u) {
    if (!q_of_u) {
        throw ValidationError("ParamCurve::custom: callable must be non-empty");
    }
    ParamCurve c;
    c.analytic_ = false;
    c.fn_ = std::move(q_of_u);
    return c;
}

double ParamCurve::q_rf(double u) const {
    if (!std::isfinite(u) || u <= 0.0) {
        throw DomainError("ParamCurve: u must be positive and finite");
    }
    return analytic_ ? a_ / u : fn_(u);
}

double ParamCurve::q_prime(double u) const {
    if (!std::isfinite(u) || u <= 0.0) {
        throw DomainError("ParamCurve: u must be positive and finite");
    }
    if (analytic_) return -a_ / (u * u);
    const double h = u * 1e-6;
    return (fn_(u + h) - fn_(u - h)) / (2.0 * h);
}

double ParamCurve::q_second(double u) const {
    if (!std::isfinite(u) || u <= 0.0) {
        throw DomainError("ParamCurve: u must be positive and finite");
    }
    if (analytic_) return 2.0 * a_ / (u * u * u);
    const double h = u * 1e-4;
    return (fn_(u + h) - 2.0 * fn_(u) + fn_(u - h)) / (h * h);
}

ConvexityReport certify_convexity(const HarvestModel& m, const ParamCurve& curve,
                                  const std::vector<double>& u_grid) {
    if (u_grid.size() < 5) {
        throw ValidationError("certify_convexity: grid needs at least 5 points, got " +
                              std::to_string(u_grid.size()));
    }
    for (std::size_t k = 0; k < u_grid.size(); ++k) {
        if (!std::isfinite(u_grid[k]) || u_grid[k] <= 0.0) {
            throw ValidationError("certify_convexity: grid point " + std::to_string(k) +
                                  " must be positive and finite");
        }
        if (k > 0 && !(u_grid[k] > u_grid[k - 1])) {
            throw ValidationError("certify_convexity: grid must be strictly increasing at index " +
                                  std::to_string(k));
        }
    }

    auto q_at = [&](double u) {
        const double q = curve.q_rf(u);
        if (!std::isfinite(q) || q < 0.0) {
            throw DomainError("certify_convexity: curve produced invalid q_rf at u = " +
                              std::to_string(u));
        }
        return q;
    };

    ConvexityReport rep;
    rep.rows.reserve(u_grid.size());
    double sd_min_pdc = std::numeric_limits<double>::infinity();
    double sd_min_iout = std::numeric_limits<double>::infinity();
    double curv_min = std::numeric_limits<double>::infinity();
    double recip_min = std::numeric_limits<double>::infinity();
    double curv_scale = 0.0;
    double recip_scale = 0.0;

    for (double u : u_grid) {
        ConvexityRow row;
        row.u = u;
        row.q_rf = q_at(u);
        row.i_out = solve_iout(m, row.q_rf);
        row.p_dc = row.i_out * row.i_out * m.params().r_load;

        const double h = u * 1e-4;
        const double qp = q_at(u + h);
        const double qm = q_at(u - h);
        const double ip = solve_iout(m, qp);
        const double im = solve_iout(m, qm);
        const double r_load = m.params().r_load;
        row.second_diff_iout = (ip - 2.0 * row.i_out + im) / (h * h);
        row.second_diff_pdc =
            (ip * ip * r_load - 2.0 * row.p_dc + im * im * r_load) / (h * h);

        // Curvature certificate of rho along the curve:
        //   rho_d  = rho'(q) q_d
        //   rho_dd = rho''(q) q_d^2 + rho'(q) q_dd
        // and convexity of the composition needs rho_dd - rho_d^2 / rho >= 0.
        const double qd = curve.q_prime(u);
        const double qdd = curve.q_second(u);
        const double rv = rho(m, row.q_rf);
        const double rd = rho_prime(m, row.q_rf) * qd;
        const double rdd = rho_second(m, row.q_rf) * qd * qd + rho_prime(m, row.q_rf) * qdd;
        row.cond_curv = rdd - rd * rd / rv;
        row.cond_recip = qdd * row.q_rf - qd * qd;

        sd_min_pdc = std::min(sd_min_pdc, row.second_diff_pdc);
        sd_min_iout = std::min(sd_min_iout, row.second_diff_iout);
        curv_min = std::min(curv_min, row.cond_curv);
        recip_min = std::min(recip_min, row.cond_recip);
        curv_scale = std::max(curv_scale, std::abs(rdd) + rd * rd / rv);
        recip_scale = std::max(recip_scale, std::max(std::abs(qdd * row.q_rf), qd * qd));
        rep.pdc_max_abs = std::max(rep.pdc_max_abs, std::abs(row.p_dc));

        rep.rows.push_back(row);
    }

    rep.second_diff_min_pdc = sd_min_pdc;
    rep.second_diff_min_iout = sd_min_iout;
    rep.cond_curv_min = curv_min;
    rep.cond_recip_min = recip_min;

    // Measured verdict with a scale-aware slack for rounding noise in the
    // second differences; analytic conditions with a similar relative slack.
    const double sd_tol = 1e-12 * rep.pdc_max_abs;
    rep.verdict = sd_min_pdc >= -sd_tol;
    rep.cond_curv_holds = curv_min >= -1e-9 * curv_scale;
    rep.cond_recip_holds = recip_min >= -1e-9 * recip_scale;

    if (!rep.verdict) {
        rep.status = ConvexityStatus::SecondDiffViolation;
    } else if (rep.cond_curv_holds) {
        rep.status = ConvexityStatus::CertifiedConvex;
    } else {
        rep.status = ConvexityStatus::ConditionFailed;
    }
    return rep;
}

}  // namespace wpt
