#pragma once

#include <functional>
#include <vector>

#include "rectifier.hpp"

namespace wpt {

// Sensitivity of the implicit DC-current solve to its right-hand side,
// evaluated at the operating point q_rf:
//   di/drho = 1 / (a * rho(q) + exp(a * i)),  a = r_load / (n_ideality * v_t).
double diout_drho(const HarvestModel& m, double q_rf);

// Derivative of harvested DC power with respect to the pathloss d when the
// rectifier input is q0 / d:
//   dP/dd = 2 * r_load * i * (di/drho) * rho'(q) * (-q0 / d^2),  q = q0 / d.
// Always negative: moving away from the transmitter loses power.
double dpdc_dd(const HarvestModel& m, double q0, double d);

// Map from a positive transmission-side parameter u to the RF power q_rf(u)
// that reaches the rectifier.  The reciprocal family q = a / u has analytic
// derivatives; custom maps are differentiated by central differences with
// steps u*1e-6 (first) and u*1e-4 (second).
class ParamCurve {
public:
    static ParamCurve reciprocal(double a);  // q(u) = a / u, a > 0
    static ParamCurve custom(std::function<double(double)> q_of_u);

    bool analytic() const { return analytic_; }
    double q_rf(double u) const;     // throws DomainError unless u > 0
    double q_prime(double u) const;
    double q_second(double u) const;

private:
    ParamCurve() = default;

    bool analytic_ = false;
    double a_ = 0.0;
    std::function<double(double)> fn_;
};

enum class ConvexityStatus {
    CertifiedConvex,      // curvature certificate holds on the whole grid
    ConditionFailed,      // certificate inconclusive, no measured violation
    SecondDiffViolation,  // measured negative curvature beyond tolerance
};

struct ConvexityRow {
    double u = 0.0;
    double q_rf = 0.0;
    double i_out = 0.0;
    double p_dc = 0.0;
    double second_diff_pdc = 0.0;   // central second difference of p_dc(u)
    double second_diff_iout = 0.0;  // central second difference of i_out(u)
    double cond_curv = 0.0;         // rho_dd - rho_d^2 / rho along the curve
    double cond_recip = 0.0;        // q_dd * q - q_d^2 (reciprocal-likeness)
};

struct ConvexityReport {
    std::vector<ConvexityRow> rows;
    double second_diff_min_pdc = 0.0;
    double second_diff_min_iout = 0.0;
    double cond_curv_min = 0.0;
    double cond_recip_min = 0.0;
    double pdc_max_abs = 0.0;
    bool verdict = false;      // second_diff_min_pdc >= -1e-12 * pdc_max_abs
    bool cond_curv_holds = false;
    bool cond_recip_holds = false;
    ConvexityStatus status = ConvexityStatus::ConditionFailed;
};

// Probes convexity of i_out(u) and p_dc(u) along the curve over a strictly
// increasing positive grid (>= 5 points): analytic curvature certificate
// where available, measured second differences always.
ConvexityReport certify_convexity(const HarvestModel& m, const ParamCurve& curve,
                                  const std::vector<double>& u_grid);

}  // namespace wpt
