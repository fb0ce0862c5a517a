#pragma once

#include <vector>

#include "waveforms.hpp"

namespace wpt {

// Diode and circuit constants of a single-diode rectifier, plus the even
// truncation order of its small-signal expansion.
struct RectifierParams {
    double i_s = 5e-6;         // diode reverse saturation current [A]
    double n_ideality = 1.05;  // diode ideality factor
    double v_t = 0.02586;      // thermal voltage [V]
    double r_ant = 50.0;       // antenna resistance [ohm]
    double r_load = 5000.0;    // DC load resistance [ohm]
    int trunc_order = 4;       // expansion truncation order (even, >= 2)

    void validate() const;  // throws ValidationError on any bad field
};

// Polynomial harvest map of a rectifier/waveform pair:
//
//   rho(q) = sum_{j=0}^{J} alpha[j] * q^j,   alpha[0] = i_s,
//
// where q is the average RF power reaching the rectifier input and J is
// trunc_order / 2.  The output DC current solves
//
//   exp(a * i) * (i + i_s) = rho(q),   a = r_load / (n_ideality * v_t).
class HarvestModel {
public:
    HarvestModel(const RectifierParams& params, std::vector<double> alpha);

    const RectifierParams& params() const { return params_; }
    const std::vector<double>& alpha() const { return alpha_; }

    // a = r_load / (n_ideality * v_t), the exponential rate of the diode term.
    double exp_rate() const { return exp_rate_; }

private:
    RectifierParams params_;
    std::vector<double> alpha_;
    double exp_rate_;
};

// Assembles the polynomial coefficients for the given circuit and waveform:
//   alpha[j] = i_s / ((2j)! * (n_ideality*v_t)^(2j)) * r_ant^j * factor(2j).
// Throws ValidationError if the waveform lacks a required moment factor.
HarvestModel build_model(const RectifierParams& params, const Waveform& waveform);

// Polynomial and its q-derivatives.  q_rf must be >= 0 and finite.
double rho(const HarvestModel& m, double q_rf);
double rho_prime(const HarvestModel& m, double q_rf);
double rho_second(const HarvestModel& m, double q_rf);

// Principal branch of the Lambert W function (w * exp(w) = z) for z >= 0,
// via Halley iteration.  Converges to |w e^w - z| <= rel_tol * max(z, DBL_MIN)
// or to a double-precision fixed point, whichever comes first.
double lambert_w0(double z, double rel_tol = 1e-12);

// DC output current: the unique i >= 0 with exp(a*i)*(i + i_s) = rho(q_rf).
// Exact zero at q_rf = 0.  Relative residual of the returned root is at the
// rounding floor (far below 1e-10).
double solve_iout(const HarvestModel& m, double q_rf);

// Same solve for an already-evaluated right-hand side (rho_value >= i_s).
double solve_iout_from_rho(const HarvestModel& m, double rho_value);

// Harvested DC power: r_load * solve_iout(q_rf)^2.
double p_dc(const HarvestModel& m, double q_rf);

}  // namespace wpt
