#include "rectifier.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "errors.hpp"

namespace wpt {

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require_positive(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw ValidationError(std::string("rectifier: ") + name +
                              " must be positive and finite, got " + num(v));
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= static_cast<double>(k);
    return f;
}

void check_q(double q_rf, const char* where) {
    // !(q >= 0) also rejects NaN.
    if (!(q_rf >= 0.0) || !std::isfinite(q_rf)) {
        throw DomainError(std::string(where) + ": q_rf must be finite and >= 0, got " + num(q_rf));
    }
}

}  // namespace

void RectifierParams::validate() const {
    require_positive(i_s, "i_s");
    require_positive(n_ideality, "n_ideality");
    require_positive(v_t, "v_t");
    require_positive(r_ant, "r_ant");
    require_positive(r_load, "r_load");
    if (trunc_order < 2 || trunc_order % 2 != 0) {
        throw ValidationError("rectifier: trunc_order must be even and >= 2, got " +
                              std::to_string(trunc_order));
    }
    if (trunc_order > 32) {
        throw ValidationError("rectifier: trunc_order above 32 is not supported, got " +
                              std::to_string(trunc_order));
    }
}

HarvestModel::HarvestModel(const RectifierParams& params, std::vector<double> alpha)
    : params_(params), alpha_(std::move(alpha)) {
    params_.validate();
    if (alpha_.empty() || alpha_[0] != params_.i_s) {
        throw ValidationError("rectifier: alpha[0] must equal i_s");
    }
    for (std::size_t j = 0; j < alpha_.size(); ++j) {
        if (!std::isfinite(alpha_[j]) || alpha_[j] <= 0.0) {
            throw ValidationError("rectifier: alpha[" + std::to_string(j) +
                                  "] must be positive and finite");
        }
    }
    exp_rate_ = params_.r_load / (params_.n_ideality * params_.v_t);
}

HarvestModel build_model(const RectifierParams& params, const Waveform& waveform) {
    params.validate();
    const int half = params.trunc_order / 2;
    const double nvt = params.n_ideality * params.v_t;
    std::vector<double> alpha(static_cast<std::size_t>(half) + 1);
    alpha[0] = params.i_s;
    for (int j = 1; j <= half; ++j) {
        const int order = 2 * j;
        if (!waveform.has_factor(order)) {
            throw ValidationError("build_model: waveform '" + waveform.name() +
                                  "' lacks the order-" + std::to_string(order) +
                                  " moment factor required by trunc_order " +
                                  std::to_string(params.trunc_order));
        }
        const double kbar = params.i_s / (factorial(order) * std::pow(nvt, order));
        alpha[static_cast<std::size_t>(j)] =
            kbar * std::pow(params.r_ant, j) * waveform.factor(order);
    }
    return HarvestModel(params, std::move(alpha));
}

double rho(const HarvestModel& m, double q_rf) {
    check_q(q_rf, "rho");
    const auto& a = m.alpha();
    double acc = a.back();
    for (std::size_t k = a.size() - 1; k-- > 0;) {
        acc = acc * q_rf + a[k];
    }
    return acc;
}

double rho_prime(const HarvestModel& m, double q_rf) {
    check_q(q_rf, "rho_prime");
    const auto& a = m.alpha();
    if (a.size() < 2) return 0.0;
    double acc = static_cast<double>(a.size() - 1) * a.back();
    for (std::size_t k = a.size() - 1; k-- > 1;) {
        acc = acc * q_rf + static_cast<double>(k) * a[k];
    }
    return acc;
}

double rho_second(const HarvestModel& m, double q_rf) {
    check_q(q_rf, "rho_second");
    const auto& a = m.alpha();
    if (a.size() < 3) return 0.0;
    const std::size_t top = a.size() - 1;
    double acc = static_cast<double>(top) * static_cast<double>(top - 1) * a.back();
    for (std::size_t k = top; k-- > 2;) {
        acc = acc * q_rf + static_cast<double>(k) * static_cast<double>(k - 1) * a[k];
    }
    return acc;
}

double lambert_w0(double z, double rel_tol) {
    if (!std::isfinite(z) || z < 0.0) {
        throw DomainError("lambert_w0: argument must be finite and >= 0, got " + num(z));
    }
    if (!(rel_tol > 0.0) || rel_tol > 1e-6) {
        throw ValidationError("lambert_w0: rel_tol must lie in (0, 1e-6], got " + num(rel_tol));
    }
    if (z == 0.0) return 0.0;

    // Start inside the Halley basin: log1p(z) tracks W well for small z, and
    // the two-term asymptotic expansion takes over for large z.
    double w;
    if (z < 3.0) {
        w = std::log1p(z);
    } else {
        const double l1 = std::log(z);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int it = 0; it < 64; ++it) {
        const double ew = std::exp(w);
        const double f = w * ew - z;
        const double wp1 = w + 1.0;
        const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        const double next = w - f / denom;
        if (next == w) return w;  // double-precision fixed point
        // Converged once the applied step is small: cubic convergence makes
        // the post-step error negligible against the step itself.
        const bool done = std::abs(next - w) <= rel_tol * std::abs(next);
        w = next;
        if (done) return w;
    }
    throw SolverError("lambert_w0: iteration stalled for z = " + num(z));
}

double solve_iout(const HarvestModel& m, double q_rf) {
    return solve_iout_from_rho(m, rho(m, q_rf));
}

double solve_iout_from_rho(const HarvestModel& m, double rho_value) {
    const double i_s = m.params().i_s;
    if (!std::isfinite(rho_value) || rho_value < i_s) {
        throw DomainError("solve_iout: rho value " + num(rho_value) +
                          " below the zero-input level " + num(i_s));
    }
    if (rho_value == i_s) return 0.0;  // no RF input, no rectified current

    const double a = m.exp_rate();
    const double ln_rho = std::log(rho_value);

    // Substituting t = a*(i + i_s) turns the implicit equation into
    // t * exp(t) = a * rho * exp(a * i_s), i.e. t = W0 of that product.
    // When the product overflows double range, fall back to a log-domain
    // Newton solve of f(i) = a*i + log(i + i_s) - log(rho) instead.
    double iout;
    const double ln_arg = std::log(a) + ln_rho + a * i_s;
    if (ln_arg < 700.0) {
        const double t = lambert_w0(a * rho_value * std::exp(a * i_s));
        iout = t / a - i_s;
        if (iout < 0.0) iout = 0.0;  // cancellation guard for vanishing input
    } else {
        // f is increasing and concave; this start lies right of the root, the
        // first step may overshoot left, after which Newton climbs back
        // monotonically.
        iout = (ln_rho - std::log(i_s)) / a;
    }

    // Newton polish in the log domain.  On the Lambert path this terminates
    // immediately; on the fallback path it is the actual solve.
    for (int it = 0; it < 64; ++it) {
        const double f = a * iout + std::log(iout + i_s) - ln_rho;
        if (std::abs(f) <= 1e-13) break;
        const double fp = a + 1.0 / (iout + i_s);
        double next = iout - f / fp;
        if (next < 0.0) next = 0.0;
        if (next == iout) break;
        iout = next;
    }
    return iout;
}

double p_dc(const HarvestModel& m, double q_rf) {
    const double i = solve_iout(m, q_rf);
    return i * i * m.params().r_load;
}

}  // namespace wpt
