#include "waveforms.hpp"

#include <cmath>

#include "errors.hpp"

namespace wpt {

namespace {

void check_order(int order) {
    if (order < 2 || order % 2 != 0) {
        throw ValidationError("waveform: moment order must be even and >= 2, got " +
                              std::to_string(order));
    }
}

}  // namespace

double cw_factor(int order) {
    check_order(order);
    // binomial(2j, j) / 2^j.  The binomial is built as a product of integer
    // partial results, so for the moderate orders used here every step is
    // exact in double and the final power-of-two division is exact too.
    const int j = order / 2;
    double binom = 1.0;
    for (int m = 1; m <= j; ++m) {
        binom = binom * static_cast<double>(j + m) / static_cast<double>(m);
    }
    return binom / std::exp2(static_cast<double>(j));
}

double gaussian_factor(int order) {
    check_order(order);
    const int j = order / 2;
    double value = 1.0;
    for (int m = 1; m <= j; ++m) {
        value *= static_cast<double>(2 * m - 1);
    }
    return value;
}

Waveform Waveform::builtin(WaveformKind kind, int max_order) {
    check_order(max_order);
    Waveform w;
    w.builtin_ = true;
    w.name_ = (kind == WaveformKind::ContinuousWave) ? "cw" : "gaussian";
    for (int order = 2; order <= max_order; order += 2) {
        w.factors_[order] = (kind == WaveformKind::ContinuousWave)
                                ? cw_factor(order)
                                : gaussian_factor(order);
    }
    return w;
}

Waveform Waveform::custom(const std::map<int, double>& factors) {
    Waveform w;
    w.builtin_ = false;
    w.name_ = "custom";
    w.factors_[2] = 1.0;
    for (const auto& [order, value] : factors) {
        if (order < 4 || order % 2 != 0) {
            throw ValidationError("waveform: custom factor orders must be even and >= 4, got " +
                                  std::to_string(order));
        }
        if (!std::isfinite(value) || value <= 0.0) {
            throw ValidationError("waveform: factor for order " + std::to_string(order) +
                                  " must be positive and finite");
        }
        w.factors_[order] = value;
    }
    return w;
}

bool Waveform::has_factor(int order) const {
    return factors_.count(order) != 0;
}

double Waveform::factor(int order) const {
    auto it = factors_.find(order);
    if (it == factors_.end()) {
        throw ValidationError("waveform '" + name_ + "' has no moment factor of order " +
                              std::to_string(order));
    }
    return it->second;
}

}  // namespace wpt
