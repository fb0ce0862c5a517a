#pragma once

#include <map>
#include <string>

namespace wpt {

enum class WaveformKind { ContinuousWave, RealGaussian };

// Normalized even-moment factors of a transmit signal envelope:
//   factor(2j) = E{y^(2j)} / (E{y^2})^j.
// factor(2) is 1 by construction for every waveform.  A waveform only needs
// factors up to the rectifier truncation order it will be paired with.
class Waveform {
public:
    // Factors up to max_order (even, >= 2) from the closed forms of the two
    // built-in signal families.
    static Waveform builtin(WaveformKind kind, int max_order);

    // User-supplied factors keyed by even order >= 4.  Values must be
    // positive and finite; factor(2) = 1 is added automatically.
    static Waveform custom(const std::map<int, double>& factors);

    const std::string& name() const { return name_; }
    bool is_builtin() const { return builtin_; }

    bool has_factor(int order) const;
    double factor(int order) const;  // throws ValidationError if absent
    const std::map<int, double>& factors() const { return factors_; }

private:
    Waveform() = default;

    std::string name_;
    bool builtin_ = false;
    std::map<int, double> factors_;
};

// Closed-form factor of order 2j for a constant-envelope (single carrier)
// signal: binomial(2j, j) / 2^j.
double cw_factor(int order);

// Closed-form factor of order 2j for a real zero-mean Gaussian signal:
// (2j - 1)!!.
double gaussian_factor(int order);

}  // namespace wpt
