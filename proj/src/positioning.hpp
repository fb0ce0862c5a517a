#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "calculus.hpp"
#include "rectifier.hpp"
#include "waveforms.hpp"

namespace wpt {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

struct Box {
    double x_min = 0.0;
    double x_max = 0.0;
    double y_min = 0.0;
    double y_max = 0.0;

    bool valid() const { return x_min <= x_max && y_min <= y_max; }
    bool contains(Point p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }
    Point clamp(Point p) const;
};

// Pathloss below this floor is clamped before dividing, so a transmitter
// sitting exactly on a receiver cannot produce an infinite input power.
inline constexpr double kPathlossFloor = 1e-6;  // [m^2]

// Cell-count cap for exhaustive grid sweeps; beyond it the sweep refuses to
// run unless explicitly overridden.
inline constexpr std::uint64_t kGridCellCap = 4'000'000;

// A deployment: receiver positions, transmit power at the pathloss reference,
// the feasible transmitter box, and the harvest model shared by every
// receiver.
struct Scenario {
    std::vector<Point> receivers;
    double q0_dbm = 10.0;  // authoritative as configured [dBm]
    double q0_w = 0.0;     // derived: 10^((q0_dbm - 30) / 10) [W]
    Box box;
    Waveform waveform;
    HarvestModel model;
    std::optional<double> tx_power_dbm;  // informational only
};

// Validates and assembles a scenario; with no box given, uses the bounding
// box of the receivers.  Throws ValidationError on any inconsistency.
Scenario make_scenario(std::vector<Point> receivers, double q0_dbm,
                       std::optional<Box> box, const RectifierParams& params,
                       const Waveform& waveform,
                       std::optional<double> tx_power_dbm = std::nullopt);

// Deterministic random scenario: n receivers uniform in [0, width]^2 drawn
// from the given seed, default rectifier, continuous-wave waveform, 10 dBm
// reference power, box = receiver bounding box.
Scenario generate_scenario(int n_receivers, double width, std::uint64_t seed);

// Quadratic-falloff pathloss: squared Euclidean distance.
double pathloss(Point tx, Point rx);

// Worst receiver's harvested power with the transmitter at p:
//   min_n p_dc(q0 / max(pathloss(p, rx_n), kPathlossFloor)).
// Equals the harvest of the farthest receiver, since p_dc grows with input
// power.
double min_harvest(const Scenario& sc, Point p);

// One tangent plane per receiver: an affine-in-pathloss lower bound on that
// receiver's harvest, touching it exactly at the anchor.
struct SurrogateTerm {
    Point center;       // receiver position
    double alpha = 0.0;  // -dP/dd at the anchor pathloss (positive)
    double p0 = 0.0;     // harvest at the anchor pathloss
    double d0 = 0.0;     // floor-clamped anchor pathloss
};

struct Surrogate {
    Point anchor;
    std::vector<SurrogateTerm> terms;
    bool floor_clamped = false;  // any receiver closer than the floor

    // Tangent value of receiver n at p, with the same pathloss floor the true
    // objective uses (keeps the bound valid arbitrarily close to receivers).
    double term_value(std::size_t n, Point p) const;
    // min over receivers; underestimates min_harvest everywhere and matches
    // it exactly at the anchor.
    double value(Point p) const;
};

Surrogate build_surrogate(const Scenario& sc, Point anchor);

struct SubproblemResult {
    Point position;
    double value = 0.0;  // surrogate min-harvest at the returned position
};

// Global maximizer of the surrogate's min over the scenario box, found by
// enumerating every stationary-point candidate of the max-min structure
// (receiver projections, pairwise equalizers, triple equalizers, box faces)
// and keeping the best.
SubproblemResult solve_subproblem(const Scenario& sc, const Surrogate& surr);

enum class SiaStop { ToleranceMet, MaxIters };

struct SiaIteration {
    Point position;
    double surrogate_value = 0.0;  // lower bound certified by this iterate
    double min_harvest = 0.0;      // true objective at the iterate
    std::vector<double> alphas;    // slopes of the surrogate that produced it
    bool floor_clamped = false;
};

struct SiaTrace {
    std::vector<SiaIteration> iterations;  // [0] is the initial point
    bool converged = false;
    SiaStop stop = SiaStop::MaxIters;
    Point position;      // final transmitter position
    double value = 0.0;  // final certified lower bound
};

// Successive inner approximation: rebuild the tangent surrogate at the
// current iterate and maximize it, until the certified bound stalls within
// rel_tol or the iterate stops moving.  The recorded bound sequence is
// nondecreasing.
SiaTrace sia_solve(const Scenario& sc, Point init, int max_iters = 50,
                   double rel_tol = 1e-6);

struct GridResult {
    Point best;
    double best_value = 0.0;
    double resolution = 0.0;
    std::uint64_t cells = 0;
    // max over the best cell's in-box axis neighbors of
    // |f(best) - f(neighbor)| / f(best)
    double neighbor_rel_diff = 0.0;
};

// Dense sweep of min_harvest over the box at the given spacing.  Ties keep
// the first cell in row-major order (y outer, x inner).  Refuses grids above
// kGridCellCap unless allow_large is set.
GridResult exhaustive_search(const Scenario& sc, double resolution,
                             bool allow_large = false);

}  // namespace wpt
