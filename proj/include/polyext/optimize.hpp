#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polyext/geometry.hpp"
#include "polyext/rng.hpp"

namespace polyext::opt {

enum class ObjectiveKind { SumDistances, SumSquaredDistances, Perimeter };
enum class Direction { Maximize, Minimize };

struct Objective {
    ObjectiveKind kind = ObjectiveKind::SumDistances;
    Direction direction = Direction::Maximize;
};

struct ConstraintSet {
    bool unit_perimeter = false;
    bool inside_unit_disk = false;
    bool require_simple = false;
};

double evaluate(ObjectiveKind kind, const Polygon& p);

/// Projects a polygon onto the constraint set: scale to unit perimeter when
/// set, then clamp vertices radially onto the unit disk when set. Simplicity
/// is a predicate, not a projection; callers reject candidates that fail it.
Polygon project_feasible(const Polygon& p, const ConstraintSet& cs);

bool satisfies(const Polygon& p, const ConstraintSet& cs);

/// Uniform random polygon with vertices in [-1, 1]^2.
Polygon random_polygon(int n, Rng& rng);

struct OptimizationRun {
    Objective objective;
    ConstraintSet constraints;
    int n = 0;
    uint64_t seed = 0;
    int restarts = 0;
    int max_iters = 0;
    double best_value = 0.0;
    std::vector<Point> best_polygon;
    std::vector<std::pair<int, double>> history;  // (restart index, restart best)
};

nlohmann::ordered_json to_json(const OptimizationRun& run);

/// Observer invoked on every accepted improvement, with the feasible
/// polygon and its objective value. Used by verification suites to audit
/// iterates against the proven bounds.
using IterateObserver = std::function<void(int restart, const Polygon&, double value)>;

/// Derivative-free search: `restarts` independent Nelder-Mead descents over
/// the 2n vertex coordinates, each from its own random feasible start, with
/// feasibility restored by projection after every candidate step and
/// simplicity enforced by step rejection. Deterministic for fixed inputs;
/// restart random streams depend only on (seed, restart index), and ties
/// between restarts break toward the lower index.
OptimizationRun optimize(Objective objective, ConstraintSet constraints, int n,
                         uint64_t seed, int restarts = 200, int max_iters = 2000,
                         const IterateObserver& observer = {});

/// Golden-section maximization of f(alpha) = 4 cos(alpha/2) + 2(n-2) sin(alpha)
/// over [0, pi/2]; returns (alpha*, f(alpha*)).
std::pair<double, double> maximize_cap_function(int n);

/// Exhaustive grid search over vertex coordinates in [-1, 1]^2 (with the
/// same feasibility projection as `optimize`), used to validate the
/// optimizer at n in {3, 4}. Translation and rotation gauges are fixed to
/// keep the grid tractable; resolution is the number of samples per axis.
double brute_force_oracle(Objective objective, ConstraintSet constraints, int n,
                          int grid_resolution);

struct Lemma4Report {
    double alpha = 0.0;
    double z = 0.0;            // 2 sin(alpha), the long-edge length
    double v_chord = 0.0;      // 4 sqrt(sin a - sin^2 a), the vertical chord
    double f_alpha = 0.0;      // sin a + 2 sqrt(sin a - sin^2 a)
    double g_alpha = 0.0;      // 2 cos(a/2)
    double g_pair = 0.0;       // g at the right end of the probe subinterval
    double t = 0.0;            // cos(alpha/2)
    double eq_quad_lhs = 0.0;  // (2t - 1)^2
    double eq_quad_rhs = 0.0;  // 2 - sqrt(2)
    bool pointwise_pass = false;  // f(alpha) < g(alpha)
    bool interval_pass = false;   // f(alpha) < g(subinterval end)
    bool quad_pass = false;       // (2t-1)^2 <= 2 - sqrt(2)
};

/// Evaluates the auxiliary quantities of the long-edge path analysis at a
/// given alpha in [pi/3, pi/2].
Lemma4Report lemma4_case_probe(double alpha);

}  // namespace polyext::opt
