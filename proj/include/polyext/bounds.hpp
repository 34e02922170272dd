#pragma once

#include <utility>

#include <json.hpp>

namespace polyext::bounds {

// Closed-form extremal values for unit-perimeter n-gons (pairwise distance
// sums) and for n-gons inscribed in the unit disk (perimeter), plus the
// convex-case constants. Everything is a pure function of n.

/// (lower, upper) for the infimum of the pairwise distance sum.
/// Even n: both equal n/4 (exact). Odd n: the exact value is open and lies
/// in [n/4, (n+1)/4].
std::pair<double, double> s_bounds(int n);

/// Supremum of the pairwise distance sum: (1/2) floor(n/2) ceil(n/2).
double S_max(int n);

/// (lower, upper) sandwich for the infimum of the pairwise squared distance
/// sum; n-independent (1/8, 1/4). The exact value is open.
std::pair<double, double> t_bounds(int n);

/// Supremum of the pairwise squared distance sum: (1/4) floor(n/2) ceil(n/2).
double T_max(int n);

/// Auxiliary quantity sqrt(1 + 8(n-2)^2).
double a_of_n(int n);

/// Maximum perimeter of a simple n-gon in the unit disk. Exact closed form
/// for odd n; for even n the value 2n is a supremum, never attained.
double F_max(int n);

/// Algebraic variant of the odd-n F formula written in terms of a(n);
/// agrees with F_max to ~1e-12 relative and guards its conditioning.
double F_max_alt(int n);

/// (F_max(n), 2(n-2) + 3*sqrt(2)/2); the first component dominates the
/// second for every odd n >= 5.
std::pair<double, double> F_lower_bound_check(int n);

/// Maximum perimeter of an arbitrary (possibly self-crossing) n-gon in the
/// unit disk: 2n cos(pi/2n) for odd n; supremum 2n for even n.
double G_max(int n);

/// First-order approximation 2(n-2) + 2*sqrt(2) of F_max, odd n >= 5;
/// the error decays like 1/n.
double F_asymptotic(int n);

/// 2n - G_max(n) for odd n; approximately pi^2/(4n).
double G_asymptotic_gap(int n);

struct ConvexBounds {
    double s_c;          // (n-1)/2, attained in the limit
    double S_c;          // (1/2) floor(n/2) ceil(n/2)
    double t_c_lower;    // 2n / (3 pi^2)
    double t_c_upper;    // n / 8
    double T_c;          // (1/4) floor(n/2) ceil(n/2)
};

ConvexBounds convex_bounds(int n);

/// All bounds for one n, with attainment flags for the even-n suprema.
struct BoundSet {
    int n;
    double s_lower, s_upper;
    double S;
    double t_lower, t_upper;
    double T;
    double F;
    bool F_attained;   // false when F is the even-n supremum 2n
    double G;
    bool G_attained;   // false when G is the even-n supremum 2n
    double s_c, S_c, t_c_lower, t_c_upper, T_c;
};

BoundSet bound_set(int n);

nlohmann::ordered_json to_json(const BoundSet& b);

}  // namespace polyext::bounds
