#include "polyext/bounds.hpp"

#include <cmath>
#include <numbers>

#include "polyext/errors.hpp"

namespace polyext::bounds {

namespace {

constexpr double kPi = std::numbers::pi;

void require_n(int n) {
    if (n < 3) throw BadN("n must be at least 3, got " + std::to_string(n));
}

void require_odd(int n, int min_n) {
    if (n < min_n || n % 2 == 0)
        throw BadN("n must be odd and at least " + std::to_string(min_n) + ", got " +
                   std::to_string(n));
}

double half_product(int n) {
    return static_cast<double>(n / 2) * static_cast<double>((n + 1) / 2);
}

}  // namespace

std::pair<double, double> s_bounds(int n) {
    require_n(n);
    const double lower = n / 4.0;
    return {lower, n % 2 == 0 ? lower : (n + 1) / 4.0};
}

double S_max(int n) {
    require_n(n);
    return 0.5 * half_product(n);
}

std::pair<double, double> t_bounds(int n) {
    require_n(n);
    return {0.125, 0.25};
}

double T_max(int n) {
    require_n(n);
    return 0.25 * half_product(n);
}

double a_of_n(int n) {
    require_n(n);
    const double m = n - 2;
    return std::sqrt(1.0 + 8.0 * m * m);
}

double F_max(int n) {
    require_n(n);
    if (n % 2 == 0) return 2.0 * n;  // supremum, approached but not attained
    const double m = n - 2;
    const double a = std::sqrt(1.0 + 8.0 * m * m);
    return std::sqrt(8.0 * m * m - 2.0 + 2.0 * a) * (a + 3.0) / (4.0 * m);
}

double F_max_alt(int n) {
    require_odd(n, 3);
    const double m = n - 2;
    const double a = a_of_n(n);
    return std::sqrt((a + 1.0) * (a + 1.0) - 4.0) * (a + 3.0) / (4.0 * m);
}

std::pair<double, double> F_lower_bound_check(int n) {
    require_odd(n, 5);
    return {F_max(n), 2.0 * (n - 2) + 1.5 * std::numbers::sqrt2};
}

double G_max(int n) {
    require_n(n);
    if (n % 2 == 0) return 2.0 * n;  // supremum, approached but not attained
    return 2.0 * n * std::cos(kPi / (2.0 * n));
}

double F_asymptotic(int n) {
    require_odd(n, 5);
    return 2.0 * (n - 2) + 2.0 * std::numbers::sqrt2;
}

double G_asymptotic_gap(int n) {
    require_odd(n, 3);
    return 2.0 * n - G_max(n);
}

ConvexBounds convex_bounds(int n) {
    require_n(n);
    return {(n - 1) / 2.0, 0.5 * half_product(n), 2.0 * n / (3.0 * kPi * kPi), n / 8.0,
            0.25 * half_product(n)};
}

BoundSet bound_set(int n) {
    require_n(n);
    const auto [s_lo, s_hi] = s_bounds(n);
    const auto [t_lo, t_hi] = t_bounds(n);
    const ConvexBounds c = convex_bounds(n);
    const bool odd = n % 2 != 0;
    return {n,      s_lo,  s_hi, S_max(n), t_lo, t_hi, T_max(n),
            F_max(n), odd,  G_max(n), odd,
            c.s_c,  c.S_c, c.t_c_lower, c.t_c_upper, c.T_c};
}

nlohmann::ordered_json to_json(const BoundSet& b) {
    return nlohmann::ordered_json{
        {"n", b.n},
        {"s_lower", b.s_lower},
        {"s_upper", b.s_upper},
        {"S", b.S},
        {"t_lower", b.t_lower},
        {"t_upper", b.t_upper},
        {"T", b.T},
        {"F", b.F},
        {"F_attained", b.F_attained},
        {"G", b.G},
        {"G_attained", b.G_attained},
        {"s_c", b.s_c},
        {"S_c", b.S_c},
        {"t_c_lower", b.t_c_lower},
        {"t_c_upper", b.t_c_upper},
        {"T_c", b.T_c},
    };
}

}  // namespace polyext::bounds
