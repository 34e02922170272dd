#include <doctest.h>

#include <cmath>
#include <numbers>

#include "polyext/bounds.hpp"
#include "polyext/metrics.hpp"
#include "polyext/optimize.hpp"
#include "polyext/predicates.hpp"

using namespace polyext;
using namespace polyext::opt;

namespace {

constexpr double kPi = std::numbers::pi;
const ConstraintSet kUnitPer{true, false, false};
const ConstraintSet kDisk{false, true, false};
const ConstraintSet kDiskSimple{false, true, true};

}  // namespace

TEST_CASE("projection restores feasibility") {
    Rng rng(3);
    for (int rep = 0; rep < 200; ++rep) {
        const Polygon raw = random_polygon(rng.uniform_int(3, 8), rng);
        if (perimeter(raw) == 0.0) continue;
        const Polygon up = project_feasible(raw, kUnitPer);
        REQUIRE(std::abs(perimeter(up) - 1.0) < 1e-12);
        const Polygon disk = project_feasible(scaled(raw, 3.0), kDisk);
        for (const Point& v : disk.vertices()) REQUIRE(norm(v) <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(project_feasible(Polygon({{1, 1}, {1, 1}, {1, 1}}), kUnitPer),
                    ZeroPerimeter);
}

TEST_CASE("optimize validates its inputs") {
    CHECK_THROWS_AS(optimize({}, kUnitPer, 2, 0, 1, 10), BadN);
    CHECK_THROWS_AS(optimize({}, kUnitPer, 4, 0, 0, 10), BadN);
    CHECK_THROWS_AS(optimize({}, ConstraintSet{}, 4, 0, 1, 10), Error);
}

TEST_CASE("optimize is deterministic") {
    const Objective obj{ObjectiveKind::SumDistances, Direction::Maximize};
    const auto a = optimize(obj, kUnitPer, 5, 7, 12, 400);
    const auto b = optimize(obj, kUnitPer, 5, 7, 12, 400);
    REQUIRE(a.best_value == b.best_value);
    REQUIRE(a.history == b.history);
    REQUIRE(a.best_polygon.size() == b.best_polygon.size());
    for (size_t i = 0; i < a.best_polygon.size(); ++i)
        REQUIRE(a.best_polygon[i] == b.best_polygon[i]);
}

TEST_CASE("optimizer reaches the distance-sum suprema at small n") {
    const auto run = optimize({ObjectiveKind::SumDistances, Direction::Maximize},
                              kUnitPer, 4, 42, 20, 1500);
    CHECK(run.best_value == doctest::Approx(2.0).epsilon(1e-3));
    REQUIRE(std::abs(perimeter(Polygon(run.best_polygon)) - 1.0) < 1e-9);

    const auto sq = optimize({ObjectiveKind::SumSquaredDistances, Direction::Minimize},
                             kUnitPer, 3, 42, 20, 1500);
    CHECK(sq.best_value == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("optimizer reaches the disk-perimeter maxima at small n") {
    const auto g = optimize({ObjectiveKind::Perimeter, Direction::Maximize}, kDisk, 5,
                            42, 20, 1500);
    CHECK(g.best_value == doctest::Approx(bounds::G_max(5)).epsilon(1e-3));

    const auto f = optimize({ObjectiveKind::Perimeter, Direction::Maximize},
                            kDiskSimple, 5, 42, 20, 1500);
    CHECK(f.best_value == doctest::Approx(bounds::F_max(5)).epsilon(1e-3));
    REQUIRE(is_simple(Polygon(f.best_polygon)));
}

TEST_CASE("accepted iterates respect the proven bounds") {
    for (auto [kind, dir, bound] :
         {std::tuple{ObjectiveKind::SumDistances, Direction::Maximize,
                     bounds::S_max(5)},
          std::tuple{ObjectiveKind::SumSquaredDistances, Direction::Maximize,
                     bounds::T_max(5)}}) {
        double worst_high = -1e300;
        double worst_low = 1e300;
        bool any = false;
        optimize({kind, dir}, kUnitPer, 5, 1, 10, 600,
                 [&](int, const Polygon& p, double value) {
                     any = true;
                     worst_high = std::max(worst_high, value);
                     const double z = sum_pairwise_distances(p);
                     worst_low = std::min(worst_low, z);
                     REQUIRE(std::abs(perimeter(p) - 1.0) < 1e-9);
                 });
        REQUIRE(any);
        REQUIRE(worst_high <= bound + 1e-9);
        REQUIRE(worst_low >= 5.0 / 4.0 - 1e-9);  // distance sum floor n/4
    }
}

TEST_CASE("simplicity filter holds on every accepted iterate") {
    optimize({ObjectiveKind::Perimeter, Direction::Maximize}, kDiskSimple, 5, 9, 6, 400,
             [&](int, const Polygon& p, double) { REQUIRE(is_simple(p)); });
}

TEST_CASE("cap function maximization matches the closed forms") {
    const auto [a5, v5] = maximize_cap_function(5);
    CHECK(std::sin(a5 / 2.0) ==
          doctest::Approx((-1.0 + std::sqrt(73.0)) / 12.0).epsilon(1e-10));
    CHECK(std::sin(a5 / 2.0) == doctest::Approx(0.628667).epsilon(1e-5));
    CHECK(v5 == doctest::Approx(8.9774).epsilon(1e-4));

    const auto [a7, v7] = maximize_cap_function(7);
    CHECK(v7 >= 12.92);
    CHECK(v7 < 12.93);

    // n=3 probe: the general formula already matches the equilateral value.
    const auto [a3, v3] = maximize_cap_function(3);
    CHECK(v3 == doctest::Approx(bounds::F_max(3)).epsilon(1e-10));
    CHECK(v3 == doctest::Approx(3.0 * std::sqrt(3.0)).epsilon(1e-10));

    for (int n = 5; n <= 999; n += 2) {
        const auto [alpha, value] = maximize_cap_function(n);
        const double m = n - 2.0;
        const double closed = (-1.0 + std::sqrt(1.0 + 8.0 * m * m)) / (4.0 * m);
        REQUIRE(std::abs(std::sin(alpha / 2.0) - closed) < 1e-10);
        REQUIRE(std::abs(value - bounds::F_max(n)) < 1e-10);
    }
    CHECK_THROWS_AS(maximize_cap_function(4), BadN);
}

TEST_CASE("brute-force oracle sanity at n = 3") {
    CHECK_THROWS_AS(brute_force_oracle({}, kUnitPer, 5, 10), TooLarge);
    CHECK_THROWS_AS(brute_force_oracle({}, kUnitPer, 3, 60), TooLarge);

    // Pair sum equals perimeter for triangles, so both extrema are 1.
    CHECK(brute_force_oracle({ObjectiveKind::SumDistances, Direction::Maximize},
                             kUnitPer, 3, 21) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(brute_force_oracle({ObjectiveKind::SumDistances, Direction::Minimize},
                             kUnitPer, 3, 21) == doctest::Approx(1.0).epsilon(1e-12));

    const double t3 = brute_force_oracle(
        {ObjectiveKind::SumSquaredDistances, Direction::Minimize}, kUnitPer, 3, 21);
    CHECK(t3 >= 1.0 / 3.0 - 1e-9);
    CHECK(t3 == doctest::Approx(1.0 / 3.0).epsilon(2e-2));

    const double g3 = brute_force_oracle({ObjectiveKind::Perimeter, Direction::Maximize},
                                         kDisk, 3, 21);
    CHECK(g3 <= bounds::G_max(3) + 1e-12);
    CHECK(g3 == doctest::Approx(bounds::G_max(3)).epsilon(2e-2));
}

TEST_CASE("long-edge path probes") {
    const auto p1 = lemma4_case_probe(kPi / 3.0);
    CHECK(p1.f_alpha >= 1.547);
    CHECK(p1.f_alpha < 1.548);
    CHECK(p1.g_pair >= 1.586);
    CHECK(p1.g_pair < 1.587);
    CHECK(p1.interval_pass);
    CHECK(p1.v_chord ==
          doctest::Approx(4.0 * std::sqrt(std::sin(kPi / 3) - std::pow(std::sin(kPi / 3), 2))));

    const auto p2 = lemma4_case_probe(5.0 * kPi / 12.0);
    CHECK(p2.f_alpha >= 1.328);
    CHECK(p2.f_alpha < 1.329);
    CHECK(p2.g_pair >= 1.414);
    CHECK(p2.g_pair < 1.415);
    CHECK(p2.interval_pass);

    const auto p3 = lemma4_case_probe(kPi / 2.0);
    CHECK(p3.t == doctest::Approx(std::numbers::sqrt2 / 2.0).epsilon(1e-14));
    CHECK(p3.eq_quad_lhs == doctest::Approx(0.1716).epsilon(1e-3));
    CHECK(p3.eq_quad_rhs == doctest::Approx(0.5858).epsilon(1e-3));
    CHECK(p3.quad_pass);

    CHECK_THROWS_AS(lemma4_case_probe(0.5), OutOfRange);
    CHECK_THROWS_AS(lemma4_case_probe(2.0), OutOfRange);

    // Both comparison functions decrease over the interval, which is what
    // makes the two-subinterval check sufficient.
    double prev_f = 1e300, prev_g = 1e300;
    for (int k = 0; k <= 40; ++k) {
        const double a = kPi / 3.0 + (kPi / 2.0 - kPi / 3.0) * k / 40.0;
        const auto r = lemma4_case_probe(a);
        REQUIRE(r.f_alpha <= prev_f + 1e-12);
        REQUIRE(r.g_alpha <= prev_g + 1e-12);
        REQUIRE(r.pointwise_pass);
        REQUIRE(r.quad_pass);
        prev_f = r.f_alpha;
        prev_g = r.g_alpha;
    }
}
