#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "polyext/constructions.hpp"
#include "polyext/metrics.hpp"
#include "polyext/predicates.hpp"
#include "polyext/rng.hpp"

#include "test_support.hpp"

using namespace polyext;
using test_support::random_polygon;
using test_support::random_unit_perimeter;

namespace {

Polygon square(double side) {
    return Polygon({{0, 0}, {side, 0}, {side, side}, {0, side}});
}

Polygon bowtie() { return Polygon({{0, 0}, {1, 1}, {1, 0}, {0, 1}}); }

}  // namespace

TEST_CASE("polygon validation") {
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}}), TooFewVertices);
    CHECK_THROWS_AS(Polygon({{0, 0}, {1, 0}, {0.5, std::nan("")}}), NonFiniteCoordinate);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(Polygon({{0, 0}, {inf, 0}, {0.5, 1}}), NonFiniteCoordinate);
}

TEST_CASE("perimeter") {
    CHECK(perimeter(square(0.25)) == doctest::Approx(1.0).epsilon(1e-15));

    const double s = std::sqrt(3.0);
    const Polygon tri({{-s / 2, -0.5}, {0, 1}, {s / 2, -0.5}});  // equilateral, side sqrt(3)
    CHECK(perimeter(tri) == doctest::Approx(3.0 * s).epsilon(1e-15));

    const Polygon degenerate({{0.3, 0.4}, {0.3, 0.4}, {0.3, 0.4}});
    CHECK(perimeter(degenerate) == 0.0);
}

TEST_CASE("pairwise distance sums") {
    Rng rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const Polygon t = random_polygon(3, rng);
        CHECK(sum_pairwise_distances(t) ==
              doctest::Approx(perimeter(t)).epsilon(1e-14));
    }

    // Unit-perimeter square: 4 sides of 1/4 plus 2 diagonals of sqrt(2)/4.
    CHECK(sum_pairwise_distances(square(0.25)) ==
          doctest::Approx(1.0 + std::numbers::sqrt2 / 2.0).epsilon(1e-15));

    const Polygon ac =
        normalize_to_unit_perimeter(construct::alternating_collinear(4, 0.0));
    CHECK(sum_pairwise_distances(ac) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pairwise squared distance sums") {
    const double side = 1.0 / 3.0;
    const Polygon tri({{0, 0}, {side, 0}, {side / 2, side * std::sqrt(3.0) / 2}});
    CHECK(sum_pairwise_squared_distances(tri) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    // Independent route: coarse scan over unit-perimeter isosceles triangles
    // confirms 1/3 is the smallest value.
    double best = 1e9;
    for (int k = 1; k < 500; ++k) {
        const double base = k / 500.0;
        const double leg = (1.0 - base) / 2.0;
        if (2.0 * leg <= base) continue;
        const double h = std::sqrt(leg * leg - base * base / 4.0);
        const Polygon p({{0, 0}, {base, 0}, {base / 2, h}});
        best = std::min(best, sum_pairwise_squared_distances(p));
    }
    CHECK(best >= 1.0 / 3.0 - 1e-9);
    CHECK(best == doctest::Approx(1.0 / 3.0).epsilon(1e-4));

    const double c = std::cos(std::numbers::pi / 10.0);
    const Polygon star = construct::star_thrackle(5, 1.0 / (10.0 * c));
    CHECK(perimeter(star) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sum_pairwise_squared_distances(star) ==
          doctest::Approx(0.25 / (c * c)).epsilon(1e-14));
    CHECK(sum_pairwise_squared_distances(star) ==
          doctest::Approx(0.276393).epsilon(1e-6));

    const Polygon degenerate({{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    CHECK(sum_pairwise_squared_distances(degenerate) == 0.0);
}

TEST_CASE("normalize_to_unit_perimeter") {
    const Polygon sq = normalize_to_unit_perimeter(square(1.0));
    CHECK(perimeter(sq) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dist(sq[0], sq[1]) == doctest::Approx(0.25).epsilon(1e-14));

    // 3-4-5 right triangle scales to sides 1/4, 1/3, 5/12.
    const Polygon t = normalize_to_unit_perimeter(Polygon({{0, 0}, {3, 0}, {3, 4}}));
    CHECK(dist(t[0], t[1]) == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(dist(t[1], t[2]) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(dist(t[2], t[0]) == doctest::Approx(5.0 / 12.0).epsilon(1e-14));

    CHECK_THROWS_AS(normalize_to_unit_perimeter(Polygon({{1, 1}, {1, 1}, {1, 1}})),
                    ZeroPerimeter);

    // Idempotence up to 1e-12 per coordinate.
    Rng rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        const Polygon p = random_unit_perimeter(rng.uniform_int(3, 9), rng);
        const Polygon q = normalize_to_unit_perimeter(p);
        for (int i = 0; i < p.size(); ++i) {
            CHECK(std::abs(p[i].x - q[i].x) < 1e-12);
            CHECK(std::abs(p[i].y - q[i].y) < 1e-12);
        }
    }
}

TEST_CASE("is_simple") {
    CHECK(is_simple(Polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}})));
    CHECK_FALSE(is_simple(bowtie()));
    CHECK_FALSE(is_simple(construct::star_thrackle(5, 1.0)));
    CHECK_FALSE(is_simple(construct::star_thrackle(9, 1.0)));

    // Adjacent edges doubling back overlap beyond the shared vertex.
    CHECK_FALSE(is_simple(Polygon({{0, 0}, {2, 0}, {1, 0}, {1, 1}})));
    // Collinear but only touching at the shared vertex is fine.
    CHECK(is_simple(Polygon({{0, 0}, {1, 0}, {2, 0.5}, {0, 0.5}})));
    // A vertex lying on a non-adjacent edge breaks simplicity.
    CHECK_FALSE(is_simple(Polygon({{0, 0}, {2, 0}, {2, 1}, {1, 0}})));
}

TEST_CASE("is_convex_position") {
    const int n = 5;
    std::vector<Point> pentagon;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * std::numbers::pi * i / n;
        pentagon.push_back({std::cos(a), std::sin(a)});
    }
    CHECK(is_convex_position(Polygon(pentagon)));
    std::reverse(pentagon.begin(), pentagon.end());
    CHECK(is_convex_position(Polygon(pentagon)));  // clockwise order too

    CHECK_FALSE(is_convex_position(bowtie()));
    // A star polygon winds twice; its cyclic order is not convex.
    CHECK_FALSE(is_convex_position(construct::star_thrackle(5, 1.0)));
    // Collinear continuation vertices are allowed.
    CHECK(is_convex_position(Polygon({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {0, 1}})));

    CHECK(is_convex_position(construct::two_cluster(6, 3, 1e-6)));
}

TEST_CASE("subpolygon_perimeter") {
    const Polygon sq = square(0.25);
    const std::vector<int> all{0, 1, 2, 3};
    CHECK(subpolygon_perimeter(sq, all) == doctest::Approx(perimeter(sq)));

    const std::vector<int> tri{0, 1, 2};
    CHECK(subpolygon_perimeter(sq, tri) ==
          doctest::Approx(0.5 + std::numbers::sqrt2 / 4.0).epsilon(1e-15));
    CHECK(subpolygon_perimeter(sq, tri) <= perimeter(sq));

    CHECK_THROWS_AS(subpolygon_perimeter(sq, std::vector<int>{0, 1}), BadIndexSet);
    CHECK_THROWS_AS(subpolygon_perimeter(sq, std::vector<int>{0, 2, 1}), BadIndexSet);
    CHECK_THROWS_AS(subpolygon_perimeter(sq, std::vector<int>{0, 1, 4}), BadIndexSet);
    CHECK_THROWS_AS(subpolygon_perimeter(sq, std::vector<int>{0, 2, 2}), BadIndexSet);
}

TEST_CASE("sub-polygon perimeter never exceeds the polygon's") {
    Rng rng(23);
    for (int rep = 0; rep < 10000; ++rep) {
        const int n = rng.uniform_int(4, 12);
        const Polygon p = random_polygon(n, rng);
        const int k = rng.uniform_int(3, n);
        std::vector<int> idx(static_cast<size_t>(n));
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(idx[static_cast<size_t>(i)],
                      idx[static_cast<size_t>(rng.uniform_int(0, i))]);
        idx.resize(static_cast<size_t>(k));
        std::sort(idx.begin(), idx.end());
        REQUIRE(subpolygon_perimeter(p, idx) <= perimeter(p) + 1e-12);
    }
}

TEST_CASE("point_pair_square_bound") {
    auto r = point_pair_square_bound({0, 0}, {-1, 0}, {1, 0});
    CHECK(r.lhs == doctest::Approx(2.0));
    CHECK(r.rhs == doctest::Approx(2.0));

    r = point_pair_square_bound({0, 1}, {-1, 0}, {1, 0});
    CHECK(r.lhs == doctest::Approx(4.0));
    CHECK(r.rhs == doctest::Approx(4.0));

    r = point_pair_square_bound({0.3, 0.7}, {0, 0}, {1, 0});
    CHECK(r.lhs >= r.rhs);

    // Degenerate segment: y is the distance to the point itself.
    r = point_pair_square_bound({3, 4}, {0, 0}, {0, 0});
    CHECK(r.lhs == doctest::Approx(50.0));
    CHECK(r.rhs == doctest::Approx(50.0));
}

TEST_CASE("squared-distance inequality on random triples") {
    Rng rng(29);
    for (int rep = 0; rep < 10000; ++rep) {
        const Point o{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Point a{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const Point b{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const auto pb = point_pair_square_bound(o, a, b);
        REQUIRE(pb.lhs >= pb.rhs - 1e-12);
    }
}

TEST_CASE("pair-sum dominance and metric summary") {
    Rng rng(31);
    for (int rep = 0; rep < 2000; ++rep) {
        const Polygon p = random_polygon(rng.uniform_int(3, 10), rng);
        const MetricSummary m = summarize(p);
        REQUIRE(m.sum_distances >= m.perimeter - 1e-12);
        REQUIRE(m.longest_edge <= m.perimeter + 1e-12);
    }
}

TEST_CASE("scaling covariance") {
    Rng rng(37);
    for (double lambda : {0.5, 3.0}) {
        for (int rep = 0; rep < 500; ++rep) {
            const Polygon p = random_polygon(rng.uniform_int(3, 9), rng);
            const Polygon q = scaled(p, lambda);
            REQUIRE(perimeter(q) ==
                    doctest::Approx(lambda * perimeter(p)).epsilon(1e-12));
            REQUIRE(sum_pairwise_distances(q) ==
                    doctest::Approx(lambda * sum_pairwise_distances(p)).epsilon(1e-12));
            REQUIRE(sum_pairwise_squared_distances(q) ==
                    doctest::Approx(lambda * lambda * sum_pairwise_squared_distances(p))
                        .epsilon(1e-12));
            REQUIRE(is_simple(q) == is_simple(p));
            REQUIRE(is_convex_position(q) == is_convex_position(p));
        }
    }
}
