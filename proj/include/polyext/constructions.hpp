#pragma once

#include <optional>
#include <string>

#include "polyext/geometry.hpp"

namespace polyext::construct {

// Families of extremal and near-extremal polygons. The distance-sum optima
// live in degenerate limits, so each family takes an explicit epsilon > 0
// separation scale; shrinking epsilon drives the relevant functional to its
// bound at first order.

/// Convex n-gon with k vertices within epsilon of (0, 0) and n-k within
/// epsilon of (1/2, 0), each cluster spread along a tiny circular arc of
/// radius epsilon bowing away from the other cluster. Not normalized.
/// With k = floor(n/2), the normalized polygon approaches the pairwise
/// distance-sum and squared-sum suprema as epsilon -> 0; with k = 1 it
/// approaches the convex-case infimum (n-1)/2.
Polygon two_cluster(int n, int k, double epsilon);

/// Non-convex n-gon alternating between a cluster at the origin and one at
/// (1/n, 0) (even n) or (1/(n-1), 0) (odd n). epsilon = 0 places the
/// clusters exactly; epsilon > 0 spreads each cluster vertically by at most
/// epsilon so no two vertices coincide. After normalization the distance
/// sum approaches n/4 (even) or (n+1)/4 (odd).
Polygon alternating_collinear(int n, double epsilon);

/// Star polygon on n (odd) evenly spaced circle points joining point i to
/// point i + (n-1)/2 mod n. All edges share the length
/// 2 * radius * cos(pi/(2n)); with radius = 1 the perimeter equals the
/// disk-perimeter supremum, and with radius = 1/(2n cos(pi/(2n))) it is 1.
Polygon star_thrackle(int n, double radius);

/// Even-n variant of the star: the (n-1)-point star with one vertex
/// duplicated at offset epsilon, keeping the polygon non-degenerate while
/// preserving the squared-sum behavior at unit perimeter.
Polygon star_thrackle_duplicated(int n, double radius, double epsilon);

/// Simple n-gon (odd n) in the closed unit disk whose perimeter approaches
/// the simple-polygon maximum as epsilon -> 0. Two long sides rise from a
/// horizontal chord below the center to the top of the circle; the other
/// n - 2 sides sweep back and forth in a band of height epsilon above the
/// chord, with turn heights nested geometrically so the chain never crosses
/// itself.
Polygon simple_extremal_F(int n, double epsilon);

/// Simple n-gon (even n) in the closed unit disk whose n edges all have
/// length >= 2 - c * epsilon: a thin serpentine strip folded n/2 times along
/// the horizontal diameter. Perimeter approaches 2n as epsilon -> 0.
Polygon near_diameter_zigzag(int n, double epsilon);

enum class Kind {
    TwoCluster,
    AlternatingCollinear,
    StarThrackle,
    SimpleExtremalF,
    NearDiameterZigzag,
};

std::string kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

struct ConstructionSpec {
    Kind kind;
    int n = 3;
    double epsilon = 1e-6;
    std::optional<int> cluster_split;  // TwoCluster only; defaults to floor(n/2)
    double radius = 1.0;               // StarThrackle only
};

Polygon build(const ConstructionSpec& spec);

}  // namespace polyext::construct
