#pragma once

#include <vector>

#include "polyext/geometry.hpp"
#include "polyext/metrics.hpp"
#include "polyext/rng.hpp"

namespace test_support {

inline polyext::Polygon random_polygon(int n, polyext::Rng& rng) {
    std::vector<polyext::Point> pts(static_cast<size_t>(n));
    for (auto& p : pts) p = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    return polyext::Polygon(std::move(pts));
}

inline polyext::Polygon random_unit_perimeter(int n, polyext::Rng& rng) {
    for (;;) {
        polyext::Polygon p = random_polygon(n, rng);
        if (polyext::perimeter(p) > 1e-6)
            return polyext::normalize_to_unit_perimeter(p);
    }
}

}  // namespace test_support
