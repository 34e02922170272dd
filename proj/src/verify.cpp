#include "polyext/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "polyext/bounds.hpp"
#include "polyext/constructions.hpp"
#include "polyext/metrics.hpp"
#include "polyext/optimize.hpp"
#include "polyext/predicates.hpp"
#include "polyext/rng.hpp"

namespace polyext::cli {

namespace {

constexpr double kPi = std::numbers::pi;

// Evenly spaced selection when the range is large, so default invocations
// stay fast without losing range coverage.
std::vector<int> select_n(int n_from, int n_to, bool odd_only, int cap = 25) {
    std::vector<int> all;
    for (int n = n_from; n <= n_to; ++n) {
        if (odd_only && n % 2 == 0) continue;
        all.push_back(n);
    }
    if (static_cast<int>(all.size()) <= cap) return all;
    std::vector<int> out;
    for (int i = 0; i < cap; ++i)
        out.push_back(all[static_cast<size_t>(i) * (all.size() - 1) / (cap - 1)]);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Suite {
    std::vector<Check>* checks;

    void at_least(const std::string& what, double observed, double bound, double tol) {
        checks->push_back({what, bound, observed, tol, observed >= bound - tol});
    }
    void at_most(const std::string& what, double observed, double bound, double tol) {
        checks->push_back({what, bound, observed, tol, observed <= bound + tol});
    }
    void close(const std::string& what, double observed, double expected, double tol) {
        checks->push_back({what, expected, observed, tol,
                           std::abs(observed - expected) <= tol});
    }
    void truthy(const std::string& what, bool ok) {
        checks->push_back({what, 1.0, ok ? 1.0 : 0.0, 0.0, ok});
    }
    // Printed-digit check: the value's decimal expansion starts with the
    // quoted digits, i.e. observed lies in [expected, expected + unit).
    void digits(const std::string& what, double observed, double expected, double unit) {
        checks->push_back({what, expected, observed, unit,
                           observed >= expected - 1e-12 && observed < expected + unit});
    }
};

Polygon random_unit_perimeter(int n, Rng& rng) {
    for (;;) {
        Polygon p = opt::random_polygon(n, rng);
        if (perimeter(p) > 1e-6) return normalize_to_unit_perimeter(p);
    }
}

void check_t1(Suite& s, const std::vector<int>& ns, Rng& rng) {
    for (int n : ns) {
        double worst = 1e300;
        for (int k = 0; k < 400; ++k)
            worst = std::min(worst,
                             sum_pairwise_distances(random_unit_perimeter(n, rng)));
        s.at_least("sampled distance sum stays above n/4, n=" + std::to_string(n),
                   worst, n / 4.0, 1e-12);
        const Polygon limit =
            normalize_to_unit_perimeter(construct::alternating_collinear(n, 0.0));
        const double target = n % 2 == 0 ? n / 4.0 : (n + 1) / 4.0;
        s.close("alternating-collinear limit hits the tight value, n=" +
                    std::to_string(n),
                sum_pairwise_distances(limit), target, 1e-12);
    }
}

void check_t2(Suite& s, const std::vector<int>& ns, Rng& rng) {
    for (int n : ns) {
        double worst = -1e300;
        for (int k = 0; k < 400; ++k)
            worst = std::max(worst,
                             sum_pairwise_distances(random_unit_perimeter(n, rng)));
        s.at_most("sampled distance sum stays below the supremum, n=" +
                      std::to_string(n),
                  worst, bounds::S_max(n), 1e-12);
        const Polygon cluster = normalize_to_unit_perimeter(
            construct::two_cluster(n, n / 2, 1e-6));
        s.close("two-cluster construction approaches the supremum, n=" +
                    std::to_string(n),
                sum_pairwise_distances(cluster), bounds::S_max(n), 1e-4);
    }
}

void check_t3(Suite& s, const std::vector<int>& ns, Rng& rng) {
    for (int n : ns) {
        double worst = 1e300;
        for (int k = 0; k < 400; ++k)
            worst = std::min(
                worst, sum_pairwise_squared_distances(random_unit_perimeter(n, rng)));
        s.at_least("sampled squared sum stays above 1/8, n=" + std::to_string(n),
                   worst, 0.125, 1e-12);
        const Polygon limit =
            normalize_to_unit_perimeter(construct::alternating_collinear(n, 0.0));
        const double target =
            n % 2 == 0 ? 0.25 : 0.25 * (n + 1.0) / (n - 1.0);
        s.close("alternating-collinear squared sum matches its formula, n=" +
                    std::to_string(n),
                sum_pairwise_squared_distances(limit), target, 1e-12);
        if (n % 2 == 1) {
            const double r = 1.0 / (2.0 * n * std::cos(kPi / (2.0 * n)));
            const Polygon star = construct::star_thrackle(n, r);
            const double expected =
                0.25 / (std::cos(kPi / (2.0 * n)) * std::cos(kPi / (2.0 * n)));
            s.close("unit-perimeter star squared sum matches 1/(4 cos^2), n=" +
                        std::to_string(n),
                    sum_pairwise_squared_distances(star), expected, 1e-12);
        }
    }
}

void check_t4(Suite& s, const std::vector<int>& ns, Rng& rng) {
    for (int n : ns) {
        double worst = -1e300;
        for (int k = 0; k < 400; ++k)
            worst = std::max(
                worst, sum_pairwise_squared_distances(random_unit_perimeter(n, rng)));
        s.at_most("sampled squared sum stays below the supremum, n=" +
                      std::to_string(n),
                  worst, bounds::T_max(n), 1e-12);
        const Polygon cluster = normalize_to_unit_perimeter(
            construct::two_cluster(n, n / 2, 1e-6));
        s.close("two-cluster squared sum approaches the supremum, n=" +
                    std::to_string(n),
                sum_pairwise_squared_distances(cluster), bounds::T_max(n), 1e-4);
    }
}

void check_t5(Suite& s, const std::vector<int>& ns, uint64_t seed) {
    for (int n : ns) {
        const auto [alpha, value] = opt::maximize_cap_function(n);
        const double m = n - 2.0;
        const double closed_form = (-1.0 + std::sqrt(1.0 + 8.0 * m * m)) / (4.0 * m);
        s.close("cap-function argmax matches the closed form, n=" + std::to_string(n),
                std::sin(alpha / 2.0), closed_form, 1e-10);
        s.close("cap-function maximum matches the exact formula, n=" +
                    std::to_string(n),
                value, bounds::F_max(n), 1e-10);
        const Polygon p = construct::simple_extremal_F(n, 1e-6);
        s.truthy("extremal construction is simple, n=" + std::to_string(n),
                 is_simple(p));
        double max_norm = 0.0;
        for (const Point& v : p.vertices()) max_norm = std::max(max_norm, norm(v));
        s.at_most("extremal construction stays in the unit disk, n=" +
                      std::to_string(n),
                  max_norm, 1.0, 1e-12);
        s.close("extremal construction perimeter approaches the maximum, n=" +
                    std::to_string(n),
                perimeter(p), bounds::F_max(n), 1e-4);
    }
    if (!ns.empty() && ns.back() <= 9) {
        for (int n : ns) {
            const auto run = opt::optimize(
                {opt::ObjectiveKind::Perimeter, opt::Direction::Maximize},
                {false, true, true}, n, seed, 200, 2000);
            s.close("optimizer rediscovers the simple-polygon maximum, n=" +
                        std::to_string(n),
                    run.best_value, bounds::F_max(n), 1e-3 * bounds::F_max(n));
        }
    }
}

void check_t6(Suite& s, const std::vector<int>& ns) {
    for (int n : ns) {
        const Polygon star = construct::star_thrackle(n, 1.0);
        s.close("star polygon perimeter equals the supremum, n=" + std::to_string(n),
                perimeter(star), bounds::G_max(n), 1e-12);
        double lo = 1e300, hi = -1e300;
        for (int i = 0; i < star.size(); ++i) {
            const double e = dist(star[i], star.wrapped(i + 1));
            lo = std::min(lo, e);
            hi = std::max(hi, e);
        }
        s.close("all star edges share one length, n=" + std::to_string(n), hi - lo,
                0.0, 1e-12);
        // The closed chain forces the half-turn count m into {1..n-1}; the
        // perimeter 2n sin(m pi / 2n) peaks at m = n-1.
        double best = 0.0;
        for (int m = 1; m <= n - 1; ++m)
            best = std::max(best, 2.0 * n * std::sin(m * kPi / (2.0 * n)));
        s.close("winding sweep peaks at the supremum, n=" + std::to_string(n), best,
                bounds::G_max(n), 1e-12);
    }
}

void check_l1(Suite& s, Rng& rng) {
    double worst = 1e300;
    for (int k = 0; k < 10000; ++k) {
        const Point o{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Point a{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const Point b{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
        const auto r = point_pair_square_bound(o, a, b);
        worst = std::min(worst, r.lhs - r.rhs);
    }
    s.at_least("squared-distance inequality holds on random triples (10^4)", worst,
               0.0, 1e-12);
}

void check_l3(Suite& s, int n_from, int n_to, Rng& rng) {
    double worst = -1e300;
    for (int k = 0; k < 10000; ++k) {
        const int n = rng.uniform_int(std::max(4, n_from), std::max(4, n_to));
        Polygon p = opt::random_polygon(n, rng);
        const int size = rng.uniform_int(3, n);
        std::vector<int> all(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
        for (int i = n - 1; i > 0; --i)
            std::swap(all[static_cast<size_t>(i)],
                      all[static_cast<size_t>(rng.uniform_int(0, i))]);
        std::vector<int> idx(all.begin(), all.begin() + size);
        std::sort(idx.begin(), idx.end());
        worst = std::max(worst, subpolygon_perimeter(p, idx) - perimeter(p));
    }
    s.at_most("sub-polygon perimeter never exceeds the original (10^4)", worst, 0.0,
              1e-12);
}

void check_l4(Suite& s) {
    const auto p1 = opt::lemma4_case_probe(kPi / 3.0);
    const auto p2 = opt::lemma4_case_probe(5.0 * kPi / 12.0);
    const auto p3 = opt::lemma4_case_probe(kPi / 2.0);
    s.digits("f at the first split point", p1.f_alpha, 1.547, 1e-3);
    s.digits("g at the first split point", p1.g_pair, 1.586, 1e-3);
    s.digits("f at the second split point", p2.f_alpha, 1.328, 1e-3);
    s.digits("g at the right endpoint", p2.g_pair, 1.414, 1e-3);
    s.truthy("interval comparisons pass", p1.interval_pass && p2.interval_pass);
    s.truthy("quadratic bound holds at the endpoint", p3.quad_pass);
    s.truthy("pointwise inequality holds at all three probes",
             p1.pointwise_pass && p2.pointwise_pass && p3.pointwise_pass);
}

}  // namespace

std::string tag_name(TheoremTag tag) {
    switch (tag) {
        case TheoremTag::T1: return "T1";
        case TheoremTag::T2: return "T2";
        case TheoremTag::T3: return "T3";
        case TheoremTag::T4: return "T4";
        case TheoremTag::T5: return "T5";
        case TheoremTag::T6: return "T6";
        case TheoremTag::L1: return "L1";
        case TheoremTag::L3: return "L3";
        case TheoremTag::L4: return "L4";
    }
    return "?";
}

std::optional<TheoremTag> tag_from_name(const std::string& name) {
    for (TheoremTag t : {TheoremTag::T1, TheoremTag::T2, TheoremTag::T3, TheoremTag::T4,
                         TheoremTag::T5, TheoremTag::T6, TheoremTag::L1, TheoremTag::L3,
                         TheoremTag::L4}) {
        std::string u = name;
        std::transform(u.begin(), u.end(), u.begin(), ::toupper);
        if (tag_name(t) == u) return t;
    }
    return std::nullopt;
}

VerificationReport run_verify(TheoremTag tag, int n_from, int n_to, uint64_t seed) {
    if (n_from < 3 || n_to > 999 || n_from > n_to)
        throw BadRange("n range must satisfy 3 <= from <= to <= 999");

    VerificationReport report;
    report.theorem = tag;
    report.n_from = n_from;
    report.n_to = n_to;
    report.seed = seed;
    Suite s{&report.checks};
    Rng rng(seed);

    const bool odd_only = tag == TheoremTag::T5 || tag == TheoremTag::T6;
    const std::vector<int> ns = select_n(n_from, n_to, odd_only);
    if (odd_only && ns.empty())
        throw BadRange("range contains no odd n for an odd-n theorem");

    switch (tag) {
        case TheoremTag::T1: check_t1(s, ns, rng); break;
        case TheoremTag::T2: check_t2(s, ns, rng); break;
        case TheoremTag::T3: check_t3(s, ns, rng); break;
        case TheoremTag::T4: check_t4(s, ns, rng); break;
        case TheoremTag::T5: check_t5(s, ns, seed); break;
        case TheoremTag::T6: check_t6(s, ns); break;
        case TheoremTag::L1: check_l1(s, rng); break;
        case TheoremTag::L3: check_l3(s, n_from, n_to, rng); break;
        case TheoremTag::L4: check_l4(s); break;
    }

    report.overall_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                      [](const Check& c) { return c.pass; });
    return report;
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const Check& c : report.checks)
        checks.push_back({{"description", c.description},
                          {"expected", c.expected},
                          {"observed", c.observed},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    return nlohmann::ordered_json{{"theorem", tag_name(report.theorem)},
                                  {"n_from", report.n_from},
                                  {"n_to", report.n_to},
                                  {"seed", report.seed},
                                  {"checks", std::move(checks)},
                                  {"overall_pass", report.overall_pass}};
}

std::string format_report(const VerificationReport& report) {
    std::ostringstream out;
    out << "verify " << tag_name(report.theorem) << "  n in [" << report.n_from << ", "
        << report.n_to << "]  seed " << report.seed << "\n";
    for (const Check& c : report.checks) {
        out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.description
            << "  (expected " << c.expected << ", observed " << c.observed
            << ", tol " << c.tolerance << ")\n";
    }
    out << (report.overall_pass ? "overall: PASS" : "overall: FAIL") << "\n";
    return out.str();
}

}  // namespace polyext::cli
