#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace polyext::cli {

enum class TheoremTag { T1, T2, T3, T4, T5, T6, L1, L3, L4 };

std::string tag_name(TheoremTag tag);
std::optional<TheoremTag> tag_from_name(const std::string& name);

struct Check {
    std::string description;
    double expected = 0.0;
    double observed = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct VerificationReport {
    TheoremTag theorem = TheoremTag::T1;
    int n_from = 3;
    int n_to = 3;
    uint64_t seed = 0;
    std::vector<Check> checks;
    bool overall_pass = false;  // conjunction of the per-check passes
};

/// Runs the check suite for one theorem tag over n in [n_from, n_to]:
/// construction convergence, closed-form identities, random-sampling bound
/// respect, and (for small ranges) optimizer certification.
VerificationReport run_verify(TheoremTag tag, int n_from, int n_to, uint64_t seed);

nlohmann::ordered_json to_json(const VerificationReport& report);

std::string format_report(const VerificationReport& report);

}  // namespace polyext::cli
