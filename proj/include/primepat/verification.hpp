#pragma once

// Reproduction suite over the published tables and identities. Known
// misprints are reported as DOCUMENTED lines rather than failures.

#include <span>
#include <string>
#include <vector>

#include "primepat/arith.hpp"

namespace primepat {

enum class Verdict { Pass, Fail, Documented, Skipped };

std::string_view to_string(Verdict v);

struct CheckResult {
    std::string id;
    std::string title;
    Verdict verdict;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    bool skip_slow = false;
    unsigned workers = 0;
};

std::vector<CheckResult> run_verification_suite(const SuiteOptions& options);

/// Comparison of a printed arithmetic progression with the progression its
/// members imply.
struct PrintedProgression {
    Nat start;
    /// The common difference agreeing with the most printed members.
    Nat distance;
    /// Indices where the printed value differs from start + k * distance.
    std::vector<std::size_t> inconsistent;
    /// Progression members that are composite.
    std::vector<Nat> composite_members;
    bool progression_all_prime = false;
    bool printed_all_prime = false;
};

PrintedProgression check_printed_progression(std::span<const Nat> printed);

}  // namespace primepat
