#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lplab {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    /// Name of the first invariant that failed; empty on success.
    std::string invariant;
    std::string detail;
    double seconds = 0;
};

struct AcceptanceOptions {
    int threads = 1;
    /// Forwarded to the census as a fault: that many pairs are dropped.
    std::size_t census_drop_pairs = 0;
    std::uint64_t seed = 20240917;
};

inline constexpr int kCriteria = 10;

/// "all", "census", "bisector", "circles" or "structure".
std::vector<int> suite_criteria(const std::string& suite);

CriterionResult run_criterion(int id, const AcceptanceOptions& opt = {});

std::string format_result(const CriterionResult& r);

}  // namespace lplab
