#pragma once

#include "nlie/report.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace nlie {

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct BatteryOptions {
    int trials = 200;           // generalized Jacobi tuples
    int homomorphism_trials = 100;
    int equivariance_trials = 100;
    int strategies = 20;        // rewrite strategies per diagram in the confluence test
    std::uint64_t seed = kDefaultSeed;
    bool timing = false;        // fill wall_time_ms
};

using ReportSink = std::function<void(const Report&)>;

/// Names accepted by `verify`, in battery order.
const std::vector<std::string>& verify_targets();
bool is_verify_target(const std::string& name);

/// Runs one verify target for one n. `all` is not a target here.
std::vector<Report> run_target(const std::string& target, int n, const BatteryOptions& opt);

/// Every target for n_min..n_max, streaming each record to `sink`. Returns true iff nothing failed.
bool run_battery(int n_min, int n_max, const BatteryOptions& opt, const ReportSink& sink);

/// Families of the classification in epsilon or fundamental-weight coordinates.
Report classify_report(int n, const std::string& basis);
Report pbw_count_report(int n, int degree);

}  // namespace nlie
