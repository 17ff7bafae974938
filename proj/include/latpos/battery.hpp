#ifndef LATPOS_BATTERY_HPP
#define LATPOS_BATTERY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace latpos {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;     // deterministic summary (counts, witnesses)
    long elapsed_ms = 0;    // excluded from the canonical report
    long budget_ms = 0;
    bool within_budget() const { return elapsed_ms < budget_ms; }
};

struct BatteryReport {
    std::uint64_t seed = 0;
    std::vector<CriterionResult> criteria;

    bool all_passed() const;
    // Canonical report: no timings, byte-identical across reruns of one seed.
    std::string to_json() const;
    std::string timing_summary() const;
};

// Runs the full verification battery (fixed-value checks, route agreement,
// structural identities, the digraph suite, positivity suites, sequence
// properties). `threads` caps minor-enumeration parallelism.
BatteryReport run_battery(std::uint64_t seed, int threads = 1);

} // namespace latpos

#endif
