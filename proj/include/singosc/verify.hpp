#pragma once

#include "singosc/deformed_invariant.hpp"

#include "json.hpp"

#include <complex>
#include <string>
#include <vector>

namespace singosc {

// One identity check: the worst residual observed, the bound it must meet,
// and a free-text evidence note.  runtime_ms is reporting-only and is kept
// out of the serialized payload so reruns are bit-identical.
struct CheckEntry {
    std::string name;
    std::string params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double runtime_ms = 0.0;
    std::string details;
};

struct VerificationReport {
    std::vector<CheckEntry> entries;

    int total() const { return static_cast<int>(entries.size()); }
    int failed() const;
    int passed() const { return total() - failed(); }
    bool all_passed() const { return failed() == 0; }
};

// Full parameter set the suite runs at.
struct SuiteConfig {
    double g = 2.0;
    SeedParams seed{3.0, 1.0, 0.25};
    ErmakovParams erm{1.0, 2.0, 0.0};
};

// <f|h> = int_0^infty dx conj(f) h at fixed t, to 1e-10 absolute.
std::complex<double> inner_product(const QuantumState& f, const QuantumState& h,
                                   double t);

// Runs every identity check in a fixed order; a failing check is recorded
// and the suite moves on.  Checks that need a usable seed are skipped (and
// noted) when seed construction itself fails.
VerificationReport run_suite(const SuiteConfig& config);

nlohmann::ordered_json to_json(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

} // namespace singosc
