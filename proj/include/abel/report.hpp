#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abel/darboux.hpp"
#include "abel/families.hpp"
#include "abel/polysys.hpp"

namespace abel {

enum class Backend { Divisor, Ideal, Both };

struct SolveOptions {
    Backend backend = Backend::Divisor;
    std::size_t spair_budget = 10000;
};

struct CurveEntry {
    QPoly p;
    std::string provenance;
    bool separable = false;
};

struct DarbouxEntry {
    std::vector<QuadExt> alphas;
    QuadExt alpha0;
};

struct SolveReport {
    Poly A, B;
    int n = 0;
    int degB = -1; // -1 encodes the zero polynomial

    std::vector<CurveEntry> curves;
    bool complete = true;
    std::vector<std::string> notes;

    std::size_t darboux_dimension = 0;
    std::vector<DarbouxEntry> darboux_basis;
    std::optional<DarbouxEntry> display_integral; // smallest support
    bool darboux_verified = true;

    Int bound;                       // Theorem A value
    std::vector<int> admissible;     // admissible curve degrees
    std::optional<int> excluded_half;
    bool theorem_c_ok = true;

    std::optional<ProportionalPair> proportional;
    std::string rational_first_integral; // K = -1 branch only

    long long timing_ms = 0;
};

// Full pipeline: curves by the requested backend(s), Darboux analysis,
// bounds. Backend::Both cross-checks the two curve sets and throws
// mismatch_error on any difference.
SolveReport solve_report(const AbelEquation& eq, const SolveOptions& opt = {});

// Ideal backend alone: union of solve_zero_dim curve sets over every
// admissible degree m.
std::vector<QPoly> ideal_backend_curves(const AbelEquation& eq, std::size_t spair_budget,
                                        bool* complete = nullptr, std::vector<std::string>* notes = nullptr);

std::string report_to_json(const SolveReport& report);
std::string report_to_text(const SolveReport& report);

} // namespace abel
