// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecaa/fields.hpp"
#include "ecaa/metrics.hpp"

namespace ecaa {

enum class SweepParameter { elements, rings, major_axis, spacing, exponent };

std::string to_string(SweepParameter p);
SweepParameter sweep_parameter_from_string(const std::string& name);

/// Shared evaluation context for sweeps and the spacing search: the starting
/// configuration plus the cut and grid every variant is measured on. When
/// exponent is set, metrics are taken on the hyper beam instead of |AF|.
struct SweepBase {
    EcaaConfig config;
    Steering steer;
    Excitation excitation;
    std::optional<double> exponent;
    CutPlane plane;               // default: theta sweep at phi = 0
    AngleGrid grid;               // default: [-90, 90] step 0.05 deg

    static SweepBase defaults(const EcaaConfig& config, const Steering& steer = {});
};

struct SweepSpec {
    SweepParameter parameter = SweepParameter::exponent;
    std::vector<double> values;   // strictly monotone
    SweepBase base;
};

struct SweepRow {
    double value = 0.0;
    PatternMetrics metrics;
};

/// One row per value, all evaluated with identical grid/cut settings.
/// "elements" values are totals and are realized as n_per_ring = total/m_rings;
/// an indivisible total aborts with the offending value named.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

struct SearchOptions {
    std::uint32_t seed = 1;
    int iterations = 500;         // budget I; decremented only on non-improving proposals
    double dv_min = 0.1;          // wavelengths
    double dv_max = 1.0;
};

/// Best-so-far state of the spacing search.
struct SearchState {
    double best_sll_db = 0.0;
    double best_dv = 0.0;
    int remaining = 0;
    std::uint32_t rng_seed = 0;
};

struct SearchProposal {
    int index = 0;                // 1-based proposal counter
    double dv = 0.0;
    double sll_db = 0.0;
    bool accepted = false;
    double best_dv = 0.0;
    double best_sll_db = 0.0;
    int remaining = 0;
};

struct SearchResult {
    double initial_dv = 0.0;
    double initial_sll_db = 0.0;
    SearchState final_state;
    std::vector<SearchProposal> trace;
};

/// Random-proposal spacing search: draw dv uniformly from [dv_min, dv_max],
/// accept when the SLL improves (without spending budget), otherwise decrement
/// the budget; stops when the budget hits zero. Proposals come from a
/// Park-Miller linear congruential generator (x <- 16807 x mod 2^31-1), so a
/// given seed reproduces the trace bit-for-bit anywhere. Total proposals are
/// capped at 100x the initial budget to guarantee termination.
SearchResult search_spacing(const SweepBase& base, const SearchOptions& options);

/// SLL/FNBW versus ring count at fixed per-ring element count.
std::vector<SweepRow> ring_count_study(const SweepBase& base, const std::vector<int>& ring_counts);

}  // namespace ecaa
