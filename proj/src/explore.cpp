// SPDX-License-Identifier: Apache-2.0
#include "ecaa/explore.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ecaa/hyperbeam.hpp"
#include "ecaa/table_io.hpp"

namespace ecaa {

namespace {

// Park-Miller minimal standard generator: x <- 16807 x mod (2^31 - 1).
// Chosen for bit-for-bit reproducible traces across platforms and languages.
class Minstd {
  public:
    explicit Minstd(std::uint32_t seed) : state_(seed % kModulus) {
        if (state_ == 0)
            state_ = 1;
    }
    double next_unit() {  // in (0, 1)
        state_ = static_cast<std::uint64_t>(state_) * kMultiplier % kModulus;
        return static_cast<double>(state_) / static_cast<double>(kModulus);
    }

  private:
    static constexpr std::uint64_t kMultiplier = 16807;
    static constexpr std::uint64_t kModulus = 2147483647;
    std::uint64_t state_;
};

PatternMetrics evaluate_metrics(const SweepBase& base, const EcaaConfig& config,
                                std::optional<double> exponent) {
    const PatternCut cut = sample_cut(config, base.excitation, base.steer, base.plane, base.grid);
    std::vector<double> magnitude;
    magnitude.reserve(cut.samples.size());
    if (exponent) {
        const BeamSet beams = compose_beamset(cut, *exponent);
        magnitude = beams.hyper;
    } else {
        for (const FieldSample& s : cut.samples)
            magnitude.push_back(std::abs(s.af));
    }
    const std::vector<double> db = normalize_db(magnitude);
    return extract_metrics(cut.grid, db);
}

}  // namespace

std::string to_string(SweepParameter p) {
    switch (p) {
        case SweepParameter::elements: return "elements";
        case SweepParameter::rings: return "rings";
        case SweepParameter::major_axis: return "major_axis";
        case SweepParameter::spacing: return "spacing";
        case SweepParameter::exponent: return "exponent";
    }
    return "unknown";
}

SweepParameter sweep_parameter_from_string(const std::string& name) {
    if (name == "elements") return SweepParameter::elements;
    if (name == "rings") return SweepParameter::rings;
    if (name == "major_axis") return SweepParameter::major_axis;
    if (name == "spacing") return SweepParameter::spacing;
    if (name == "exponent") return SweepParameter::exponent;
    throw std::invalid_argument("unknown sweep parameter '" + name + "'");
}

SweepBase SweepBase::defaults(const EcaaConfig& config, const Steering& steer) {
    SweepBase base;
    base.config = config;
    base.steer = steer;
    base.plane = CutPlane{CutPlane::Axis::theta, 0.0};
    base.grid = make_grid(-90.0, 90.0, 0.05);
    return base;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    if (spec.values.empty())
        throw std::invalid_argument("sweep values must be non-empty");
    if (spec.values.size() > 1) {
        const bool increasing = spec.values[1] > spec.values[0];
        for (std::size_t i = 1; i < spec.values.size(); ++i) {
            const bool step_up = spec.values[i] > spec.values[i - 1];
            if (spec.values[i] == spec.values[i - 1] || step_up != increasing)
                throw std::invalid_argument("sweep values must be strictly monotone");
        }
    }
    spec.base.config.validate();

    std::vector<SweepRow> rows;
    rows.reserve(spec.values.size());
    for (double value : spec.values) {
        EcaaConfig config = spec.base.config;
        std::optional<double> exponent = spec.base.exponent;
        switch (spec.parameter) {
            case SweepParameter::elements: {
                const double per_ring = value / static_cast<double>(config.m_rings);
                if (value < 1.0 || per_ring != std::floor(per_ring))
                    throw std::invalid_argument(
                        "elements sweep: total " + fmt_g9(value) +
                        " is not divisible by m_rings=" + std::to_string(config.m_rings));
                config.n_per_ring = static_cast<int>(per_ring);
                break;
            }
            case SweepParameter::rings: {
                if (value < 1.0 || value != std::floor(value))
                    throw std::invalid_argument("rings sweep: invalid ring count " + fmt_g9(value));
                config.m_rings = static_cast<int>(value);
                break;
            }
            case SweepParameter::major_axis:
                if (!(value > 0.0))
                    throw std::invalid_argument("major_axis sweep: invalid value " + fmt_g9(value));
                config.a_major = value;
                break;
            case SweepParameter::spacing:
                if (!(value > 0.0))
                    throw std::invalid_argument("spacing sweep: invalid value " + fmt_g9(value));
                config.dv = value;
                break;
            case SweepParameter::exponent:
                if (!(value > 0.0))
                    throw std::invalid_argument("exponent sweep: invalid value " + fmt_g9(value));
                exponent = value;
                break;
        }
        config.validate();
        if (exponent && config.n_per_ring % 2 != 0)
            throw std::invalid_argument("hyper metrics need even n_per_ring; offending value " +
                                        fmt_g9(value));
        rows.push_back(SweepRow{value, evaluate_metrics(spec.base, config, exponent)});
    }
    return rows;
}

SearchResult search_spacing(const SweepBase& base, const SearchOptions& options) {
    if (!(options.dv_min > 0.0) || !(options.dv_max > options.dv_min))
        throw std::invalid_argument("spacing search needs 0 < dv_min < dv_max");
    if (options.iterations < 0)
        throw std::invalid_argument("iteration budget must be >= 0");
    base.config.validate();

    const auto sll_at = [&](double dv) {
        EcaaConfig config = base.config;
        config.dv = dv;
        return evaluate_metrics(base, config, base.exponent).sll_db;
    };

    SearchResult result;
    result.initial_dv = base.config.dv;
    result.initial_sll_db = sll_at(base.config.dv);
    result.final_state = SearchState{result.initial_sll_db, result.initial_dv,
                                     options.iterations, options.seed};

    Minstd rng(options.seed);
    // The budget only shrinks on non-improving proposals, so a hard cap on
    // total proposals bounds the loop.
    const long proposal_cap = 100L * options.iterations;
    long proposals = 0;
    SearchState& state = result.final_state;
    while (state.remaining != 0 && proposals < proposal_cap) {
        const double dv = options.dv_min + rng.next_unit() * (options.dv_max - options.dv_min);
        const double sll = sll_at(dv);
        ++proposals;
        const bool accepted = sll < state.best_sll_db;
        if (accepted) {
            state.best_sll_db = sll;
            state.best_dv = dv;
        } else {
            --state.remaining;
        }
        result.trace.push_back(SearchProposal{static_cast<int>(proposals), dv, sll, accepted,
                                              state.best_dv, state.best_sll_db, state.remaining});
    }
    return result;
}

std::vector<SweepRow> ring_count_study(const SweepBase& base, const std::vector<int>& ring_counts) {
    SweepSpec spec;
    spec.parameter = SweepParameter::rings;
    spec.base = base;
    spec.values.reserve(ring_counts.size());
    for (int m : ring_counts)
        spec.values.push_back(static_cast<double>(m));
    return run_sweep(spec);
}

}  // namespace ecaa
