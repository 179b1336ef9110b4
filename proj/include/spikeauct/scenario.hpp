#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spikeauct/core.hpp"
#include "spikeauct/ssa.hpp"

namespace spikeauct {

enum class Objective { revenue, efficiency, ssa_revenue };

std::string objective_to_string(Objective objective);
/// Accepts "revenue", "efficiency", "ssa_revenue" (and the flag spelling
/// "ssa-revenue"); throws ParseError otherwise.
Objective objective_from_string(const std::string& text);

/// One problem instance as described by a scenario file. Which optional
/// parts must be present depends on the command consuming it.
struct Scenario {
    std::vector<BidderProfile> bidders;
    std::optional<SpikeVector> spikes;
    std::optional<CapacityParams> epsilons;
    std::optional<KeywordAuctionConfig> ssa;
    Objective objective = Objective::revenue;
};

/// Parses scenario JSON. Structural problems (malformed JSON, wrong types,
/// missing required keys) throw ParseError with field diagnostics; domain
/// violations surface as ValidationError from the domain types.
Scenario parse_scenario(const std::string& text);

/// Reads and parses a scenario file; ParseError when unreadable.
Scenario load_scenario(const std::string& path);

/// Canonical JSON form; parse_scenario(serialize_scenario(s)) reproduces s.
std::string serialize_scenario(const Scenario& scenario);

}  // namespace spikeauct
