#include "spikeauct/scenario.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace spikeauct {

namespace {

using ordered_json = nlohmann::ordered_json;

const ordered_json& need(const ordered_json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(std::string("scenario: missing required field '") + key + "'");
    }
    return *it;
}

double as_number(const ordered_json& j, const std::string& where) {
    if (!j.is_number()) {
        throw ParseError("scenario field '" + where + "': expected a number");
    }
    return j.get<double>();
}

std::size_t as_count(const ordered_json& j, const std::string& where) {
    if (!j.is_number_unsigned()) {
        throw ParseError("scenario field '" + where + "': expected a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::vector<double> as_number_array(const ordered_json& j, const std::string& where) {
    if (!j.is_array()) {
        throw ParseError("scenario field '" + where + "': expected an array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(as_number(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return out;
}

std::vector<BidderProfile> parse_bidders(const ordered_json& arr) {
    if (!arr.is_array()) {
        throw ParseError("scenario field 'bidders': expected an array of objects");
    }
    std::vector<BidderProfile> bidders;
    bidders.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const auto& b = arr[i];
        const std::string where = "bidders[" + std::to_string(i) + "]";
        if (!b.is_object()) {
            throw ParseError("scenario field '" + where + "': expected an object");
        }
        const auto& id = need(b, "id");
        if (!id.is_string()) {
            throw ParseError("scenario field '" + where + ".id': expected a string");
        }
        const double value = as_number(need(b, "value"), where + ".value");
        double relevance = 1.0;
        if (auto it = b.find("relevance"); it != b.end()) {
            relevance = as_number(*it, where + ".relevance");
        }
        bidders.emplace_back(id.get<std::string>(), value, relevance);
    }
    return bidders;
}

}  // namespace

std::string objective_to_string(Objective objective) {
    switch (objective) {
        case Objective::revenue: return "revenue";
        case Objective::efficiency: return "efficiency";
        case Objective::ssa_revenue: return "ssa_revenue";
    }
    return "revenue";
}

Objective objective_from_string(const std::string& text) {
    if (text == "revenue") return Objective::revenue;
    if (text == "efficiency") return Objective::efficiency;
    if (text == "ssa_revenue" || text == "ssa-revenue") return Objective::ssa_revenue;
    throw ParseError("scenario field 'objective': unknown value '" + text + "'");
}

Scenario parse_scenario(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("scenario: ") + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("scenario: top level must be an object");
    }

    Scenario sc;
    sc.bidders = parse_bidders(need(doc, "bidders"));
    if (auto it = doc.find("spikes"); it != doc.end()) {
        sc.spikes.emplace(as_number_array(*it, "spikes"));
    }
    if (auto it = doc.find("epsilons"); it != doc.end()) {
        sc.epsilons.emplace(as_number_array(*it, "epsilons"));
    }
    if (auto it = doc.find("ssa"); it != doc.end()) {
        const auto& s = *it;
        if (!s.is_object()) {
            throw ParseError("scenario field 'ssa': expected an object");
        }
        sc.ssa.emplace(as_count(need(s, "slots"), "ssa.slots"),
                       as_number_array(need(s, "position_ctrs"), "ssa.position_ctrs"),
                       as_count(need(s, "spike_count"), "ssa.spike_count"));
    }
    if (auto it = doc.find("objective"); it != doc.end()) {
        if (!it->is_string()) {
            throw ParseError("scenario field 'objective': expected a string");
        }
        sc.objective = objective_from_string(it->get<std::string>());
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("scenario: cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string serialize_scenario(const Scenario& scenario) {
    ordered_json doc = ordered_json::object();
    auto& bidders = doc["bidders"] = ordered_json::array();
    for (const auto& b : scenario.bidders) {
        bidders.push_back({{"id", b.id}, {"value", b.value}, {"relevance", b.relevance}});
    }
    if (scenario.spikes) doc["spikes"] = scenario.spikes->probs();
    if (scenario.epsilons) doc["epsilons"] = scenario.epsilons->epsilons();
    if (scenario.ssa) {
        doc["ssa"] = {{"slots", scenario.ssa->slots},
                      {"position_ctrs", scenario.ssa->position_ctrs},
                      {"spike_count", scenario.ssa->spike_count}};
    }
    doc["objective"] = objective_to_string(scenario.objective);
    return doc.dump(2) + "\n";
}

}  // namespace spikeauct
