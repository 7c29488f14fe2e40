#include <array>
#include <string>

#include "mmground/errors.hpp"
#include "mmground/scenario.hpp"
#include "presets_data.hpp"

namespace mmground::harness {

namespace {

struct PresetEntry {
    const char* name;
    const char* json;
};

constexpr std::array<PresetEntry, 6> kPresets{{
    {"static-a", presets::kStaticA},
    {"static-b", presets::kStaticB},
    {"dynamic-dry", presets::kDynamicDry},
    {"dynamic-damp", presets::kDynamicDamp},
    {"dynamic-wet", presets::kDynamicWet},
    {"navigate-avoid", presets::kNavigateAvoid},
}};

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    names.reserve(kPresets.size());
    for (const auto& p : kPresets) names.emplace_back(p.name);
    return names;
}

const std::string& preset_json(const std::string& name) {
    static const std::array<std::string, kPresets.size()> bodies = [] {
        std::array<std::string, kPresets.size()> out;
        for (std::size_t i = 0; i < kPresets.size(); ++i) out[i] = kPresets[i].json;
        return out;
    }();
    for (std::size_t i = 0; i < kPresets.size(); ++i) {
        if (name == kPresets[i].name) return bodies[i];
    }
    std::string known;
    for (const auto& p : kPresets) {
        if (!known.empty()) known += ", ";
        known += p.name;
    }
    throw ScenarioError("unknown preset '" + name + "' (known: " + known + ")");
}

}  // namespace mmground::harness
