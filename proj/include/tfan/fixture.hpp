#pragma once

#include <memory>
#include <optional>

#include "tfan/downgrade.hpp"

namespace tfan {

// A parsed fixture file: a divisorial fan (given explicitly or through a
// toric downgrade block), optional support functions on it, and optional
// construction blocks.
struct Fixture {
    std::string name;
    std::unique_ptr<DivisorialFan> fan;  // stable address for support functions
    std::vector<SupportFunction> support_functions;
    std::optional<DowngradeData> downgrade;
    std::vector<ZVec> downgrade_weights;  // aligned with downgrade max_cones; may be empty
    std::optional<DpdData> dpd;
};

Fixture parse_fixture_file(const std::string& path);
Fixture parse_fixture_text(const std::string& text);

std::string serialize_fixture(const Fixture& fx);

}  // namespace tfan
