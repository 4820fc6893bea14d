#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "extinf/graph.hpp"

namespace extinf {

class UnknownFixtureError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct FixtureInfo {
    std::string_view id;        // e.g. "Dense_Graph_2"
    std::string_view category;  // e.g. "Dense Graph"
    std::string_view source;    // first node as listed, used as the default start
    std::string_view document;  // adjacency JSON
};

/// All twenty built-in test graphs, two per category, in category order.
[[nodiscard]] std::span<const FixtureInfo> fixture_catalog() noexcept;

/// Throws UnknownFixtureError for ids not in the catalog.
[[nodiscard]] const FixtureInfo& fixture_info(std::string_view id);
[[nodiscard]] Graph fixture(std::string_view id);

/// One fixture per category (the `_1` variant), in category order.
[[nodiscard]] std::vector<std::string> benchmark_fixture_ids();

struct GeoPoint {
    double latitude;
    double longitude;
};

/// Road-network benchmark route. Metadata only: no map data ships with the
/// library, so these cannot be turned into graphs here.
struct RouteInfo {
    std::string_view label;
    GeoPoint origin;
    double radius;
    GeoPoint destination;
};

[[nodiscard]] std::span<const RouteInfo> route_catalog() noexcept;

}  // namespace extinf
