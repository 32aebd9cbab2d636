#pragma once

#include <span>
#include <string_view>

#include "naples/preference.hpp"

namespace naples {

/// A statement about a single (alpha, k) pair that a sweep can falsify.
struct Property {
  std::string_view name;
  std::string_view summary;
  /// False for deliberately wrong statements kept as harness sanity checks.
  bool expected_to_hold;
  /// Returns true when the statement holds (or does not apply) for alpha, k.
  bool (*holds)(const ParkingPreference& alpha, int k);
};

/// All registered properties, in a fixed order.
std::span<const Property> registered_properties();

/// Throws Error(UnknownProperty).
const Property& find_property(std::string_view name);

}  // namespace naples
