#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tribospin/sequence.hpp"

namespace tribospin {

/// Named parameter preset. Generic presets fix only (r,s,t); their initial
/// values are placeholders and must be supplied at instantiation.
struct FamilyDescriptor {
  std::string name;     // canonical lookup key, e.g. "third-order-pell"
  std::string display;  // e.g. "Third-order Pell"
  std::string group;    // the generic family this row specializes
  SequenceParams params;
  bool generic = false;
  std::vector<std::string> aliases;
};

/// The full registry: every concrete row of the special-cases table plus the
/// nine generic classification rows.
const std::vector<FamilyDescriptor>& family_registry();

/// Concrete (non-generic) families only.
std::vector<const FamilyDescriptor*> concrete_families();

/// Case-insensitive lookup with hyphen/space/dot folding; throws
/// NotFoundError listing the nearest names.
const FamilyDescriptor& family_lookup(std::string_view name);

/// Registry as a JSON array of {"name","group","a","b","c","r","s","t",...}
/// with rationals rendered as "p/q" strings.
const std::string& family_registry_json();

}  // namespace tribospin
