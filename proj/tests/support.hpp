#pragma once

#include <map>
#include <string>

#include "fusionsys/catalog.hpp"
#include "fusionsys/fusion.hpp"

namespace support {

inline const fusionsys::FiniteGroup& catalog_group(const std::string& name) {
  static std::map<std::string, fusionsys::FiniteGroup> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(name, fusionsys::load_group(fusionsys::catalog_entry(name))).first;
  }
  return it->second;
}

inline const fusionsys::FusionSystem& catalog_fusion(const std::string& name) {
  static std::map<std::string, fusionsys::FusionSystem> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    const auto& e = fusionsys::catalog_entry(name);
    it = cache.emplace(name, fusionsys::fusion_of_group(catalog_group(name), e.prime)).first;
  }
  return it->second;
}

// Catalog entries cheap enough for exhaustive per-pair checks.
inline std::vector<std::string> small_entries() {
  std::vector<std::string> out;
  for (const auto& e : fusionsys::catalog()) {
    if (e.expected.base_order.value_or(0) <= 16) out.push_back(e.name);
  }
  return out;
}

}  // namespace support
