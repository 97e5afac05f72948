#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fusionsys/group.hpp"

namespace fusionsys {

using CycleList = std::vector<std::vector<int>>;

struct CatalogExpectation {
  std::optional<std::size_t> group_order;
  std::optional<std::size_t> base_order;
  std::optional<bool> saturated;
  std::optional<std::size_t> center_order;
  std::optional<std::size_t> focal_order;
  std::optional<std::size_t> part_count;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::size_t points = 0;
  std::vector<CycleList> generators;
  int prime = 2;
  // Point permutations normalizing the group; conjugation by them gives the
  // Omega automorphisms of the fusion system.
  std::vector<CycleList> omega;
  CatalogExpectation expected;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);
FiniteGroup load_group(const CatalogEntry& entry);

}  // namespace fusionsys
