#pragma once

#include <string>
#include <vector>

#include "fusionsys/catalog.hpp"
#include "fusionsys/factor.hpp"
#include "fusionsys/io.hpp"

namespace fusionsys {

// The order-108 group with paired transpositions at p = 3 (F), the full
// Sym(3)^3 system on the same lattice (Fbar), and the C3 factors E_i of Fbar.
struct PairedExample {
  SystemPtr F;
  SystemPtr Fbar;
  std::vector<SubgroupId> t;
  std::vector<SystemPtr> e;
};
PairedExample paired_example();

struct PairedClaims {
  bool pairs_commute_in_f = false;
  bool triple_commutes_in_f = false;
  bool triple_commutes_in_fbar = false;
  bool e12_e3_commute_in_fbar = false;
  bool e12_e3_commute_in_f = false;
};
PairedClaims paired_claims(const PairedExample& x);

// F_{S1 x S2}(G1 x G2) computed on the direct product group.
FusionSystem product_group_fusion(const FiniteGroup& g1, const FiniteGroup& g2, int p);

// Catalog entry with its system and Omega context.
struct CatalogSystem {
  const CatalogEntry* entry = nullptr;
  FiniteGroup group;
  SystemPtr system;
  OmegaContext omega;
};
CatalogSystem load_catalog_system(const CatalogEntry& entry);

struct CheckResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> details;  // first few violations, then notes
  bool passed() const { return violations == 0; }
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

const std::vector<std::string>& suite_names();
// `entries` defaults to the whole catalog; an empty list is a vacuous pass.
SuiteResult run_suite(const std::string& suite, const std::vector<const CatalogEntry*>& entries);
SuiteResult run_suite(const std::string& suite);
Json suite_to_json(const SuiteResult& r);

}  // namespace fusionsys
