#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fusionsys/factor.hpp"

namespace fusionsys {

using Json = nlohmann::json;

// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
std::uint64_t fnv1a(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

Json read_json_file(const std::string& path);
std::string read_file(const std::string& path);

// {"points": k, "generators": [[cycles]]} with 1-based points, or
// {"cayley": [[...]]} with 0 the identity. An optional "prime" becomes the
// prime hint.
FiniteGroup group_from_json(const Json& j);
Json group_to_json(const FiniteGroup& G);
Json describe_group(const FiniteGroup& G);

// Cycle lists (1-based) for permutation groups, the id otherwise.
Json element_to_json(const FiniteGroup& G, Elem x);
Elem element_from_json(const FiniteGroup& G, const Json& j);
std::vector<std::vector<int>> cycles_of(const Permutation& perm);

Json subgroup_to_json(const SubgroupLattice& lat, SubgroupId id);

// Summary per subgroup class; `full` adds every stored isomorphism.
Json fusion_to_json(const FusionSystem& F, bool full = false);
// Saturation, center, focal, strongly closed and centric-radical data.
Json analyze_system(const FusionSystem& F);

// {"group": ..., "prime": p, "arrows": [{"from": [x...], "to": [y...]}]}:
// each arrow is the injective hom <from> -> <to> sending generators in order.
FusionSystem generated_from_json(const Json& j);

// Factorization export: [{"base", "order", "generators", "part"}].
Json factorization_to_json(const Factorization& fact);
// Accepts that array or an object holding it under "factorization"; a part
// is located by "generators" when present, otherwise by "base".
Factorization factorization_from_json(const SystemPtr& F, const Json& j);

// {"alpha", "sigma", "log", ...}; sigma and chosen are 1-based here.
Json certificate_to_json(const KrsCertificate& cert);

// Point permutations as [[cycles]] or {"permutations": [[cycles]]}.
std::vector<Permutation> omega_from_json(const Json& j, std::size_t points);

struct Report {
  Json command;
  std::string inputs_digest;
  Json result;
  std::optional<Json> timings;

  // Keys sorted; "hash" is FNV-1a over the compact dump of the result.
  Json to_json() const;
};

}  // namespace fusionsys
