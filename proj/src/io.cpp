#include "fusionsys/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fusionsys/catalog.hpp"
#include "fusionsys/group_ops.hpp"
#include "fusionsys/homs.hpp"

namespace fusionsys {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::kInvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

CycleList cycles_from_json(const Json& j) {
  if (!j.is_array()) bad("a permutation must be a list of cycles");
  CycleList out;
  for (const auto& c : j) {
    if (!c.is_array()) bad("a cycle must be a list of points");
    std::vector<int> cycle;
    for (const auto& x : c) {
      if (!x.is_number_integer()) bad("cycle points must be integers");
      cycle.push_back(x.get<int>());
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation permutation_from_json(const Json& j, std::size_t points) {
  CycleList cycles = cycles_from_json(j);
  for (const auto& c : cycles) {
    for (int x : c) {
      if (x < 1 || static_cast<std::size_t>(x) > points) bad("cycle point out of range");
    }
  }
  return permutation_from_cycles(points, cycles);
}

Json map_json(const ElemMap& m) {
  Json out = Json::array();
  for (Elem x : m) out.push_back(x);
  return out;
}

}  // namespace

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string fnv1a_hex(const std::string& bytes) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) bad("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    bad("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::vector<std::vector<int>> cycles_of(const Permutation& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == static_cast<int>(i)) continue;
    std::vector<int> cycle;
    for (std::size_t k = i; !seen[k]; k = static_cast<std::size_t>(perm[k])) {
      seen[k] = true;
      cycle.push_back(static_cast<int>(k) + 1);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) bad("a group must be a JSON object");
  FiniteGroup G;
  if (j.contains("cayley")) {
    const Json& t = j.at("cayley");
    if (!t.is_array()) bad("'cayley' must be a square table");
    std::vector<std::vector<Elem>> table;
    for (const auto& row : t) {
      if (!row.is_array() || row.size() != t.size()) bad("'cayley' must be a square table");
      std::vector<Elem> r;
      for (const auto& x : row) {
        if (!x.is_number_integer() || x.get<long long>() < 0 || x.get<std::size_t>() >= t.size()) {
          bad("'cayley' entries must be element ids");
        }
        r.push_back(x.get<Elem>());
      }
      table.push_back(std::move(r));
    }
    G = FiniteGroup::from_cayley(table);
  } else {
    const Json& pts = field(j, "points");
    if (!pts.is_number_integer() || pts.get<long long>() < 1) bad("'points' must be a positive integer");
    auto points = pts.get<std::size_t>();
    const Json& gens = field(j, "generators");
    if (!gens.is_array()) bad("'generators' must be a list of permutations");
    std::vector<Permutation> perms;
    for (const auto& g : gens) perms.push_back(permutation_from_json(g, points));
    if (perms.empty()) perms.push_back(permutation_from_cycles(points, {}));
    G = FiniteGroup::from_permutations(perms);
  }
  if (j.contains("prime")) {
    if (!j.at("prime").is_number_integer()) bad("'prime' must be an integer");
    G.set_prime_hint(j.at("prime").get<int>());
  }
  return G;
}

Json group_to_json(const FiniteGroup& G) {
  Json out;
  if (G.has_permutations()) {
    out["points"] = G.degree();
    Json gens = Json::array();
    for (Elem g : G.generators()) gens.push_back(cycles_of(G.permutation(g)));
    out["generators"] = gens;
  } else {
    Json table = Json::array();
    for (std::size_t a = 0; a < G.order(); ++a) {
      Json row = Json::array();
      for (std::size_t b = 0; b < G.order(); ++b) row.push_back(G.mul(static_cast<Elem>(a), static_cast<Elem>(b)));
      table.push_back(row);
    }
    out["cayley"] = table;
  }
  if (G.prime_hint()) out["prime"] = *G.prime_hint();
  return out;
}

Json describe_group(const FiniteGroup& G) {
  Json out;
  out["order"] = G.order();
  out["degree"] = G.degree();
  out["abelian"] = G.is_abelian();
  auto p = G.p_group_prime();
  out["p_group_prime"] = p ? Json(*p) : Json(nullptr);
  out["center_order"] = center(G).order();
  out["derived_order"] = derived_subgroup(G).order();
  std::map<int, std::size_t> orders;
  for (std::size_t x = 0; x < G.order(); ++x) ++orders[G.element_order(static_cast<Elem>(x))];
  Json hist = Json::array();
  for (auto [o, n] : orders) hist.push_back({{"order", o}, {"count", n}});
  out["element_orders"] = hist;
  Json gens = Json::array();
  for (Elem g : G.generators()) gens.push_back(element_to_json(G, g));
  out["generators"] = gens;
  return out;
}

Json element_to_json(const FiniteGroup& G, Elem x) {
  if (G.has_permutations()) return cycles_of(G.permutation(x));
  return x;
}

Elem element_from_json(const FiniteGroup& G, const Json& j) {
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v < 0 || static_cast<std::size_t>(v) >= G.order()) bad("element id out of range");
    return static_cast<Elem>(v);
  }
  if (!G.has_permutations()) bad("elements of a Cayley-table group are ids");
  auto e = G.find(permutation_from_json(j, G.degree()));
  if (!e) bad("permutation is not in the group");
  return *e;
}

Json subgroup_to_json(const SubgroupLattice& lat, SubgroupId id) {
  Json gens = Json::array();
  for (Elem g : lat[id].generators) gens.push_back(element_to_json(lat.group(), g));
  return {{"id", id}, {"order", lat[id].order()}, {"generators", gens}};
}

Json fusion_to_json(const FusionSystem& F, bool full) {
  const auto& lat = F.lattice();
  Json out;
  out["prime"] = F.prime();
  out["base"] = subgroup_to_json(lat, F.base());
  out["subgroup_count"] = F.objects().size();
  out["isomorphism_count"] = F.iso_count();
  Json classes = Json::array();
  for (const auto& cls : conjugacy(F).subgroup_classes) {
    SubgroupId r = cls.front();
    auto c = classify_subgroup(F, r);
    classes.push_back({{"representative", r},
                       {"members", cls},
                       {"order", lat[r].order()},
                       {"automizer_order", F.automorphisms(r).size()},
                       {"base_automizer_order", base_automizer_order(F, r)},
                       {"centric", c.centric},
                       {"radical", c.radical},
                       {"strongly_closed", c.strongly_closed}});
  }
  out["classes"] = classes;
  if (full) {
    Json isos = Json::array();
    for (SubgroupId p : F.objects()) {
      for (const auto& [q, map] : F.isos_from(p)) isos.push_back({{"src", p}, {"dst", q}, {"map", map_json(map)}});
    }
    out["isomorphisms"] = isos;
  }
  return out;
}

Json analyze_system(const FusionSystem& F) {
  const auto& lat = F.lattice();
  Json out;
  auto rep = saturation_report(F);
  out["saturated"] = rep.verdict;
  Json failures = Json::array();
  for (const auto& c : rep.classes) {
    if (c.witness) continue;
    Json f = {{"representative", c.representative}, {"axiom", c.failing_axiom}};
    if (c.failing_map) f["map"] = {{"src", c.failing_map->src}, {"dst", c.failing_map->dst}};
    if (c.n_phi) f["n_phi"] = *c.n_phi;
    failures.push_back(f);
  }
  out["saturation_failures"] = failures;
  auto inv = invariants(F);
  out["center"] = subgroup_to_json(lat, inv.center);
  out["focal"] = subgroup_to_json(lat, inv.focal);
  out["strongly_closed"] = inv.strongly_closed;
  std::vector<SubgroupId> cr;
  for (SubgroupId p : inv.centric) {
    if (std::binary_search(inv.radical.begin(), inv.radical.end(), p)) cr.push_back(p);
  }
  out["centric_radical"] = cr;
  out["base_center"] = subgroup_to_json(lat, lat.meet(lat.centralizer(F.base()), F.base()));
  out["system"] = fusion_to_json(F, false);
  return out;
}

FusionSystem generated_from_json(const Json& j) {
  FiniteGroup G = group_from_json(field(j, "group"));
  int p = 0;
  if (j.contains("prime")) {
    p = j.at("prime").get<int>();
  } else if (auto q = G.p_group_prime()) {
    p = *q;
  } else {
    bad("'prime' is required unless the group is a p-group");
  }
  if (!G.is_p_group(p)) fail(ErrorCode::kNotPGroup, "generated systems need a p-group");
  G.set_prime_hint(p);
  LatticePtr lat = SubgroupLattice::make(G);
  const FiniteGroup& S = lat->group();
  std::vector<std::pair<SubgroupId, ElemMap>> maps;
  if (j.contains("arrows")) {
    for (const auto& a : j.at("arrows")) {
      std::vector<Elem> from, to;
      for (const auto& x : field(a, "from")) from.push_back(element_from_json(S, x));
      for (const auto& x : field(a, "to")) to.push_back(element_from_json(S, x));
      if (from.size() != to.size()) bad("arrow generator lists differ in length");
      SubgroupId dom = lat->generated(from);
      auto m = extend_to_hom(S, (*lat)[dom], from, to, S);
      if (!m) fail(ErrorCode::kNotFusionPreserving, "arrow does not extend to a homomorphism");
      maps.emplace_back(dom, std::move(*m));
    }
  }
  return generated_fusion(lat, lat->whole_id(), p, arrows_from_maps(*lat, maps));
}

Json factorization_to_json(const Factorization& fact) {
  Json out = Json::array();
  for (const auto& part : fact.parts) {
    const auto& lat = part.system->lattice();
    Json gens = Json::array();
    for (Elem g : lat[part.base].generators) gens.push_back(element_to_json(lat.group(), g));
    out.push_back({{"base", part.base},
                   {"order", lat[part.base].order()},
                   {"generators", gens},
                   {"part", fusion_to_json(*part.system, false)}});
  }
  return out;
}

Factorization factorization_from_json(const SystemPtr& F, const Json& j) {
  const Json& arr = j.is_object() ? field(j, "factorization") : j;
  if (!arr.is_array()) bad("a factorization must be a list of parts");
  const auto& lat = F->lattice();
  std::vector<SubgroupId> bases;
  for (const auto& part : arr) {
    SubgroupId id = 0;
    if (part.is_object() && part.contains("generators")) {
      std::vector<Elem> gens;
      for (const auto& g : part.at("generators")) gens.push_back(element_from_json(lat.group(), g));
      id = lat.generated(gens);
      if (part.contains("base") && part.at("base").get<SubgroupId>() != id) {
        bad("part base id disagrees with its generators");
      }
    } else if (part.is_object() && part.contains("base")) {
      auto v = part.at("base").get<long long>();
      if (v < 0 || static_cast<std::size_t>(v) >= lat.size()) bad("part base id out of range");
      id = static_cast<SubgroupId>(v);
    } else if (part.is_number_integer()) {
      id = part.get<SubgroupId>();
      if (static_cast<std::size_t>(id) >= lat.size()) bad("part base id out of range");
    } else {
      bad("a part needs 'generators' or 'base'");
    }
    bases.push_back(id);
  }
  return factorization_from_bases(F, std::move(bases));
}

Json certificate_to_json(const KrsCertificate& cert) {
  Json out;
  out["alpha"] = map_json(cert.alpha.f.f);
  Json sigma = Json::array();
  for (int s : cert.sigma) sigma.push_back(s + 1);
  out["sigma"] = sigma;
  Json log = Json::array();
  for (const auto& h : cert.log) log.push_back(map_json(h));
  out["log"] = log;
  Json chosen = Json::array();
  for (int c : cert.chosen) chosen.push_back(c + 1);
  out["chosen"] = chosen;
  out["fallback"] = cert.fallback;
  if (!cert.discrepancy.empty()) out["discrepancy"] = cert.discrepancy;
  out["identity"] = cert.alpha.f.f == cert.alpha.f.source->base_subgroup().elements;
  return out;
}

std::vector<Permutation> omega_from_json(const Json& j, std::size_t points) {
  const Json& arr = j.is_object() ? field(j, "permutations") : j;
  if (!arr.is_array()) bad("omega must be a list of permutations");
  std::vector<Permutation> out;
  for (const auto& g : arr) out.push_back(permutation_from_json(g, points));
  return out;
}

Json Report::to_json() const {
  Json out;
  out["command"] = command;
  out["inputs_digest"] = inputs_digest;
  out["result"] = result;
  out["hash"] = fnv1a_hex(result.dump());
  if (timings) out["timings"] = *timings;
  return out;
}

}  // namespace fusionsys
