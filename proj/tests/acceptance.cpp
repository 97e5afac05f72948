// One pass/fail line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "fusionsys/cli.hpp"
#include "fusionsys/io.hpp"
#include "fusionsys/verify.hpp"
#include "oracles.hpp"

using namespace fusionsys;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

bool run_criterion(int n, const std::string& title, const std::function<Outcome()>& fn) {
  auto start = Clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("error: ") + e.what()};
  }
  std::ostringstream line;
  line.precision(2);
  line << std::fixed << "criterion " << n << " [" << title << "] " << (o.pass ? "PASS" : "FAIL") << " ("
       << seconds_since(start) << " s): " << o.detail;
  std::cout << line.str() << std::endl;
  return o.pass;
}

std::vector<const CatalogEntry*> all_entries() {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) out.push_back(&e);
  return out;
}

std::string summarize(const SuiteResult& r) {
  std::size_t instances = 0, violations = 0;
  std::string failing;
  for (const auto& c : r.checks) {
    instances += c.instances;
    violations += c.violations;
    if (!c.passed()) failing += " " + c.name + (c.details.empty() ? "" : " (" + c.details.front() + ")");
  }
  return std::to_string(r.checks.size()) + " checks, " + std::to_string(instances) + " instances, " +
         std::to_string(violations) + " violations" + failing;
}

Outcome paired_example_claims() {
  auto start = Clock::now();
  PairedClaims k = paired_claims(paired_example());
  double t = seconds_since(start);
  bool ok = k.pairs_commute_in_f && !k.triple_commutes_in_f && k.triple_commutes_in_fbar && k.e12_e3_commute_in_fbar &&
            !k.e12_e3_commute_in_f && t <= 60.0;
  auto b = [](bool v) { return v ? "yes" : "no"; };
  return {ok, std::string("pairs commute in F: ") + b(k.pairs_commute_in_f) + ", triple in F: " +
                  b(k.triple_commutes_in_f) + ", triple in Fbar: " + b(k.triple_commutes_in_fbar) +
                  ", E1E2 with E3 in Fbar: " + b(k.e12_e3_commute_in_fbar) + ", in F: " + b(k.e12_e3_commute_in_f)};
}

Outcome saturation_battery() {
  std::size_t n = 0, ok = 0;
  std::string bad;
  for (const auto& e : catalog()) {
    ++n;
    FusionSystem F = fusion_of_group(load_group(e), e.prime);
    if (saturation_report(F).verdict) {
      ++ok;
    } else {
      bad += " " + e.name;
    }
  }
  return {n >= 8 && ok == n, std::to_string(ok) + "/" + std::to_string(n) + " catalog systems saturated" + bad};
}

Outcome product_oracle() {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"sym3-p3", "sym3-p3"}, {"sym3-p3", "sym3xc3-p3"}, {"sym3-p2", "alt4-p2"},
      {"inner-c2xc2", "sym3-p2"}, {"sym4-p3", "sym3-p3"}};
  std::size_t ok = 0;
  std::string bad;
  for (const auto& [a, b] : pairs) {
    const auto& ea = catalog_entry(a);
    const auto& eb = catalog_entry(b);
    FiniteGroup ga = load_group(ea), gb = load_group(eb);
    SystemPtr fa = share(fusion_of_group(ga, ea.prime)), fb = share(fusion_of_group(gb, eb.prime));
    ProductSystem P = product({fa, fb});
    FusionSystem G = product_group_fusion(ga, gb, ea.prime);
    // Entrywise: same lattice order, then equal isomorphism triples.
    bool same = same_lattice(P.product->lattice(), G.lattice()) && P.product->base() == G.base() &&
                oracle::iso_triples(*P.product) == oracle::iso_triples(G);
    if (same) {
      ++ok;
    } else {
      bad += " " + a + "x" + b;
    }
  }
  return {ok == pairs.size() && ok >= 3,
          std::to_string(ok) + "/" + std::to_string(pairs.size()) + " product pairs match" + bad};
}

struct KrsTally {
  std::size_t systems = 0;
  std::size_t pairs = 0;
  std::size_t failures = 0;
  double worst = 0;
  std::size_t c2xc2 = 0;
  std::string detail;
};

KrsTally krs_end_to_end() {
  KrsTally t;
  for (const auto& e : catalog()) {
    auto start = Clock::now();
    CatalogSystem cs = load_catalog_system(e);
    auto all = all_factorizations(cs.system, cs.omega);
    if (e.name == "inner-c2xc2") t.c2xc2 = all.size();
    if (all.size() < 2) continue;
    ++t.systems;
    std::set<ElemMap> aut;
    for (const auto& ne : normal_endos(cs.system, cs.omega)) {
      if (ne.invertible) aut.insert(ne.f.f);
    }
    for (const auto& a : all) {
      for (const auto& b : all) {
        ++t.pairs;
        KrsCertificate cert = krs_certificate(cs.system, a, b, cs.omega);
        bool ok = !cert.fallback && a.parts.size() == b.parts.size() && aut.contains(cert.alpha.f.f) &&
                  maps_parts(cs.system, cert.alpha.f.f, a, b, cert.sigma);
        if (!ok) {
          ++t.failures;
          if (t.detail.empty()) t.detail = " first failure on " + e.name;
        }
      }
    }
    t.worst = std::max(t.worst, seconds_since(start));
  }
  return t;
}

Outcome uniqueness() {
  std::size_t n = 0, ok = 0;
  std::string bad;
  for (const auto& e : catalog()) {
    CatalogSystem cs = load_catalog_system(e);
    const auto& F = *cs.system;
    if (center_of(F) != F.lattice().trivial_id() && focal_of(F) != F.base()) continue;
    ++n;
    bool one = all_factorizations(cs.system).size() == 1;
    std::size_t auts = 0;
    bool only_id = true;
    for (const auto& ne : normal_endos(cs.system)) {
      if (!ne.invertible) continue;
      ++auts;
      only_id = only_id && ne.f.f == F.base_subgroup().elements;
    }
    if (one && only_id && auts == 1) {
      ++ok;
    } else {
      bad += " " + e.name;
    }
  }
  return {n > 0 && ok == n,
          std::to_string(ok) + "/" + std::to_string(n) + " systems with Z(F)=1 or foc(F)=S have one factorization and "
                                                        "trivial Aut^N" + bad};
}

Outcome aut_structure_square() {
  CatalogSystem cs = load_catalog_system(catalog_entry("sym3-p3"));
  auto P = product({cs.system, cs.system});
  auto fact = factorize(P.product);
  AutStructure s = aut_structure(P.product, fact);
  std::size_t brute = oracle::fusion_aut_count(*P.product);
  std::size_t brute_e = oracle::fusion_aut_count(*cs.system);
  // Frozen after the brute-force count: |Aut^0| = 4, |Gamma| = 2, |Aut| = 8.
  bool ok = fact.parts.size() == 2 && s.aut0_order == 4 && s.gamma.size() == 2 && s.aut_order == 8 && brute == 8 &&
            brute_e == 2 && s.section.size() == s.gamma.size();
  return {ok, "|Aut^0| = " + std::to_string(s.aut0_order) + ", |Gamma| = " + std::to_string(s.gamma.size()) +
                  ", |Aut| = " + std::to_string(s.aut_order) + ", brute force " + std::to_string(brute) +
                  ", |Aut(E)| = " + std::to_string(brute_e)};
}

Outcome goldschmidt() {
  std::size_t decomposable = 0, ok = 0;
  std::string names;
  for (const auto& e : catalog()) {
    if (e.prime != 2) continue;
    FiniteGroup G = load_group(e);
    if (G.order() > 200) continue;
    if (o_p_prime(G, 2).order() != 1 || o_upper_p_prime(G, 2).order() != G.order()) continue;
    SystemPtr F = share(fusion_of_group(G, 2));
    auto fact = factorize(F);
    if (fact.parts.size() < 2) continue;
    ++decomposable;
    // goldschmidt_factor verifies every conclusion clause and throws otherwise.
    auto r = goldschmidt_factor(G, F, fact);
    if (r.factors.size() == fact.parts.size()) {
      ++ok;
      names += " " + e.name;
    }
  }
  return {ok >= 2 && ok == decomposable,
          std::to_string(ok) + "/" + std::to_string(decomposable) + " decomposable groups factor:" + names};
}

std::string run_binary(const std::string& args, int& code) {
  std::string cmd = std::string(FUSIONSYS_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Outcome determinism() {
  auto dir = std::filesystem::temp_directory_path() / "fusionsys_acceptance";
  std::filesystem::create_directories(dir);
  std::string data = FUSIONSYS_DATA_DIR;
  std::string fa = (dir / "fact-asc.json").string(), fd = (dir / "fact-desc.json").string();
  int code = 0;
  std::ofstream(fa) << run_binary("factorize --catalog inner-c2xc2", code);
  std::ofstream(fd) << run_binary("factorize --catalog inner-c2xc2 --order desc", code);
  const std::vector<std::string> commands = {
      "catalog list",
      "catalog show paper-sigma3-cubed",
      "group load --catalog sym4-p2",
      "group describe --in " + data + "/sym4.json",
      "fusion of-group --catalog sym3xsym3-p3 --full",
      "fusion generate --in " + data + "/c3xc3-invert-all.json",
      "analyze --catalog paper-sigma3-cubed",
      "analyze --in " + data + "/d8.json",
      "factorize --catalog inner-c3-cubed --exhaustive",
      "factorize --in " + data + "/c2-cubed.json --omega " + data + "/swap-omega.json",
      "krs --fact1 " + fa + " --fact2 " + fd,
      "verify group-core",
      "verify fusion-core",
  };
  std::size_t ok = 0;
  std::string bad;
  for (const auto& c : commands) {
    int c0 = 0, c1 = 0, c2 = 0;
    std::string r0 = run_binary(c, c0), r1 = run_binary(c, c1), r2 = run_binary(c, c2);
    if (c0 == 0 && c1 == 0 && c2 == 0 && !r0.empty() && r0 == r1 && r1 == r2) {
      ++ok;
    } else {
      bad += " [" + c + "]";
    }
  }
  return {ok == commands.size(),
          std::to_string(ok) + "/" + std::to_string(commands.size()) + " reports byte-identical over 3 runs" + bad};
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "paired-involution example", paired_example_claims);
  all &= run_criterion(2, "saturation battery", saturation_battery);
  all &= run_criterion(3, "product oracle", product_oracle);

  SuiteResult factor_suite;
  all &= run_criterion(4, "property suites", [&] {
    std::string detail;
    bool ok = true;
    for (const std::string s : {"group-core", "fusion-core", "morphisms", "factor"}) {
      SuiteResult r = run_suite(s, all_entries());
      ok = ok && r.passed();
      detail += (detail.empty() ? "" : "; ") + s + ": " + summarize(r);
      if (s == "factor") factor_suite = r;
    }
    return Outcome{ok, detail};
  });
  all &= run_criterion(5, "Fitting factorization", [&] {
    const CheckResult* c = factor_suite.find("fitting-factorization");
    if (!c) return Outcome{false, "fitting check did not run"};
    return Outcome{c->passed() && c->instances > 0, std::to_string(c->instances) +
                                                        " normal endomorphisms split, " +
                                                        std::to_string(c->violations) + " disagreements"};
  });
  all &= run_criterion(6, "KRS end to end", [] {
    KrsTally t = krs_end_to_end();
    std::ostringstream worst;
    worst.precision(2);
    worst << std::fixed << t.worst;
    bool ok = t.failures == 0 && t.systems > 0 && t.c2xc2 == 3 && t.worst <= 120.0;
    return Outcome{ok, std::to_string(t.pairs) + " certificate pairs over " + std::to_string(t.systems) +
                           " systems, " + std::to_string(t.failures) + " failures, C2xC2 factorizations " +
                           std::to_string(t.c2xc2) + ", slowest system " + worst.str() + " s" + t.detail};
  });
  all &= run_criterion(7, "uniqueness", uniqueness);
  all &= run_criterion(8, "automorphism structure", aut_structure_square);
  all &= run_criterion(9, "group factorization at p = 2", goldschmidt);
  all &= run_criterion(10, "determinism", determinism);
  std::cout << (all ? "all criteria pass" : "some criteria fail") << std::endl;
  return all ? 0 : 1;
}
