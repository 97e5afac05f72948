#include "fusionsys/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "fusionsys/catalog.hpp"
#include "fusionsys/io.hpp"
#include "fusionsys/verify.hpp"

namespace fusionsys {

namespace {

struct Options {
  std::string in;
  std::string catalog_name;
  std::optional<int> prime;
  std::string out;
  bool timings = false;
  bool full = false;
  std::string omega;
  bool exhaustive = false;
  std::string order = "asc";
  std::string fact1;
  std::string fact2;
  std::string suite;
  std::vector<std::string> entries;
  bool no_catalog = false;
  std::string name;
};

// Concatenated input bytes, each prefixed with its role.
class Digest {
 public:
  void add(const std::string& role, const std::string& bytes) {
    buf_ += role;
    buf_ += '\0';
    buf_ += bytes;
    buf_ += '\0';
  }
  std::string hex() const { return fnv1a_hex(buf_); }

 private:
  std::string buf_;
};

Json read_input(const std::string& role, const std::string& path, Digest& digest) {
  std::string bytes = read_file(path);
  digest.add(role, bytes);
  try {
    return Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::kInvalidInput, path + ": " + e.what());
  }
}

// A fusion system described by {"catalog"}, {"group", "prime"} or
// {"generated"}, with optional Omega point permutations under "omega".
struct Loaded {
  Json desc;
  std::optional<FiniteGroup> ambient;
  SystemPtr F;
};

int choose_prime(const FiniteGroup& G, const Json& desc) {
  if (desc.contains("prime")) return desc.at("prime").get<int>();
  if (G.prime_hint()) return *G.prime_hint();
  if (auto q = G.p_group_prime(); q && *q > 1) return *q;
  fail(ErrorCode::kInvalidInput, "--prime is required unless the group is a p-group");
}

Loaded load_system(const Json& desc) {
  Loaded out;
  out.desc = desc;
  if (desc.contains("catalog")) {
    const CatalogEntry& e = catalog_entry(desc.at("catalog").get<std::string>());
    FiniteGroup G = load_group(e);
    int p = desc.contains("prime") ? desc.at("prime").get<int>() : e.prime;
    out.desc["prime"] = p;
    out.F = share(fusion_of_group(G, p));
    out.ambient = std::move(G);
  } else if (desc.contains("generated")) {
    out.F = share(generated_from_json(desc.at("generated")));
  } else if (desc.contains("group")) {
    FiniteGroup G = group_from_json(desc.at("group"));
    int p = choose_prime(G, desc);
    if (!is_prime(p)) fail(ErrorCode::kInvalidInput, "prime must be prime");
    out.desc["prime"] = p;
    out.F = share(fusion_of_group(G, p));
    out.ambient = std::move(G);
  } else {
    fail(ErrorCode::kInvalidInput, "system needs 'catalog', 'group' or 'generated'");
  }
  return out;
}

Json desc_from_options(const Options& o, Digest& digest) {
  if (!o.in.empty() && !o.catalog_name.empty()) fail(ErrorCode::kInvalidInput, "give --in or --catalog, not both");
  Json desc;
  if (!o.catalog_name.empty()) {
    digest.add("catalog", o.catalog_name);
    desc["catalog"] = o.catalog_name;
  } else if (!o.in.empty()) {
    Json j = read_input("in", o.in, digest);
    if (j.is_object() && j.contains("group")) {
      desc["generated"] = j;
    } else {
      desc["group"] = j;
    }
  } else {
    fail(ErrorCode::kInvalidInput, "an input is required: --in FILE or --catalog NAME");
  }
  if (o.prime) desc["prime"] = *o.prime;
  return desc;
}

FiniteGroup group_from_options(const Options& o, Digest& digest) {
  Json desc = desc_from_options(o, digest);
  if (desc.contains("generated")) return group_from_json(desc.at("generated").at("group"));
  if (desc.contains("catalog")) return load_group(catalog_entry(o.catalog_name));
  return group_from_json(desc.at("group"));
}

OmegaContext omega_for(const Loaded& L) {
  if (!L.desc.contains("omega")) return {};
  const FiniteGroup& S = L.F->lattice().group();
  std::vector<ElemMap> maps;
  if (L.ambient) {
    auto perms = omega_from_json(L.desc.at("omega"), L.ambient->degree());
    maps = conjugation_maps(*L.ambient, sylow(*L.ambient, L.F->prime()), perms);
  } else {
    auto perms = omega_from_json(L.desc.at("omega"), S.degree());
    maps = conjugation_maps(S, S.whole(), perms);
  }
  return make_omega(L.F, maps);
}

// Factorization files: a factorize report, its result, or a bare part list.
const Json& factorization_payload(const Json& j) {
  if (j.is_object() && j.contains("result")) return factorization_payload(j.at("result"));
  return j;
}

std::optional<Json> embedded_system(const Json& j) {
  const Json& p = factorization_payload(j);
  if (p.is_object() && p.contains("system")) return p.at("system");
  return std::nullopt;
}

void emit(const Json& report, const Options& o, std::ostream& out) {
  std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) fail(ErrorCode::kInvalidInput, "cannot write " + o.out);
  f << text;
}

void add_input(CLI::App* cmd, Options& o, bool with_prime = true) {
  cmd->add_option("--in", o.in, "input JSON file");
  cmd->add_option("--catalog", o.catalog_name, "catalog entry name");
  if (with_prime) cmd->add_option("--prime", o.prime, "prime p (inferred for p-groups)");
}

}  // namespace

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInput: return kExitUsage;
    case ErrorCode::kInternalInconsistency: return kExitInconsistent;
    default: return kExitRejected;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact saturated fusion systems over finite p-groups", "fusionsys"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--out", o.out, "write the report here instead of stdout");
  app.add_flag("--timings", o.timings, "add wall-clock timings (not covered by the hash)");

  Digest digest;
  std::function<Json()> action;
  auto on = [&](CLI::App* cmd, std::function<Json()> fn) {
    cmd->callback([&action, fn] { action = fn; });
  };

  auto* group = app.add_subcommand("group", "load or describe a group")->require_subcommand(1);
  auto* group_load = group->add_subcommand("load", "parse a group and echo it normalized");
  add_input(group_load, o, false);
  on(group_load, [&] {
    FiniteGroup G = group_from_options(o, digest);
    return Json{{"group", group_to_json(G)}, {"order", G.order()}};
  });
  auto* group_describe = group->add_subcommand("describe", "group invariants");
  add_input(group_describe, o, false);
  on(group_describe, [&] { return describe_group(group_from_options(o, digest)); });

  auto* fusion = app.add_subcommand("fusion", "build fusion systems")->require_subcommand(1);
  auto* of_group = fusion->add_subcommand("of-group", "F_S(G) for a Sylow p-subgroup S");
  add_input(of_group, o);
  of_group->add_flag("--full", o.full, "list every isomorphism");
  on(of_group, [&] {
    Json desc = desc_from_options(o, digest);
    if (desc.contains("generated")) fail(ErrorCode::kInvalidInput, "of-group needs a group, not a generator list");
    Loaded L = load_system(desc);
    return Json{{"system", L.desc}, {"fusion", fusion_to_json(*L.F, o.full)}};
  });
  auto* generate = fusion->add_subcommand("generate", "the fusion system generated by given isomorphisms");
  generate->add_option("--in", o.in, "{group, prime, arrows} JSON file")->required();
  generate->add_flag("--full", o.full, "list every isomorphism");
  on(generate, [&] {
    Json j = read_input("in", o.in, digest);
    Loaded L = load_system(Json{{"generated", j}});
    return Json{{"system", L.desc}, {"fusion", fusion_to_json(*L.F, o.full)}};
  });

  auto* analyze = app.add_subcommand("analyze", "saturation, center, focal subgroup and classifications");
  add_input(analyze, o);
  on(analyze, [&] {
    Loaded L = load_system(desc_from_options(o, digest));
    return Json{{"system", L.desc}, {"analysis", analyze_system(*L.F)}};
  });

  auto* factorize_cmd = app.add_subcommand("factorize", "factor into indecomposable subsystems");
  add_input(factorize_cmd, o);
  factorize_cmd->add_option("--omega", o.omega, "Omega generators as point permutations");
  factorize_cmd->add_flag("--exhaustive", o.exhaustive, "list every factorization");
  factorize_cmd->add_option("--order", o.order, "pair search order")->check(CLI::IsMember({"asc", "desc"}));
  on(factorize_cmd, [&] {
    Json desc = desc_from_options(o, digest);
    if (!o.omega.empty()) desc["omega"] = read_input("omega", o.omega, digest);
    Loaded L = load_system(desc);
    OmegaContext omega = omega_for(L);
    SearchOrder order = o.order == "desc" ? SearchOrder::kDescending : SearchOrder::kAscending;
    Factorization fact = factorize(L.F, omega, order);
    Json result{{"system", L.desc}, {"factorization", factorization_to_json(fact)}, {"part_count", fact.parts.size()}};
    if (o.exhaustive) {
      Json all = Json::array();
      for (const auto& f : all_factorizations(L.F, omega)) all.push_back(factorization_to_json(f));
      result["factorizations"] = all;
      result["factorization_count"] = all.size();
    }
    return result;
  });

  auto* krs = app.add_subcommand("krs", "isomorphism certificate between two factorizations");
  add_input(krs, o);
  krs->add_option("--fact1", o.fact1, "first factorization (report or part list)")->required();
  krs->add_option("--fact2", o.fact2, "second factorization (report or part list)")->required();
  krs->add_option("--omega", o.omega, "Omega generators as point permutations");
  on(krs, [&] {
    Json a = read_input("fact1", o.fact1, digest);
    Json b = read_input("fact2", o.fact2, digest);
    std::optional<Json> sa = embedded_system(a), sb = embedded_system(b);
    Json desc;
    if (!o.in.empty() || !o.catalog_name.empty()) {
      desc = desc_from_options(o, digest);
    } else if (sa) {
      desc = *sa;
    } else if (sb) {
      desc = *sb;
    } else {
      fail(ErrorCode::kInvalidInput, "no system: give --in or --catalog, or factorize reports");
    }
    if (sa && sb && *sa != *sb && o.in.empty() && o.catalog_name.empty()) {
      fail(ErrorCode::kInvalidInput, "the two factorizations belong to different systems");
    }
    if (!o.omega.empty()) desc["omega"] = read_input("omega", o.omega, digest);
    Loaded L = load_system(desc);
    OmegaContext omega = omega_for(L);
    auto payload = [](const Json& j) -> const Json& {
      const Json& p = factorization_payload(j);
      return p.is_object() && p.contains("factorization") ? p.at("factorization") : p;
    };
    Factorization f1 = factorization_from_json(L.F, payload(a));
    Factorization f2 = factorization_from_json(L.F, payload(b));
    KrsCertificate cert = krs_certificate(L.F, f1, f2, omega);
    return Json{{"system", L.desc},
                {"k", f1.parts.size()},
                {"m", f2.parts.size()},
                {"certificate", certificate_to_json(cert)}};
  });

  auto* verify = app.add_subcommand("verify", "run a property suite over the catalog");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--entry", o.entries, "restrict to these catalog entries");
  verify->add_flag("--no-catalog", o.no_catalog, "run over an empty catalog");
  bool violations = false;
  on(verify, [&] {
    std::vector<const CatalogEntry*> entries;
    if (!o.no_catalog) {
      if (o.entries.empty()) {
        for (const auto& e : catalog()) entries.push_back(&e);
      } else {
        for (const auto& n : o.entries) entries.push_back(&catalog_entry(n));
      }
    }
    for (const auto* e : entries) digest.add("catalog", e->name);
    SuiteResult r = run_suite(o.suite, entries);
    violations = !r.passed();
    return suite_to_json(r);
  });

  auto* cat = app.add_subcommand("catalog", "bundled examples")->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "entry names");
  on(cat_list, [&] {
    Json list = Json::array();
    for (const auto& e : catalog()) {
      list.push_back({{"name", e.name}, {"description", e.description}, {"prime", e.prime}});
    }
    return list;
  });
  auto* cat_show = cat->add_subcommand("show", "one entry with its group");
  cat_show->add_option("name", o.name, "entry name")->required();
  on(cat_show, [&] {
    const CatalogEntry& e = catalog_entry(o.name);
    digest.add("catalog", e.name);
    FiniteGroup G = load_group(e);
    Json omega = Json::array();
    for (const auto& w : e.omega) omega.push_back(w);
    Json expected;
    const auto& x = e.expected;
    if (x.group_order) expected["group_order"] = *x.group_order;
    if (x.base_order) expected["base_order"] = *x.base_order;
    if (x.saturated) expected["saturated"] = *x.saturated;
    if (x.center_order) expected["center_order"] = *x.center_order;
    if (x.focal_order) expected["focal_order"] = *x.focal_order;
    if (x.part_count) expected["part_count"] = *x.part_count;
    return Json{{"name", e.name},
                {"description", e.description},
                {"prime", e.prime},
                {"group", group_to_json(G)},
                {"describe", describe_group(G)},
                {"omega", omega},
                {"expected", expected}};
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kExitUsage;
  }

  try {
    Guardrails::current();  // reject a malformed FUSIONSYS_GUARDRAIL up front
    auto start = std::chrono::steady_clock::now();
    Report report;
    report.command = args;
    report.result = action();
    report.inputs_digest = digest.hex();
    if (o.timings) {
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.timings = Json{{"total_ms", ms}};
    }
    emit(report.to_json(), o, out);
    return violations ? kExitInconsistent : kExitOk;
  } catch (const FusionError& e) {
    err << Json{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return exit_code_for(e.code());
  } catch (const Json::exception& e) {
    err << Json{{"error", "InvalidInput"}, {"message", e.what()}}.dump() << "\n";
    return kExitUsage;
  }
}

}  // namespace fusionsys
