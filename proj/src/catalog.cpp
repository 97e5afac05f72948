#include "fusionsys/catalog.hpp"

namespace fusionsys {

namespace {

CatalogEntry entry(std::string name, std::string description, std::size_t points,
                   std::vector<CycleList> gens, int p, CatalogExpectation expected) {
  CatalogEntry e;
  e.name = std::move(name);
  e.description = std::move(description);
  e.points = points;
  e.generators = std::move(gens);
  e.prime = p;
  e.expected = expected;
  return e;
}

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  // Three disjoint copies of Sym(3) on {1,2,3}, {4,5,6}, {7,8,9}; the
  // involutions only enter in pairs.
  out.push_back(entry("paper-sigma3-cubed",
                      "C3^3 extended by the products b1b2 and b1b3 of the copy-wise transpositions",
                      9, {{{1, 2, 3}}, {{4, 5, 6}}, {{7, 8, 9}}, {{1, 2}, {4, 5}}, {{1, 2}, {7, 8}}}, 3,
                      {108, 27, true, 1, 27, 1}));
  out.push_back(entry("sigma3-cubed", "Sym(3) x Sym(3) x Sym(3)", 9,
                      {{{1, 2, 3}}, {{1, 2}}, {{4, 5, 6}}, {{4, 5}}, {{7, 8, 9}}, {{7, 8}}}, 3,
                      {216, 27, true, 1, 27, 3}));
  out.push_back(entry("inner-c2xc2", "C2 x C2 acting on itself", 4, {{{1, 2}}, {{3, 4}}}, 2,
                      {4, 4, true, 4, 1, 2}));
  out.push_back(entry("inner-c3-cubed", "C3 x C3 x C3 acting on itself", 9,
                      {{{1, 2, 3}}, {{4, 5, 6}}, {{7, 8, 9}}}, 3, {27, 27, true, 27, 1, 3}));
  out.push_back(entry("inner-d8", "dihedral group of order 8", 4, {{{1, 2, 3, 4}}, {{1, 3}}}, 2,
                      {8, 8, true, 2, 2, 1}));
  out.push_back(entry("inner-c2xc4", "C2 x C4", 6, {{{1, 2}}, {{3, 4, 5, 6}}}, 2,
                      {8, 8, true, 8, 1, 2}));
  out.push_back(entry("inner-d8xc2", "D8 x C2", 6, {{{1, 2, 3, 4}}, {{1, 3}}, {{5, 6}}}, 2,
                      {16, 16, true, 4, 2, 2}));
  {
    CatalogEntry e = entry("inner-c2-cubed-omega",
                           "C2^3 with Omega generated by swapping the first two factors", 6,
                           {{{1, 2}}, {{3, 4}}, {{5, 6}}}, 2, {8, 8, true, 8, 1, 2});
    e.omega = {{{1, 3}, {2, 4}}};
    out.push_back(std::move(e));
  }
  out.push_back(entry("sym3-p3", "Sym(3) at p = 3", 3, {{{1, 2, 3}}, {{1, 2}}}, 3,
                      {6, 3, true, 1, 3, 1}));
  out.push_back(entry("sym3-p2", "Sym(3) at p = 2", 3, {{{1, 2, 3}}, {{1, 2}}}, 2,
                      {6, 2, true, 2, 1, 1}));
  out.push_back(entry("sym4-p2", "Sym(4) at p = 2, order-24 ambient", 4, {{{1, 2}}, {{1, 2, 3, 4}}}, 2,
                      {24, 8, true, 1, 4, 1}));
  out.push_back(entry("sym4-p3", "Sym(4) at p = 3", 4, {{{1, 2}}, {{1, 2, 3, 4}}}, 3,
                      {24, 3, true, 1, 3, 1}));
  out.push_back(entry("alt4-p2", "Alt(4) at p = 2", 4, {{{1, 2}, {3, 4}}, {{1, 2, 3}}}, 2,
                      {12, 4, true, 1, 4, 1}));
  out.push_back(entry("sym3xsym3-p3", "Sym(3) x Sym(3) at p = 3", 6,
                      {{{1, 2, 3}}, {{1, 2}}, {{4, 5, 6}}, {{4, 5}}}, 3, {36, 9, true, 1, 9, 2}));
  out.push_back(entry("sym3xc3-p3", "Sym(3) x C3 at p = 3", 6, {{{1, 2, 3}}, {{1, 2}}, {{4, 5, 6}}}, 3,
                      {18, 9, true, 3, 3, 2}));
  out.push_back(entry("alt4xalt4-p2", "Alt(4) x Alt(4) at p = 2", 8,
                      {{{1, 2}, {3, 4}}, {{1, 2, 3}}, {{5, 6}, {7, 8}}, {{5, 6, 7}}}, 2,
                      {144, 16, true, 1, 16, 2}));
  out.push_back(entry("sym4xc2-p2", "Sym(4) x C2 at p = 2", 6, {{{1, 2}}, {{1, 2, 3, 4}}, {{5, 6}}}, 2,
                      {48, 16, true, 2, 4, 2}));
  out.push_back(entry("alt5xc2-p2", "Alt(5) x C2 at p = 2", 7,
                      {{{1, 2, 3, 4, 5}}, {{1, 2, 3}}, {{6, 7}}}, 2, {120, 8, true, 2, 4, 2}));
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  fail(ErrorCode::kInvalidInput, "unknown catalog entry '" + name + "'");
}

FiniteGroup load_group(const CatalogEntry& entry) {
  std::vector<Permutation> perms;
  for (const auto& g : entry.generators) perms.push_back(permutation_from_cycles(entry.points, g));
  FiniteGroup g = FiniteGroup::from_permutations(perms);
  g.set_prime_hint(entry.prime);
  return g;
}

}  // namespace fusionsys
