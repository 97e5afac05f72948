#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oracle {

FiniteGroup perm_group(std::size_t degree, const std::vector<std::vector<std::vector<int>>>& gens) {
  std::vector<fusionsys::Permutation> perms;
  for (const auto& g : gens) perms.push_back(fusionsys::permutation_from_cycles(degree, g));
  return FiniteGroup::from_permutations(perms);
}

std::vector<Elem> sorted_set(std::vector<Elem> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

namespace {

std::vector<Elem> generate(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> s{0};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Elem> cur(s.begin(), s.end());
    for (Elem a : cur)
      for (Elem b : gens)
        if (s.insert(g.mul(a, b)).second) grew = true;
  }
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<std::vector<Elem>> subgroups_by_generation(const FiniteGroup& g, int max_gens) {
  std::set<std::vector<Elem>> found;
  const Elem n = static_cast<Elem>(g.order());
  std::function<void(std::vector<Elem>&, Elem)> rec = [&](std::vector<Elem>& gens, Elem from) {
    found.insert(generate(g, gens));
    if (static_cast<int>(gens.size()) == max_gens) return;
    for (Elem x = from; x < n; ++x) {
      gens.push_back(x);
      rec(gens, x + 1);
      gens.pop_back();
    }
  };
  std::vector<Elem> gens;
  rec(gens, 1);
  return {found.begin(), found.end()};
}

bool closed(const FiniteGroup& g, const std::vector<Elem>& set) {
  std::set<Elem> s(set.begin(), set.end());
  if (!s.count(0)) return false;
  for (Elem a : set)
    for (Elem b : set)
      if (!s.count(g.mul(a, b))) return false;
  return true;
}

std::set<std::vector<Elem>> homs(const FiniteGroup& g, const std::vector<Elem>& dom,
                                 const FiniteGroup& h, const std::vector<Elem>& cod,
                                 bool injective) {
  // Greedy generating set of the domain, then every image assignment.
  std::vector<Elem> gens;
  std::vector<Elem> span{0};
  for (Elem x : dom) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    gens.push_back(x);
    span = generate(g, gens);
  }
  std::map<Elem, std::size_t> pos;
  for (std::size_t i = 0; i < dom.size(); ++i) pos[dom[i]] = i;
  std::set<std::vector<Elem>> out;
  std::vector<Elem> choice(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == gens.size()) {
      // Extend along words, rejecting on conflict.
      std::vector<Elem> img(dom.size(), -1);
      img[pos[0]] = 0;
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t k = 0; k < dom.size(); ++k) {
          if (img[k] < 0) continue;
          for (std::size_t j = 0; j < gens.size(); ++j) {
            std::size_t t = pos[g.mul(dom[k], gens[j])];
            Elem v = h.mul(img[k], choice[j]);
            if (img[t] < 0) {
              img[t] = v;
              grew = true;
            } else if (img[t] != v) {
              return;
            }
          }
        }
      }
      for (std::size_t a = 0; a < dom.size(); ++a)
        for (std::size_t b = 0; b < dom.size(); ++b)
          if (img[pos[g.mul(dom[a], dom[b])]] != h.mul(img[a], img[b])) return;
      if (injective && sorted_set(img).size() != img.size()) return;
      out.insert(img);
      return;
    }
    for (Elem c : cod) {
      choice[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<Elem> center(const FiniteGroup& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < static_cast<Elem>(g.order()); ++x) {
    bool c = true;
    for (Elem y = 0; y < static_cast<Elem>(g.order()); ++y)
      if (g.mul(x, y) != g.mul(y, x)) c = false;
    if (c) z.push_back(x);
  }
  return z;
}

}  // namespace oracle

namespace oracle {

std::set<IsoTriple> iso_triples(const FusionSystem& F) {
  std::set<IsoTriple> out;
  for (SubgroupId p : F.objects())
    for (const auto& [d, m] : F.isos_from(p)) out.emplace(p, d, m);
  return out;
}

namespace {

SubgroupId id_of_set(const fusionsys::SubgroupLattice& lat, const std::vector<Elem>& elems) {
  return lat.id_of(fusionsys::ElementSet::of(lat.group().order(), elems));
}

}  // namespace

std::set<IsoTriple> conjugation_triples(const FiniteGroup& G, const fusionsys::SubgroupLattice& lat,
                                        SubgroupId base, const std::vector<Elem>& embed) {
  std::map<Elem, Elem> back;
  for (std::size_t i = 0; i < embed.size(); ++i) back[embed[i]] = static_cast<Elem>(i);
  std::set<IsoTriple> out;
  for (SubgroupId p : lat.below(base)) {
    for (SubgroupId q : lat.below(base)) {
      if (lat[p].order() != lat[q].order()) continue;
      for (Elem g = 0; g < static_cast<Elem>(G.order()); ++g) {
        std::vector<Elem> img;
        bool ok = true;
        for (Elem x : lat[p].elements) {
          auto it = back.find(G.mul(G.mul(g, embed[x]), G.inv(g)));
          if (it == back.end() || !lat[q].contains(it->second)) {
            ok = false;
            break;
          }
          img.push_back(it->second);
        }
        if (ok) out.emplace(p, q, img);
      }
    }
  }
  return out;
}

std::set<IsoTriple> naive_closure(const fusionsys::SubgroupLattice& lat, SubgroupId base,
                                  const std::vector<IsoTriple>& gens) {
  const FiniteGroup& g = lat.group();
  std::set<IsoTriple> cur(gens.begin(), gens.end());
  for (Elem s : lat[base].elements) {
    std::vector<Elem> img;
    for (Elem x : lat[base].elements) img.push_back(g.mul(g.mul(s, x), g.inv(s)));
    cur.emplace(base, base, img);
  }
  auto lookup = [&](SubgroupId p, const std::vector<Elem>& m, Elem x) {
    const auto& el = lat[p].elements;
    return m[std::lower_bound(el.begin(), el.end(), x) - el.begin()];
  };
  while (true) {
    std::set<IsoTriple> next = cur;
    for (const auto& [p, q, m] : cur) {
      std::vector<Elem> inv(m.size());
      for (std::size_t k = 0; k < m.size(); ++k) {
        const auto& qe = lat[q].elements;
        inv[std::lower_bound(qe.begin(), qe.end(), m[k]) - qe.begin()] = lat[p].elements[k];
      }
      next.emplace(q, p, inv);
      for (SubgroupId r : lat.below(p)) {
        std::vector<Elem> res;
        for (Elem x : lat[r].elements) res.push_back(lookup(p, m, x));
        next.emplace(r, id_of_set(lat, res), res);
      }
      for (const auto& [p2, q2, m2] : cur) {
        if (p2 != q) continue;
        std::vector<Elem> c;
        for (Elem y : m) c.push_back(lookup(q, m2, y));
        next.emplace(p, q2, c);
      }
    }
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

std::size_t fusion_aut_count(const FusionSystem& F) {
  const auto& lat = F.lattice();
  const FiniteGroup& G = lat.group();
  const auto& base = F.base_subgroup().elements;
  auto triples = oracle::iso_triples(F);
  std::size_t count = 0;
  for (const auto& m : oracle::homs(G, base, G, base, true)) {
    auto at = [&](Elem x) { return m[lat.position(F.base(), x)]; };
    bool ok = true;
    for (const auto& [p, q, phi] : triples) {
      fusionsys::ElementSet mp(G.order()), mq(G.order());
      for (Elem x : lat[p].elements) mp.insert(at(x));
      for (Elem x : lat[q].elements) mq.insert(at(x));
      SubgroupId ip = lat.id_of(mp), iq = lat.id_of(mq);
      std::vector<Elem> img(phi.size());
      for (std::size_t k = 0; k < phi.size(); ++k) {
        img[lat.position(ip, at(lat[p].elements[k]))] = at(phi[k]);
      }
      if (!triples.contains({ip, iq, img})) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace oracle
