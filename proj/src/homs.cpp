#include "fusionsys/homs.hpp"

#include <algorithm>
#include <functional>

namespace fusionsys {

Elem GroupHom::operator()(Elem x) const {
  int pos = domain.position(x);
  if (pos < 0) fail(ErrorCode::kInvalidInput, "element outside homomorphism domain");
  return images[pos];
}

bool GroupHom::is_injective() const {
  std::vector<Elem> sorted = images;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<Elem> minimal_generators(const FiniteGroup& group, const Subgroup& sub) {
  std::vector<Elem> gens;
  if (sub.order() == 1) return gens;
  ElementSet frattini(group.order());
  frattini.insert(0);
  long long n = static_cast<long long>(sub.order());
  int p = 0;
  for (int q = 2; q <= n; ++q) {
    if (n % q == 0) {
      if (p_part(n, q) == n) p = q;
      break;
    }
  }
  if (p != 0) {
    std::vector<Elem> phi_gens;
    for (Elem x : sub.elements) phi_gens.push_back(group.pow(x, p));
    for (Elem x : sub.elements)
      for (Elem y : sub.elements) phi_gens.push_back(group.commutator(x, y));
    std::sort(phi_gens.begin(), phi_gens.end());
    phi_gens.erase(std::unique(phi_gens.begin(), phi_gens.end()), phi_gens.end());
    frattini = group.closure(phi_gens);
  }
  std::vector<Elem> frattini_elems = frattini.members();
  ElementSet span = frattini;
  for (Elem x : sub.elements) {
    if (span.contains(x)) continue;
    gens.push_back(x);
    std::vector<Elem> all = gens;
    all.insert(all.end(), frattini_elems.begin(), frattini_elems.end());
    span = group.closure(all);
  }
  return gens;
}

namespace {

// Spanning-tree layout of P grown one generator at a time. Stage i covers
// <g_0..g_i>; tree edges define images, check edges verify the relations
// that become visible at that stage.
struct StagePlan {
  struct TreeEdge {
    int child;   // position in P.elements
    int parent;  // position in P.elements
    int gen;
  };
  struct CheckEdge {
    int from;
    int gen;
    int to;
  };
  std::vector<TreeEdge> tree;
  std::vector<CheckEdge> checks;
  std::vector<int> covered;  // positions in P_i
};

std::vector<StagePlan> plan_stages(const FiniteGroup& G, const Subgroup& P,
                                   const std::vector<Elem>& gens) {
  std::vector<StagePlan> plan(gens.size());
  std::vector<char> in(P.order(), 0);
  std::vector<int> order_list{0};
  in[0] = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    StagePlan& st = plan[i];
    std::vector<std::pair<int, int>> tree_used;  // (from, gen)
    std::size_t old_count = order_list.size();
    for (std::size_t head = 0; head < order_list.size(); ++head) {
      int y = order_list[head];
      for (std::size_t j = 0; j <= i; ++j) {
        if (head < old_count && j < i) continue;  // already handled earlier
        int z = P.position(G.mul(P.elements[y], gens[j]));
        if (!in[z]) {
          in[z] = 1;
          order_list.push_back(z);
          st.tree.push_back({z, y, static_cast<int>(j)});
        } else {
          st.checks.push_back({y, static_cast<int>(j), z});
        }
      }
    }
    st.covered = order_list;
  }
  return plan;
}

}  // namespace

std::vector<std::vector<Elem>> enumerate_homs(const FiniteGroup& G, const Subgroup& P,
                                              const FiniteGroup& H, const Subgroup& Q,
                                              bool injective_only, const Guardrails& limits) {
  if (P.order() > limits.homs) {
    fail(ErrorCode::kGuardrailExceeded,
         "hom enumeration domain of order " + std::to_string(P.order()) + " exceeds guardrail");
  }
  std::vector<std::vector<Elem>> out;
  if (injective_only && P.order() > Q.order()) return out;
  std::vector<Elem> gens = minimal_generators(G, P);
  if (gens.empty()) {
    out.push_back({0});
    return out;
  }
  std::vector<StagePlan> plan = plan_stages(G, P, gens);
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int ord = G.element_order(gens[i]);
    for (Elem h : Q.elements) {
      int ho = H.element_order(h);
      if (injective_only ? ho == ord : ord % ho == 0) candidates[i].push_back(h);
    }
  }
  std::vector<Elem> img(P.order(), -1);
  std::vector<Elem> gen_img(gens.size(), 0);
  img[0] = 0;
  std::vector<int> seen(H.order(), -1);
  int stamp = 0;

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == gens.size()) {
      out.push_back(img);
      return;
    }
    const StagePlan& st = plan[i];
    for (Elem h : candidates[i]) {
      gen_img[i] = h;
      for (const auto& e : st.tree) img[e.child] = H.mul(img[e.parent], gen_img[e.gen]);
      bool ok = true;
      for (const auto& e : st.checks) {
        if (img[e.to] != H.mul(img[e.from], gen_img[e.gen])) {
          ok = false;
          break;
        }
      }
      if (ok && injective_only) {
        ++stamp;
        for (int pos : st.covered) {
          if (seen[img[pos]] == stamp) {
            ok = false;
            break;
          }
          seen[img[pos]] = stamp;
        }
      }
      if (ok) assign(i + 1);
    }
    for (const auto& e : st.tree) img[e.child] = -1;
  };
  assign(0);
  return out;
}

std::vector<GroupHom> homomorphisms(const FiniteGroup& G, const Subgroup& P,
                                    const FiniteGroup& H, const Subgroup& Q) {
  std::vector<GroupHom> out;
  for (auto& images : enumerate_homs(G, P, H, Q, false)) {
    out.push_back(GroupHom{P, Q, std::move(images)});
  }
  return out;
}

std::vector<GroupHom> injective_homs(const FiniteGroup& G, const Subgroup& P, const Subgroup& Q) {
  std::vector<GroupHom> out;
  for (auto& images : enumerate_homs(G, P, G, Q, true)) {
    out.push_back(GroupHom{P, Q, std::move(images)});
  }
  return out;
}

std::optional<std::vector<Elem>> extend_to_hom(const FiniteGroup& G, const Subgroup& P,
                                               std::span<const Elem> gens,
                                               std::span<const Elem> gen_images,
                                               const FiniteGroup& H) {
  std::vector<Elem> img(P.order(), -1);
  img[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int y = queue[head];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      int z = P.position(G.mul(P.elements[y], gens[j]));
      if (z < 0) fail(ErrorCode::kInvalidInput, "generator outside the domain subgroup");
      Elem v = H.mul(img[y], gen_images[j]);
      if (img[z] < 0) {
        img[z] = v;
        queue.push_back(z);
      } else if (img[z] != v) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != P.order()) return std::nullopt;
  return img;
}

}  // namespace fusionsys
