#include "mcg/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "mcg/errors.hpp"

namespace mcg {

namespace {

std::vector<Permutation> close_under_products(int degree, const std::vector<Permutation>& gens,
                                              std::size_t order_cap) {
  std::set<Permutation> seen;
  std::deque<Permutation> todo;
  Permutation id = Permutation::identity(degree);
  seen.insert(id);
  todo.push_back(id);
  while (!todo.empty()) {
    Permutation cur = std::move(todo.front());
    todo.pop_front();
    for (const Permutation& g : gens) {
      Permutation next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > order_cap)
          throw CapExceeded("group closure exceeded cap of " + std::to_string(order_cap));
        todo.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Permutation> generators,
                     std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

PermGroup PermGroup::generate(int degree, std::vector<Permutation> generators,
                              std::size_t order_cap) {
  for (const Permutation& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
  }
  std::vector<Permutation> elems = close_under_products(degree, generators, order_cap);
  return PermGroup(degree, std::move(generators), std::move(elems));
}

PermGroup PermGroup::trivial(int degree) { return generate(degree, {}); }

bool PermGroup::contains(const Permutation& p) const {
  return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

int PermGroup::element_index(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree_) return false;
  for (const Permutation& e : elements_)
    if (!g.contains(e)) return false;
  return true;
}

std::vector<OrbitInfo> PermGroup::orbits_and_stabilizers() const {
  std::vector<OrbitInfo> out;
  std::vector<char> visited(degree_, 0);
  for (int p = 0; p < degree_; ++p) {
    if (visited[p]) continue;
    std::vector<int> orbit{p};
    visited[p] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (const Permutation& g : generators_) {
        int q = g.apply(orbit[i]);
        if (!visited[q]) {
          visited[q] = 1;
          orbit.push_back(q);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    std::size_t stab = 0;
    for (const Permutation& e : elements_)
      if (e.apply(p) == p) ++stab;
    out.push_back(OrbitInfo{std::move(orbit), stab});
  }
  return out;
}

PermGroup coset_action(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw NotASubgroup("coset_action: h is not a subgroup of g");

  // Canonical key of the coset xH: its minimal element.
  auto coset_key = [&](const Permutation& x) {
    Permutation best = x * h.elements().front();
    for (std::size_t i = 1; i < h.elements().size(); ++i) {
      Permutation cand = x * h.elements()[i];
      if (cand < best) best = cand;
    }
    return best;
  };

  const std::size_t ngens = g.generators().size();
  std::map<Permutation, int> index_of;
  std::vector<Permutation> reps;
  std::vector<std::vector<int>> transitions;  // transitions[c][j]
  reps.push_back(coset_key(Permutation::identity(g.degree())));
  index_of.emplace(reps[0], 0);

  for (std::size_t c = 0; c < reps.size(); ++c) {
    transitions.emplace_back(ngens, -1);
    for (std::size_t j = 0; j < ngens; ++j) {
      Permutation moved = coset_key(g.generators()[j] * reps[c]);
      auto [it, inserted] = index_of.emplace(moved, static_cast<int>(reps.size()));
      if (inserted) reps.push_back(it->first);
      transitions[c][j] = it->second;
    }
  }

  const int n = static_cast<int>(reps.size());
  std::vector<Permutation> action;
  action.reserve(ngens);
  for (std::size_t j = 0; j < ngens; ++j) {
    std::vector<int> img(n);
    for (int c = 0; c < n; ++c) img[c] = transitions[c][j];
    action.emplace_back(std::move(img));
  }
  return PermGroup::generate(n, std::move(action), g.order());
}

PermGroup center_of(const PermGroup& g) {
  std::vector<Permutation> central;
  for (const Permutation& e : g.elements()) {
    bool commutes = true;
    for (const Permutation& gen : g.generators()) {
      if (!(e * gen == gen * e)) {
        commutes = false;
        break;
      }
    }
    if (commutes) central.push_back(e);
  }
  return PermGroup::generate(g.degree(), std::move(central), g.order());
}

PermGroup quotient_by_central(const PermGroup& g, const Permutation& z) {
  if (!g.contains(z)) throw NotCentralInvolution("quotient_by_central: z not in g");
  if (z.is_identity() || !(z * z).is_identity())
    throw NotCentralInvolution("quotient_by_central: z is not an involution");
  for (const Permutation& gen : g.generators())
    if (!(z * gen == gen * z))
      throw NotCentralInvolution("quotient_by_central: z is not central");
  PermGroup zgrp = PermGroup::generate(g.degree(), {z});
  PermGroup q = coset_action(g, zgrp);
  if (q.order() * 2 != g.order())
    throw VerificationFailed("quotient_by_central: order did not halve");
  return q;
}

namespace {

// Greedy generating sequence: repeatedly adjoin the first element of maximal
// order outside the current closure. Short sequences keep the backtracking
// branch factor down.
struct GenSeq {
  std::vector<int> element_indices;
  std::vector<std::size_t> prefix_orders;
};

GenSeq greedy_generating_sequence(const PermGroup& g) {
  GenSeq seq;
  std::vector<Permutation> chosen;
  std::set<Permutation> closure;
  closure.insert(Permutation::identity(g.degree()));
  while (closure.size() < g.order()) {
    int best = -1;
    int best_order = 0;
    for (std::size_t i = 0; i < g.elements().size(); ++i) {
      const Permutation& e = g.elements()[i];
      if (closure.count(e)) continue;
      int o = e.order();
      if (o > best_order) {
        best_order = o;
        best = static_cast<int>(i);
      }
    }
    chosen.push_back(g.elements()[best]);
    seq.element_indices.push_back(best);
    PermGroup sub = PermGroup::generate(g.degree(), chosen, g.order());
    closure = std::set<Permutation>(sub.elements().begin(), sub.elements().end());
    seq.prefix_orders.push_back(closure.size());
  }
  return seq;
}

// Extends gen -> image assignments to the whole group along the Cayley graph,
// checking every edge. Returns the element map, or empty on failure.
std::vector<int> hom_extension(const PermGroup& g, const std::vector<int>& gen_indices,
                               const PermGroup& h, const std::vector<Permutation>& images,
                               bool require_injective) {
  const std::size_t n = g.order();
  std::vector<int> f(n, -1);
  int id_g = g.element_index(Permutation::identity(g.degree()));
  int id_h = h.element_index(Permutation::identity(h.degree()));
  f[id_g] = id_h;
  std::vector<int> queue{id_g};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int e = queue[qi];
    for (std::size_t j = 0; j < gen_indices.size(); ++j) {
      int t = g.element_index(g.elements()[e] * g.elements()[gen_indices[j]]);
      int ft = h.element_index(h.elements()[f[e]] * images[j]);
      if (ft < 0) return {};
      if (f[t] == -1) {
        f[t] = ft;
        queue.push_back(t);
      } else if (f[t] != ft) {
        return {};
      }
    }
  }
  if (queue.size() != n) return {};  // gen_indices did not generate g
  if (require_injective) {
    std::vector<char> seen(h.order(), 0);
    for (int v : f) {
      if (seen[v]) return {};
      seen[v] = 1;
    }
  }
  return f;
}

bool search_monomorphisms(const PermGroup& g, const PermGroup& h, const GenSeq& seq,
                          std::size_t depth, std::vector<Permutation>& images,
                          std::vector<Permutation>& partial,
                          const std::function<bool(const std::vector<int>&)>& callback) {
  if (depth == seq.element_indices.size()) {
    std::vector<int> f = hom_extension(g, seq.element_indices, h, images, true);
    if (f.empty()) return false;
    return callback(f);
  }
  const Permutation& a = g.elements()[seq.element_indices[depth]];
  const int target_order = a.order();
  for (const Permutation& b : h.elements()) {
    if (b.order() != target_order) continue;
    partial.push_back(b);
    PermGroup sub = PermGroup::generate(h.degree(), partial, h.order());
    bool ok = sub.order() == seq.prefix_orders[depth];
    if (ok) {
      images.push_back(b);
      if (search_monomorphisms(g, h, seq, depth + 1, images, partial, callback)) return true;
      images.pop_back();
    }
    partial.pop_back();
  }
  return false;
}

std::multiset<int> element_order_multiset(const PermGroup& g) {
  std::multiset<int> orders;
  for (const Permutation& e : g.elements()) orders.insert(e.order());
  return orders;
}

std::size_t derived_subgroup_order(const PermGroup& g) {
  // Normal closure of the generator commutators.
  std::vector<Permutation> gens;
  for (const Permutation& a : g.generators())
    for (const Permutation& b : g.generators())
      gens.push_back(a.inverse() * b.inverse() * a * b);
  PermGroup k = PermGroup::generate(g.degree(), gens, g.order());
  while (true) {
    std::vector<Permutation> missing;
    for (const Permutation& e : k.elements()) {
      for (const Permutation& c : g.generators()) {
        Permutation conj = c.inverse() * e * c;
        if (!k.contains(conj)) missing.push_back(std::move(conj));
      }
    }
    if (missing.empty()) break;
    gens.insert(gens.end(), missing.begin(), missing.end());
    k = PermGroup::generate(g.degree(), gens, g.order());
  }
  return k.order();
}

}  // namespace

bool for_each_monomorphism(const PermGroup& g, const PermGroup& h,
                           const std::function<bool(const std::vector<int>&)>& callback) {
  if (g.order() > h.order()) return false;
  if (g.order() == 1) {
    std::vector<int> f(1, h.element_index(Permutation::identity(h.degree())));
    return callback(f);
  }
  GenSeq seq = greedy_generating_sequence(g);
  std::vector<Permutation> images, partial;
  return search_monomorphisms(g, h, seq, 0, images, partial, callback);
}

bool are_isomorphic(const PermGroup& g, const PermGroup& h, std::size_t order_cap) {
  if (g.order() > order_cap || h.order() > order_cap)
    throw CapExceeded("are_isomorphic: order exceeds cap of " + std::to_string(order_cap));
  if (g.order() != h.order()) return false;
  if (element_order_multiset(g) != element_order_multiset(h)) return false;
  if (center_of(g).order() != center_of(h).order()) return false;
  if (derived_subgroup_order(g) != derived_subgroup_order(h)) return false;
  return for_each_monomorphism(g, h, [](const std::vector<int>&) { return true; });
}

}  // namespace mcg
