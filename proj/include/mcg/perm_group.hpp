#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "mcg/permutation.hpp"

namespace mcg {

inline constexpr std::size_t kDefaultOrderCap = 10'000;
inline constexpr std::size_t kIsomorphismOrderCap = 1'000;

struct OrbitInfo {
  std::vector<int> points;  // sorted
  std::size_t stabilizer_order;
};

/// A finite permutation group held as its complete sorted element list.
/// All in-scope groups are small (order a few hundred at most), so plain
/// closure beats a base-and-strong-generators structure here.
class PermGroup {
 public:
  /// Closes the generators under composition. Throws CapExceeded if the
  /// closure grows past order_cap. An empty generator list yields the
  /// trivial group on the given points.
  static PermGroup generate(int degree, std::vector<Permutation> generators,
                            std::size_t order_cap = kDefaultOrderCap);

  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

  bool contains(const Permutation& p) const;
  bool is_subgroup_of(const PermGroup& g) const;

  /// Index of an element in the sorted element list, or -1.
  int element_index(const Permutation& p) const;

  /// Orbits partition the points; stabilizer orders are counted directly
  /// from the element list, so the orbit-stabilizer identity is a real check.
  std::vector<OrbitInfo> orbits_and_stabilizers() const;

 private:
  PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

  int degree_;
  std::vector<Permutation> generators_;
  std::vector<Permutation> elements_;  // sorted, closed, contains the identity
};

/// Permutation action of g on the left cosets of h; degree = order(g)/order(h).
/// Coset numbering follows a breadth-first walk from h, so the result is
/// deterministic. Throws NotASubgroup.
PermGroup coset_action(const PermGroup& g, const PermGroup& h);

PermGroup center_of(const PermGroup& g);

/// Faithful model of g/<z> for a central involution z (action on the cosets
/// of <z>). Throws NotCentralInvolution.
PermGroup quotient_by_central(const PermGroup& g, const Permutation& z);

/// Fingerprint pre-filter (order, element-order multiset, center order,
/// derived-subgroup order), then backtracking over generator images.
/// Throws CapExceeded when either order exceeds order_cap.
bool are_isomorphic(const PermGroup& g, const PermGroup& h,
                    std::size_t order_cap = kIsomorphismOrderCap);

/// Enumerates injective homomorphisms g -> h by backtracking over images of a
/// greedy generating sequence. The callback receives, for each monomorphism,
/// the map element-index-in-g -> element-index-in-h; returning true stops the
/// search. Returns whether any callback returned true.
bool for_each_monomorphism(const PermGroup& g, const PermGroup& h,
                           const std::function<bool(const std::vector<int>&)>& callback);

}  // namespace mcg
