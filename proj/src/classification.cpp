#include "mcg/classification.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "mcg/errors.hpp"

namespace mcg {

bool operator<(const ConjugacyInvariant& a, const ConjugacyInvariant& b) {
  if (a.iso != b.iso) return a.iso < b.iso;
  return std::tie(a.marked_profile, a.free_count) < std::tie(b.marked_profile, b.free_count);
}

ConjugacyInvariant conjugacy_invariant(const ActionDescriptor& d) {
  d.validate();
  ConjugacyInvariant inv{d.rot.group_name(), {}, d.free_orbits};
  for (const OrbitSlot& s : d.slots)
    if (s.marked) inv.marked_profile.emplace_back(s.length, s.stabilizer_order);
  std::sort(inv.marked_profile.begin(), inv.marked_profile.end());
  return inv;
}

bool are_conjugate(const ActionDescriptor& d1, const ActionDescriptor& d2) {
  if (d1.r != d2.r) throw MismatchedR("are_conjugate: descriptors live at different r");
  return conjugacy_invariant(d1) == conjugacy_invariant(d2);
}

std::size_t count_classes(int r, const GroupName& iso, CountMode mode) {
  if (r < 3) throw std::invalid_argument("count_classes: r must be at least 3");
  std::optional<RotationType> rot = rotation_type_of(iso);
  if (!rot) return 0;  // no sphere action with this isomorphism type

  if (mode == CountMode::Enumerative) {
    std::vector<ActionDescriptor> ds = enumerate_descriptors(r, *rot);
    std::vector<ConjugacyInvariant> invs;
    for (const ActionDescriptor& d : ds) invs.push_back(conjugacy_invariant(d));
    std::sort(invs.begin(), invs.end());
    invs.erase(std::unique(invs.begin(), invs.end()), invs.end());
    return invs.size();
  }

  const bool feasible = !enumerate_descriptors(r, *rot).empty();
  if (rot->kind == RotationType::Kind::Cyclic && rot->n == 2 && r % 2 == 0) return 2;
  if (rot->kind == RotationType::Kind::Dihedral) {
    const int twon = 2 * rot->n;
    if (r % twon == 0 || (r - 2) % twon == 0) return 2;
  }
  return feasible ? 1 : 0;
}

std::vector<ClassRow> class_table(int r) {
  std::vector<ActionDescriptor> ds = enumerate_descriptors(r);
  std::vector<ClassRow> rows;
  std::map<ConjugacyInvariant, std::size_t> row_of;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    ConjugacyInvariant inv = conjugacy_invariant(ds[i]);
    auto it = row_of.find(inv);
    if (it == row_of.end()) {
      row_of.emplace(inv, rows.size());
      rows.push_back(ClassRow{std::move(inv), ds[i], is_maximal(ds[i]), {i}});
    } else {
      rows[it->second].member_indices.push_back(i);
    }
  }
  return rows;
}

}  // namespace mcg
