#pragma once

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "mcg/group_name.hpp"
#include "mcg/sphere_actions.hpp"

namespace mcg {

/// Canonical form deciding conjugacy of finite subgroups at fixed r: the
/// isomorphism type, the sorted multiset of (length, stabilizer order) pairs
/// over the marked exceptional orbits, and the free orbit count. Comparing
/// (length, stabilizer) pairs rather than slot kinds identifies the dual
/// tetrahedral slots, the dihedral vertex/edge slots, the two cyclic poles and
/// the Klein axis pairs; the octahedral and icosahedral slots have pairwise
/// distinct lengths, so nothing merges accidentally there.
struct ConjugacyInvariant {
  GroupName iso;
  std::vector<std::pair<int, int>> marked_profile;  // sorted
  int free_count = 0;

  friend bool operator==(const ConjugacyInvariant& a, const ConjugacyInvariant& b) {
    return a.iso == b.iso && a.marked_profile == b.marked_profile && a.free_count == b.free_count;
  }
  friend bool operator<(const ConjugacyInvariant& a, const ConjugacyInvariant& b);
};

ConjugacyInvariant conjugacy_invariant(const ActionDescriptor& d);

/// True iff the invariants coincide. Throws MismatchedR when d1.r != d2.r.
bool are_conjugate(const ActionDescriptor& d1, const ActionDescriptor& d2);

enum class CountMode { Enumerative, ClosedForm };

/// Number of conjugacy classes of subgroups of type iso at r. Closed form: 2
/// for Z2 with r even and for D_n with 2n | r or 2n | r-2, otherwise 1 when
/// feasible and 0 when not.
std::size_t count_classes(int r, const GroupName& iso, CountMode mode);

struct ClassRow {
  ConjugacyInvariant invariant;
  ActionDescriptor representative;
  bool maximal;
  std::vector<std::size_t> member_indices;  // into enumerate_descriptors(r)
};

/// One row per conjugacy class of finite subgroups at r, ordered by the first
/// occurrence of each class in the canonical descriptor enumeration.
std::vector<ClassRow> class_table(int r);

}  // namespace mcg
