#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mcg/group_name.hpp"
#include "mcg/perm_group.hpp"

namespace mcg {

/// One of the five finite rotation groups of the sphere.
struct RotationType {
  enum class Kind { Cyclic, Dihedral, Tetrahedral, Octahedral, Icosahedral };

  Kind kind;
  int n = 0;  // cyclic/dihedral parameter

  static RotationType cyclic(int n);
  static RotationType dihedral(int n);
  static RotationType tetrahedral() { return {Kind::Tetrahedral, 0}; }
  static RotationType octahedral() { return {Kind::Octahedral, 0}; }
  static RotationType icosahedral() { return {Kind::Icosahedral, 0}; }

  int order() const;
  std::string name() const;  // "cyclic", "dihedral", "tetrahedral", ...
  GroupName group_name() const;

  friend auto operator<=>(const RotationType&, const RotationType&) = default;
};

/// Converts an isomorphism-type label back to a rotation type where one exists.
std::optional<RotationType> rotation_type_of(const GroupName& name);

enum class SlotKind { Poles, Vertices, Edges, Faces, AxisPair };

/// One exceptional orbit of the rotation group: an orbit of sphere points with
/// nontrivial stabilizer, which a descriptor may mark or leave unmarked.
struct OrbitSlot {
  SlotKind kind;
  int length;
  int stabilizer_order;
  bool marked = false;

  friend auto operator<=>(const OrbitSlot&, const OrbitSlot&) = default;
};

std::string slot_kind_name(SlotKind kind);  // "poles", "vertices", "edges", "faces", "axis"

/// Fixed exceptional-orbit template per rotation type, all slots unmarked:
/// cyclic has two length-1 pole slots, dihedral (n >= 3) one pole pair plus
/// vertex and edge orbits of length n, the Klein group three interchangeable
/// axis pairs, and the polyhedral types their face/edge/vertex orbits.
std::vector<OrbitSlot> exceptional_orbit_profile(const RotationType& rot);

/// Combinatorial signature of a finite group acting on the sphere with r
/// marked points: rotation type, which exceptional orbits are marked, and the
/// number of free marked orbits. Point count: r = order * k + sum of marked
/// slot lengths.
struct ActionDescriptor {
  int r;
  RotationType rot;
  std::vector<OrbitSlot> slots;
  int free_orbits = 0;  // k

  int marked_point_sum() const;
  unsigned marked_mask() const;

  /// Throws InfeasibleDescriptor when the slots do not match the rotation
  /// type's template or the point count equation fails.
  void validate() const;

  friend bool operator==(const ActionDescriptor&, const ActionDescriptor&) = default;
};

/// All descriptors at r for one rotation type, in marked-mask order. The two
/// cyclic poles and the three Klein axis pairs are interchangeable, so their
/// markings are enumerated as counts (lowest slots marked first).
std::vector<ActionDescriptor> enumerate_descriptors(int r, const RotationType& rot);

/// All descriptors at r over every rotation type, ordered by
/// (group order, type name, marked mask).
std::vector<ActionDescriptor> enumerate_descriptors(int r);

struct PointLabel {
  int slot = -1;        // index into descriptor slots, or -1 for a free orbit point
  int free_orbit = -1;  // free orbit id, or -1 for a slot point
  int index = 0;        // position inside the orbit
};

struct RealizedAction {
  PermGroup group;
  std::vector<PointLabel> labels;
};

/// Explicit permutation model on the r marked points: marked exceptional
/// orbits are realized from coset actions on the standard models, free marked
/// orbits as regular actions. Faithful for every valid descriptor.
RealizedAction realize(const ActionDescriptor& d);

/// Checks that a realization reproduces the descriptor's orbit lengths and
/// stabilizer orders exactly and is faithful.
bool realization_matches_profile(const ActionDescriptor& d, const RealizedAction& ra,
                                 std::string* why = nullptr);

bool is_maximal(const ActionDescriptor& d);

/// Single containment step of the extension chain, or nullopt when maximal.
std::optional<ActionDescriptor> extension_step(const ActionDescriptor& d);

/// Descriptors visited by iterating extension_step, excluding d itself.
std::vector<ActionDescriptor> extension_chain(const ActionDescriptor& d);

/// Final maximal descriptor containing d (up to point relabeling), or nullopt
/// when d is already maximal.
std::optional<ActionDescriptor> maximal_extension(const ActionDescriptor& d);

enum class TypesMode { Congruence, Derived };

/// Isomorphism types of the maximal finite subgroups at r. Congruence mode
/// transcribes the closed-form conditions; derived mode filters the descriptor
/// enumeration through is_maximal. The two agree for every r >= 4; at r = 3
/// they differ by {Z2} (one documented divergence).
std::set<GroupName> maximal_types(int r, TypesMode mode);

/// Whether some order-n cyclic action exists at r (equivalently n divides one
/// of r, r-1, r-2).
bool order_n_element_exists(int r, int n);

/// Backtracking relabeling search: a permutation s of the points with
/// s realize(d) s^-1 contained in realize(target), if one exists.
std::optional<Permutation> embedding_relabeling(const ActionDescriptor& d,
                                                const ActionDescriptor& target);

}  // namespace mcg
