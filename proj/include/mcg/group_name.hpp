#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace mcg {

class PermGroup;

/// Isomorphism-type label for the groups handled by this library.
///
/// Tetrahedral/Alternating4, Octahedral/Symmetric4 and Icosahedral/Alternating5
/// are the same isomorphism types under two naming conventions (geometric vs
/// abstract); comparisons always identify them via one fixed normalization table.
class GroupName {
 public:
  enum class Tag {
    Cyclic,
    Dihedral,
    Tetrahedral,
    Octahedral,
    Icosahedral,
    Symmetric4,
    Alternating4,
    Alternating5,
    DirectProductZ2,
    SL2,
  };

  static GroupName cyclic(int n);
  static GroupName dihedral(int n);
  static GroupName tetrahedral() { return GroupName(Tag::Tetrahedral); }
  static GroupName octahedral() { return GroupName(Tag::Octahedral); }
  static GroupName icosahedral() { return GroupName(Tag::Icosahedral); }
  static GroupName symmetric4() { return GroupName(Tag::Symmetric4); }
  static GroupName alternating4() { return GroupName(Tag::Alternating4); }
  static GroupName alternating5() { return GroupName(Tag::Alternating5); }
  static GroupName direct_product_z2(GroupName inner);
  static GroupName sl2(int p);

  Tag tag() const { return tag_; }
  int n() const { return n_; }
  const GroupName& inner() const;

  /// Abstract form: polyhedral tags become Alternating4/Symmetric4/Alternating5.
  GroupName normalized() const;

  std::size_t order() const;

  /// "Z5", "D4", "A4", "S4", "A5", "Z2xS4", "SL(2,3)", ...
  std::string to_string() const;

  friend bool operator==(const GroupName& a, const GroupName& b);
  friend bool operator!=(const GroupName& a, const GroupName& b) { return !(a == b); }
  /// Orders by (group order, name); consistent with the normalized equality.
  friend bool operator<(const GroupName& a, const GroupName& b);

 private:
  explicit GroupName(Tag tag, int n = 0) : tag_(tag), n_(n) {}

  Tag tag_;
  int n_ = 0;  // cyclic/dihedral parameter, or p for SL2
  std::shared_ptr<const GroupName> inner_;
};

/// Standard faithful permutation model of the named group.
PermGroup construct(const GroupName& name);

/// Accepts "Z5"/"C5", "D4", "A4", "S4", "A5", "tetrahedral", "SL(2,5)", ...
std::optional<GroupName> parse_group_name(std::string_view text);

}  // namespace mcg
