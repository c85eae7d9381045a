#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mcg/coset_table.hpp"
#include "mcg/group_name.hpp"
#include "mcg/presentation.hpp"

namespace mcg {

/// The eleven families of maximal finite subgroups of the hyperelliptic
/// mapping class group at genus g, each a central extension by the
/// hyperelliptic involution of a maximal rotation type at r = 2g+2.
enum class LiftName { Z4g2, V2g2, U2g, Z2xA4, SL23, Z2xS4, W1, W2, W3, Z2xA5, SL25 };

inline constexpr std::array<LiftName, 11> kAllLiftNames = {
    LiftName::Z4g2, LiftName::V2g2, LiftName::U2g,  LiftName::Z2xA4,
    LiftName::SL23, LiftName::Z2xS4, LiftName::W1,  LiftName::W2,
    LiftName::W3,   LiftName::Z2xA5, LiftName::SL25};

bool admissible(LiftName name, long g);
long smallest_admissible_g(LiftName name);

/// Family tag ("W2", "Z2xA5") or the concrete instance name for the
/// parameterized families ("Z22", "V12", "U10" at g = 5).
std::string lift_display_name(LiftName name, long g);

struct LiftVerification {
  std::size_t enumerated_order = 0;
  std::size_t center_order = 0;
  int central_involution_order = 0;
  bool quotient_isomorphic_to_base = false;
};

struct LiftRecord {
  LiftName name;
  long g;
  GroupName base;                 // quotient type down on the marked sphere
  std::size_t expected_order;     // 2 * order(base)
  Presentation presentation;
  std::string presentation_text;
  std::optional<LiftVerification> verification;
};

/// Exactly the admissible families at g, with presentations instantiated.
std::vector<LiftRecord> lift_catalog(long g);

Presentation presentation_of(LiftName name, long g);
std::string presentation_text_of(LiftName name, long g);

/// Enumerates the presentation, checks the order equals 2 * |base|, locates a
/// central involution and checks the central quotient is isomorphic to the
/// base. Throws NotAdmissible, CosetLimitExceeded or VerificationFailed.
LiftRecord verify_lift(LiftName name, long g, std::size_t max_cosets = kDefaultMaxCosets);

enum class ClassCountMode { Catalog, ClosedForm };

/// Number of conjugacy classes of maximal finite subgroups at genus g:
/// 5 when g mod 30 lies in {0,5,9,14,15,20,24,29}, 3 at g = 2, else 4.
std::size_t count_maximal_classes(long g, ClassCountMode mode);

}  // namespace mcg
