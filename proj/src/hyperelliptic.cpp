#include "mcg/hyperelliptic.hpp"

#include <stdexcept>

#include "mcg/errors.hpp"
#include "mcg/perm_group.hpp"

namespace mcg {

bool admissible(LiftName name, long g) {
  if (g < 2) return false;
  switch (name) {
    case LiftName::Z4g2:
    case LiftName::V2g2:
      return true;
    case LiftName::U2g:
      return g >= 3;
    case LiftName::Z2xA4:
      return g % 6 == 1;
    case LiftName::SL23:
      return g % 6 == 4;
    case LiftName::Z2xS4:
      return g % 12 == 3 || g % 12 == 11;
    case LiftName::W1:
      return g % 12 == 2 || g % 12 == 6;
    case LiftName::W2:
      return g % 12 == 5 || g % 12 == 9;
    case LiftName::W3:
      return g % 12 == 0 || g % 12 == 8;
    case LiftName::Z2xA5:
      return g % 30 == 5 || g % 30 == 9 || g % 30 == 15 || g % 30 == 29;
    case LiftName::SL25:
      return g % 30 == 0 || g % 30 == 14 || g % 30 == 20 || g % 30 == 24;
  }
  return false;
}

long smallest_admissible_g(LiftName name) {
  for (long g = 2; g <= 60; ++g)
    if (admissible(name, g)) return g;
  throw std::logic_error("smallest_admissible_g: none found");
}

std::string lift_display_name(LiftName name, long g) {
  switch (name) {
    case LiftName::Z4g2:
      return "Z" + std::to_string(4 * g + 2);
    case LiftName::V2g2:
      return "V" + std::to_string(2 * g + 2);
    case LiftName::U2g:
      return "U" + std::to_string(2 * g);
    case LiftName::Z2xA4:
      return "Z2xA4";
    case LiftName::SL23:
      return "SL(2,3)";
    case LiftName::Z2xS4:
      return "Z2xS4";
    case LiftName::W1:
      return "W1";
    case LiftName::W2:
      return "W2";
    case LiftName::W3:
      return "W3";
    case LiftName::Z2xA5:
      return "Z2xA5";
    case LiftName::SL25:
      return "SL(2,5)";
  }
  return "?";
}

std::string presentation_text_of(LiftName name, long g) {
  if (!admissible(name, g))
    throw NotAdmissible("presentation_text_of: " + lift_display_name(name, g) +
                        " is not admissible at g=" + std::to_string(g));
  switch (name) {
    case LiftName::Z4g2:
      return "<x | x^" + std::to_string(4 * g + 2) + ">";
    case LiftName::V2g2:
      return "<x,y | x^4, y^" + std::to_string(2 * g + 2) + ", (x*y)^2, (x^-1*y)^2>";
    case LiftName::U2g:
      return "<x,y | x^2, y^" + std::to_string(4 * g) + ", x*y*x*y^" + std::to_string(2 * g + 1) +
             ">";
    case LiftName::Z2xA4:
      return "<x,y,z | x^3, y^2, (x*y)^3, z^2, z*x*z^-1*x^-1, z*y*z^-1*y^-1>";
    case LiftName::SL23:
      return "<x,y | x^4, y^3, (x*y)^3, y*x^2*y^-1*x^2>";
    case LiftName::Z2xS4:
      return "<x,y,z | x^4, y^2, (x*y)^3, z^2, z*x*z^-1*x^-1, z*y*z^-1*y^-1>";
    case LiftName::W1:
      return "<x,y | x^2, y^3, (x*y)^4*(y*x)^4, (x*y)^8>";
    case LiftName::W2:
      return "<x,y | x^4, y^3, y*x^2*y^-1*x^2, (x*y)^4>";
    case LiftName::W3:
      return "<x,y | x^4, y^3, (x*y)^8, x^2*(x*y)^4>";
    case LiftName::Z2xA5:
      return "<x,y,z | x^5, y^2, (x*y)^3, z^2, z*x*z^-1*x^-1, z*y*z^-1*y^-1>";
    case LiftName::SL25:
      return "<x,y | x^4, y^3, (x*y)^5, y*x^2*y^-1*x^2>";
  }
  throw NotAdmissible("presentation_text_of: unknown lift");
}

Presentation presentation_of(LiftName name, long g) {
  return parse_presentation(presentation_text_of(name, g));
}

namespace {

GroupName base_of(LiftName name, long g) {
  const long r = 2 * g + 2;
  switch (name) {
    case LiftName::Z4g2:
      return GroupName::cyclic(static_cast<int>(r - 1));
    case LiftName::V2g2:
      return GroupName::dihedral(static_cast<int>(r));
    case LiftName::U2g:
      return GroupName::dihedral(static_cast<int>(r - 2));
    case LiftName::Z2xA4:
    case LiftName::SL23:
      return GroupName::alternating4();
    case LiftName::Z2xS4:
    case LiftName::W1:
    case LiftName::W2:
    case LiftName::W3:
      return GroupName::symmetric4();
    case LiftName::Z2xA5:
    case LiftName::SL25:
      return GroupName::alternating5();
  }
  throw NotAdmissible("base_of: unknown lift");
}

LiftRecord make_record(LiftName name, long g) {
  GroupName base = base_of(name, g);
  std::string text = presentation_text_of(name, g);
  const std::size_t expected = 2 * base.order();
  Presentation pres = parse_presentation(text);
  return LiftRecord{name, g, std::move(base), expected, std::move(pres), std::move(text),
                    std::nullopt};
}

}  // namespace

std::vector<LiftRecord> lift_catalog(long g) {
  if (g < 2) throw std::invalid_argument("lift_catalog: g must be at least 2");
  std::vector<LiftRecord> out;
  for (LiftName name : kAllLiftNames)
    if (admissible(name, g)) out.push_back(make_record(name, g));
  return out;
}

LiftRecord verify_lift(LiftName name, long g, std::size_t max_cosets) {
  if (!admissible(name, g))
    throw NotAdmissible("verify_lift: " + lift_display_name(name, g) +
                        " is not admissible at g=" + std::to_string(g));
  LiftRecord rec = make_record(name, g);
  EnumerationResult en = todd_coxeter(rec.presentation, max_cosets);
  if (en.order != rec.expected_order)
    throw VerificationFailed("verify_lift: " + lift_display_name(name, g) + " enumerated to " +
                             std::to_string(en.order) + ", expected " +
                             std::to_string(rec.expected_order));

  PermGroup lift = table_to_permgroup(en.table);
  PermGroup center = center_of(lift);
  if (center.order() < 2)
    throw VerificationFailed("verify_lift: " + lift_display_name(name, g) +
                             " has trivial center");

  // The hyperelliptic involution is an order-2 element of the center. Every
  // center met here is cyclic (the whole group for the cyclic lift, order 4
  // for U_{2g} at odd g, order 2 otherwise), so the involution is unique; if a
  // center ever offered several, the quotient condition would single out the
  // right one.
  std::vector<Permutation> candidates;
  for (const Permutation& e : center.elements())
    if (e.order() == 2) candidates.push_back(e);
  if (candidates.empty())
    throw VerificationFailed("verify_lift: " + lift_display_name(name, g) +
                             " has no central involution");

  PermGroup base_model = construct(rec.base);
  for (const Permutation& z : candidates) {
    PermGroup quotient = quotient_by_central(lift, z);
    if (are_isomorphic(quotient, base_model)) {
      rec.verification = LiftVerification{en.order, center.order(), z.order(), true};
      return rec;
    }
  }
  throw VerificationFailed("verify_lift: no central quotient of " + lift_display_name(name, g) +
                           " is isomorphic to " + rec.base.to_string());
}

std::size_t count_maximal_classes(long g, ClassCountMode mode) {
  if (g < 2) throw std::invalid_argument("count_maximal_classes: g must be at least 2");
  if (mode == ClassCountMode::Catalog) return lift_catalog(g).size();
  const long m = g % 30;
  if (m == 0 || m == 5 || m == 9 || m == 14 || m == 15 || m == 20 || m == 24 || m == 29) return 5;
  if (g == 2) return 3;
  return 4;
}

}  // namespace mcg
