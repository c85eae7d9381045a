#include <doctest.h>

#include <random>

#include "mcg/errors.hpp"
#include "mcg/sphere_actions.hpp"

using namespace mcg;

namespace {

ActionDescriptor descriptor(int r, RotationType rot, unsigned mask, int k) {
  ActionDescriptor d{r, rot, exceptional_orbit_profile(rot), k};
  for (std::size_t i = 0; i < d.slots.size(); ++i)
    if (mask & (1u << i)) d.slots[i].marked = true;
  d.validate();
  return d;
}

}  // namespace

TEST_CASE("exceptional orbit profiles") {
  auto octa = exceptional_orbit_profile(RotationType::octahedral());
  REQUIRE(octa.size() == 3);
  CHECK(octa[0].kind == SlotKind::Faces);
  CHECK(octa[0].length == 6);
  CHECK(octa[0].stabilizer_order == 4);
  CHECK(octa[1].length == 12);
  CHECK(octa[1].stabilizer_order == 2);
  CHECK(octa[2].length == 8);
  CHECK(octa[2].stabilizer_order == 3);

  auto c7 = exceptional_orbit_profile(RotationType::cyclic(7));
  REQUIRE(c7.size() == 2);
  CHECK(c7[0].kind == SlotKind::Poles);
  CHECK(c7[0].length == 1);
  CHECK(c7[0].stabilizer_order == 7);

  auto icosa = exceptional_orbit_profile(RotationType::icosahedral());
  CHECK(icosa[0].length == 12);
  CHECK(icosa[0].stabilizer_order == 5);
  CHECK(icosa[1].length == 30);
  CHECK(icosa[2].length == 20);

  for (const auto& rot :
       {RotationType::cyclic(5), RotationType::dihedral(2), RotationType::dihedral(6),
        RotationType::tetrahedral(), RotationType::octahedral(), RotationType::icosahedral()}) {
    for (const OrbitSlot& s : exceptional_orbit_profile(rot))
      CHECK(s.length * s.stabilizer_order == rot.order());
  }
}

TEST_CASE("enumerate_descriptors: spot values") {
  SUBCASE("r=26 octahedral: only the fully marked case, k=0") {
    auto ds = enumerate_descriptors(26, RotationType::octahedral());
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].marked_mask() == 7u);
    CHECK(ds[0].free_orbits == 0);
  }
  SUBCASE("r=62 icosahedral: only the fully marked case, k=0") {
    auto ds = enumerate_descriptors(62, RotationType::icosahedral());
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].marked_mask() == 7u);
    CHECK(ds[0].free_orbits == 0);
  }
  SUBCASE("r=14 tetrahedral: only the fully marked case, k=0") {
    auto ds = enumerate_descriptors(14, RotationType::tetrahedral());
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].marked_mask() == 7u);
    CHECK(ds[0].free_orbits == 0);
  }
  SUBCASE("r=4 tetrahedral: faces-only and vertices-only") {
    auto ds = enumerate_descriptors(4, RotationType::tetrahedral());
    REQUIRE(ds.size() == 2);
    CHECK(ds[0].marked_mask() == 1u);  // faces
    CHECK(ds[1].marked_mask() == 4u);  // vertices
    CHECK(ds[0].free_orbits == 0);
    CHECK(ds[1].free_orbits == 0);
  }
  SUBCASE("r=3 cyclic(2): one pole marked, k=1") {
    auto ds = enumerate_descriptors(3, RotationType::cyclic(2));
    REQUIRE(ds.size() == 1);
    CHECK(ds[0].marked_mask() == 1u);
    CHECK(ds[0].free_orbits == 1);
  }
}

TEST_CASE("point count equation holds for every descriptor over a range of r") {
  for (int r = 3; r <= 120; ++r) {
    for (const ActionDescriptor& d : enumerate_descriptors(r)) {
      CHECK(d.r == d.rot.order() * d.free_orbits + d.marked_point_sum());
      CHECK_NOTHROW(d.validate());
    }
  }
}

TEST_CASE("realize: worked examples") {
  SUBCASE("octahedral all marked at r=26") {
    ActionDescriptor d = descriptor(26, RotationType::octahedral(), 7u, 0);
    RealizedAction ra = realize(d);
    CHECK(ra.group.order() == 24);
    auto os = ra.group.orbits_and_stabilizers();
    REQUIRE(os.size() == 3);
    std::string why;
    CHECK_MESSAGE(realization_matches_profile(d, ra, &why), why);
  }
  SUBCASE("cyclic(5) one pole marked, k=1 at r=6") {
    ActionDescriptor d = descriptor(6, RotationType::cyclic(5), 1u, 1);
    RealizedAction ra = realize(d);
    CHECK(ra.group.order() == 5);
    auto os = ra.group.orbits_and_stabilizers();
    REQUIRE(os.size() == 2);
    CHECK(os[0].points.size() == 1);
    CHECK(os[1].points.size() == 5);
  }
  SUBCASE("dihedral(3) poles+vertices at r=5") {
    ActionDescriptor d = descriptor(5, RotationType::dihedral(3), 3u, 0);
    RealizedAction ra = realize(d);
    CHECK(ra.group.order() == 6);
    auto os = ra.group.orbits_and_stabilizers();
    REQUIRE(os.size() == 2);
    CHECK(os[0].points.size() == 2);
    CHECK(os[1].points.size() == 3);
  }
}

TEST_CASE("realize matches the descriptor profile across r <= 60") {
  for (int r = 3; r <= 60; ++r) {
    for (const ActionDescriptor& d : enumerate_descriptors(r)) {
      RealizedAction ra = realize(d);
      std::string why;
      CHECK_MESSAGE(realization_matches_profile(d, ra, &why),
                    d.rot.name() << " at r=" << r << ": " << why);
    }
  }
}

TEST_CASE("is_maximal: worked examples") {
  CHECK(is_maximal(descriptor(4, RotationType::tetrahedral(), 4u, 0)));        // case (e)
  CHECK_FALSE(is_maximal(descriptor(12, RotationType::tetrahedral(), 0u, 1))); // case (a)
  CHECK_FALSE(is_maximal(descriptor(4, RotationType::cyclic(3), 1u, 1)));
  CHECK_FALSE(is_maximal(descriptor(3, RotationType::cyclic(2), 1u, 1)));
  CHECK(is_maximal(descriptor(5, RotationType::cyclic(4), 1u, 1)));
  CHECK(is_maximal(descriptor(5, RotationType::dihedral(5), 2u, 0)));
  CHECK(is_maximal(descriptor(5, RotationType::dihedral(3), 3u, 0)));
  CHECK_FALSE(is_maximal(descriptor(6, RotationType::dihedral(4), 3u, 0)));
  CHECK_FALSE(is_maximal(descriptor(4, RotationType::dihedral(2), 3u, 0)));
  CHECK(is_maximal(descriptor(26, RotationType::octahedral(), 7u, 0)));
}

TEST_CASE("maximal_extension: worked examples") {
  SUBCASE("tetrahedral (a) at r=12 extends to octahedral edges-marked") {
    auto ext = maximal_extension(descriptor(12, RotationType::tetrahedral(), 0u, 1));
    REQUIRE(ext.has_value());
    CHECK(ext->rot == RotationType::octahedral());
    CHECK(ext->marked_mask() == 2u);  // edges
    CHECK(ext->free_orbits == 0);
  }
  SUBCASE("dihedral(4) poles+vertices at r=6 extends to octahedral faces-marked") {
    auto ext = maximal_extension(descriptor(6, RotationType::dihedral(4), 3u, 0));
    REQUIRE(ext.has_value());
    CHECK(ext->rot == RotationType::octahedral());
    CHECK(ext->marked_mask() == 1u);  // faces
    CHECK(ext->free_orbits == 0);
  }
  SUBCASE("maximal descriptors have no extension") {
    CHECK_FALSE(maximal_extension(descriptor(5, RotationType::dihedral(5), 2u, 0)).has_value());
  }
}

TEST_CASE("cyclic extension chains take at most 3 steps and end at the allowed orders") {
  for (int r = 3; r <= 100; ++r) {
    for (int n = 2; n <= r; ++n) {
      for (const ActionDescriptor& d : enumerate_descriptors(r, RotationType::cyclic(n))) {
        auto chain = extension_chain(d);
        CHECK(chain.size() <= 3);
        const ActionDescriptor& last = chain.empty() ? d : chain.back();
        CHECK(is_maximal(last));
        const int order = last.rot.order();
        bool allowed = order == r - 1 || order == 2 * r || order == 2 * (r - 2) || order == 12 ||
                       order == 24 || order == 60;
        CHECK_MESSAGE(allowed, "chain from cyclic(" << n << ") at r=" << r << " ends at order "
                                                    << order);
      }
    }
  }
}

TEST_CASE("every non-maximal descriptor extends to a maximal one at the same r") {
  for (int r = 3; r <= 120; ++r) {
    for (const ActionDescriptor& d : enumerate_descriptors(r)) {
      auto ext = maximal_extension(d);
      if (is_maximal(d)) {
        CHECK_FALSE(ext.has_value());
      } else {
        REQUIRE(ext.has_value());
        CHECK(ext->r == r);
        CHECK(is_maximal(*ext));
        CHECK(ext->rot.order() > d.rot.order());
      }
    }
  }
}

TEST_CASE("maximal_types: worked examples") {
  SUBCASE("r=5") {
    std::set<GroupName> expect{GroupName::cyclic(4), GroupName::dihedral(5),
                               GroupName::dihedral(3)};
    CHECK(maximal_types(5, TypesMode::Congruence) == expect);
    CHECK(maximal_types(5, TypesMode::Derived) == expect);
  }
  SUBCASE("r=12") {
    std::set<GroupName> expect{GroupName::cyclic(11), GroupName::dihedral(12),
                               GroupName::dihedral(10), GroupName::octahedral(),
                               GroupName::icosahedral()};
    CHECK(maximal_types(12, TypesMode::Congruence) == expect);
    CHECK(maximal_types(12, TypesMode::Derived) == expect);
  }
  SUBCASE("r=4") {
    std::set<GroupName> expect{GroupName::dihedral(4), GroupName::tetrahedral()};
    CHECK(maximal_types(4, TypesMode::Congruence) == expect);
    CHECK(maximal_types(4, TypesMode::Derived) == expect);
  }
  SUBCASE("r=3 diverges as documented") {
    std::set<GroupName> derived{GroupName::dihedral(3)};
    std::set<GroupName> congruence{GroupName::cyclic(2), GroupName::dihedral(3)};
    CHECK(maximal_types(3, TypesMode::Derived) == derived);
    CHECK(maximal_types(3, TypesMode::Congruence) == congruence);
  }
}

TEST_CASE("maximal_types: derived equals congruence for r in [4, 500]") {
  for (int r = 4; r <= 500; ++r)
    CHECK(maximal_types(r, TypesMode::Derived) == maximal_types(r, TypesMode::Congruence));
}

TEST_CASE("order_n_element_exists: worked examples and divisibility sweep") {
  CHECK(order_n_element_exists(7, 6));
  CHECK_FALSE(order_n_element_exists(7, 4));
  for (int n = 3; n <= 40; ++n) CHECK(order_n_element_exists(n, n));
  for (int r = 3; r <= 300; ++r) {
    for (int n = 2; n <= r; ++n) {
      bool divides = (r % n == 0) || ((r - 1) % n == 0) || ((r - 2) % n == 0);
      CHECK(order_n_element_exists(r, n) == divides);
    }
  }
}

TEST_CASE("embedding certificates exist for small non-maximal descriptors") {
  std::mt19937 rng(2024);
  for (int r = 3; r <= 14; ++r) {
    for (const ActionDescriptor& d : enumerate_descriptors(r)) {
      if (is_maximal(d)) continue;
      auto ext = maximal_extension(d);
      REQUIRE(ext.has_value());
      auto sigma = embedding_relabeling(d, *ext);
      REQUIRE_MESSAGE(sigma.has_value(),
                      d.rot.name() << " at r=" << r << " into " << ext->rot.name());
      // re-verify the certificate from scratch
      RealizedAction a = realize(d);
      RealizedAction b = realize(*ext);
      Permutation sinv = sigma->inverse();
      for (const Permutation& gen : a.group.generators())
        CHECK(b.group.contains(*sigma * gen * sinv));
    }
  }
}

TEST_CASE("realize rejects malformed descriptors") {
  ActionDescriptor bad{7, RotationType::cyclic(3), exceptional_orbit_profile(RotationType::cyclic(3)), 2};
  CHECK_THROWS_AS(bad.validate(), InfeasibleDescriptor);  // 7 != 6
  CHECK_THROWS_AS(realize(bad), InfeasibleDescriptor);
}
