#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mcg/errors.hpp"
#include "mcg/group_name.hpp"
#include "mcg/perm_group.hpp"

using namespace mcg;

namespace {

Permutation cyc(int degree, std::vector<std::vector<int>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

// Exhaustive isomorphism test used as an independent oracle: tries every
// image tuple for a naively chosen generating sequence, no fingerprints.
bool iso_bruteforce(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return false;
  // first non-redundant elements in sorted order
  std::vector<Permutation> gens;
  std::vector<std::size_t> prefix;
  {
    PermGroup closure = PermGroup::trivial(g.degree());
    for (const Permutation& e : g.elements()) {
      if (closure.contains(e)) continue;
      gens.push_back(e);
      closure = PermGroup::generate(g.degree(), gens, g.order());
      prefix.push_back(closure.order());
      if (closure.order() == g.order()) break;
    }
  }
  std::vector<int> gen_idx;
  for (const Permutation& e : gens) gen_idx.push_back(g.element_index(e));

  std::vector<Permutation> images;
  std::function<bool(std::size_t)> rec = [&](std::size_t depth) -> bool {
    if (depth == gens.size()) {
      // extend along the Cayley graph and check every edge
      std::vector<int> f(g.order(), -1);
      f[g.element_index(Permutation::identity(g.degree()))] =
          h.element_index(Permutation::identity(h.degree()));
      std::vector<int> queue{g.element_index(Permutation::identity(g.degree()))};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int e = queue[qi];
        for (std::size_t j = 0; j < gens.size(); ++j) {
          int t = g.element_index(g.elements()[e] * gens[j]);
          int ft = h.element_index(h.elements()[f[e]] * images[j]);
          if (f[t] == -1) {
            f[t] = ft;
            queue.push_back(t);
          } else if (f[t] != ft) {
            return false;
          }
        }
      }
      if (queue.size() != g.order()) return false;
      std::set<int> distinct(f.begin(), f.end());
      return distinct.size() == g.order();
    }
    for (const Permutation& b : h.elements()) {
      images.push_back(b);
      if (rec(depth + 1)) return true;
      images.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace

TEST_CASE("generate: closure sizes from the worked examples") {
  CHECK(PermGroup::generate(3, {cyc(3, {{0, 1, 2}})}).order() == 3);
  CHECK(PermGroup::generate(4, {cyc(4, {{0, 1, 2}}), cyc(4, {{0, 1}, {2, 3}})}).order() == 12);
  CHECK(PermGroup::generate(5, {}).order() == 1);
}

TEST_CASE("generate: cap exceeded") {
  CHECK_THROWS_AS(PermGroup::generate(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 1}})}, 10),
                  CapExceeded);
}

TEST_CASE("generate: closure property on a sample") {
  PermGroup g = construct(GroupName::symmetric4());
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int i = 0; i < 200; ++i) {
    const Permutation& a = g.elements()[pick(rng)];
    const Permutation& b = g.elements()[pick(rng)];
    CHECK(g.contains(a * b));
    CHECK(g.contains(a.inverse()));
  }
}

TEST_CASE("orbits_and_stabilizers: worked examples") {
  SUBCASE("3-cycle on 4 points") {
    PermGroup g = PermGroup::generate(4, {cyc(4, {{0, 1, 2}})});
    auto os = g.orbits_and_stabilizers();
    REQUIRE(os.size() == 2);
    CHECK(os[0].points == std::vector<int>{0, 1, 2});
    CHECK(os[0].stabilizer_order == 1);
    CHECK(os[1].points == std::vector<int>{3});
    CHECK(os[1].stabilizer_order == 3);
  }
  SUBCASE("dihedral of order 6 on triangle vertices") {
    PermGroup g = construct(GroupName::dihedral(3));
    auto os = g.orbits_and_stabilizers();
    REQUIRE(os.size() == 1);
    CHECK(os[0].points.size() == 3);
    CHECK(os[0].stabilizer_order == 2);
  }
  SUBCASE("icosahedral group on its 12 face points") {
    PermGroup a5 = construct(GroupName::alternating5());
    PermGroup c5 = PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})});
    PermGroup faces = coset_action(a5, c5);
    REQUIRE(faces.degree() == 12);
    auto os = faces.orbits_and_stabilizers();
    REQUIRE(os.size() == 1);
    CHECK(os[0].points.size() == 12);
    CHECK(os[0].stabilizer_order == 5);
  }
}

TEST_CASE("orbit-stabilizer identity holds on assorted groups") {
  for (GroupName name : {GroupName::alternating4(), GroupName::symmetric4(), GroupName::sl2(3),
                         GroupName::dihedral(6), GroupName::direct_product_z2(GroupName::alternating4())}) {
    PermGroup g = construct(name);
    std::size_t total = 0;
    for (const OrbitInfo& o : g.orbits_and_stabilizers()) {
      CHECK(o.stabilizer_order * o.points.size() == g.order());
      total += o.points.size();
    }
    CHECK(total == static_cast<std::size_t>(g.degree()));
  }
}

TEST_CASE("coset_action: degrees from the worked examples") {
  PermGroup a4 = construct(GroupName::alternating4());
  PermGroup s4 = construct(GroupName::symmetric4());
  PermGroup a5 = construct(GroupName::alternating5());
  CHECK(coset_action(a4, PermGroup::generate(4, {cyc(4, {{0, 1, 2}})})).degree() == 4);
  CHECK(coset_action(s4, PermGroup::generate(4, {cyc(4, {{0, 1, 2, 3}})})).degree() == 6);
  CHECK(coset_action(a5, PermGroup::generate(5, {cyc(5, {{0, 1, 2, 3, 4}})})).degree() == 12);
}

TEST_CASE("coset_action: rejects non-subgroups") {
  PermGroup a4 = construct(GroupName::alternating4());
  PermGroup s2 = PermGroup::generate(4, {cyc(4, {{0, 1}})});  // odd, not inside A4
  CHECK_THROWS_AS(coset_action(a4, s2), NotASubgroup);
}

TEST_CASE("center: worked examples") {
  CHECK(center_of(construct(GroupName::cyclic(12))).order() == 12);
  CHECK(center_of(construct(GroupName::alternating4())).order() == 1);
  CHECK(center_of(construct(GroupName::sl2(3))).order() == 2);
  CHECK(center_of(construct(GroupName::dihedral(4))).order() == 2);
}

TEST_CASE("quotient_by_central: worked examples") {
  SUBCASE("SL(2,3) by its central involution is A4") {
    PermGroup g = construct(GroupName::sl2(3));
    PermGroup z = center_of(g);
    REQUIRE(z.order() == 2);
    Permutation inv = z.elements()[0].is_identity() ? z.elements()[1] : z.elements()[0];
    PermGroup q = quotient_by_central(g, inv);
    CHECK(q.order() == 12);
    CHECK(are_isomorphic(q, construct(GroupName::alternating4())));
  }
  SUBCASE("Z2 x S4 by the factor generator is S4") {
    PermGroup g = construct(GroupName::direct_product_z2(GroupName::symmetric4()));
    Permutation z = cyc(6, {{0, 1}});
    PermGroup q = quotient_by_central(g, z);
    CHECK(q.order() == 24);
    CHECK(are_isomorphic(q, construct(GroupName::symmetric4())));
  }
  SUBCASE("dihedral of order 8 by its center") {
    PermGroup g = construct(GroupName::dihedral(4));
    PermGroup z = center_of(g);
    Permutation inv = z.elements()[0].is_identity() ? z.elements()[1] : z.elements()[0];
    CHECK(quotient_by_central(g, inv).order() == 4);
  }
  SUBCASE("rejects non-central and non-involutions") {
    PermGroup s4 = construct(GroupName::symmetric4());
    CHECK_THROWS_AS(quotient_by_central(s4, cyc(4, {{0, 1}})), NotCentralInvolution);
    PermGroup c4 = construct(GroupName::cyclic(4));
    CHECK_THROWS_AS(quotient_by_central(c4, cyc(4, {{0, 1, 2, 3}})), NotCentralInvolution);
  }
}

TEST_CASE("quotient map is a homomorphism on generators") {
  PermGroup g = construct(GroupName::sl2(3));
  PermGroup z = center_of(g);
  Permutation inv = z.elements()[0].is_identity() ? z.elements()[1] : z.elements()[0];
  PermGroup q = quotient_by_central(g, inv);
  // images of the generators multiply like the generators themselves
  REQUIRE(q.generators().size() == g.generators().size());
  const Permutation p01 = q.generators()[0] * q.generators()[1];
  CHECK(q.contains(p01));
  CHECK(q.order() * 2 == g.order());
}

TEST_CASE("are_isomorphic: worked examples") {
  PermGroup d3 = construct(GroupName::dihedral(3));
  PermGroup s3 = PermGroup::generate(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
  CHECK(are_isomorphic(d3, s3));

  PermGroup c4 = construct(GroupName::cyclic(4));
  PermGroup klein = construct(GroupName::dihedral(2));
  CHECK_FALSE(are_isomorphic(c4, klein));
}

TEST_CASE("are_isomorphic: reflexive and symmetric on a pooled set") {
  std::vector<PermGroup> pool;
  pool.push_back(construct(GroupName::cyclic(6)));
  pool.push_back(construct(GroupName::dihedral(3)));
  pool.push_back(construct(GroupName::dihedral(6)));
  pool.push_back(construct(GroupName::alternating4()));
  pool.push_back(construct(GroupName::symmetric4()));
  pool.push_back(construct(GroupName::sl2(3)));
  pool.push_back(construct(GroupName::direct_product_z2(GroupName::alternating4())));
  pool.push_back(construct(GroupName::alternating5()));
  pool.push_back(construct(GroupName::cyclic(12)));
  for (const PermGroup& g : pool) CHECK(are_isomorphic(g, g));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i + 1; j < pool.size(); ++j)
      CHECK(are_isomorphic(pool[i], pool[j]) == are_isomorphic(pool[j], pool[i]));
}

TEST_CASE("are_isomorphic agrees with the brute-force oracle on small groups") {
  std::vector<PermGroup> pool;
  pool.push_back(construct(GroupName::cyclic(6)));
  pool.push_back(construct(GroupName::dihedral(3)));
  pool.push_back(construct(GroupName::cyclic(4)));
  pool.push_back(construct(GroupName::dihedral(2)));
  pool.push_back(construct(GroupName::dihedral(4)));
  pool.push_back(construct(GroupName::cyclic(8)));
  pool.push_back(PermGroup::generate(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})}));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j)
      CHECK(are_isomorphic(pool[i], pool[j]) == iso_bruteforce(pool[i], pool[j]));
}

TEST_CASE("are_isomorphic: cap") {
  PermGroup big = construct(GroupName::cyclic(40));
  CHECK_THROWS_AS(are_isomorphic(big, big, 30), CapExceeded);
}

TEST_CASE("construct: orders and degrees") {
  CHECK(construct(GroupName::cyclic(10)).order() == 10);
  PermGroup sl25 = construct(GroupName::sl2(5));
  CHECK(sl25.order() == 120);
  CHECK(sl25.degree() == 24);
  CHECK(construct(GroupName::sl2(3)).order() == 24);
  CHECK(construct(GroupName::direct_product_z2(GroupName::alternating5())).order() == 120);
  PermGroup klein = construct(GroupName::dihedral(2));
  CHECK(klein.order() == 4);
  CHECK(klein.degree() == 4);
  CHECK(construct(GroupName::octahedral()).order() == 24);
  CHECK(construct(GroupName::icosahedral()).order() == 60);
}

TEST_CASE("construct: invalid names") {
  CHECK_THROWS_AS(GroupName::cyclic(1), InvalidName);
  CHECK_THROWS_AS(GroupName::dihedral(1), InvalidName);
  CHECK_THROWS_AS(GroupName::sl2(7), InvalidName);
}

TEST_CASE("group names: normalization and printing") {
  CHECK(GroupName::tetrahedral() == GroupName::alternating4());
  CHECK(GroupName::octahedral() == GroupName::symmetric4());
  CHECK(GroupName::icosahedral() == GroupName::alternating5());
  CHECK(GroupName::tetrahedral().to_string() == "A4");
  CHECK(GroupName::cyclic(11).to_string() == "Z11");
  CHECK(GroupName::dihedral(10).to_string() == "D10");
  CHECK(GroupName::direct_product_z2(GroupName::symmetric4()).to_string() == "Z2xS4");
  CHECK(GroupName::sl2(5).to_string() == "SL(2,5)");
  CHECK(parse_group_name("d4").has_value());
  CHECK(*parse_group_name("D4") == GroupName::dihedral(4));
  CHECK(*parse_group_name("tetrahedral") == GroupName::alternating4());
  CHECK(*parse_group_name("Z2xA5") == GroupName::direct_product_z2(GroupName::alternating5()));
  CHECK_FALSE(parse_group_name("Q8").has_value());
}
