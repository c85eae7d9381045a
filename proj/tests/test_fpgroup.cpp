#include <doctest.h>

#include "mcg/coset_table.hpp"
#include "mcg/errors.hpp"
#include "mcg/group_name.hpp"
#include "mcg/perm_group.hpp"
#include "mcg/presentation.hpp"

using namespace mcg;

TEST_CASE("presentation parsing") {
  Presentation p = parse_presentation("<x,y | x^4, y^3, (x*y)^8, x^2*(x*y)^4>");
  CHECK(p.generator_count == 2);
  REQUIRE(p.relators.size() == 4);
  CHECK(p.relators[0] == std::vector<int>{1, 1, 1, 1});
  CHECK(p.relators[2] == std::vector<int>{1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2, 1, 2});
  CHECK(p.relators[3] == std::vector<int>{1, 1, 1, 2, 1, 2, 1, 2, 1, 2});

  Presentation q = parse_presentation("<x,y | x*y*x*y^7>");
  CHECK(q.relators[0] == std::vector<int>{1, 2, 1, 2, 2, 2, 2, 2, 2, 2});

  Presentation inv = parse_presentation("<x,y | (x^-1*y)^2>");
  CHECK(inv.relators[0] == std::vector<int>{-1, 2, -1, 2});

  CHECK(parse_presentation("<x | x^-3>").relators[0] == std::vector<int>{-1, -1, -1});
}

TEST_CASE("presentation parse errors") {
  CHECK_THROWS_AS(parse_presentation("x^2"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x | y^2>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x,x | x^2>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x | x^0>"), ParseError);
  CHECK_THROWS_AS(parse_presentation("<x | x^2> trailing"), ParseError);
}

TEST_CASE("presentation formatting round-trips through the parser") {
  for (const char* text : {"<x | x^10>", "<x,y | x^2, y^12, x*y*x*y^7>",
                           "<x,y | x^4, y^3, y*x^2*y^-1*x^2, (x*y)^4>"}) {
    Presentation p = parse_presentation(text);
    Presentation again = parse_presentation(format_presentation(p));
    CHECK(again.generator_count == p.generator_count);
    CHECK(again.relators == p.relators);
  }
}

TEST_CASE("todd_coxeter: orders from the worked examples") {
  CHECK(todd_coxeter(parse_presentation("<x | x^10>")).order == 10);
  CHECK(todd_coxeter(parse_presentation("<x,y | x^4, y^3, (x*y)^3, y*x^2*y^-1*x^2>")).order == 24);
  CHECK(todd_coxeter(parse_presentation("<x,y | x^2, y^3, (x*y)^4*(y*x)^4, (x*y)^8>")).order == 48);
  CHECK(todd_coxeter(parse_presentation("<x,y | x^4, y^6, (x*y)^2, (x^-1*y)^2>")).order == 24);
}

TEST_CASE("todd_coxeter: known orders of assorted presentations") {
  CHECK(todd_coxeter(parse_presentation("<x | x>")).order == 1);
  CHECK(todd_coxeter(parse_presentation("<x,y | x^3, y^3, (x*y)^2>")).order == 12);   // A4
  CHECK(todd_coxeter(parse_presentation("<x,y | x^2, y^3, (x*y)^4>")).order == 24);   // S4
  CHECK(todd_coxeter(parse_presentation("<x,y | x^2, y^3, (x*y)^5>")).order == 60);   // A5
  CHECK(todd_coxeter(parse_presentation("<x,y | x^4, x^2*y^-2, y^-1*x*y*x>")).order == 8);  // Q8
  CHECK(todd_coxeter(parse_presentation("<x,y | x^4, y^3, (x*y)^5, y*x^2*y^-1*x^2>")).order ==
        120);  // SL(2,5)
}

TEST_CASE("todd_coxeter: coset limit on infinite groups") {
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("<x,y | x*y*x^-1*y^-1>"), 500),
                  CosetLimitExceeded);
  // (2,3,7) triangle rotation group
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("<x,y | x^2, y^3, (x*y)^7>"), 2000),
                  CosetLimitExceeded);
  // a free generator
  CHECK_THROWS_AS(todd_coxeter(parse_presentation("<x,y | x^2>"), 100), CosetLimitExceeded);
}

TEST_CASE("todd_coxeter: determinism") {
  Presentation p = parse_presentation("<x,y | x^2, y^3, (x*y)^4*(y*x)^4, (x*y)^8>");
  EnumerationResult a = todd_coxeter(p);
  EnumerationResult b = todd_coxeter(p);
  CHECK(a.order == b.order);
  CHECK(a.table == b.table);
}

TEST_CASE("completed tables: columns are bijections and relators trace home") {
  for (const char* text :
       {"<x | x^7>", "<x,y | x^2, y^2, (x*y)^2>", "<x,y | x^4, y^3, (x*y)^3, y*x^2*y^-1*x^2>",
        "<x,y | x^2, y^8, x*y*x*y^5>"}) {
    Presentation p = parse_presentation(text);
    EnumerationResult res = todd_coxeter(p);
    REQUIRE(res.table.complete());
    for (const Permutation& action : res.table.generator_actions())
      CHECK(action.degree() == static_cast<int>(res.order));
    for (std::size_t c = 0; c < res.table.coset_count(); ++c) {
      for (const auto& w : p.relators) {
        std::size_t cur = c;
        for (int s : w) cur = static_cast<std::size_t>(res.table.apply(cur, s));
        CHECK(cur == c);
      }
    }
  }
}

TEST_CASE("table_to_permgroup: worked examples") {
  SUBCASE("cyclic of order 5") {
    PermGroup g = table_to_permgroup(todd_coxeter(parse_presentation("<x | x^5>")).table);
    CHECK(g.order() == 5);
    CHECK(g.degree() == 5);
    CHECK(are_isomorphic(g, construct(GroupName::cyclic(5))));
  }
  SUBCASE("SL(2,3) presentation gives the matrix model") {
    PermGroup g = table_to_permgroup(
        todd_coxeter(parse_presentation("<x,y | x^4, y^3, (x*y)^3, y*x^2*y^-1*x^2>")).table);
    CHECK(g.order() == 24);
    CHECK(g.degree() == 24);
    CHECK(are_isomorphic(g, construct(GroupName::sl2(3))));
  }
  SUBCASE("Klein group on 4 points") {
    PermGroup g =
        table_to_permgroup(todd_coxeter(parse_presentation("<x,y | x^2, y^2, (x*y)^2>")).table);
    CHECK(g.order() == 4);
    CHECK(are_isomorphic(g, construct(GroupName::dihedral(2))));
  }
}

TEST_CASE("table generators satisfy the relators as permutations") {
  Presentation p = parse_presentation("<x,y | x^4, y^3, y*x^2*y^-1*x^2, (x*y)^4>");
  EnumerationResult res = todd_coxeter(p);
  std::vector<Permutation> gens = res.table.generator_actions();
  for (const auto& w : p.relators) {
    Permutation acc = Permutation::identity(static_cast<int>(res.order));
    for (int s : w) acc = (s > 0 ? gens[s - 1] : gens[-s - 1].inverse()) * acc;
    CHECK(acc.is_identity());
  }
}

TEST_CASE("table_to_permgroup rejects incomplete tables") {
  CosetTable empty;
  CHECK_THROWS_AS(table_to_permgroup(empty), IncompleteTable);
}
