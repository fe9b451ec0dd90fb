#include <doctest.h>

#include "genwait/errors.hpp"
#include "genwait/groupspec.hpp"

using namespace genwait;

TEST_CASE("named families parse and build") {
  CHECK(GroupSpec::parse("S5").build().order() == 120);
  CHECK(GroupSpec::parse("A6").degree() == 6);
  CHECK(GroupSpec::parse("C9").build().order() == 9);
  CHECK(GroupSpec::parse("D15").build().order() == 30);
  CHECK(GroupSpec::parse("Q8").build().order() == 8);
  CHECK(GroupSpec::parse("E(5,2)").build().order() == 25);
  CHECK(GroupSpec::parse("E(5,2)").degree() == 10);
}

TEST_CASE("products act on disjoint points") {
  GroupSpec s = GroupSpec::parse("E(3,1)*E(5,1)");
  CHECK(s.degree() == 8);
  CHECK(s.build().order() == 15);
  CHECK(GroupSpec::parse("E(2,2)*C3").build().order() == 12);
  CHECK(GroupSpec::parse("E(2,2)*E(3,2)").build().order() == 36);
}

TEST_CASE("inverting-involution semidirect products") {
  CHECK(GroupSpec::parse("GD(1;3,5)").build().order() == 30);
  CHECK(GroupSpec::parse("GD(1;3,5)").degree() == 8);
  CHECK(GroupSpec::parse("GD(1;3,5,7)").build().order() == 210);
  CHECK(GroupSpec::parse("GD(2;3)").build().order() == 18);  // E(3,2) x C2 action
}

TEST_CASE("raw permutation specs, 1-indexed cycles") {
  Group s4 = GroupSpec::parse("perm(4){(1 2),(1 2 3 4)}").build();
  CHECK(s4.order() == 24);
  Group sl23 = GroupSpec::parse("perm(8){(3 4 5)(6 8 7),(1 3 2 6)(4 5 8 7)}").build();
  CHECK(sl23.order() == 24);
  CHECK(GroupSpec::parse("perm(3){}").build().order() == 1);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(GroupSpec::parse("Z5"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("E(4,1)"), ParseError);   // not a prime
  CHECK_THROWS_AS(GroupSpec::parse("GD(1;2,3)"), ParseError);  // 2 not allowed
  CHECK_THROWS_AS(GroupSpec::parse("GD(1;3,3)"), ParseError);  // repeated prime
  CHECK_THROWS_AS(GroupSpec::parse("D2"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("S5*"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("S5 extra"), ParseError);
  CHECK_THROWS_AS(GroupSpec::parse("perm(3){(1 4)}"), ParseError);  // out of range
  CHECK_THROWS_AS(GroupSpec::parse("perm(3){(1 1 2)}"), ParseError);
  try {
    GroupSpec::parse("E(4,1)");
  } catch (const ParseError& e) {
    CHECK(e.position > 0);
  }
}

TEST_CASE("print-parse round trip is idempotent") {
  for (const char* s :
       {"S5", "A4", "C30", "D12", "Q8", "E(3,2)", "GD(1;3,5,7)", "E(2,2)*C3",
        " S4 * C2 ", "perm(4){(1 2),(1 2 3 4)}", "perm(8){(3 4 5)(6 8 7),(1 3 2 6)(4 5 8 7)}"}) {
    GroupSpec once = GroupSpec::parse(s);
    GroupSpec twice = GroupSpec::parse(once.print());
    CHECK(once == twice);
    CHECK(once.print() == twice.print());
  }
}

TEST_CASE("redundant whitespace is accepted") {
  GroupSpec a = GroupSpec::parse("GD( 1 ; 3 , 5 )");
  GroupSpec b = GroupSpec::parse("GD(1;3,5)");
  CHECK(a == b);
  CHECK(GroupSpec::parse("perm(4){ (1 2) , (1 2 3 4) }").build().order() == 24);
}

TEST_CASE("degree accounting") {
  CHECK(GroupSpec::parse("S3*C4*E(2,2)").degree() == 11);
  CHECK(GroupSpec::parse("GD(2;3,5)").degree() == 16);
}
