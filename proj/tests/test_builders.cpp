#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "nimgen/builders.hpp"

using namespace nimgen;

TEST_CASE("parser handles the family forms") {
  GroupSpec z4 = parse_group_spec("Z4");
  CHECK(z4.kind == GroupSpec::Kind::Cyclic);
  CHECK(z4.n == 4);

  GroupSpec prod = parse_group_spec("Z6xZ3");
  REQUIRE(prod.kind == GroupSpec::Kind::Product);
  REQUIRE(prod.factors.size() == 2);
  CHECK(prod.factors[0].n == 6);
  CHECK(prod.factors[1].n == 3);

  GroupSpec mixed = parse_group_spec("  d4 X s3 ");  // case and spaces are free
  REQUIRE(mixed.kind == GroupSpec::Kind::Product);
  CHECK(mixed.factors[0].kind == GroupSpec::Kind::Dihedral);
  CHECK(mixed.factors[1].kind == GroupSpec::Kind::Symmetric);
}

TEST_CASE("parser handles permutation generators") {
  GroupSpec s3 = parse_group_spec("perm:(1 2 3),(1 2)");
  REQUIRE(s3.kind == GroupSpec::Kind::Perm);
  REQUIRE(s3.generators.size() == 2);
  CHECK(s3.generators[0] == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(s3.generators[1] == std::vector<std::vector<int>>{{1, 2}});
  CHECK(build(s3).order() == 6);

  GroupSpec disjoint = parse_group_spec("perm:(1 2)(3 4)");
  REQUIRE(disjoint.generators.size() == 1);
  CHECK(disjoint.generators[0].size() == 2);
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS(parse_group_spec("Z"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Q8"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z4x"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("Z4 Z5"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm:(1 2"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("perm:()"), ParseError);
  CHECK_THROWS_AS(parse_group_spec(""), ParseError);
  CHECK_THROWS_AS(parse_group_spec("D1"), ParseError);
  CHECK_THROWS_AS(parse_group_spec("A2"), ParseError);
  try {
    parse_group_spec("Z4xQ9");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("cyclic group of order 4 has element orders 1,2,4,4") {
  FiniteGroup z4 = cyclic_group(4);
  CHECK(z4.order() == 4);
  CHECK(z4.element_order_multiset() == std::vector<int>{1, 2, 4, 4});
  CHECK(z4.identity() == 0);
}

TEST_CASE("dihedral group satisfies the presentation relations") {
  FiniteGroup d6 = dihedral_group(6);
  CHECK(d6.order() == 12);
  int r = 1, f = 6;  // labels r and f
  CHECK(d6.label(r) == "r");
  CHECK(d6.label(f) == "f");
  int rn = r;
  for (int i = 1; i < 6; ++i) rn = d6.mul(rn, r);
  CHECK(rn == d6.identity());                       // r^n = e
  CHECK(d6.mul(f, f) == d6.identity());             // f^2 = e
  int rf = d6.mul(r, f);
  int frn1 = f;
  for (int i = 0; i < 5; ++i) frn1 = d6.mul(frn1, r);  // f r^(n-1)
  CHECK(rf == frn1);
}

TEST_CASE("product of Z6 and Z3 has order 18") {
  CHECK(build_group("Z6xZ3").order() == 18);
}

TEST_CASE("symmetric and alternating groups have the right orders") {
  CHECK(symmetric_group(1).order() == 1);
  CHECK(symmetric_group(3).order() == 6);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(3).order() == 3);
  CHECK(alternating_group(4).order() == 12);
  CHECK(alternating_group(5).order() == 60);
}

TEST_CASE("A_n sits inside S_n as the even permutations of index 2") {
  for (int n : {3, 4, 5}) {
    FiniteGroup sn = symmetric_group(n);
    FiniteGroup an = alternating_group(n);
    CHECK(sn.order() == 2 * an.order());
    // same canonical cycle-notation labels, so membership is label equality
    std::set<std::string> even(an.labels().begin(), an.labels().end());
    ElementSet members(sn.order());
    for (int i = 0; i < sn.order(); ++i)
      if (even.count(sn.label(i))) members.insert(i);
    CHECK(members.size() == an.order());
    CHECK(Subgroup(sn, members).order() * 2 == sn.order());
  }
}

TEST_CASE("direct products of small cyclic groups") {
  FiniteGroup klein = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(klein.element_order_multiset() == std::vector<int>{1, 2, 2, 2});

  FiniteGroup z6ish = direct_product(cyclic_group(2), cyclic_group(3));
  CHECK(z6ish.element_order_multiset().back() == 6);  // cyclic of order 6

  BuildLimits tight;
  tight.max_order = 5;
  CHECK_THROWS_AS(direct_product(cyclic_group(2), cyclic_group(3), tight),
                  ResourceLimitError);
}

TEST_CASE("labels are deterministic and distinct for the families") {
  for (const char* spec : {"Z6", "D4", "S3", "A4", "Z2xZ3"}) {
    FiniteGroup a = build_group(spec);
    FiniteGroup b = build_group(spec);
    CHECK(a.labels() == b.labels());
    std::set<std::string> distinct(a.labels().begin(), a.labels().end());
    CHECK(static_cast<int>(distinct.size()) == a.order());
  }
  CHECK(symmetric_group(3).label(0) == "e");
  CHECK(cyclic_group(5).label(3) == "3");
}

TEST_CASE("perm spec builds Q8 from the regular representation") {
  FiniteGroup q8 = build_group("perm:(1 2 3 4)(5 6 7 8),(1 5 3 7)(2 8 4 6)");
  CHECK(q8.order() == 8);
  // one identity, one central involution, six elements of order 4
  CHECK(q8.element_order_multiset() == std::vector<int>{1, 2, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("perm specs beyond 16 points are rejected") {
  CHECK_THROWS_AS(build_group("perm:(1 17)"), ResourceLimitError);
}

TEST_CASE("perm generator with overlapping cycles is rejected") {
  CHECK_THROWS_AS(build_group("perm:(1 2)(2 3)"), ValidationError);
}

TEST_CASE("cayley file round trip with relabeled identity") {
  // Z3 written with identity at index 2
  const char* path = "nimgen_test_cayley.json";
  {
    std::ofstream out(path);
    out << R"({"order":3,"table":[[1,2,0],[2,0,1],[0,1,2]],"labels":["a","b","e"]})";
  }
  FiniteGroup g = load_cayley_file(path);
  std::remove(path);
  CHECK(g.order() == 3);
  CHECK(g.identity() == 0);
  CHECK(g.label(0) == "e");
  CHECK(g.element_order_multiset() == std::vector<int>{1, 3, 3});
}

TEST_CASE("cayley validation failures are reported") {
  CHECK_THROWS_AS(load_cayley_json("{\"order\":2}"), ValidationError);
  CHECK_THROWS_AS(load_cayley_json("not json"), ValidationError);
  CHECK_THROWS_AS(load_cayley_json("{\"order\":2,\"table\":[[0,1],[1,1]]}"),
                  ValidationError);
  CHECK_THROWS_AS(load_cayley_file("does_not_exist.json"), ValidationError);
}

TEST_CASE("spec round trip through to_string") {
  for (const char* text : {"Z4", "Z6xZ3", "D5", "S4", "A5"}) {
    GroupSpec spec = parse_group_spec(text);
    CHECK(spec.to_string() == text);
  }
  CHECK(parse_group_spec("perm:(1 2 3),(1 2)").to_string() == "perm:(1 2 3),(1 2)");
}
