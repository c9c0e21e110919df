#include <doctest.h>

#include "ibislin/groupspec.hpp"
#include "ibislin/ibis.hpp"

using namespace ibislin;

namespace {

GroupSpec must_parse(const std::string& s) {
  auto g = GroupSpec::parse(s);
  REQUIRE(g.has_value());
  return *g;
}

}  // namespace

TEST_CASE("specs round-trip through print and parse") {
  for (const char* s : {
           "gamma{p=5,e=1,n=2,h=8,b=0}",
           "gamma{p=3,e=1,n=4,h=4,b=1}",
           "singer{p=2,e=1,n=3}",
           "perm{omega=3;[1 2 0];[0 2 1]}",
           "perm{omega=1}",
           "prop16{r=3,variant=P1,c=0}",
           "prop16{r=7,variant=P2,c=1}",
           "prop17{p=3,e=1,k=1}",
           "affine{singer{p=2,e=1,n=3}}",
           "affine{gamma{p=2,e=1,n=2,h=1,b=0}}",
       }) {
    GroupSpec spec = must_parse(s);
    CHECK(spec.print() == s);
    CHECK(GroupSpec::parse(spec.print()) == spec);
  }
}

TEST_CASE("malformed specs are rejected") {
  for (const char* s : {
           "",
           "gamma",
           "gamma{",
           "gamma{p=5}",
           "gamma{p=5,e=1,n=2,h=8,b=x}",
           "gamma{p=5,e=1,n=2,h=8,b=0}trailing",
           "unknown{p=2}",
           "perm{}",
           "perm{omega=0}",
           "perm{omega=3;[1 2]}",      // wrong length
           "perm{omega=2;[0 0]}",      // not a permutation
           "prop16{r=3,variant=P3,c=0}",
           "affine{nope}",
       }) {
    CHECK_FALSE(GroupSpec::parse(s).has_value());
  }
}

TEST_CASE("building gamma specs yields normal form plus action") {
  BuiltGroup g = build_group(must_parse("gamma{p=5,e=1,n=2,h=8,b=0}"));
  REQUIRE(g.meta.has_value());
  REQUIRE(g.action.has_value());
  CHECK(g.meta->order() == 6);
  CHECK(g.action->order() == 6);

  // Oversized actions degrade gracefully to criterion-only form.
  BuiltGroup big = build_group(must_parse("gamma{p=7,e=1,n=9,h=114,b=2}"));
  REQUIRE(big.meta.has_value());
  CHECK(big.meta->order() == 3185811);
  CHECK_FALSE(big.action.has_value());
}

TEST_CASE("building singer and perm specs") {
  BuiltGroup s = build_group(must_parse("singer{p=2,e=1,n=3}"));
  REQUIRE(s.action.has_value());
  CHECK(s.action->order() == 7);
  CHECK(is_fixed_point_free(*s.action));
  CHECK(is_transitive(*s.action));

  BuiltGroup p = build_group(must_parse("perm{omega=3;[1 2 0];[0 2 1]}"));
  REQUIRE(p.action.has_value());
  CHECK(p.action->order() == 6);

  BuiltGroup one = build_group(must_parse("perm{omega=1}"));
  REQUIRE(one.action.has_value());
  CHECK(one.action->order() == 1);
  CHECK(is_ibis_bruteforce(*one.action).is_ibis);
}

TEST_CASE("building the paper constructions") {
  BuiltGroup a = build_group(must_parse("prop16{r=3,variant=P1,c=0}"));
  REQUIRE(a.meta.has_value());
  CHECK(a.meta->order() == 16);

  BuiltGroup w = build_group(must_parse("prop17{p=5,e=1,k=1}"));
  REQUIRE(w.wreath.has_value());
  REQUIRE(w.action.has_value());
  CHECK(w.action->order() == 32);
}

TEST_CASE("affine builds wrap the inner action") {
  BuiltGroup a = build_group(must_parse("affine{singer{p=2,e=1,n=3}}"));
  REQUIRE(a.action.has_value());
  CHECK(a.action->omega == 8);
  CHECK(a.action->order() == 56);

  BuiltGroup b = build_group(must_parse("affine{gamma{p=2,e=1,n=2,h=1,b=0}}"));
  REQUIRE(b.action.has_value());
  CHECK(b.action->order() == 24);

  // The inner spec must carry field structure.
  GroupSpec bad;
  bad.kind = GroupSpec::Kind::affine;
  bad.inner = std::make_shared<GroupSpec>(must_parse("perm{omega=2;[1 0]}"));
  CHECK_THROWS_AS((void)build_group(bad), Error);
}
