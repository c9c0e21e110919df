#include <doctest.h>

#include <algorithm>

#include "ibislin/groupaction.hpp"

using namespace ibislin;

TEST_CASE("permutation utilities") {
  Perm a{1, 2, 0};
  Perm b{1, 0, 2};
  CHECK(perm_compose(a, b) == Perm{2, 1, 0});  // a(b(x))
  CHECK(perm_compose(b, a) == Perm{0, 2, 1});
  CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(3));
  CHECK(is_permutation(a, 3));
  CHECK_FALSE(is_permutation({0, 0, 1}, 3));
  CHECK_FALSE(is_permutation(a, 4));

  CHECK(perm_to_string(a) == "[1 2 0]");
  CHECK(perm_from_string("[1 2 0]") == a);
  CHECK(perm_from_string(perm_to_string(b)) == b);
  CHECK_FALSE(perm_from_string("1 2 0").has_value());
  CHECK_FALSE(perm_from_string("[1 1]").has_value());
  CHECK_FALSE(perm_from_string("[1 x]").has_value());
}

TEST_CASE("closure builds the generated group") {
  ActionGroup s3 = closure(3, {{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.order() == 6);
  CHECK(s3.contains({2, 1, 0}));
  CHECK(s3.identity_index() >= 0);
  CHECK(std::is_sorted(s3.elements.begin(), s3.elements.end()));

  ActionGroup c7 = closure(7, {{1, 2, 3, 4, 5, 6, 0}});
  CHECK(c7.order() == 7);
  CHECK(is_transitive(c7));
  CHECK(is_fixed_point_free(c7));

  CHECK_THROWS_AS((void)closure(3, {{0, 0, 1}}), Error);
  CHECK_THROWS_AS((void)closure(8, {{1, 2, 3, 4, 5, 6, 7, 0}}, 4), BudgetExceeded);
}

TEST_CASE("pointwise stabilizers") {
  ActionGroup s3 = closure(3, {{1, 0, 2}, {1, 2, 0}});
  ActionGroup s0 = pointwise_stabilizer(s3, {0});
  CHECK(s0.order() == 2);
  CHECK(s0.contains({0, 2, 1}));
  CHECK(pointwise_stabilizer(s3, {0, 1}).order() == 1);
  CHECK(pointwise_stabilizer(s3, {}).order() == 6);
  CHECK_FALSE(is_fixed_point_free(s3));
}

TEST_CASE("orbits partition the domain") {
  // <(0 1)(2 3), (4 5)> on 6 points: orbits {0,1}, {2,3}, {4,5}.
  ActionGroup g = closure(6, {{1, 0, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}});
  auto orbs = g.orbits();
  CHECK(orbs.size() == 3);
  std::size_t total = 0;
  for (const auto& o : orbs) total += o.size();
  CHECK(total == 6);
  CHECK_FALSE(is_transitive(g));
}

TEST_CASE("nilpotency and metacyclicity") {
  ActionGroup s3 = closure(3, {{1, 0, 2}, {1, 2, 0}});
  ActionGroup d4 = closure(4, {{1, 2, 3, 0}, {3, 2, 1, 0}});
  ActionGroup a4 = closure(4, {{1, 2, 0, 3}, {0, 2, 3, 1}});
  ActionGroup c6 = closure(6, {{1, 2, 3, 4, 5, 0}});
  CHECK(a4.order() == 12);
  CHECK(d4.order() == 8);

  CHECK_FALSE(is_nilpotent(s3));
  CHECK(is_nilpotent(d4));
  CHECK_FALSE(is_nilpotent(a4));
  CHECK(is_nilpotent(c6));

  CHECK(is_metacyclic(s3));
  CHECK(is_metacyclic(d4));
  CHECK_FALSE(is_metacyclic(a4));
  CHECK(is_metacyclic(c6));
}

TEST_CASE("wreath action on pairs") {
  // W = {0, 1, 2} with inner C2 swapping 1 and 2; two copies.
  WreathSpec spec;
  spec.inner = closure(3, {{0, 2, 1}});
  spec.copies = 2;
  spec.top_gens = {{1, 0}};
  spec.full = true;
  WreathAction W = wreath_imprimitive(spec);
  CHECK(W.group.omega == 8);  // 3^2 - 1
  CHECK(W.group.order() == 8);
  CHECK(is_transitive(W.group) == false);

  // encode/decode round trip over all tuples.
  for (int pt = 0; pt < 8; ++pt) CHECK(W.encode(W.decode(pt)) == pt);
  CHECK(W.encode({1, 0}) == 0);
  CHECK(W.decode(5) == std::vector<int>{0, 2});

  // Right-action convention: ((swap, id), (1 2)-top) sends (1, 0) to (0, 2).
  Perm g = wreath_perm({{{0, 2, 1}, {0, 1, 2}}, {1, 0}}, 3, 2);
  CHECK(g[W.encode({1, 0})] == W.encode({0, 2}));
  CHECK(W.group.contains(g));

  CHECK(block_stabilizer_transitive(W, 0));
  CHECK(block_stabilizer_transitive(W, 1));
}

TEST_CASE("additive tables") {
  FieldTower t = FieldTower::make(2, 1, 2);
  VectorSpaceTable V = additive_table(t);
  CHECK(V.size == 4);
  CHECK(V.valid());
  for (int u = 0; u < 4; ++u) {
    CHECK(V.sum(0, u) == u);
    CHECK(V.sum(u, u) == 0);  // characteristic 2
    for (int v = 0; v < 4; ++v) CHECK(V.sum(u, v) == V.sum(v, u));
  }
  // 1 + g = g^2 in GF(4): points 1 <-> g^0, 2 <-> g^1, 3 <-> g^2.
  CHECK(V.sum(1, 2) == 3);
}

TEST_CASE("affine extension of Gamma(2^2) is S4") {
  FieldTower t = FieldTower::make(2, 1, 2);
  ActionGroup X = closure(3, {{1, 2, 0}, {0, 2, 1}});  // Gamma(2^2) on dlogs
  ActionGroup A = affine_wrap(X, additive_table(t));
  CHECK(A.omega == 4);
  CHECK(A.order() == 24);
  CHECK(is_transitive(A));
}

TEST_CASE("affine wrap rejects non-additive generators") {
  FieldTower t = FieldTower::make(2, 1, 3);
  // Swapping g^0 and g^1 is not GF(2)-linear on GF(8).
  ActionGroup X = closure(7, {{1, 0, 2, 3, 4, 5, 6}});
  CHECK_THROWS_AS((void)affine_wrap(X, additive_table(t)), Error);
}
