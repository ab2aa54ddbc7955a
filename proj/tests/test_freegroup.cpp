#include "doctest.h"
#include "grlie/freegroup.hpp"

using namespace grlie;

TEST_CASE("conjugating generators compose correctly") {
  GroupEndo chi = mccool_gen(1, 2, 3);
  CHECK(apply(chi, {1}) == GWord{-2, 1, 2});
  CHECK(apply(chi, {2}) == GWord{2});
  CHECK(apply(chi, {-1}) == GWord{-2, -1, 2});
  GroupEndo inv = mccool_gen_inv(1, 2, 3);
  CHECK(compose(chi, inv) == identity_endo(3));
  CHECK(compose(inv, chi) == identity_endo(3));
}

TEST_CASE("conjugating generators act trivially on the abelianization") {
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      CHECK(is_ia(mccool_gen(i, j, 3)));
    }
  CHECK_FALSE(is_ia(GroupEndo{2, {{2}, {1}}}));  // swap is not IA
  auto m = abelianized(mccool_gen(1, 2, 3));
  CHECK(m == std::vector<std::vector<long long>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("presentation relations hold for n = 3") {
  auto checks = mccool_relations(3);
  CHECK(checks.size() == 9);
  int family1 = 0, family3 = 0;
  for (const auto& c : checks) {
    CHECK(c.holds);
    if (c.family == 1) ++family1;
    if (c.family == 3) ++family3;
  }
  CHECK(family1 == 3);
  CHECK(family3 == 6);
}

TEST_CASE("relator words") {
  const auto& rs = mccool_relators();
  CHECK(rs.size() == 9);
  CHECK(rs[0] == gcommutator({2}, {1}));
  CHECK(rs[3] == gcommutator({1, 2}, {5}));
  CHECK(rs[8] == gcommutator({5, 6}, {1}));
  for (const auto& r : rs) CHECK(!r.empty());
}

TEST_CASE("a consistent generator dictionary exists") {
  auto found = find_assignments();
  CHECK(!found.empty());
  // spot-check one returned assignment really kills every relator
  const auto& a = found.front();
  GroupEndo gens[7];
  for (int m = 1; m <= 6; ++m) gens[m] = mccool_gen(a[m - 1].first, a[m - 1].second, 3);
  for (const auto& r : mccool_relators()) {
    GroupEndo acc = identity_endo(3);
    for (const int s : r) {
      const int m = s > 0 ? s : -s;
      const GroupEndo& g = s > 0 ? gens[m]
                                 : mccool_gen_inv(a[m - 1].first, a[m - 1].second, 3);
      acc = compose(acc, g);
    }
    CHECK(acc == identity_endo(3));
  }
}
