#include <random>

#include "doctest.h"
#include "grlie/tensor.hpp"

using namespace grlie;

TEST_CASE("concatenation product and bracket") {
  TensorPoly x1 = TensorPoly::gen(1), x2 = TensorPoly::gen(2);
  TensorPoly p = mul(x1, x2);
  CHECK(p.terms.size() == 1);
  CHECK(p.terms.at({1, 2}) == 1);
  TensorPoly b = bracket_t(x1, x2);
  CHECK(b.terms.at({1, 2}) == 1);
  CHECK(b.terms.at({2, 1}) == -1);
  CHECK(bracket_t(x1, x1).is_zero());
  // bilinearity spot check
  TensorPoly q = bracket_t(x1 + x2, x2);
  CHECK(q == bracket_t(x1, x2));
}

TEST_CASE("truncation") {
  TensorPoly p = TensorPoly::unit() + TensorPoly::gen(1);
  TensorPoly sq = mul(p, p);  // 1 + 2 x1 + x1 x1
  CHECK(sq.terms.at({}) == 1);
  CHECK(sq.terms.at({1}) == 2);
  CHECK(sq.terms.at({1, 1}) == 1);
  CHECK(mul(p, p, 1).terms.count({1, 1}) == 0);
  CHECK(sq.truncated(1) == mul(p, p, 1));
  CHECK(sq.degree_part(1) == TensorPoly::monomial({1}, 2));
  CHECK(sq.max_degree() == 2);
}

TEST_CASE("free group words reduce freely") {
  CHECK(greduce({1, -1}) == GWord{});
  CHECK(greduce({1, 2, -2, -1}) == GWord{});
  CHECK(greduce({1, 2, -2, 3}) == GWord{1, 3});
  CHECK(gmul({1, 2}, {-2, 3}) == GWord{1, 3});
  CHECK(ginv({1, -2, 3}) == GWord{-3, 2, -1});
  CHECK(gcommutator({1}, {2}) == GWord{-1, -2, 1, 2});
  CHECK(greduce(gmul({1}, ginv({1}))).empty());
}

TEST_CASE("magnus expansion of generators and inverses") {
  TensorPoly m = magnus({1}, 3);
  CHECK(m.terms.at({}) == 1);
  CHECK(m.terms.at({1}) == 1);
  CHECK(m.terms.size() == 2);
  // a^{-1} -> 1 - x + x^2 - x^3
  TensorPoly mi = magnus({-1}, 3);
  CHECK(mi.terms.at({1}) == -1);
  CHECK(mi.terms.at({1, 1}) == 1);
  CHECK(mi.terms.at({1, 1, 1}) == -1);
  // a a^{-1} = 1 up to the truncation degree
  CHECK(mul(m, mi, 3) == TensorPoly::unit());
}

TEST_CASE("magnus of a commutator starts at degree 2 with the bracket") {
  TensorPoly m = magnus(gcommutator({1}, {2}), 2);
  TensorPoly expected = TensorPoly::unit() + bracket_t(TensorPoly::gen(1), TensorPoly::gen(2));
  CHECK(m == expected);
}

TEST_CASE("binomial expansion equals the iterated bracket") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> letter(1, 6), coeff(-3, 3), deg(1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    TensorPoly a, b;
    for (int t = 0; t < 3; ++t) {
      Word wa(deg(rng)), wb(deg(rng));
      for (auto& l : wa) l = Letter(letter(rng));
      for (auto& l : wb) l = Letter(letter(rng));
      a.add_term(wa, coeff(rng));
      b.add_term(wb, coeff(rng));
    }
    TensorPoly iterated = a;
    for (int m = 0; m <= 4; ++m) {
      CHECK(lemma16a_expand(a, b, m) == iterated);
      iterated = bracket_t(iterated, b);
    }
  }
}
