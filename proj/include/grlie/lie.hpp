#ifndef GRLIE_LIE_HPP
#define GRLIE_LIE_HPP

#include <stdexcept>

#include "grlie/tensor.hpp"

namespace grlie {

// An element of the free Lie algebra in Lyndon coordinates:
// Lyndon word -> nonzero coefficient.
struct LiePoly {
  std::map<Word, Int> terms;

  static LiePoly zero() { return {}; }
  static LiePoly gen(Letter i);
  static LiePoly monomial(Word w, Int c = 1);  // w must be Lyndon

  bool is_zero() const { return terms.empty(); }
  void add_term(const Word& w, const Int& c);
  LiePoly& operator+=(const LiePoly& o);
  LiePoly& operator-=(const LiePoly& o);
  LiePoly operator+(const LiePoly& o) const;
  LiePoly operator-(const LiePoly& o) const;
  LiePoly operator-() const;
  LiePoly& operator*=(const Int& c);
  bool operator==(const LiePoly& o) const { return terms == o.terms; }

  std::string str() const;
};

struct NotLieElement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lyndon polynomial q(w): q(a) = a, q(w) = [q(u), q(v)] over the standard
// factorization w = u.v. Least word of the result is w with coefficient 1.
TensorPoly q_bracketing(const Word& w);

// Lyndon coordinates -> tensor algebra.
TensorPoly expand(const LiePoly& p);

// Triangular reduction against q: unique Lyndon coordinates of a Lie
// element of T. Throws NotLieElement if the reduction gets stuck.
LiePoly to_lyndon(const TensorPoly& p);

LiePoly lie_bracket(const LiePoly& a, const LiePoly& b);

// Left-normed bracket of a LiePoly with a word of generators.
LiePoly lie_bracket_letters(LiePoly a, const Word& tail);

// Rank of the degree-c component of the free Lie algebra of rank k.
long long witt_rank(int k, int c);

// Integer sequence indexed by degree 1..max; ranks[0] is degree 1.
using GradedSeries = std::vector<long long>;

// Ranks l_n of the free Lie algebra on a graded module with generator
// series gen (gen[0] = #degree-1 generators), from the Hilbert-series
// identity prod_n (1-t^n)^{l_n} = 1 - f(t). Throws on negative l_n.
GradedSeries graded_lie_ranks(const GradedSeries& gen, int max_deg);

// The fifteen degree-2 basis elements of table (D): y1 = [x2,x1], ...
const LiePoly& y_elem(int i);  // 1..15
// (a,b) indices of y_i, e.g. y1 -> (2,1)
std::pair<int, int> y_pair(int i);

}  // namespace grlie

#endif
