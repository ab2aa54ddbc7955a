#ifndef GRLIE_TENSOR_HPP
#define GRLIE_TENSOR_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "grlie/word.hpp"

namespace grlie {

using Int = mpz_class;

// Sparse noncommutative polynomial over Z: word -> nonzero coefficient.
// The empty word carries the constant term; degree of a term = word length.
struct TensorPoly {
  std::map<Word, Int> terms;

  static TensorPoly zero() { return {}; }
  static TensorPoly unit();                 // 1
  static TensorPoly gen(Letter i);          // x_i
  static TensorPoly monomial(Word w, Int c = 1);

  bool is_zero() const { return terms.empty(); }
  int max_degree() const;
  TensorPoly degree_part(int d) const;
  TensorPoly truncated(int max_deg) const;  // drop terms of degree > max_deg

  void add_term(const Word& w, const Int& c);  // accumulate, erase on zero

  TensorPoly& operator+=(const TensorPoly& o);
  TensorPoly& operator-=(const TensorPoly& o);
  TensorPoly operator+(const TensorPoly& o) const;
  TensorPoly operator-(const TensorPoly& o) const;
  TensorPoly operator-() const;
  TensorPoly& operator*=(const Int& c);
  bool operator==(const TensorPoly& o) const { return terms == o.terms; }

  std::string str() const;
};

// Concatenation product; truncates above max_deg when max_deg >= 0.
TensorPoly mul(const TensorPoly& p, const TensorPoly& q, int max_deg = -1);

// [p,q] = pq - qp
TensorPoly bracket_t(const TensorPoly& p, const TensorPoly& q, int max_deg = -1);

// sum_{kappa=0}^{m} (-1)^kappa C(m,kappa) b^kappa a b^{m-kappa};
// equals the left-normed bracket [a, b, ..., b] with m copies of b.
TensorPoly lemma16a_expand(const TensorPoly& a, const TensorPoly& b, int m);

// A freely reduced word in a free group: +i for a_i, -i for a_i^{-1}.
using GWord = std::vector<int>;

GWord greduce(GWord w);
GWord gmul(const GWord& a, const GWord& b);
GWord ginv(const GWord& a);
GWord gcommutator(const GWord& a, const GWord& b);  // (a,b) = a^-1 b^-1 a b

// Magnus expansion a_i -> 1 + x_i, a_i^{-1} -> 1 - x_i + x_i^2 - ...,
// truncated above max_deg.
TensorPoly magnus(const GWord& g, int max_deg);

}  // namespace grlie

#endif
