#ifndef GRLIE_DECOMP_HPP
#define GRLIE_DECOMP_HPP

#include "grlie/lie.hpp"
#include "grlie/report.hpp"

namespace grlie {

// psi2 on the degree-2 basis: fixes y1..y5, y8, y11, y13, y14 and adds one
// other basis vector to each of the remaining six.
LiePoly psi2_y(int i);  // 1..15
// 15x15 matrix: column j holds the y-coordinates of psi2(y_{j+1}).
std::vector<std::vector<Int>> psi2();

// A generator of the eliminated subalgebra complementing L(V1)+L(V2)+L(V3):
// a degree-2 head [x_a, x_b] (or psi2 of it) bracketed with tail letters
// grouped by block, tail1 over {1,2}, tail2 over {3,4}, tail3 over {5,6}.
struct WnBasisElement {
  bool u_type = false;  // u-type heads have b in {3,4} and empty tail1
  int head_a = 0, head_b = 0;
  bool psi_head = false;
  Word tail1, tail2, tail3;
  LiePoly value;

  int degree() const;
  std::string name() const;
};

// The degree-n generating family, in its canonical order: heads in the fixed
// 12-element chain, then tail blocks in alphabetical order. psi_heads
// replaces each head [x_a,x_b] = y_k with psi2(y_k).
std::vector<WnBasisElement> wn_basis(int n, bool psi_heads = false);

// For each n in 2..max_deg, stacks the Lyndon bases of L^n(V_i) with the
// realized degree-n Lyndon-bracket basis over the graded alphabet of
// wn_basis generators, and certifies a Z-basis of L^n (unit divisors).
VerifyReport verify_lazard(int max_deg);

// det(psi2) = +-1, the nine fixed basis vectors, and the Lazard check with
// psi-transformed heads.
VerifyReport verify_psi(int max_deg);

// The sixteen printed degree-3 rewriting identities, each evaluated in
// Lyndon coordinates; every residue must vanish.
VerifyReport verify_identities();

// Left-normed bracket generating set of the derived algebra: tuples
// (i1,...,in) with i1 > i2 <= i3 <= ... <= in. Counts are checked against
// the free-Lie rank recursion and the split into the three 2-letter
// subalgebras plus the eliminated part against its direct characterization.
VerifyReport derived_genset_count(int max_deg);

}  // namespace grlie

#endif
