#ifndef GRLIE_FREEGROUP_HPP
#define GRLIE_FREEGROUP_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "grlie/tensor.hpp"

namespace grlie {

// An endomorphism of the free group of the given rank, by generator images.
struct GroupEndo {
  int rank = 0;
  std::vector<GWord> images;  // images[i-1] = image of generator i

  bool operator==(const GroupEndo& o) const { return rank == o.rank && images == o.images; }
};

GroupEndo identity_endo(int rank);
GWord apply(const GroupEndo& e, const GWord& w);
// apply e1 after e2 (e1 . e2 as maps)
GroupEndo compose(const GroupEndo& e1, const GroupEndo& e2);

// chi_{ij}: x_i -> x_j^{-1} x_i x_j, fixing the other generators.
GroupEndo mccool_gen(int i, int j, int rank);
GroupEndo mccool_gen_inv(int i, int j, int rank);

// Abelianized matrix (row r = exponent sums of the image of generator r).
std::vector<std::vector<long long>> abelianized(const GroupEndo& e);
bool is_ia(const GroupEndo& e);

struct RelationCheck {
  int family = 0;  // 1: (chi_ij, chi_kj); 2: (chi_ij, chi_kq); 3: (chi_ij chi_kj, chi_ik)
  std::string name;
  bool holds = false;
};

// All instances of the three McCool relation families with distinct
// subscripts, each evaluated as a composition of automorphisms.
std::vector<RelationCheck> mccool_relations(int n);

// The nine relator words r_1..r_9 in the free group on a_1..a_6.
const std::array<GWord, 9>& mccool_relators();
std::string relator_str(const GWord& r);

// A dictionary a_m -> chi_{ij}: assignment[m-1] = (i,j).
using Assignment = std::array<std::pair<int, int>, 6>;

// All bijections {a_1..a_6} -> {chi_ij : i != j in 1..3} under which every
// relator r_1..r_9 acts as the identity automorphism of F_3.
std::vector<Assignment> find_assignments();

}  // namespace grlie

#endif
