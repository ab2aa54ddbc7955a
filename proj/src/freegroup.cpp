#include "grlie/freegroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace grlie {

GroupEndo identity_endo(int rank) {
  GroupEndo e;
  e.rank = rank;
  for (int i = 1; i <= rank; ++i) e.images.push_back(GWord{i});
  return e;
}

GWord apply(const GroupEndo& e, const GWord& w) {
  GWord out;
  for (int s : w) {
    const int g = s > 0 ? s : -s;
    if (g < 1 || g > e.rank) throw std::invalid_argument("apply: generator out of range");
    const GWord& im = e.images[static_cast<std::size_t>(g - 1)];
    if (s > 0)
      out.insert(out.end(), im.begin(), im.end());
    else {
      GWord inv = ginv(im);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return greduce(std::move(out));
}

GroupEndo compose(const GroupEndo& e1, const GroupEndo& e2) {
  if (e1.rank != e2.rank) throw std::invalid_argument("compose: rank mismatch");
  GroupEndo r;
  r.rank = e1.rank;
  for (const GWord& im : e2.images) r.images.push_back(apply(e1, im));
  return r;
}

GroupEndo mccool_gen(int i, int j, int rank) {
  if (i == j || i < 1 || j < 1 || i > rank || j > rank)
    throw std::invalid_argument("mccool_gen: bad indices");
  GroupEndo e = identity_endo(rank);
  e.images[static_cast<std::size_t>(i - 1)] = GWord{-j, i, j};
  return e;
}

GroupEndo mccool_gen_inv(int i, int j, int rank) {
  if (i == j || i < 1 || j < 1 || i > rank || j > rank)
    throw std::invalid_argument("mccool_gen_inv: bad indices");
  GroupEndo e = identity_endo(rank);
  e.images[static_cast<std::size_t>(i - 1)] = GWord{j, i, -j};
  return e;
}

std::vector<std::vector<long long>> abelianized(const GroupEndo& e) {
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(e.rank),
                                        std::vector<long long>(static_cast<std::size_t>(e.rank), 0));
  for (int r = 1; r <= e.rank; ++r)
    for (int s : e.images[static_cast<std::size_t>(r - 1)]) {
      const int g = s > 0 ? s : -s;
      m[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(g - 1)] += (s > 0 ? 1 : -1);
    }
  return m;
}

bool is_ia(const GroupEndo& e) {
  auto m = abelianized(e);
  for (int r = 0; r < e.rank; ++r)
    for (int c = 0; c < e.rank; ++c)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != (r == c ? 1 : 0))
        return false;
  return true;
}

namespace {
GroupEndo endo_commutator(const GroupEndo& a, const GroupEndo& b, const GroupEndo& a_inv,
                          const GroupEndo& b_inv) {
  // (a,b) = a^-1 b^-1 a b as a word; evaluated left-to-right, leftmost applied first
  return compose(compose(a_inv, b_inv), compose(a, b));
}
}  // namespace

std::vector<RelationCheck> mccool_relations(int n) {
  std::vector<RelationCheck> out;
  const GroupEndo id = identity_endo(n);
  auto chi = [n](int i, int j) { return mccool_gen(i, j, n); };
  auto chi_inv = [n](int i, int j) { return mccool_gen_inv(i, j, n); };

  // family 1: (chi_ij, chi_kj) = 1, i, j, k distinct (i < k to avoid the
  // inverse duplicate)
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      for (int k = i + 1; k <= n; ++k) {
        if (i == j || k == j) continue;
        GroupEndo c = endo_commutator(chi(i, j), chi(k, j), chi_inv(i, j), chi_inv(k, j));
        out.push_back({1,
                       "(chi_" + std::to_string(i) + std::to_string(j) + ", chi_" +
                           std::to_string(k) + std::to_string(j) + ")",
                       c == id});
      }
  // family 2: (chi_ij, chi_kq) = 1, i, j, k, q distinct (i < k)
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = i + 1; k <= n; ++k)
        for (int q = 1; q <= n; ++q) {
          if (j == i || k == i || k == j || q == i || q == j || q == k) continue;
          GroupEndo c = endo_commutator(chi(i, j), chi(k, q), chi_inv(i, j), chi_inv(k, q));
          out.push_back({2,
                         "(chi_" + std::to_string(i) + std::to_string(j) + ", chi_" +
                             std::to_string(k) + std::to_string(q) + ")",
                         c == id});
        }
  // family 3: (chi_ij chi_kj, chi_ik) = 1, i, j, k distinct
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || i == k || j == k) continue;
        GroupEndo prod = compose(chi(i, j), chi(k, j));
        GroupEndo prod_inv = compose(chi_inv(k, j), chi_inv(i, j));
        GroupEndo c = endo_commutator(prod, chi(i, k), prod_inv, chi_inv(i, k));
        out.push_back({3,
                       "(chi_" + std::to_string(i) + std::to_string(j) + " chi_" +
                           std::to_string(k) + std::to_string(j) + ", chi_" + std::to_string(i) +
                           std::to_string(k) + ")",
                       c == id});
      }
  return out;
}

const std::array<GWord, 9>& mccool_relators() {
  static const std::array<GWord, 9> rel = {
      gcommutator({2}, {1}),     // r1
      gcommutator({4}, {3}),     // r2
      gcommutator({6}, {5}),     // r3
      gcommutator({1, 2}, {5}),  // r4
      gcommutator({3, 4}, {6}),  // r5
      gcommutator({2, 1}, {4}),  // r6
      gcommutator({4, 3}, {2}),  // r7
      gcommutator({6, 5}, {3}),  // r8
      gcommutator({5, 6}, {1}),  // r9
  };
  return rel;
}

std::string relator_str(const GWord& r) {
  std::string s;
  for (int v : r) {
    s += 'a';
    s += std::to_string(v > 0 ? v : -v);
    if (v < 0) s += "^-1 ";
    else s += ' ';
  }
  if (!s.empty()) s.pop_back();
  return s;
}

std::vector<Assignment> find_assignments() {
  // the six chi_ij of rank 3, in a fixed order
  std::vector<std::pair<int, int>> chis;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) chis.emplace_back(i, j);

  std::vector<GroupEndo> chi_endo, chi_endo_inv;
  for (auto [i, j] : chis) {
    chi_endo.push_back(mccool_gen(i, j, 3));
    chi_endo_inv.push_back(mccool_gen_inv(i, j, 3));
  }
  const GroupEndo id = identity_endo(3);

  std::vector<Assignment> found;
  std::array<int, 6> perm = {0, 1, 2, 3, 4, 5};
  do {
    bool ok = true;
    for (const GWord& r : mccool_relators()) {
      GroupEndo acc = id;
      for (int s : r) {
        const int g = (s > 0 ? s : -s) - 1;
        const GroupEndo& step =
            (s > 0) ? chi_endo[static_cast<std::size_t>(perm[static_cast<std::size_t>(g)])]
                    : chi_endo_inv[static_cast<std::size_t>(perm[static_cast<std::size_t>(g)])];
        acc = compose(acc, step);
      }
      if (!(acc == id)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a;
      for (int m = 0; m < 6; ++m) a[static_cast<std::size_t>(m)] = chis[static_cast<std::size_t>(perm[static_cast<std::size_t>(m)])];
      found.push_back(a);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return found;
}

}  // namespace grlie
