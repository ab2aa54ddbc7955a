#include <random>
#include <sstream>

#include "doctest.h"
#include "grlie/kernels.hpp"
#include "grlie/matrix.hpp"

using namespace grlie;

namespace {

SparseIntMatrix from_dense(const std::vector<std::vector<int>>& d) {
  SparseIntMatrix m;
  m.cols = d.empty() ? 0 : (std::int64_t)d[0].size();
  for (const auto& r : d) {
    std::vector<std::pair<std::int32_t, Int>> row;
    for (std::size_t c = 0; c < r.size(); ++c)
      if (r[c] != 0) row.emplace_back((std::int32_t)c, r[c]);
    m.add_row(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("snf of small matrices") {
  // diag(2,6) pattern
  CHECK(snf(from_dense({{2, 0}, {0, 6}})) == std::vector<Int>{2, 6});
  CHECK(snf(from_dense({{6, 0}, {0, 2}})) == std::vector<Int>{2, 6});
  CHECK(snf(from_dense({{1, 2}, {3, 4}})) == std::vector<Int>{1, 2});
  CHECK(snf(from_dense({{2, 4}, {4, 8}})) == std::vector<Int>{2});
  CHECK(snf(from_dense({{0, 0}, {0, 0}})).empty());
  CHECK(snf(from_dense({{3, 1}, {1, 3}})) == std::vector<Int>{1, 8});
  // identity-like
  CHECK(snf(from_dense({{1, 0, 0}, {0, 1, 0}})) == std::vector<Int>{1, 1});
}

TEST_CASE("snf agrees between unit-pivot/dense paths on random matrices") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> val(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<std::vector<int>> d(6, std::vector<int>(5));
    for (auto& r : d)
      for (auto& x : r) x = val(rng);
    SnfOptions sparse_first;          // default: unit-pivot phase active
    SnfOptions dense_only;
    dense_only.dense_threshold = 1 << 20;  // everything goes dense immediately
    CHECK(snf(from_dense(d), sparse_first) == snf(from_dense(d), dense_only));
  }
}

TEST_CASE("exact rank and modular rank agree away from torsion primes") {
  auto m = from_dense({{2, 0, 0}, {0, 3, 0}, {2, 3, 0}});
  CHECK(exact_rank(m) == 2);
  CHECK(modular_rank(m, 5) == 2);
  CHECK(modular_rank(m, 2) == 1);  // rank drops mod 2
  CHECK(modular_rank(m, 3) == 1);  // and mod 3
}

TEST_CASE("modular rank: dense and sparse paths agree") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> val(-9, 9);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<int>> d(12, std::vector<int>(9));
    for (auto& r : d)
      for (auto& x : r) x = val(rng);
    auto m = from_dense(d);
    for (std::uint32_t p : {2u, 3u, 1000003u, (1u << 30) - 35u}) {
      ModularRankOptions dense, sparse;
      dense.dense_limit = 1 << 24;
      sparse.dense_limit = 0;
      CHECK(modular_rank(m, p, dense) == modular_rank(m, p, sparse));
    }
  }
}

TEST_CASE("mod-p kernels agree with the scalar reference") {
  std::mt19937 rng(41);
  for (std::uint32_t p : {3u, 65537u, 999999937u, (1u << 30) - 35u}) {
    std::uniform_int_distribution<std::uint32_t> val(0, p - 1);
    std::vector<std::uint32_t> a(1000), b(1000);
    for (auto& x : a) x = val(rng);
    for (auto& x : b) x = val(rng);
    const std::uint32_t m = val(rng);

    auto a_ref = a;
    kernels::fp_axpy_scalar(a_ref.data(), b.data(), m, p, a_ref.size());
    auto a_scale_ref = a;
    kernels::fp_scale_scalar(a_scale_ref.data(), m, p, a_scale_ref.size());

    for (const std::string& name : {"scalar", "avx2", "neon"}) {
      if (kernels::available_kernels().find(name) == std::string::npos) continue;
      kernels::select_kernel(name);
      auto a1 = a;
      kernels::fp_axpy(a1.data(), b.data(), m, p, a1.size());
      CHECK(a1 == a_ref);
      auto a2 = a;
      kernels::fp_scale(a2.data(), m, p, a2.size());
      CHECK(a2 == a_scale_ref);
    }
    kernels::select_kernel("auto");
  }
}

TEST_CASE("fp_inv") {
  for (std::uint32_t p : {3u, 7u, 1000003u})
    for (std::uint32_t a = 1; a < std::min(p, 50u); ++a)
      CHECK((std::uint64_t)a * kernels::fp_inv(a, p) % p == 1);
}

TEST_CASE("rational row space membership") {
  auto basis = from_dense({{2, 0, 2}, {0, 3, 3}});
  RationalRowSpace space(basis);
  CHECK(space.rank() == 2);
  CHECK(space.contains({{0, 1}, {2, 1}}));            // (1,0,1) = 1/2 row0
  CHECK(space.contains({{0, 3}, {1, 3}, {2, 6}}));    // 3/2 row0 + row1
  CHECK_FALSE(space.contains({{0, 1}}));              // (1,0,0)
  CHECK(space.contains({}));
}

TEST_CASE("dump and load round trip") {
  auto m = from_dense({{0, -7, 1}, {5, 0, 0}});
  std::stringstream ss;
  m.dump(ss);
  auto m2 = SparseIntMatrix::load(ss);
  CHECK(m2.cols >= 2);
  CHECK(m2.rows.size() == m.rows.size());
  CHECK(m2.rows == m.rows);
  CHECK(m.nnz() == 3);
}
