#include "grlie/matrix.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "grlie/kernels.hpp"

namespace grlie {

namespace {

using SparseRow = std::vector<std::pair<std::int32_t, Int>>;

// dst -= m * src, both sorted by column
SparseRow row_submul(const SparseRow& dst, const Int& m, const SparseRow& src) {
  SparseRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      out.emplace_back(src[j].first, -m * src[j].second);
      ++j;
    } else {
      Int v = dst[i].second - m * src[j].second;
      if (v != 0) out.emplace_back(dst[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

void gcd_normalize(SparseRow& r) {
  if (r.empty()) return;
  Int g = 0;
  for (const auto& [c, v] : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& [c, v] : r) v /= g;
}

// Unit-pivot sparse elimination: repeatedly pivot on entries of absolute
// value 1 (each contributes elementary divisor 1), Markowitz-style pivot
// choice. Returns the number of unit pivots; the residual active rows are
// left in `rows`.
std::int64_t unit_pivot_phase(std::vector<SparseRow>& rows, std::int64_t ncols) {
  const std::size_t nrows = rows.size();
  // column -> set of active row ids holding a nonzero there, plus a count of
  // +-1 entries per column so pivot search never rescans values
  std::vector<std::set<std::int32_t>> col_rows(static_cast<std::size_t>(ncols));
  std::vector<std::int32_t> col_units(static_cast<std::size_t>(ncols), 0);
  auto is_unit = [](const Int& v) { return v == 1 || v == -1; };
  for (std::size_t r = 0; r < nrows; ++r)
    for (const auto& [c, v] : rows[r]) {
      col_rows[static_cast<std::size_t>(c)].insert(static_cast<std::int32_t>(r));
      if (is_unit(v)) ++col_units[static_cast<std::size_t>(c)];
    }

  std::vector<bool> col_active(static_cast<std::size_t>(ncols), true);
  auto value_at = [&](std::int32_t r, std::int32_t c) -> const Int* {
    const SparseRow& row = rows[static_cast<std::size_t>(r)];
    auto it = std::lower_bound(row.begin(), row.end(), c,
                               [](const auto& e, std::int32_t col) { return e.first < col; });
    if (it == row.end() || it->first != c) return nullptr;
    return &it->second;
  };
  auto drop_row_from_index = [&](std::int32_t r) {
    for (const auto& [c, v] : rows[static_cast<std::size_t>(r)]) {
      col_rows[static_cast<std::size_t>(c)].erase(r);
      if (is_unit(v)) --col_units[static_cast<std::size_t>(c)];
    }
  };
  auto add_row_to_index = [&](std::int32_t r) {
    for (const auto& [c, v] : rows[static_cast<std::size_t>(r)]) {
      col_rows[static_cast<std::size_t>(c)].insert(r);
      if (is_unit(v)) ++col_units[static_cast<std::size_t>(c)];
    }
  };

  std::int64_t pivots = 0;
  for (;;) {
    // sparsest column that still holds a unit entry
    std::int32_t best_col = -1;
    std::size_t best_clen = 0;
    for (std::int64_t c = 0; c < ncols; ++c) {
      if (!col_active[static_cast<std::size_t>(c)] || col_units[static_cast<std::size_t>(c)] == 0)
        continue;
      const std::size_t clen = col_rows[static_cast<std::size_t>(c)].size();
      if (best_col < 0 || clen < best_clen) {
        best_col = static_cast<std::int32_t>(c);
        best_clen = clen;
        if (clen == 1) break;
      }
    }
    if (best_col < 0) break;
    // within the column, the shortest row with a unit entry there
    std::int32_t best_row = -1;
    std::size_t best_rlen = 0;
    for (std::int32_t r : col_rows[static_cast<std::size_t>(best_col)]) {
      const Int* v = value_at(r, best_col);
      if (!is_unit(*v)) continue;
      const std::size_t rlen = rows[static_cast<std::size_t>(r)].size();
      if (best_row < 0 || rlen < best_rlen) {
        best_row = r;
        best_rlen = rlen;
      }
    }

    const SparseRow pivot = rows[static_cast<std::size_t>(best_row)];
    const int sign = (*value_at(best_row, best_col) > 0) ? 1 : -1;

    const std::vector<std::int32_t> sharers(col_rows[static_cast<std::size_t>(best_col)].begin(),
                                            col_rows[static_cast<std::size_t>(best_col)].end());
    for (std::int32_t r : sharers) {
      if (r == best_row) continue;
      const Int m = (*value_at(r, best_col)) * sign;  // pivot is +-1
      SparseRow updated = row_submul(rows[static_cast<std::size_t>(r)], m, pivot);
      drop_row_from_index(r);
      rows[static_cast<std::size_t>(r)] = std::move(updated);
      add_row_to_index(r);
    }
    drop_row_from_index(best_row);
    rows[static_cast<std::size_t>(best_row)].clear();
    col_active[static_cast<std::size_t>(best_col)] = false;
    ++pivots;
  }
  return pivots;
}

// Classical dense Smith reduction over Z.
std::vector<Int> dense_snf(std::vector<std::vector<Int>> a) {
  std::vector<Int> divisors;
  const std::size_t nr = a.size();
  const std::size_t nc = nr ? a[0].size() : 0;
  std::size_t t = 0;
  while (t < nr && t < nc) {
    // locate a nonzero entry of minimal absolute value in the submatrix
    std::size_t pr = t, pc = t;
    bool found = false;
    Int best;
    for (std::size_t i = t; i < nr; ++i)
      for (std::size_t j = t; j < nc; ++j) {
        if (a[i][j] == 0) continue;
        Int av = abs(a[i][j]);
        if (!found || av < best) {
          found = true;
          best = av;
          pr = i;
          pc = j;
        }
      }
    if (!found) break;
    std::swap(a[t], a[pr]);
    for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][t], a[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear the pivot column
      for (std::size_t i = t + 1; i < nr; ++i) {
        if (a[i][t] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {  // remainder smaller than pivot: swap up and restart
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      // clear the pivot row
      for (std::size_t j = t + 1; j < nc; ++j) {
        if (a[t][j] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][t], a[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix
      for (std::size_t i = t + 1; i < nr && clean; ++i)
        for (std::size_t j = t + 1; j < nc && clean; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t jj = t; jj < nc; ++jj) a[t][jj] += a[i][jj];
            clean = false;
          }
    }
    divisors.push_back(abs(a[t][t]));
    ++t;
  }
  return divisors;
}

std::vector<std::vector<Int>> densify(const std::vector<SparseRow>& rows) {
  // remap surviving columns and rows
  std::map<std::int32_t, std::size_t> colmap;
  for (const SparseRow& r : rows)
    for (const auto& [c, v] : r) colmap.emplace(c, 0);
  std::size_t k = 0;
  for (auto& [c, idx] : colmap) idx = k++;
  std::vector<std::vector<Int>> dense;
  for (const SparseRow& r : rows) {
    if (r.empty()) continue;
    std::vector<Int> row(colmap.size(), 0);
    for (const auto& [c, v] : r) row[colmap[c]] = v;
    dense.push_back(std::move(row));
  }
  return dense;
}

}  // namespace

std::int64_t SparseIntMatrix::nnz() const {
  std::int64_t n = 0;
  for (const auto& r : rows) n += static_cast<std::int64_t>(r.size());
  return n;
}

void SparseIntMatrix::add_row(std::vector<std::pair<std::int32_t, Int>> row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::int32_t, Int>> clean;
  for (auto& [c, v] : row) {
    if (c < 0 || c >= cols) throw std::out_of_range("SparseIntMatrix::add_row: column out of range");
    if (v != 0) clean.emplace_back(c, std::move(v));
  }
  rows.push_back(std::move(clean));
}

void SparseIntMatrix::dump(std::ostream& os) const {
  os << row_count() << " " << cols << "\n";
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) os << r << " " << c << " " << v.get_str() << "\n";
}

SparseIntMatrix SparseIntMatrix::load(std::istream& is) {
  SparseIntMatrix m;
  std::int64_t nr = 0;
  is >> nr >> m.cols;
  m.rows.resize(static_cast<std::size_t>(nr));
  std::int64_t r, c;
  std::string v;
  while (is >> r >> c >> v) m.rows[static_cast<std::size_t>(r)].emplace_back(static_cast<std::int32_t>(c), Int(v));
  for (auto& row : m.rows)
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return m;
}

std::vector<Int> snf(SparseIntMatrix m, const SnfOptions& opts) {
  (void)opts;
  const std::int64_t units = unit_pivot_phase(m.rows, m.cols);
  std::vector<Int> divisors(static_cast<std::size_t>(units), 1);
  auto dense = densify(m.rows);
  if (!dense.empty()) {
    auto rest = dense_snf(std::move(dense));
    divisors.insert(divisors.end(), rest.begin(), rest.end());
  }
  return divisors;
}

std::int64_t exact_rank(SparseIntMatrix m, const SnfOptions& opts) {
  return static_cast<std::int64_t>(snf(std::move(m), opts).size());
}

namespace {

using FpRow = std::vector<std::pair<std::int32_t, std::uint32_t>>;

FpRow reduce_mod(const SparseRow& r, std::uint32_t p) {
  FpRow out;
  for (const auto& [c, v] : r) {
    const std::uint32_t m = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
    if (m != 0) out.emplace_back(c, m);
  }
  return out;
}

// dst = dst + m * src mod p (sorted sparse merge)
FpRow fp_row_axpy(const FpRow& dst, std::uint64_t m, const FpRow& src, std::uint32_t p) {
  FpRow out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].first < dst[i].first) {
      const std::uint32_t v = static_cast<std::uint32_t>(m * src[j].second % p);
      if (v != 0) out.emplace_back(src[j].first, v);
      ++j;
    } else {
      const std::uint32_t v =
          static_cast<std::uint32_t>((dst[i].second + m * src[j].second) % p);
      if (v != 0) out.emplace_back(dst[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

std::int64_t modular_rank_sparse(const SparseIntMatrix& m, std::uint32_t p) {
  // echelon by leading column: pivot rows normalized to leading coefficient 1
  std::vector<FpRow> pivot_by_col(static_cast<std::size_t>(m.cols));
  std::vector<bool> has_pivot(static_cast<std::size_t>(m.cols), false);
  std::int64_t rank = 0;
  for (const auto& raw : m.rows) {
    FpRow row = reduce_mod(raw, p);
    while (!row.empty()) {
      const std::int32_t lead = row[0].first;
      if (!has_pivot[static_cast<std::size_t>(lead)]) {
        const std::uint64_t inv = kernels::fp_inv(row[0].second, p);
        for (auto& [c, v] : row) v = static_cast<std::uint32_t>(inv * v % p);
        pivot_by_col[static_cast<std::size_t>(lead)] = std::move(row);
        has_pivot[static_cast<std::size_t>(lead)] = true;
        ++rank;
        break;
      }
      const std::uint64_t mult = p - row[0].second;  // cancel the lead
      row = fp_row_axpy(row, mult, pivot_by_col[static_cast<std::size_t>(lead)], p);
    }
  }
  return rank;
}

std::int64_t modular_rank_dense(const SparseIntMatrix& m, std::uint32_t p) {
  const std::size_t nc = static_cast<std::size_t>(m.cols);
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(m.rows.size());
  for (const auto& r : m.rows) {
    std::vector<std::uint32_t> d(nc, 0);
    bool nonzero = false;
    for (const auto& [c, v] : r) {
      const std::uint32_t mv = static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), p));
      d[static_cast<std::size_t>(c)] = mv;
      nonzero |= (mv != 0);
    }
    if (nonzero) rows.push_back(std::move(d));
  }
  std::int64_t rank = 0;
  std::size_t top = 0;
  for (std::size_t col = 0; col < nc && top < rows.size(); ++col) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    const std::uint32_t inv = kernels::fp_inv(rows[top][col], p);
    kernels::fp_scale(rows[top].data() + col, inv, p, nc - col);
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const std::uint32_t mult = p - rows[r][col];
      kernels::fp_axpy(rows[r].data() + col, rows[top].data() + col, mult, p, nc - col);
    }
    ++top;
    ++rank;
  }
  return rank;
}

}  // namespace

std::int64_t modular_rank(const SparseIntMatrix& m, std::uint32_t p,
                          const ModularRankOptions& opts) {
  if (p < 2 || p >= (1u << 30)) throw std::invalid_argument("modular_rank: need prime < 2^30");
  if (m.row_count() * m.cols <= opts.dense_limit) return modular_rank_dense(m, p);
  return modular_rank_sparse(m, p);
}

RationalRowSpace::RationalRowSpace(const SparseIntMatrix& m) {
  std::map<std::int32_t, std::size_t> lead_index;
  for (const auto& r : m.rows) {
    SparseRow row = r;
    gcd_normalize(row);
    while (!row.empty()) {
      const std::int32_t lead = row[0].first;
      auto it = lead_index.find(lead);
      if (it == lead_index.end()) {
        lead_index.emplace(lead, echelon_.size());
        echelon_.push_back(std::move(row));
        break;
      }
      // clear the lead over Q: row = pv*row - rv*pivot
      const SparseRow& piv = echelon_[it->second];
      const Int pv = piv[0].second, rv = row[0].second;
      for (auto& [c, v] : row) v *= pv;
      row = row_submul(row, rv, piv);
      gcd_normalize(row);
    }
  }
  // keep a lead -> row lookup for contains()
  std::sort(echelon_.begin(), echelon_.end(),
            [](const SparseRow& a, const SparseRow& b) { return a[0].first < b[0].first; });
}

bool RationalRowSpace::contains(const std::vector<std::pair<std::int32_t, Int>>& r) const {
  SparseRow row = r;
  gcd_normalize(row);
  while (!row.empty()) {
    const std::int32_t lead = row[0].first;
    auto it = std::lower_bound(echelon_.begin(), echelon_.end(), lead,
                               [](const SparseRow& e, std::int32_t l) { return e[0].first < l; });
    if (it == echelon_.end() || (*it)[0].first != lead) return false;
    const Int pv = (*it)[0].second, rv = row[0].second;
    for (auto& [c, v] : row) v *= pv;
    row = row_submul(row, rv, *it);
    gcd_normalize(row);
  }
  return true;
}

}  // namespace grlie
