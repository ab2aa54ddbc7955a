#include "grlie/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "grlie/freegroup.hpp"

namespace grlie {

const std::vector<LiePoly>& v_generators() {
  static const std::vector<LiePoly> v = [] {
    std::vector<LiePoly> g;
    g.push_back(y_elem(1));
    g.push_back(y_elem(2));
    g.push_back(y_elem(3));
    g.push_back(y_elem(6) + y_elem(7));
    g.push_back(y_elem(7) + y_elem(5));
    g.push_back(y_elem(9) + y_elem(8));
    g.push_back(y_elem(10) + y_elem(8));
    g.push_back(y_elem(12) + y_elem(13));
    g.push_back(y_elem(15) + y_elem(13));
    return g;
  }();
  return v;
}

const std::vector<Word>& lyndon_basis6(int c) {
  static std::mutex mtx;
  static std::vector<std::vector<Word>> table;  // table[c-1]
  std::lock_guard<std::mutex> lock(mtx);
  if (static_cast<int>(table.size()) < c) table = lyndon_words(6, c);
  return table[c - 1];
}

std::vector<std::pair<std::int32_t, Int>> to_row(const LiePoly& p, int degree) {
  const auto& basis = lyndon_basis6(degree);
  std::vector<std::pair<std::int32_t, Int>> row;
  row.reserve(p.terms.size());
  for (const auto& [w, coeff] : p.terms) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), w);
    if (it == basis.end() || *it != w)
      throw std::invalid_argument("to_row: term of wrong degree: " + word_str(w));
    row.emplace_back(static_cast<std::int32_t>(it - basis.begin()), coeff);
  }
  return row;
}

namespace {

SparseIntMatrix rows_of(const std::vector<LiePoly>& elems, int degree) {
  SparseIntMatrix m;
  m.cols = static_cast<std::int64_t>(lyndon_basis6(degree).size());
  for (const auto& e : elems) m.add_row(to_row(e, degree));
  return m;
}

// Z-span equality: sub lattice of sum lattice with equal elementary divisors
// forces equal index 1, i.e. equality.
bool same_lattice(const std::vector<LiePoly>& a, const std::vector<LiePoly>& b, int degree) {
  SparseIntMatrix ma = rows_of(a, degree), mb = rows_of(b, degree);
  SparseIntMatrix both = ma;
  for (const auto& r : mb.rows) both.rows.push_back(r);
  const auto da = snf(std::move(ma));
  const auto db = snf(std::move(mb));
  const auto dboth = snf(std::move(both));
  return da == dboth && db == dboth;
}

}  // namespace

RelatorImageReport relator_images() {
  RelatorImageReport rep;
  const auto& relators = mccool_relators();
  // the printed correspondence table r_i -> degree-2 element
  const std::vector<LiePoly> printed = {
      y_elem(1),
      y_elem(2),
      y_elem(3),
      y_elem(10) + y_elem(8),
      y_elem(15) + y_elem(13),
      y_elem(6) + y_elem(7),
      y_elem(7) + y_elem(5),
      y_elem(12) + y_elem(13),
      y_elem(9) + y_elem(8),
  };
  std::vector<LiePoly> computed;
  for (int i = 0; i < 9; ++i) {
    RelatorImage img;
    img.index = i + 1;
    img.relator = relator_str(relators[i]);
    img.computed = to_lyndon(magnus(relators[i], 2).degree_part(2));
    img.printed = printed[i];
    img.matches_printed = img.computed == img.printed;
    computed.push_back(img.computed);
    if (!img.matches_printed) {
      std::ostringstream os;
      os << "r" << img.index << ": computed image " << img.computed.str()
         << " differs from the printed table entry " << img.printed.str();
      rep.warnings.push_back(os.str());
    }
    rep.images.push_back(std::move(img));
  }
  rep.spans_match = same_lattice(computed, v_generators(), 2);
  if (!rep.spans_match)
    rep.warnings.push_back("computed relator images do not span the printed generating set");
  return rep;
}

SparseIntMatrix ideal_span(int c) {
  if (c < 2) throw std::invalid_argument("ideal_span: degree must be >= 2");
  SparseIntMatrix m;
  m.cols = static_cast<std::int64_t>(lyndon_basis6(c).size());
  Word tail(c - 2, 1);
  for (const auto& v : v_generators()) {
    std::fill(tail.begin(), tail.end(), Letter{1});
    while (true) {
      m.add_row(to_row(lie_bracket_letters(v, tail), c));
      // next tuple in {1..6}^(c-2), lexicographic
      int pos = c - 3;
      while (pos >= 0 && tail[pos] == 6) tail[pos--] = 1;
      if (pos < 0) break;
      ++tail[pos];
    }
  }
  return m;
}

namespace {

int thread_count() {
  if (const char* env = std::getenv("GRLIE_THREADS"); env && *env) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

std::uint32_t random_prime30() {
  std::mt19937_64 rng(std::random_device{}());
  std::uniform_int_distribution<std::uint64_t> dist(1ull << 29, (1ull << 30) - 1);
  while (true) {
    mpz_class cand(static_cast<unsigned long>(dist(rng)));
    mpz_class p;
    mpz_nextprime(p.get_mpz_t(), cand.get_mpz_t());
    if (p < (1l << 30)) return static_cast<std::uint32_t>(p.get_ui());
  }
}

std::vector<std::pair<Int, std::int64_t>> run_length(const std::vector<Int>& divisors) {
  std::vector<std::pair<Int, std::int64_t>> rl;
  for (const auto& d : divisors) {
    if (!rl.empty() && rl.back().first == d)
      ++rl.back().second;
    else
      rl.emplace_back(d, 1);
  }
  return rl;
}

}  // namespace

DegreeCertificate certify(int degree, CertifyMethod method, const CertifyOptions& opts) {
  DegreeCertificate cert;
  cert.degree = degree;
  cert.method = method;
  cert.ambient_rank = witt_rank(6, degree);
  SparseIntMatrix m = ideal_span(degree);
  cert.span_count = m.row_count();

  if (method == CertifyMethod::exact_snf) {
    const auto divisors = snf(std::move(m), opts.snf);
    cert.span_rank = static_cast<std::int64_t>(divisors.size());
    cert.torsion_free =
        std::all_of(divisors.begin(), divisors.end(), [](const Int& d) { return d == 1; });
    cert.elementary_divisors = run_length(divisors);
  } else {
    cert.primes = opts.primes;
    if (opts.add_random_prime) cert.primes.push_back(random_prime30());
    cert.modular_ranks.assign(cert.primes.size(), -1);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < cert.primes.size(); i = next++)
        cert.modular_ranks[i] = modular_rank(m, cert.primes[i]);
    };
    const int nthreads =
        std::min<int>(thread_count(), static_cast<int>(cert.primes.size()));
    if (nthreads > 1) {
      std::vector<std::thread> pool;
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    } else {
      worker();
    }
    bool agree = true;
    for (const auto r : cert.modular_ranks) agree = agree && r == cert.modular_ranks[0];
    if (opts.rational_elimination) {
      cert.rational_rank = exact_rank(std::move(m), opts.snf);
      agree = agree && *cert.rational_rank == cert.modular_ranks[0];
    }
    cert.span_rank = cert.modular_ranks[0];
    cert.torsion_free = agree;
  }
  cert.quotient_rank = cert.ambient_rank - cert.span_rank;
  return cert;
}

GradedSeries quotient_ranks(int max_deg, CertifyMethod method, const CertifyOptions& opts) {
  GradedSeries ranks;
  ranks.push_back(6);
  for (int c = 2; c <= max_deg; ++c) ranks.push_back(certify(c, method, opts).quotient_rank);
  return ranks;
}

const char* method_name(CertifyMethod m) {
  return m == CertifyMethod::exact_snf ? "exact_snf" : "modular_probable";
}

}  // namespace grlie
