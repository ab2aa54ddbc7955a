#include "grlie/lie.hpp"

#include <mutex>

namespace grlie {

LiePoly LiePoly::gen(Letter i) { return monomial(Word{i}); }

LiePoly LiePoly::monomial(Word w, Int c) {
  if (!is_lyndon(w)) throw std::invalid_argument("LiePoly::monomial: not a Lyndon word");
  LiePoly p;
  if (c != 0) p.terms[std::move(w)] = std::move(c);
  return p;
}

void LiePoly::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

LiePoly& LiePoly::operator+=(const LiePoly& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

LiePoly& LiePoly::operator-=(const LiePoly& o) {
  for (const auto& [w, c] : o.terms) add_term(w, -c);
  return *this;
}

LiePoly LiePoly::operator+(const LiePoly& o) const {
  LiePoly r = *this;
  r += o;
  return r;
}

LiePoly LiePoly::operator-(const LiePoly& o) const {
  LiePoly r = *this;
  r -= o;
  return r;
}

LiePoly LiePoly::operator-() const {
  LiePoly r;
  for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
  return r;
}

LiePoly& LiePoly::operator*=(const Int& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, v] : terms) v *= c;
  return *this;
}

std::string LiePoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    s += "*q(";
    s += word_str(w);
    s += ")";
  }
  return s;
}

namespace {
std::map<Word, TensorPoly> q_cache;
std::mutex q_mutex;
}  // namespace

TensorPoly q_bracketing(const Word& w) {
  if (w.empty()) throw std::invalid_argument("q_bracketing: empty word");
  {
    std::lock_guard<std::mutex> lock(q_mutex);
    auto it = q_cache.find(w);
    if (it != q_cache.end()) return it->second;
  }
  TensorPoly r;
  if (w.size() == 1) {
    r = TensorPoly::gen(w[0]);
  } else {
    auto [u, v] = standard_factorization(w);  // validates Lyndon
    r = bracket_t(q_bracketing(u), q_bracketing(v));
  }
  std::lock_guard<std::mutex> lock(q_mutex);
  return q_cache.emplace(w, std::move(r)).first->second;
}

TensorPoly expand(const LiePoly& p) {
  TensorPoly r;
  for (const auto& [w, c] : p.terms) {
    TensorPoly t = q_bracketing(w);
    t *= c;
    r += t;
  }
  return r;
}

LiePoly to_lyndon(const TensorPoly& p) {
  // Process each homogeneous component independently: q(w) is homogeneous,
  // so the reduction never mixes degrees.
  LiePoly out;
  std::map<int, TensorPoly> parts;
  for (const auto& [w, c] : p.terms) {
    if (w.empty()) throw NotLieElement("to_lyndon: constant term present");
    parts[static_cast<int>(w.size())].add_term(w, c);
  }
  for (auto& [deg, part] : parts) {
    while (!part.is_zero()) {
      const Word w = part.terms.begin()->first;
      const Int c = part.terms.begin()->second;
      if (!is_lyndon(w))
        throw NotLieElement("to_lyndon: least word " + word_str(w) + " is not Lyndon");
      out.add_term(w, c);
      TensorPoly t = q_bracketing(w);
      t *= c;
      part -= t;  // q(w) = w + larger words, so the least word strictly grows
    }
  }
  return out;
}

LiePoly lie_bracket(const LiePoly& a, const LiePoly& b) {
  return to_lyndon(bracket_t(expand(a), expand(b)));
}

LiePoly lie_bracket_letters(LiePoly a, const Word& tail) {
  for (Letter x : tail) a = lie_bracket(a, LiePoly::gen(x));
  return a;
}

namespace {
int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}
}  // namespace

long long witt_rank(int k, int c) {
  if (k < 1 || c < 1) throw std::invalid_argument("witt_rank: k, c must be >= 1");
  Int sum = 0;
  for (int d = 1; d <= c; ++d) {
    if (c % d != 0) continue;
    Int pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k),
                  static_cast<unsigned long>(c / d));
    sum += moebius(d) * pw;
  }
  sum /= c;
  return sum.get_si();
}

GradedSeries graded_lie_ranks(const GradedSeries& gen, int max_deg) {
  if (max_deg < 1) throw std::invalid_argument("graded_lie_ranks: max_deg must be >= 1");
  // P(t) = 1 - f(t); maintain Q(t) = prod_{n<N} (1-t^n)^{l_n} as exact
  // integer coefficients and read l_N off the degree-N coefficient.
  std::vector<Int> P(static_cast<std::size_t>(max_deg) + 1, 0);
  P[0] = 1;
  for (int n = 1; n <= max_deg; ++n)
    P[n] = -(n <= static_cast<int>(gen.size()) ? Int(static_cast<long>(gen[n - 1])) : Int(0));
  std::vector<Int> Q(static_cast<std::size_t>(max_deg) + 1, 0);
  Q[0] = 1;
  GradedSeries out(static_cast<std::size_t>(max_deg), 0);
  for (int n = 1; n <= max_deg; ++n) {
    Int ln = Q[n] - P[n];
    if (ln < 0) throw std::invalid_argument("graded_lie_ranks: negative rank at degree " +
                                            std::to_string(n));
    out[n - 1] = ln.get_si();
    if (ln == 0) continue;
    // Q *= (1 - t^n)^{ln}
    std::vector<Int> R(Q.size(), 0);
    Int binom = 1;
    for (int j = 0; j * n <= max_deg; ++j) {
      const Int coef = (j % 2 == 0) ? binom : -binom;
      for (int d = j * n; d <= max_deg; ++d) R[d] += coef * Q[d - j * n];
      binom = binom * (ln - j) / (j + 1);
    }
    Q = std::move(R);
  }
  return out;
}

std::pair<int, int> y_pair(int i) {
  static const std::pair<int, int> table[15] = {
      {2, 1}, {4, 3}, {6, 5}, {3, 1}, {4, 1}, {3, 2}, {4, 2}, {5, 1},
      {6, 1}, {5, 2}, {6, 2}, {5, 3}, {6, 3}, {5, 4}, {6, 4}};
  if (i < 1 || i > 15) throw std::invalid_argument("y_pair: index out of range");
  return table[i - 1];
}

const LiePoly& y_elem(int i) {
  static std::vector<LiePoly> table = [] {
    std::vector<LiePoly> t;
    for (int j = 1; j <= 15; ++j) {
      auto [a, b] = y_pair(j);
      // y = [x_a, x_b] with a > b, i.e. -q(x_b x_a)
      t.push_back(LiePoly::monomial(Word{static_cast<Letter>(b), static_cast<Letter>(a)}, -1));
    }
    return t;
  }();
  if (i < 1 || i > 15) throw std::invalid_argument("y_elem: index out of range");
  return table[static_cast<std::size_t>(i - 1)];
}

}  // namespace grlie
