#include "grlie/tensor.hpp"

#include <stdexcept>

namespace grlie {

TensorPoly TensorPoly::unit() {
  TensorPoly p;
  p.terms[Word{}] = 1;
  return p;
}

TensorPoly TensorPoly::gen(Letter i) {
  TensorPoly p;
  p.terms[Word{i}] = 1;
  return p;
}

TensorPoly TensorPoly::monomial(Word w, Int c) {
  TensorPoly p;
  if (c != 0) p.terms[std::move(w)] = std::move(c);
  return p;
}

int TensorPoly::max_degree() const {
  int d = 0;
  for (const auto& [w, c] : terms) d = std::max<int>(d, static_cast<int>(w.size()));
  return d;
}

TensorPoly TensorPoly::degree_part(int d) const {
  TensorPoly p;
  for (const auto& [w, c] : terms)
    if (static_cast<int>(w.size()) == d) p.terms.emplace(w, c);
  return p;
}

TensorPoly TensorPoly::truncated(int max_deg) const {
  TensorPoly p;
  for (const auto& [w, c] : terms)
    if (static_cast<int>(w.size()) <= max_deg) p.terms.emplace(w, c);
  return p;
}

void TensorPoly::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto it = terms.find(w);
  if (it == terms.end()) {
    terms.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
  for (const auto& [w, c] : o.terms) add_term(w, c);
  return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
  for (const auto& [w, c] : o.terms) add_term(w, -c);
  return *this;
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
  TensorPoly r = *this;
  r += o;
  return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
  TensorPoly r = *this;
  r -= o;
  return r;
}

TensorPoly TensorPoly::operator-() const {
  TensorPoly r;
  for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
  return r;
}

TensorPoly& TensorPoly::operator*=(const Int& c) {
  if (c == 0) {
    terms.clear();
    return *this;
  }
  for (auto& [w, v] : terms) v *= c;
  return *this;
}

std::string TensorPoly::str() const {
  if (terms.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms) {
    if (!s.empty()) s += " + ";
    s += c.get_str();
    if (!w.empty()) {
      s += "*";
      s += word_str(w);
    }
  }
  return s;
}

TensorPoly mul(const TensorPoly& p, const TensorPoly& q, int max_deg) {
  TensorPoly r;
  for (const auto& [u, a] : p.terms) {
    if (max_deg >= 0 && static_cast<int>(u.size()) > max_deg) continue;
    for (const auto& [v, b] : q.terms) {
      if (max_deg >= 0 && static_cast<int>(u.size() + v.size()) > max_deg) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.add_term(w, a * b);
    }
  }
  return r;
}

TensorPoly bracket_t(const TensorPoly& p, const TensorPoly& q, int max_deg) {
  return mul(p, q, max_deg) - mul(q, p, max_deg);
}

TensorPoly lemma16a_expand(const TensorPoly& a, const TensorPoly& b, int m) {
  if (m < 0) throw std::invalid_argument("lemma16a_expand: m must be >= 0");
  // b^0 .. b^m
  std::vector<TensorPoly> bp(static_cast<std::size_t>(m) + 1);
  bp[0] = TensorPoly::unit();
  for (int k = 1; k <= m; ++k) bp[k] = mul(bp[k - 1], b);
  TensorPoly r;
  Int binom = 1;
  for (int k = 0; k <= m; ++k) {
    TensorPoly t = mul(bp[k], mul(a, bp[m - k]));
    t *= (k % 2 == 0) ? binom : -binom;
    r += t;
    binom = binom * (m - k) / (k + 1);
  }
  return r;
}

GWord greduce(GWord w) {
  GWord out;
  for (int s : w) {
    if (s == 0) throw std::invalid_argument("greduce: zero syllable");
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

GWord gmul(const GWord& a, const GWord& b) {
  GWord w = a;
  w.insert(w.end(), b.begin(), b.end());
  return greduce(std::move(w));
}

GWord ginv(const GWord& a) {
  GWord w(a.rbegin(), a.rend());
  for (int& s : w) s = -s;
  return w;
}

GWord gcommutator(const GWord& a, const GWord& b) {
  return gmul(gmul(ginv(a), ginv(b)), gmul(a, b));
}

TensorPoly magnus(const GWord& g, int max_deg) {
  if (max_deg < 1) throw std::invalid_argument("magnus: max_deg must be >= 1");
  TensorPoly r = TensorPoly::unit();
  for (int s : g) {
    const Letter i = static_cast<Letter>(s > 0 ? s : -s);
    TensorPoly f;
    if (s > 0) {
      f = TensorPoly::unit() + TensorPoly::gen(i);
    } else {
      // truncated geometric series: exact inverse of 1 + x_i at every level
      Word w;
      for (int d = 0; d <= max_deg; ++d) {
        f.add_term(w, (d % 2 == 0) ? 1 : -1);
        w.push_back(i);
      }
    }
    r = mul(r, f, max_deg);
  }
  return r;
}

}  // namespace grlie
