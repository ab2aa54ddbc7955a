#include "grlie/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace grlie {

int compare(const Word& u, const Word& v) {
  if (u < v) return -1;
  if (v < u) return 1;
  return 0;
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw std::invalid_argument("is_lyndon: empty word");
  const std::size_t n = w.size();
  for (std::size_t i = 1; i < n; ++i) {
    // w < suffix w[i..) must hold strictly
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + i, w.end()))
      return false;
  }
  return true;
}

std::vector<std::vector<Word>> lyndon_words(int k, int max_len) {
  if (k < 1 || max_len < 1) throw std::invalid_argument("lyndon_words: k and max_len must be >= 1");
  std::vector<std::vector<Word>> out(static_cast<std::size_t>(max_len));
  // Duval's generation: emits all Lyndon words of length <= max_len in
  // increasing alphabetical order.
  std::vector<int> w{0};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) <= max_len) {
      Word word(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) word[i] = static_cast<Letter>(w[i] + 1);
      out[w.size() - 1].push_back(std::move(word));
    }
    const std::size_t m = w.size();
    while (static_cast<int>(w.size()) < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) throw std::invalid_argument("standard_factorization: length must be >= 2");
  if (!is_lyndon(w)) throw std::invalid_argument("standard_factorization: not a Lyndon word");
  std::size_t best = 1;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (std::lexicographical_compare(w.begin() + i, w.end(), w.begin() + best, w.end()))
      best = i;
  }
  return {Word(w.begin(), w.begin() + best), Word(w.begin() + best, w.end())};
}

std::string word_str(const Word& w) {
  std::string s;
  for (Letter a : w) {
    s += 'x';
    s += std::to_string(static_cast<int>(a));
  }
  return s;
}

Word parse_word(const std::string& s) {
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] != 'x') throw std::invalid_argument("parse_word: expected 'x' in " + s);
    ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) throw std::invalid_argument("parse_word: missing index in " + s);
    int v = std::stoi(s.substr(i, j - i));
    if (v < 1 || v > 255) throw std::invalid_argument("parse_word: index out of range in " + s);
    w.push_back(static_cast<Letter>(v));
    i = j;
  }
  return w;
}

}  // namespace grlie
