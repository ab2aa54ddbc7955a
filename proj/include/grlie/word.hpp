#ifndef GRLIE_WORD_HPP
#define GRLIE_WORD_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace grlie {

// A word over the alphabet {1..k}. Comparison is alphabetical order on the
// free monoid: a proper prefix is smaller, otherwise the first differing
// letter decides. std::vector's operator< is exactly this order.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// -1 / 0 / +1
int compare(const Word& u, const Word& v);

// True iff w is strictly smaller than every proper nonempty suffix.
// Throws std::invalid_argument on the empty word.
bool is_lyndon(const Word& w);

// All Lyndon words over {1..k} grouped by length: result[n-1] holds the
// length-n words in increasing order. Duval's algorithm.
std::vector<std::vector<Word>> lyndon_words(int k, int max_len);

// w = u.v with v the smallest proper nonempty suffix of w.
// Requires w Lyndon of length >= 2; throws otherwise.
std::pair<Word, Word> standard_factorization(const Word& w);

// "x3x1x2" <-> {3,1,2}
std::string word_str(const Word& w);
Word parse_word(const std::string& s);

}  // namespace grlie

#endif
