#ifndef GRLIE_IDEAL_HPP
#define GRLIE_IDEAL_HPP

#include <optional>
#include <string>

#include "grlie/lie.hpp"
#include "grlie/matrix.hpp"

namespace grlie {

// The printed generating set V of the ideal J: nine degree-2 elements.
const std::vector<LiePoly>& v_generators();

// Lyndon words of degree c over 6 letters, ascending; the column space of
// every degree-c matrix. Cached.
const std::vector<Word>& lyndon_basis6(int c);
std::vector<std::pair<std::int32_t, Int>> to_row(const LiePoly& p, int degree);

struct RelatorImage {
  int index = 0;                 // 1..9
  std::string relator;           // (a_i..., a_j...) as text
  LiePoly computed;              // degree-2 Magnus image in Lyndon coordinates
  LiePoly printed;               // the correspondence table entry
  bool matches_printed = false;  // exact equality with the table entry
};

struct RelatorImageReport {
  std::vector<RelatorImage> images;
  bool spans_match = false;  // computed images and V span the same sublattice
  std::vector<std::string> warnings;
};

RelatorImageReport relator_images();

// Spanning matrix of J^c: rows are [v, x_{i1}, ..., x_{i_{c-2}}] in Lyndon
// coordinates for all v in V and letter tuples; 9 * 6^(c-2) rows.
SparseIntMatrix ideal_span(int c);

enum class CertifyMethod { exact_snf, modular_probable };

struct DegreeCertificate {
  int degree = 0;
  std::int64_t ambient_rank = 0;
  std::int64_t span_count = 0;
  std::int64_t span_rank = 0;
  std::vector<std::pair<Int, std::int64_t>> elementary_divisors;  // (value, count), run-length
  std::int64_t quotient_rank = 0;
  bool torsion_free = false;
  CertifyMethod method = CertifyMethod::exact_snf;
  std::vector<std::uint32_t> primes;          // modular method only
  std::optional<std::int64_t> rational_rank;  // modular method, when computed
  std::vector<std::int64_t> modular_ranks;    // per prime
};

struct CertifyOptions {
  std::vector<std::uint32_t> primes = {2, 3, 5, 7, 11, 13};
  bool add_random_prime = true;     // one extra prime from [2^29, 2^30)
  bool rational_elimination = true; // modular method: also run exact rank
  SnfOptions snf;
};

DegreeCertificate certify(int degree, CertifyMethod method, const CertifyOptions& opts = {});

// Rank table of the graded quotient: entry 1 is 6 (abelianization), entries
// 2..max_deg come from certify.
GradedSeries quotient_ranks(int max_deg, CertifyMethod method, const CertifyOptions& opts = {});

const char* method_name(CertifyMethod m);

}  // namespace grlie

#endif
