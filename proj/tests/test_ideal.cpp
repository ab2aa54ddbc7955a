#include "doctest.h"
#include "grlie/ideal.hpp"

using namespace grlie;

TEST_CASE("generating set of the ideal") {
  const auto& v = v_generators();
  CHECK(v.size() == 9);
  CHECK(v[0] == y_elem(1));
  CHECK(v[3] == y_elem(6) + y_elem(7));
  CHECK(v[8] == y_elem(15) + y_elem(13));
  // independent: rank 9 inside the 15-dimensional degree-2 layer
  SparseIntMatrix m;
  m.cols = 15;
  for (const auto& g : v) m.add_row(to_row(g, 2));
  auto divisors = snf(std::move(m));
  CHECK(divisors.size() == 9);
  for (const auto& d : divisors) CHECK(d == 1);
}

TEST_CASE("degree-2 images of the relators") {
  auto rep = relator_images();
  CHECK(rep.images.size() == 9);
  CHECK(rep.spans_match);
  // the first three commutator relators map exactly onto the printed table
  CHECK(rep.images[0].computed == y_elem(1));
  CHECK(rep.images[1].computed == y_elem(2));
  CHECK(rep.images[2].computed == y_elem(3));
  // independently derived values for the composite relators
  CHECK(rep.images[3].computed == -(y_elem(8) + y_elem(10)));
  CHECK(rep.images[4].computed == -(y_elem(13) + y_elem(15)));
  CHECK(rep.images[5].computed == -(y_elem(7) + y_elem(5)));
  CHECK(rep.images[6].computed == y_elem(6) + y_elem(7));
  CHECK(rep.images[7].computed == y_elem(12) + y_elem(13));
  CHECK(rep.images[8].computed == y_elem(8) + y_elem(9));
  // the attribution discrepancy is a warning, not a failure
  CHECK(!rep.warnings.empty());
  CHECK_FALSE(rep.images[5].matches_printed);
  CHECK_FALSE(rep.images[6].matches_printed);
}

TEST_CASE("spanning matrices of the ideal") {
  auto m2 = ideal_span(2);
  CHECK(m2.row_count() == 9);
  CHECK(m2.cols == 15);
  auto m3 = ideal_span(3);
  CHECK(m3.row_count() == 54);
  CHECK(m3.cols == 70);
  auto m4 = ideal_span(4);
  CHECK(m4.row_count() == 324);
  CHECK(m4.cols == 315);
}

TEST_CASE("torsion-free certificates at low degree") {
  auto c2 = certify(2, CertifyMethod::exact_snf);
  CHECK(c2.torsion_free);
  CHECK(c2.span_rank == 9);
  CHECK(c2.quotient_rank == 6);
  CHECK(c2.elementary_divisors.size() == 1);
  CHECK(c2.elementary_divisors[0].first == 1);
  CHECK(c2.elementary_divisors[0].second == 9);

  auto c3 = certify(3, CertifyMethod::exact_snf);
  CHECK(c3.torsion_free);
  CHECK(c3.quotient_rank == 16);

  CertifyOptions opts;
  opts.add_random_prime = false;
  auto m3 = certify(3, CertifyMethod::modular_probable, opts);
  CHECK(m3.torsion_free);
  CHECK(m3.quotient_rank == 16);
  CHECK(m3.rational_rank.has_value());
  CHECK(*m3.rational_rank == c3.span_rank);
  for (auto r : m3.modular_ranks) CHECK(r == c3.span_rank);
}

TEST_CASE("quotient rank table") {
  auto ranks = quotient_ranks(3, CertifyMethod::exact_snf);
  CHECK(ranks == GradedSeries{6, 6, 16});
}

TEST_CASE("ideal closure under bracketing") {
  // bracketing any degree-c row with a generator stays in the degree-(c+1) span
  for (int c = 2; c <= 3; ++c) {
    RationalRowSpace next(ideal_span(c + 1));
    const auto& basis_c = lyndon_basis6(c);
    const auto span = ideal_span(c);
    for (const auto& row : span.rows) {
      LiePoly p;
      for (const auto& [col, coeff] : row) p.add_term(basis_c[(std::size_t)col], coeff);
      for (Letter l = 1; l <= 6; ++l)
        CHECK(next.contains(to_row(lie_bracket(p, LiePoly::gen(l)), c + 1)));
    }
  }
}
