#include "doctest.h"
#include "helpers.hpp"

using namespace twistform;
using testing_util::table_diff;
using testing_util::table_of;

TEST_CASE("wedge matches permutation-sign expansion") {
  Rng rng(11);
  for (int m = 1; m <= 6; ++m) {
    const SpaceDescriptor space(m);
    for (int p = 0; p <= m; ++p)
      for (int q = 0; p + q <= m; ++q) {
        for (Parity pa : {Parity::Even, Parity::Odd})
          for (Parity pb : {Parity::Even, Parity::Odd}) {
            const auto a = random_element(rng, Kind::Covector, pa, p, space);
            const auto b = random_element(rng, Kind::Covector, pb, q, space);
            const auto ab = wedge(a, b);
            CHECK(ab.parity() == (pa == pb ? Parity::Even : Parity::Odd));
            CHECK(table_diff(ab, oracle::wedge(table_of(a), table_of(b))) < 1e-13);
          }
      }
  }
}

TEST_CASE("wedge past the dimension is zero") {
  const SpaceDescriptor space(3);
  const auto a = GradedElement::basis(Kind::Covector, Parity::Even, space, {0, 1});
  const auto b = GradedElement::basis(Kind::Covector, Parity::Even, space, {1, 2});
  CHECK_THROWS_AS(wedge(a, b), GradeOverflow);
}

TEST_CASE("basis absorbs the permutation sign") {
  const SpaceDescriptor space(4);
  const auto a = GradedElement::basis(Kind::Covector, Parity::Even, space, {2, 0, 3});
  CHECK(a.coeff({0, 2, 3}) == -1.0);
  const auto b = GradedElement::basis(Kind::Covector, Parity::Even, space, {3, 2, 0});
  CHECK(b.coeff({0, 2, 3}) == -1.0);
}

TEST_CASE("evaluation on vectors is the sum of determinant minors") {
  Rng rng(12);
  for (int m = 2; m <= 5; ++m) {
    const SpaceDescriptor space(m);
    for (int q = 1; q <= m; ++q) {
      const auto a = random_element(rng, Kind::Covector, Parity::Even, q, space);
      std::vector<Eigen::VectorXd> vs;
      for (int k = 0; k < q; ++k) vs.push_back(random_vector(rng, m));
      const double expect = oracle::evaluate(table_of(a), vs);
      CHECK(evaluate(a, vs, Orientation::reference()) == doctest::Approx(expect).epsilon(1e-12));
      CHECK(pair(a, simple_multivector(space, vs)) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("odd forms change sign with orientation, even forms do not") {
  Rng rng(13);
  const SpaceDescriptor space(3);
  std::vector<Eigen::VectorXd> vs{random_vector(rng, 3), random_vector(rng, 3)};
  const auto odd = random_element(rng, Kind::Covector, Parity::Odd, 2, space);
  CHECK(evaluate(odd, vs, Orientation::opposite()) == -evaluate(odd, vs, Orientation::reference()));
  const auto e = GradedElement(Kind::Covector, Parity::Even, 2, space, odd.coeffs());
  CHECK(evaluate(e, vs, Orientation::opposite()) == evaluate(e, vs, Orientation::reference()));
  CHECK(max_abs_diff(reorient(odd, Orientation::opposite()), -1.0 * odd) == 0.0);
}

TEST_CASE("interior products against the defining pairings") {
  Rng rng(14);
  for (int m = 2; m <= 5; ++m) {
    const SpaceDescriptor space(m);
    for (int qa = 0; qa <= m; ++qa)
      for (int qw = 0; qw <= qa; ++qw) {
        const auto a = random_element(rng, Kind::Covector, Parity::Even, qa, space);
        const auto w = random_element(rng, Kind::Vector, Parity::Odd, qw, space);
        // <w ⌟ a, e_J> = <a, w ∧ e_J>
        oracle::Table expect;
        for (const auto& j : oracle::subsets(m, qa - qw))
          expect[j] = oracle::pairing(table_of(a), oracle::wedge(table_of(w), {{j, 1.0}}));
        const auto left = interior_left(w, a);
        CHECK(left.kind() == Kind::Covector);
        CHECK(left.parity() == Parity::Odd);
        CHECK(table_diff(left, expect) < 1e-13);

        // <e^J, w2 ⌞ a2> = <e^J ∧ a2, w2>
        const auto w2 = random_element(rng, Kind::Vector, Parity::Even, qa, space);
        const auto a2 = random_element(rng, Kind::Covector, Parity::Odd, qw, space);
        oracle::Table expect2;
        for (const auto& j : oracle::subsets(m, qa - qw))
          expect2[j] = oracle::pairing(oracle::wedge({{j, 1.0}}, table_of(a2)), table_of(w2));
        const auto right = interior_right(w2, a2);
        CHECK(right.kind() == Kind::Vector);
        CHECK(table_diff(right, expect2) < 1e-13);
      }
  }
}

TEST_CASE("type errors") {
  const SpaceDescriptor s3(3), s4(4);
  const auto a = GradedElement::basis(Kind::Covector, Parity::Even, s3, {0});
  const auto v = GradedElement::basis(Kind::Vector, Parity::Even, s3, {1});
  const auto b = GradedElement::basis(Kind::Covector, Parity::Even, s4, {0});
  CHECK_THROWS_AS(wedge(a, v), KindMismatch);
  CHECK_THROWS_AS(wedge(a, b), DimensionMismatch);
  CHECK_THROWS_AS(a + GradedElement::basis(Kind::Covector, Parity::Odd, s3, {0}), ParityMismatch);
  CHECK_THROWS_AS(pair(a, GradedElement(Kind::Vector, Parity::Even, 2, s3)), GradeMismatch);
  CHECK_THROWS_AS(interior_left(GradedElement(Kind::Vector, Parity::Even, 2, s3), a), GradeMismatch);
  CHECK_THROWS(SpaceDescriptor(kMaxDim + 1));
}
