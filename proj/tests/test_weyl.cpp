#include "doctest.h"
#include "helpers.hpp"

using namespace twistform;
using testing_util::table_diff;
using testing_util::table_of;

TEST_CASE("weyl map solves the contraction identity") {
  Rng rng(21);
  for (int m = 1; m <= 5; ++m) {
    const SpaceDescriptor space(m);
    for (int q = 0; q <= m; ++q) {
      const auto w = random_element(rng, Kind::Vector, Parity::Even, q, space);
      const double scale = rng.uniform(0.5, 2.0);
      const auto we = weyl_map(TensorQM(w, scale * unit_volume(space)));
      CHECK(we.parity() == Parity::Odd);
      CHECK(we.grade() == m - q);
      CHECK(table_diff(we, oracle::weyl_solve(table_of(w), m, q, scale)) < 1e-12);
    }
  }
}

TEST_CASE("tensor normal form absorbs the volume scale") {
  const SpaceDescriptor space(3);
  const auto w = GradedElement::basis(Kind::Vector, Parity::Even, space, {0});
  const TensorQM t(w, -2.0 * unit_volume(space));
  CHECK(t.w().coeff({0}) == -2.0);
  CHECK(max_abs_diff(t.e(), unit_volume(space)) == 0.0);
  CHECK(tensor_pairing(t, GradedElement::basis(Kind::Covector, Parity::Even, space, {0}),
                       unit_volume_dual(space)) == -2.0);
}

TEST_CASE("weyl matrix is a signed permutation") {
  for (int m = 1; m <= 5; ++m)
    for (int q = 0; q <= m; ++q) {
      const Eigen::MatrixXd w = weyl_matrix(SpaceDescriptor(m), q);
      REQUIRE(w.rows() == w.cols());
      for (int c = 0; c < w.cols(); ++c) {
        CHECK(w.col(c).cwiseAbs().sum() == 1.0);
        CHECK(w.col(c).cwiseAbs().maxCoeff() == 1.0);
      }
      CHECK(std::abs(w.determinant()) == doctest::Approx(1.0));
    }
}

TEST_CASE("minor expansion of a simple multivector") {
  Rng rng(22);
  const SpaceDescriptor space(4);
  std::vector<Eigen::VectorXd> f{random_vector(rng, 4), random_vector(rng, 4)};
  const auto simple = simple_multivector(space, f);
  CHECK(max_abs_diff(minor_expansion(f, unit_volume(space)), minor_expansion(simple, unit_volume(space))) < 1e-14);
}

TEST_CASE("linear maps into top forms") {
  Rng rng(23);
  const SpaceDescriptor space(4);
  for (int q = 0; q <= 4; ++q) {
    const auto tuples = oracle::subsets(4, q);
    Eigen::RowVectorXd row(static_cast<int>(tuples.size()));
    for (int i = 0; i < row.size(); ++i) row[i] = rng.uniform(-1, 1);
    const HomQM l(space, q, row);
    const TensorQM t = iq_forward(l);
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      const auto a = GradedElement::basis(Kind::Covector, Parity::Even, space, tuples[k]);
      CHECK(l(a)[0] == row[static_cast<int>(k)]);
      CHECK(max_abs_diff(wedge(a, weyl_map(t)), l(a)) < 1e-14);
    }
    CHECK((iq_inverse(t).row() - row).cwiseAbs().maxCoeff() < 1e-15);
  }
}

TEST_CASE("bilinear representation via the two slots") {
  Rng rng(24);
  const SpaceDescriptor space(4);
  Eigen::MatrixXd b(4, 6);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 6; ++c) b(r, c) = rng.uniform(-1, 1);
  const BilinearMap map(space, 1, 2, b);
  const auto rep = represent_bilinear(map);
  const auto a = random_element(rng, Kind::Covector, Parity::Even, 1, space);
  const auto a2 = random_element(rng, Kind::Covector, Parity::Even, 2, space);
  double direct = 0.0;
  const auto ta = table_of(a), ta2 = table_of(a2);
  int r = 0;
  for (const auto& [i, x] : ta) {
    int c = 0;
    for (const auto& [j, y] : ta2) direct += x * b(r, c++) * y;
    ++r;
  }
  CHECK(map(a, a2)[0] == doctest::Approx(direct).epsilon(1e-13));
  CHECK(max_abs_diff(wedge(a2, weyl_map(rep.first(a))), map(a, a2)) < 1e-13);
  CHECK(max_abs_diff(wedge(a, weyl_map(rep.second(a2))), map(a, a2)) < 1e-13);
  CHECK_THROWS(map(a2, a));
}
