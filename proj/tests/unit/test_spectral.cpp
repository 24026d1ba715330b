#include <algorithm>

#include "helpers.hpp"
#include "mvop/errors.hpp"
#include "mvop/spectral.hpp"

using namespace mvop;
using testing::check_matrix;

TEST_SUITE("spectral") {
  TEST_CASE("M(lambda) at the reference point") {
    const auto S = build_structure(testing::p0());
    check_matrix(build_M(S, 0.0).matrix, {{0, -1.5}, {0, 2}});
    check_matrix(build_M(S, -7.0).matrix, {{-3.5, -1.5}, {-77.0 / 6, -1.5}});
    CHECK(m_superdiagonal(testing::p0(), 0) == doctest::Approx(-1.5));
  }

  TEST_CASE("M(lambda) for n=3 k=1 ell=2 m=1") {
    const auto p = Params::integer(3, 1, 2, 1);
    const auto S = build_structure(p);
    check_matrix(build_M(S, 0.0).matrix, {{0, -20.0 / 3, 0}, {0, 13.0 / 5, -27.0 / 5}, {0, 37.0 / 5, 77.0 / 5}});
    check_matrix(build_M(S, -7.0).matrix,
                 {{-35.0 / 3, -20.0 / 3, 0}, {-182.0 / 15, -37.0 / 3, -27.0 / 5}, {14.0 / 3, -10.0 / 3, 0}});
    CHECK(m_superdiagonal(p, 0) == doctest::Approx(-20.0 / 3));
    CHECK(m_superdiagonal(p, 1) == doctest::Approx(-27.0 / 5));
  }

  TEST_CASE("scalar case is mu_0(lambda)") {
    const auto p = Params::integer(3, 1, 0, 1);
    const auto M = build_M(build_structure(p), -5.0).matrix;
    REQUIRE(M.rows() == 1);
    CHECK(M(0, 0) == doctest::Approx(-5.0));
  }

  TEST_CASE("spectrum matches mu_r(lambda)") {
    const auto S = build_structure(testing::p0());
    const auto rep = charpoly_report(S, 0.0);
    CHECK(rep.ok);
    CHECK(rep.computed[0] == doctest::Approx(0.0));
    CHECK(rep.computed[1] == doctest::Approx(2.0));
    const auto p = Params::integer(3, 2, 2, 1);
    CHECK(charpoly_check(build_structure(p), lambda_eig(p, 2, 1)));
  }

  TEST_CASE("eigenvectors by forward substitution") {
    const auto S = build_structure(testing::p0());
    testing::check_vector(eigvec(S, 0.0, 0), {1, 0});
    const auto v = eigvec(S, -2.0, 1);
    const auto Mv = build_M(S, -2.0).matrix * v;
    CHECK(v[0] == 1.0);
    CHECK((Mv - 2.0 * v).norm_inf() < 1e-12);
    testing::check_vector(eigvec(S, -7.0, 1), {1, -11.0 / 3});
  }

  TEST_CASE("colliding eigenvalues are refused") {
    // mu_0(lambda) = lambda and mu_1(lambda) = 2 meet at lambda = 2
    const auto S = build_structure(testing::p0());
    CHECK_THROWS_WITH_AS(eigvec(S, 2.0, 0), doctest::Contains("degenerate eigenvalue collision"), NumericError);
  }
}
