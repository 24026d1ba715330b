#include "helpers.hpp"
#include "mvop/structure.hpp"

using namespace mvop;
using testing::check_matrix;

TEST_SUITE("structure") {
  TEST_CASE("reference point matrices") {
    const auto S = build_structure(testing::p0());
    check_matrix(S.A0, {{2, 0}, {0, 1}});
    check_matrix(S.C, {{2, 0}, {-1, 1}});
    check_matrix(S.U, {{4, 0}, {0, 5}});
    check_matrix(S.V, {{0, -1}, {0, 2}});
    check_matrix(S.B0, {{-1, 1}, {0, 0}});
    check_matrix(S.B1, {{0, 0}, {1, -1}});
    check_matrix(S.U - S.C, {{2, 0}, {1, 4}});
  }

  TEST_CASE("row sums of B0 and B1 vanish") {
    for (const auto& p : {testing::p0(), Params::integer(3, 2, 2, 1), Params::integer(4, 1, 3, 0)}) {
      const auto S = build_structure(p);
      for (std::size_t i = 0; i < S.B0.rows(); ++i) {
        double s0 = 0, s1 = 0;
        for (std::size_t j = 0; j < S.B0.cols(); ++j) {
          s0 += S.B0(i, j);
          s1 += S.B1(i, j);
        }
        CHECK(s0 == 0.0);
        CHECK(s1 == 0.0);
      }
    }
  }

  TEST_CASE("Pascal matrices") {
    check_matrix(pascal(1), {{1, 0}, {1, 1}});
    check_matrix(pascal(2), {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}});
    check_matrix(pascal(3) * pascal_inverse(3), {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    check_matrix(pascal(0), {{1}});
  }

  TEST_CASE("Psi at a point and as a polynomial") {
    check_matrix(psi_at(2, 0.5), {{1, 0, 0}, {1, 0.5, 0}, {1, 1.0, 0.25}});
    const auto P = psi_poly(2);
    check_matrix(P.evaluate_at(0.5), {{1, 0, 0}, {1, 0.5, 0}, {1, 1.0, 0.25}});
    check_matrix(psi_at(1, 0.0), {{1, 0}, {1, 0}});
  }

  TEST_CASE("Jacobi mode with integral values reproduces Integer mode") {
    const auto a = build_structure(Params::integer(3, 1, 2, 1));
    const auto b = build_structure(Params::jacobi(1.0, 2.0, 1, 2));
    CHECK(a.C == b.C);
    CHECK(a.U == b.U);
    CHECK(a.V == b.V);
    CHECK(a.P0 == b.P0);
    CHECK(a.D1 == b.D1);
  }

  TEST_CASE("binomials") {
    CHECK(binomial_int(5, 2) == 10);
    CHECK(binomial_int(0, 0) == 1);
    CHECK(binomial_int(3, 4) == 0);
  }
}
