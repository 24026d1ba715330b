#include <cmath>

#include "helpers.hpp"
#include "mvop/errors.hpp"
#include "mvop/family.hpp"
#include "mvop/orthogonality.hpp"
#include "mvop/structure.hpp"

using namespace mvop;
using testing::check_matrix;

TEST_SUITE("orthogonality") {
  TEST_CASE("generalized binomial") {
    CHECK(gbinomial(2.5, 2) == doctest::Approx(1.875));
    CHECK(gbinomial(-0.5, 3) == doctest::Approx(-0.3125));
    CHECK(gbinomial(-0.5, 0) == 1.0);
    CHECK(gbinomial(4, 2) == 6.0);
    CHECK(gbinomial(4, -1) == 0.0);
  }

  TEST_CASE("diagonal weight") {
    check_matrix(weight_V_at(testing::p0(), 1.0), {{0, 0}, {0, 4}});
    check_matrix(weight_V_at(testing::p0(), 0.0), {{0, 0}, {0, 0}});
    const auto h = weight_V_at(testing::p0(), 0.5);
    CHECK(h(0, 0) > 0);
    CHECK(h(1, 1) > 0);
    CHECK_THROWS_WITH_AS(weight_V_at(Params::integer(2, 1, 1, -1), 0.5), doctest::Contains("weight undefined for m<0"),
                         ParameterError);
    CHECK_THROWS_AS(weight_V_at(testing::p0(), 1.5), ParameterError);
  }

  TEST_CASE("full weight") {
    check_matrix(weight_W_at(testing::p0(), 0.3), {{51.0 / 25, 9.0 / 25}, {9.0 / 25, 27.0 / 250}});
    check_matrix(weight_W_at(Params::integer(3, 2, 2, 1), 0.3),
                 {{73143.0 / 50000, 9639.0 / 25000, 1701.0 / 50000},
                  {9639.0 / 25000, 45927.0 / 250000, 5103.0 / 250000},
                  {1701.0 / 50000, 5103.0 / 250000, 15309.0 / 5000000}});
    check_matrix(weight_W_at(testing::p0(), 0.0), {{0, 0}, {0, 0}});
  }

  TEST_CASE("W equals Psi^T V Psi") {
    for (const auto& p : {testing::p0(), Params::integer(3, 1, 2, 0), Params::jacobi(0.5, 1.5, 1, 2)})
      for (double u : {0.1, 0.45, 0.9}) {
        const auto psi = psi_at(p.ell, u);
        CHECK(relative_difference(weight_W_at(p, u), psi.transpose() * weight_V_at(p, u) * psi) <= 1e-12);
      }
  }

  TEST_CASE("scalar weight") {
    const auto p = Params::integer(3, 1, 0, 2);
    const double u = 0.4;
    CHECK(weight_W_at(p, u)(0, 0) == doctest::Approx(6.0 * u * u * (1 - u) * (1 - u)));
  }

  TEST_CASE("quadrature exactness") {
    auto integrate = [](const QuadRule& q, auto f) {
      double s = 0;
      for (std::size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * f(q.nodes[i]);
      return s;
    };
    CHECK(quad_rule(2).nodes.size() == 2);
    CHECK(integrate(quad_rule(2), [](double u) { return u * u; }) == doctest::Approx(1.0 / 3).epsilon(1e-14));
    CHECK(integrate(quad_rule(8), [](double u) { return std::pow(u, 5) * std::pow(1 - u, 3); }) ==
          doctest::Approx(1.0 / 504).epsilon(1e-14));
    const auto gj = gauss_jacobi_rule(3, 0.5, 1.5);
    CHECK(integrate(gj, [](double u) { return u * u; }) == doctest::Approx(0.036815538909255389513).epsilon(1e-14));
    CHECK(integrate(gj, [](double u) { return std::pow(u, 5); }) == doctest::Approx(0.0094915061250424051089).epsilon(1e-14));
    CHECK(integrate(gauss_jacobi_rule(1, 0.0, 0.0), [](double) { return 1.0; }) == doctest::Approx(1.0));
  }

  TEST_CASE("norms of F_{w,r}") {
    const auto p = testing::p0();
    const auto ws = make_weight(p);
    const double want[] = {8.0 / 3, 4.0 / 3, 8.0 / 15, 1.0 / 3, 4.0 / 21, 2.0 / 15};
    int i = 0;
    for (int w = 0; w <= 2; ++w)
      for (int r = 0; r <= 1; ++r, ++i) {
        const auto f = f_wr(p, w, r).poly;
        CHECK(inner_vec(ws, f, f) == doctest::Approx(want[i]).epsilon(1e-12));
      }
    const auto q = Params::integer(3, 1, 2, 1);
    const auto wq = make_weight(q);
    const double want_q[] = {2.0, 18.0 / 35, 9.0 / 28, 9.0 / 20, 2.0 / 15, 9.0 / 125, 18.0 / 125, 18.0 / 385, 2.0 / 81};
    i = 0;
    for (int w = 0; w <= 2; ++w)
      for (int r = 0; r <= 2; ++r, ++i) {
        const auto f = f_wr(q, w, r).poly;
        CHECK(inner_vec(wq, f, f) == doctest::Approx(want_q[i]).epsilon(1e-12));
      }
  }

  TEST_CASE("norms in Jacobi mode") {
    const auto p = Params::jacobi(0.5, 1.5, 1, 1);
    const auto ws = make_weight(p);
    CHECK_FALSE(ws.polynomial);
    const auto f10 = f_wr(p, 1, 0).poly, f21 = f_wr(p, 2, 1).poly;
    CHECK(inner_vec(ws, f10, f10) == doctest::Approx(0.35062418008814656679).epsilon(1e-12));
    CHECK(inner_vec(ws, f21, f21) == doctest::Approx(0.050501425115576665999).epsilon(1e-12));
    CHECK(std::abs(inner_vec(ws, f10, f21)) < 1e-12);
  }

  TEST_CASE("distinct labels are orthogonal") {
    const auto p = testing::p0();
    const auto ws = make_weight(p);
    const auto f00 = f_wr(p, 0, 0).poly, f01 = f_wr(p, 0, 1).poly;
    CHECK(std::abs(inner_vec(ws, f00, f01)) <= 1e-10 * std::sqrt(inner_vec(ws, f00, f00) * inner_vec(ws, f01, f01)));
    CHECK(std::abs(inner_vec(ws, f_wr(p, 1, 0).poly, f_wr(p, 2, 1).poly)) <= 1e-12);
    const auto g = gram(ws, 4);
    CHECK(g.labels.size() == 10);
    CHECK(g.max_offdiag_ratio <= 1e-9);
    CHECK(g.matrix_level_max_ratio <= 1e-9);
    CHECK(g.min_diagonal > 0);
  }

  TEST_CASE("matrix-level orthogonality") {
    const auto p = testing::p0();
    const auto ws = make_weight(p);
    const auto P0 = assemble_P(p, 0).P, P1 = assemble_P(p, 1).P;
    CHECK(inner_mat(ws, P0, P1).max_abs() <= 1e-12);
    const auto D = inner_mat(ws, P1, P1);
    CHECK(D(0, 0) == doctest::Approx(8.0 / 15));
    CHECK(D(1, 1) == doctest::Approx(1.0 / 3));
    CHECK(std::abs(D(0, 1)) <= 1e-12);
  }

  TEST_CASE("Jacobi-mode Gram matrix") {
    const auto g = gram(make_weight(Params::jacobi(0.5, 1.5, 1, 1)), 3);
    CHECK(g.max_offdiag_ratio <= 1e-9);
    CHECK(g.matrix_level_max_ratio <= 1e-9);
  }
}
