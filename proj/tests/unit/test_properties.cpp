// Randomized checks of the structural invariants over many parameter points.
#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "mvop/family.hpp"
#include "mvop/operators.hpp"
#include "mvop/orthogonality.hpp"
#include "mvop/recurrence.hpp"
#include "mvop/spectral.hpp"

using namespace mvop;

namespace {

std::vector<Params> integer_points() {
  std::vector<Params> out;
  for (int n = 2; n <= 5; ++n)
    for (int k = 1; k < n; ++k)
      for (int l = 0; l <= 3; ++l)
        for (int m = 0; m <= 2; ++m) out.push_back(Params::integer(n, k, l, m));
  return out;
}

std::vector<Params> jacobi_points(int count) {
  std::mt19937_64 g(2024);
  std::uniform_real_distribution<double> a(-0.9, 3.0), b(0.2, 4.0);
  std::vector<Params> out;
  while (static_cast<int>(out.size()) < count) {
    const int k = 1 + static_cast<int>(g() % 2), l = static_cast<int>(g() % 3);
    const auto p = Params::jacobi(a(g), b(g), k, l);
    if (p.n_eff() - k > 0.05) out.push_back(p);
  }
  return out;
}

double scale(const VectorPolynomial& f, double lambda) { return std::max(1.0, std::abs(lambda)) * std::max(1.0, f.max_coeff_norm()); }

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("joint eigenfunctions with exact degree and triangular leading term") {
    std::vector<Params> pts = integer_points();
    const auto j = jacobi_points(12);
    pts.insert(pts.end(), j.begin(), j.end());
    for (const auto& p : pts) {
      const auto S = build_structure(p);
      for (int w = 0; w <= 3; ++w)
        for (int r = 0; r <= p.ell; ++r) {
          INFO(p.describe() << " w=" << w << " r=" << r);
          const auto e = f_wr(S, w, r);
          const auto& f = e.poly;
          const double sc = scale(f, std::max(std::abs(e.spectral.lambda), std::abs(e.spectral.mu)));
          CHECK(max_coeff_difference(apply_D_u(S, f), e.spectral.lambda * f) <= 1e-9 * sc);
          CHECK(max_coeff_difference(apply_E_u(S, f), e.spectral.mu * f) <= 1e-9 * sc);
          const auto t = f.trimmed();
          REQUIRE(t.degree() == w);
          const auto& lead = t[static_cast<std::size_t>(w)];
          CHECK(std::abs(lead[static_cast<std::size_t>(r)]) > 1e-10 * t.max_coeff_norm());
          for (int s = r + 1; s <= p.ell; ++s) CHECK(std::abs(lead[static_cast<std::size_t>(s)]) <= 1e-10 * t.max_coeff_norm());
        }
    }
  }

  TEST_CASE("superdiagonal of M(lambda) does not depend on lambda") {
    for (const auto& p : integer_points()) {
      const auto S = build_structure(p);
      const auto M0 = build_M(S, 0.0).matrix;
      for (double lambda : {-31.0, -2.5, 4.0}) {
        const auto M = build_M(S, lambda).matrix;
        for (int s = 0; s < p.ell; ++s) {
          const auto i = static_cast<std::size_t>(s);
          CHECK(std::abs(M(i, i + 1) - M0(i, i + 1)) <= 1e-10 * std::max(1.0, std::abs(M0(i, i + 1))));
          CHECK(M(i, i + 1) == doctest::Approx(m_superdiagonal(p, s)));
          for (std::size_t c = i + 2; c < M.cols(); ++c) CHECK(std::abs(M(i, c)) <= 1e-10);
        }
      }
    }
  }

  TEST_CASE("blocks are stochastic and reproduce multiplication by 1-u") {
    std::vector<Params> pts = integer_points();
    const auto j = jacobi_points(12);
    pts.insert(pts.end(), j.begin(), j.end());
    for (const auto& p : pts)
      for (int w = 0; w <= 4; ++w) {
        INFO(p.describe() << " w=" << w);
        const auto b = blocks(p, w);
        for (std::size_t r = 0; r < b.A.rows(); ++r) {
          double sum = 0;
          for (std::size_t c = 0; c < b.A.cols(); ++c) {
            sum += b.A(r, c) + b.B(r, c) + b.C(r, c);
            CHECK(b.A(r, c) >= -1e-14);
            CHECK(b.B(r, c) >= -1e-14);
            CHECK(b.C(r, c) >= -1e-14);
          }
          CHECK(std::abs(sum - 1.0) <= 1e-12);
        }
        CHECK(three_term_residual(p, w) <= 1e-9);
        if (w == 0) CHECK(b.A.max_abs() == 0.0);
      }
  }

  TEST_CASE("Gram matrices are diagonal and positive") {
    std::vector<Params> pts;
    for (const auto& p : integer_points())
      if (p.n <= 4) pts.push_back(p);
    const auto j = jacobi_points(6);
    pts.insert(pts.end(), j.begin(), j.end());
    for (const auto& p : pts) {
      INFO(p.describe());
      const auto g = gram(make_weight(p), 3);
      CHECK(g.max_offdiag_ratio <= 1e-9);
      CHECK(g.matrix_level_max_ratio <= 1e-9);
      CHECK(g.min_diagonal > 0);
    }
  }

  TEST_CASE("weight is symmetric positive definite inside the interval") {
    for (const auto& p : integer_points())
      for (double u : {0.01, 0.3, 0.77, 0.99}) {
        const auto W = weight_W_at(p, u);
        CHECK(W == W.transpose());
        // leading principal minors via Cholesky-style elimination
        auto A = W;
        const std::size_t n = A.rows();
        bool pd = true;
        for (std::size_t c = 0; c < n && pd; ++c) {
          if (!(A(c, c) > 0)) pd = false;
          for (std::size_t r = c + 1; r < n && pd; ++r) {
            const double f = A(r, c) / A(c, c);
            for (std::size_t k = c; k < n; ++k) A(r, k) -= f * A(c, k);
          }
        }
        CHECK(pd);
      }
  }

  TEST_CASE("injectivity of the spectrum and the exact identity") {
    for (const auto& p : integer_points()) {
      CHECK(spectrum_injectivity_check(p, 8));
      for (int w = 0; w <= 8; ++w)
        for (int r = 0; r <= p.ell; ++r) CHECK(mu_exact(p, w, r) == mu_of_lambda_exact(p, r, lambda_exact(p, w, r)));
    }
  }

  TEST_CASE("t-power recursion holds for eigenfunctions only") {
    std::mt19937_64 g(5);
    std::uniform_real_distribution<double> d(-1, 1);
    for (const auto& p : integer_points()) {
      const auto S = build_structure(p);
      for (int w = 0; w <= 3; ++w)
        for (int r = 0; r <= p.ell; ++r) {
          const auto e = f_wr(S, w, r);
          CHECK(t_recursion_residual(S, e.poly, e.spectral.lambda) <= 1e-9);
        }
      std::vector<VectorR> c;
      for (int j = 0; j <= 3; ++j) {
        VectorR v(static_cast<std::size_t>(p.dim()));
        for (std::size_t s = 0; s < v.size(); ++s) v[s] = d(g);
        c.push_back(v);
      }
      CHECK(t_recursion_residual(S, VectorPolynomial(c), lambda_eig(p, 2, 0)) > 1e-3);
    }
  }
}
