#include "mvop/orthogonality.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "mvop/errors.hpp"
#include "mvop/family.hpp"
#include "mvop/structure.hpp"

namespace mvop {

double gbinomial(double x, int j) {
  if (j < 0) return 0.0;
  double r = 1.0;
  for (int i = 0; i < j; ++i) r *= (x - i) / (j - i);
  return r;
}

namespace {

bool integral(double x) { return std::floor(x) == x; }

void require_unit_interval(double u) {
  if (!(u >= 0.0 && u <= 1.0)) throw ParameterError("u must lie in [0,1] (u=" + std::to_string(u) + ")");
}

}  // namespace

WeightSpec make_weight(const Params& p) {
  validate_for_weight(p);
  WeightSpec ws;
  ws.params = p;
  const double n = p.n_eff(), m = p.m_eff();
  const int l = p.ell, k = p.k;
  for (int r = 0; r <= l; ++r) {
    ws.c.push_back(2.0 * n * gbinomial(l + k - r - 1, l - r) * gbinomial(n - k + r - 1, r));
  }
  ws.exp_u = n - 1.0;
  ws.exp_1mu0 = m + l;
  ws.polynomial = integral(ws.exp_u) && integral(ws.exp_1mu0);
  return ws;
}

MatrixR weight_V_at(const Params& p, double u) {
  require_unit_interval(u);
  const WeightSpec ws = make_weight(p);
  const auto N = static_cast<std::size_t>(p.dim());
  MatrixR V(N, N);
  for (std::size_t r = 0; r < N; ++r) {
    V(r, r) = ws.c[r] * std::pow(1.0 - u, ws.exp_1mu0 - static_cast<double>(r)) * std::pow(u, ws.exp_u);
  }
  return V;
}

MatrixR weight_W_at(const Params& p, double u) {
  require_unit_interval(u);
  const WeightSpec ws = make_weight(p);
  const int l = p.ell;
  const auto N = static_cast<std::size_t>(l + 1);
  MatrixR W(N, N);
  for (int i = 0; i <= l; ++i)
    for (int j = 0; j <= l; ++j) {
      double acc = 0.0;
      for (int r = std::max(i, j); r <= l; ++r) {
        acc += ws.c[static_cast<std::size_t>(r)] * static_cast<double>(binomial_int(r, i) * binomial_int(r, j)) *
               std::pow(1.0 - u, ws.exp_1mu0 - r) * std::pow(u, ws.exp_u + i + j);
      }
      W(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
    }
  return W;
}

QuadRule gauss_jacobi_rule(int npts, double a, double b) {
  if (npts < 1) throw std::invalid_argument("quadrature needs at least one node");
  if (!(a > -1.0 && b > -1.0)) throw ParameterError("Gauss-Jacobi exponents must exceed -1");
  // On [-1,1] the weight is (1-x)^al (1+x)^be with u = (1+x)/2.
  const double al = b, be = a, ab = al + be;
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(npts, npts);
  for (int j = 0; j < npts; ++j) {
    const double s = 2.0 * j + ab;
    J(j, j) = j == 0 ? (be - al) / (ab + 2.0) : (be * be - al * al) / (s * (s + 2.0));
    if (j + 1 < npts) {
      const double jj = j + 1.0, t = 2.0 * jj + ab;
      const double off2 = jj == 1.0 ? 4.0 * (1.0 + al) * (1.0 + be) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
                                    : 4.0 * jj * (jj + al) * (jj + be) * (jj + ab) / (t * t * (t + 1.0) * (t - 1.0));
      J(j, j + 1) = J(j + 1, j) = std::sqrt(off2);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw NumericError("Golub-Welsch eigenproblem did not converge");
  const double mass = std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) - std::lgamma(a + b + 2.0));
  QuadRule q;
  for (int i = 0; i < npts; ++i) {
    const double v0 = es.eigenvectors()(0, i);
    q.nodes.push_back(0.5 * (1.0 + es.eigenvalues()(i)));
    q.weights.push_back(mass * v0 * v0);
  }
  return q;
}

QuadRule quad_rule(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("max_degree >= 0 violated");
  return gauss_jacobi_rule(max_degree / 2 + 1, 0.0, 0.0);
}

namespace {

// Calls body(r, u, weight) so that sum over calls of weight * g_r(u) integrates
// sum_r c_r u^{n-1} (1-u)^{m+ell-r} g_r(u) exactly for g_r of degree <= deg_g.
template <class Body>
void for_each_weighted_node(const WeightSpec& ws, int deg_g, int node_factor, Body&& body) {
  const int l = ws.params.ell;
  if (ws.polynomial) {
    const int deg = deg_g + static_cast<int>(ws.exp_u) + static_cast<int>(ws.exp_1mu0);
    const QuadRule q = gauss_jacobi_rule(node_factor * (deg / 2 + 1), 0.0, 0.0);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) {
      const double u = q.nodes[i];
      const double base = q.weights[i] * std::pow(u, ws.exp_u);
      for (int r = 0; r <= l; ++r) {
        body(r, u, base * ws.c[static_cast<std::size_t>(r)] * std::pow(1.0 - u, ws.exp_1mu0 - r));
      }
    }
    return;
  }
  for (int r = 0; r <= l; ++r) {
    const QuadRule q = gauss_jacobi_rule(node_factor * (deg_g / 2 + 1), ws.exp_u, ws.exp_1mu0 - r);
    for (std::size_t i = 0; i < q.nodes.size(); ++i) body(r, q.nodes[i], q.weights[i] * ws.c[static_cast<std::size_t>(r)]);
  }
}

}  // namespace

double inner_vec(const WeightSpec& ws, const VectorPolynomial& F1, const VectorPolynomial& F2, int node_factor) {
  if (F1.is_zero() || F2.is_zero()) return 0.0;
  const int l = ws.params.ell;
  const auto H1 = psi_poly(l) * F1;
  const auto H2 = psi_poly(l) * F2;
  double acc = 0.0;
  for_each_weighted_node(ws, H1.degree() + H2.degree(), node_factor, [&](int r, double u, double wt) {
    const auto s = static_cast<std::size_t>(r);
    acc += wt * H1.evaluate_at(u)[s] * H2.evaluate_at(u)[s];
  });
  return acc;
}

MatrixR inner_mat(const WeightSpec& ws, const MatrixPolynomial& P, const MatrixPolynomial& Q, int node_factor) {
  const int l = ws.params.ell;
  const auto N = static_cast<std::size_t>(l + 1);
  MatrixR out(N, N);
  if (P.is_zero() || Q.is_zero()) return out;
  // P Psi^T and Q Psi^T; column r of each pairs with the r-th diagonal weight term.
  const auto PsiT = [&] {
    const MatrixPolynomial psi = psi_poly(l);
    std::vector<MatrixR> c;
    for (const auto& m : psi.coeffs()) c.push_back(m.transpose());
    return MatrixPolynomial(std::move(c));
  }();
  const auto A = P * PsiT;
  const auto B = Q * PsiT;
  for_each_weighted_node(ws, A.degree() + B.degree(), node_factor, [&](int r, double u, double wt) {
    const auto s = static_cast<std::size_t>(r);
    const MatrixR a = A.evaluate_at(u), b = B.evaluate_at(u);
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) out(i, j) += wt * a(i, s) * b(j, s);
  });
  return out;
}

GramResult gram(const WeightSpec& ws, int wmax, int node_factor) {
  const Params& p = ws.params;
  if (wmax < 0) throw ParameterError("wmax >= 0 violated");
  const StructureSet S = build_structure(p);
  GramResult res;
  std::vector<VectorPolynomial> fs;
  for (int w = 0; w <= wmax; ++w)
    for (int r = 0; r <= p.ell; ++r) {
      res.labels.emplace_back(w, r);
      fs.push_back(f_wr(S, w, r).poly);
    }
  const std::size_t n = fs.size();
  res.gram = MatrixR(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      res.gram(i, j) = inner_vec(ws, fs[i], fs[j], node_factor);
      res.gram(j, i) = i == j ? res.gram(i, j) : inner_vec(ws, fs[j], fs[i], node_factor);
    }
  res.min_diagonal = res.gram(0, 0);
  for (std::size_t i = 0; i < n; ++i) res.min_diagonal = std::min(res.min_diagonal, res.gram(i, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const double g = std::sqrt(std::abs(res.gram(i, i) * res.gram(j, j)));
      res.max_offdiag_ratio = std::max(res.max_offdiag_ratio, std::abs(res.gram(i, j)) / g);
    }

  std::vector<MatrixPolynomial> Ps;
  std::vector<MatrixR> self;
  for (int w = 0; w <= wmax; ++w) {
    Ps.push_back(assemble_P(S, w).P);
    self.push_back(inner_mat(ws, Ps.back(), Ps.back(), node_factor));
  }
  for (int w = 0; w <= wmax; ++w)
    for (int v = 0; v <= wmax; ++v) {
      if (v == w) continue;
      const MatrixR G = inner_mat(ws, Ps[static_cast<std::size_t>(w)], Ps[static_cast<std::size_t>(v)], node_factor);
      const MatrixR& Dw = self[static_cast<std::size_t>(w)];
      const MatrixR& Dv = self[static_cast<std::size_t>(v)];
      for (std::size_t a = 0; a < G.rows(); ++a)
        for (std::size_t b = 0; b < G.cols(); ++b) {
          const double g = std::sqrt(std::abs(Dw(a, a) * Dv(b, b)));
          res.matrix_level_max_ratio = std::max(res.matrix_level_max_ratio, std::abs(G(a, b)) / g);
        }
    }
  return res;
}

}  // namespace mvop
