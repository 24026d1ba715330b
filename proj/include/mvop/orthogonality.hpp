#pragma once

#include <utility>
#include <vector>

#include "mvop/linalg.hpp"
#include "mvop/params.hpp"

namespace mvop {

/// Diagonal weight V(u) = sum_r c_r (1-u)^{m+ell-r} u^{n-1} E_rr with
/// c_r = 2n binomial(ell+k-r-1, ell-r) binomial(n-k+r-1, r), and W = Psi^T V Psi.
struct WeightSpec {
  Params params;
  std::vector<double> c;  // c_r, r = 0..ell
  double exp_u = 0.0;     // n - 1
  double exp_1mu0 = 0.0;  // m + ell; the r-th diagonal term uses exp_1mu0 - r
  bool polynomial = true; // both exponents integral, Gauss-Legendre path
};

/// Generalized binomial x(x-1)...(x-j+1)/j! for integer j >= 0; equals the Gamma ratio and gives 1 at j = 0.
double gbinomial(double x, int j);

/// Throws ParameterError("weight undefined for m<0") for negative m.
WeightSpec make_weight(const Params& p);

MatrixR weight_V_at(const Params& p, double u);
/// Double sum  W_ij = sum_r c_r binom(r,i) binom(r,j) (1-u)^{m+ell-r} u^{i+j+n-1}.
MatrixR weight_W_at(const Params& p, double u);

struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre on [0,1] with floor(max_degree/2)+1 nodes.
QuadRule quad_rule(int max_degree);
/// Gauss rule with npts nodes for the weight u^a (1-u)^b on [0,1] (Golub-Welsch).
QuadRule gauss_jacobi_rule(int npts, double a, double b);

/// <F1, F2>_W = int_0^1 F2(u)^T W(u) F1(u) du.  node_factor > 1 oversamples the rule.
double inner_vec(const WeightSpec& ws, const VectorPolynomial& F1, const VectorPolynomial& F2, int node_factor = 1);
/// int_0^1 P(u) W(u) Q(u)^T du.
MatrixR inner_mat(const WeightSpec& ws, const MatrixPolynomial& P, const MatrixPolynomial& Q, int node_factor = 1);

struct GramResult {
  std::vector<std::pair<int, int>> labels;  // (w, r), w-major
  MatrixR gram;
  double max_offdiag_ratio = 0.0;           // max |G_ij| / sqrt(G_ii G_jj), i != j
  double min_diagonal = 0.0;
  double matrix_level_max_ratio = 0.0;      // same ratio for int P_w W P_w'^T, w != w'
};

/// Requires m >= 0 (Integer) and every (w, r) with w <= wmax in S.
GramResult gram(const WeightSpec& ws, int wmax, int node_factor = 1);

}  // namespace mvop
