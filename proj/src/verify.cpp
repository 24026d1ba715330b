#include "mvop/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "mvop/errors.hpp"
#include "mvop/family.hpp"
#include "mvop/operators.hpp"
#include "mvop/orthogonality.hpp"
#include "mvop/recurrence.hpp"
#include "mvop/spectral.hpp"
#include "mvop/structure.hpp"

namespace mvop {

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* RunReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Suite parse_suite(const std::string& s) {
  if (s == "eigen") return Suite::Eigen;
  if (s == "ortho") return Suite::Ortho;
  if (s == "recursion") return Suite::Recursion;
  if (s == "all") return Suite::All;
  throw ParameterError("unknown suite '" + s + "' (expected eigen, ortho, recursion or all)");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::Eigen: return "eigen";
    case Suite::Ortho: return "ortho";
    case Suite::Recursion: return "recursion";
    case Suite::All: return "all";
  }
  return "all";
}

namespace {

struct Outcome {
  double residual = 0.0;
  std::string detail;
  bool force_fail = false;
  bool decided = false;  // pass is set explicitly instead of comparing against the tolerance
  bool pass = false;
};

CheckResult timed(const std::string& name, double tol, const std::function<Outcome()>& body) {
  CheckResult c;
  c.name = name;
  c.tolerance = tol;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Outcome o = body();
    c.max_residual = o.residual;
    c.detail = std::move(o.detail);
    c.passed = o.decided ? o.pass : (!o.force_fail && o.residual <= tol);
  } catch (const std::exception& e) {
    c.passed = false;
    c.max_residual = INFINITY;
    c.detail = e.what();
  }
  c.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

double uniform01(std::mt19937_64& g) { return static_cast<double>(g() >> 11) * 0x1.0p-53; }

VectorPolynomial random_poly(std::mt19937_64& g, int dim, int max_degree) {
  const int deg = static_cast<int>(uniform01(g) * (max_degree + 1));
  std::vector<VectorR> c;
  for (int j = 0; j <= deg; ++j) {
    VectorR v(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) v[static_cast<std::size_t>(i)] = 2.0 * uniform01(g) - 1.0;
    c.push_back(std::move(v));
  }
  return VectorPolynomial(std::move(c));
}

std::string label(int w, int r) {
  std::ostringstream os;
  os << "(w=" << w << ",r=" << r << ")";
  return os.str();
}

// Relative eigen-residual |T F - c F| / max(1, |T F|, |c| |F|).
double eigen_residual(const VectorPolynomial& TF, const VectorPolynomial& F, double c) {
  VectorPolynomial cF = F;
  cF *= c;
  const double scale = std::max({1.0, TF.max_coeff_norm(), cF.max_coeff_norm()});
  return (TF - cF).max_coeff_norm() / scale;
}

struct Worst {
  double value = 0.0;
  std::string where;
  void take(double v, const std::string& w) {
    if (where.empty() || v > value) {
      value = v;
      where = w;
    }
  }
};

void eigen_suite(const Params& p, const VerifyOptions& opt, const StructureSet& S,
                 const std::vector<EigenFunction>& efs, std::vector<CheckResult>& out) {
  out.push_back(timed("eigenfunction_D", 1e-9, [&] {
    Worst w;
    for (const auto& e : efs) w.take(eigen_residual(apply_D_u(S, e.poly), e.poly, e.spectral.lambda), label(e.w, e.r));
    return Outcome{w.value, w.where};
  }));
  out.push_back(timed("eigenfunction_E", 1e-9, [&] {
    Worst w;
    for (const auto& e : efs) w.take(eigen_residual(apply_E_u(S, e.poly), e.poly, e.spectral.mu), label(e.w, e.r));
    return Outcome{w.value, w.where};
  }));
  out.push_back(timed("degree_leading", 1e-10, [&] {
    Worst w;
    Outcome o;
    for (const auto& e : efs) {
      const auto F = e.poly.trimmed();
      if (F.degree() != e.w) {
        o.force_fail = true;
        o.detail = "degree " + std::to_string(F.degree()) + " at " + label(e.w, e.r);
        continue;
      }
      const double scale = std::max(1.0, F.max_coeff_norm());
      const VectorR& lead = F[static_cast<std::size_t>(e.w)];
      if (std::abs(lead[static_cast<std::size_t>(e.r)]) <= 1e-10 * scale) {
        o.force_fail = true;
        o.detail = "vanishing x_r at " + label(e.w, e.r);
      }
      double tail = 0.0;
      for (std::size_t s = static_cast<std::size_t>(e.r) + 1; s < lead.size(); ++s) tail = std::max(tail, std::abs(lead[s]));
      w.take(tail / scale, label(e.w, e.r));
      if (std::abs(F[0][0] - 1.0) > 1e-12) {
        o.force_fail = true;
        o.detail = "F(0)_0 != 1 at " + label(e.w, e.r);
      }
    }
    o.residual = w.value;
    if (o.detail.empty()) o.detail = w.where;
    return o;
  }));
  for (auto kind : {OperatorKind::D, OperatorKind::E}) {
    const std::string name = kind == OperatorKind::D ? "conjugation_D" : "conjugation_E";
    out.push_back(timed(name, 1e-9, [&] {
      std::mt19937_64 g(opt.seed + (kind == OperatorKind::D ? 1u : 2u));
      std::vector<double> samples;
      for (int i = 0; i < 5; ++i) samples.push_back(0.05 + 0.9 * uniform01(g));
      double worst = 0.0;
      for (int i = 0; i < opt.conjugation_samples; ++i) {
        worst = std::max(worst, conjugation_residual(S, random_poly(g, p.dim(), 5), samples, kind));
      }
      return Outcome{worst, std::to_string(opt.conjugation_samples) + " random polynomials"};
    }));
  }
  out.push_back(timed("charpoly", 1e-7, [&] {
    Worst w;
    for (const auto& e : efs) w.take(charpoly_report(S, e.spectral.lambda).max_error, label(e.w, e.r));
    return Outcome{w.value, w.where};
  }));
  out.push_back(timed("superdiagonal", 1e-10, [&] {
    double worst = 0.0;
    const MatrixR M0 = build_M(S, 0.0).matrix;
    for (const auto& e : efs) {
      const MatrixR M = build_M(S, e.spectral.lambda).matrix;
      for (int s = 0; s < p.ell; ++s) {
        const auto i = static_cast<std::size_t>(s);
        const double ref = m_superdiagonal(p, s);
        const double scale = std::max(1.0, std::abs(ref));
        worst = std::max({worst, std::abs(M(i, i + 1) - M0(i, i + 1)) / scale, std::abs(M(i, i + 1) - ref) / scale});
      }
    }
    return Outcome{worst, "lambda-independence and closed form"};
  }));
  out.push_back(timed("exact_identities", 0.0, [&] {
    Outcome o;
    const int wext = std::max(8, opt.wmax);
    for (int w = 0; w <= wext; ++w)
      for (int r = 0; r <= p.ell; ++r) {
        if (!in_S(p, w, r)) continue;
        if (p.is_integer()) {
          if (mu_exact(p, w, r) != mu_of_lambda_exact(p, r, lambda_exact(p, w, r))) {
            o.force_fail = true;
            o.detail = "mu identity fails at " + label(w, r);
          }
        } else {
          const double mu = mu_eig(p, w, r);
          const double d = std::abs(mu - mu_of_lambda(p, r, lambda_eig(p, w, r))) / std::max(1.0, std::abs(mu));
          o.residual = std::max(o.residual, d);
          if (d > 1e-12) o.force_fail = true;
        }
      }
    if (!spectrum_injectivity_check(p, wext)) {
      o.force_fail = true;
      o.detail = "spectrum not injective up to w=" + std::to_string(wext);
    }
    if (o.detail.empty()) o.detail = "w <= " + std::to_string(wext);
    o.decided = true;
    o.pass = !o.force_fail;
    return o;
  }));
  out.push_back(timed("t_recursion", 1e-9, [&] {
    Worst w;
    for (const auto& e : efs) w.take(t_recursion_residual(S, e.poly, e.spectral.lambda), label(e.w, e.r));
    return Outcome{w.value, w.where};
  }));
  out.push_back(timed("t_recursion_negative_control", 1e-3, [&] {
    std::mt19937_64 g(opt.seed + 3u);
    VectorPolynomial F;
    do {
      F = random_poly(g, p.dim(), 4);
    } while (F.degree() < 2);
    const double res = t_recursion_residual(S, F, lambda_eig(p, 1, 0));
    Outcome o{res, "random polynomial, residual must exceed the tolerance"};
    o.decided = true;
    o.pass = res > 1e-3;
    return o;
  }));
}

void ortho_suite(const Params& p, const VerifyOptions& opt, std::vector<CheckResult>& out) {
  std::shared_ptr<GramResult> g1, g2;
  out.push_back(timed("gram_vector", 1e-9, [&] {
    const WeightSpec ws = make_weight(p);
    g1 = std::make_shared<GramResult>(gram(ws, opt.wmax));
    Outcome o{g1->max_offdiag_ratio, "max |G_ij|/sqrt(G_ii G_jj)"};
    if (!(g1->min_diagonal > 0.0)) {
      o.force_fail = true;
      o.detail = "nonpositive diagonal";
    }
    return o;
  }));
  out.push_back(timed("gram_matrix", 1e-9, [&] {
    if (!g1) throw NumericError("vector Gram matrix unavailable");
    return Outcome{g1->matrix_level_max_ratio, "int P_w W P_w'^T, w != w'"};
  }));
  out.push_back(timed("gram_exactness", 1e-12, [&] {
    if (!g1) throw NumericError("vector Gram matrix unavailable");
    g2 = std::make_shared<GramResult>(gram(make_weight(p), opt.wmax, 2));
    double worst = 0.0;
    const double scale = std::max(1.0, g1->gram.max_abs());
    for (std::size_t i = 0; i < g1->gram.rows(); ++i)
      for (std::size_t j = 0; j < g1->gram.cols(); ++j)
        worst = std::max(worst, std::abs(g1->gram(i, j) - g2->gram(i, j)) / scale);
    return Outcome{worst, "doubled node count"};
  }));
  out.push_back(timed("weight_W", 1e-12, [&] {
    std::mt19937_64 g(opt.seed + 4u);
    Outcome o{0.0, "W = Psi^T V Psi, symmetric, positive definite"};
    for (int i = 0; i < 10; ++i) {
      const double u = 0.02 + 0.96 * uniform01(g);
      const MatrixR W = weight_W_at(p, u);
      const MatrixR Psi = psi_at(p.ell, u);
      const MatrixR ref = Psi.transpose() * weight_V_at(p, u) * Psi;
      o.residual = std::max(o.residual, relative_difference(W, ref));
      if (!(W == W.transpose())) o.force_fail = true;
      for (const auto& z : W.eigenvalues())
        if (!(z.real() > 0.0)) {
          o.force_fail = true;
          o.detail = "W not positive definite at u=" + std::to_string(u);
        }
    }
    return o;
  }));
}

void recursion_suite(const Params& p, const VerifyOptions& opt, std::vector<CheckResult>& out) {
  out.push_back(timed("three_term", 1e-9, [&] {
    Worst w;
    for (int v = 0; v <= opt.wmax; ++v) w.take(three_term_residual(p, v), "w=" + std::to_string(v));
    return Outcome{w.value, w.where};
  }));
  out.push_back(timed("stochastic", 1e-12, [&] {
    Outcome o{0.0, "row sums and nonnegativity"};
    for (int v = 0; v <= opt.wmax; ++v) {
      const RecursionBlocks b = blocks(p, v);
      for (std::size_t r = 0; r < b.A.rows(); ++r) {
        double sum = 0.0;
        for (const MatrixR* m : {&b.A, &b.B, &b.C})
          for (std::size_t s = 0; s < m->cols(); ++s) {
            const double x = (*m)(r, s);
            sum += x;
            if (x < -1e-14) {
              o.force_fail = true;
              o.detail = "negative entry at w=" + std::to_string(v);
            }
          }
        o.residual = std::max(o.residual, std::abs(sum - 1.0));
      }
      if (v == 0 && b.A.max_abs() != 0.0) {
        o.force_fail = true;
        o.detail = "A_0 is not zero";
      }
    }
    return o;
  }));
  std::shared_ptr<std::vector<WalkState>> path;
  out.push_back(timed("walk_determinism", 0.0, [&] {
    path = std::make_shared<std::vector<WalkState>>(walk(p, opt.walk_steps, opt.seed));
    const auto again = walk(p, opt.walk_steps, opt.seed);
    Outcome o{0.0, std::to_string(opt.walk_steps) + " steps"};
    o.force_fail = again != *path;
    return o;
  }));
  out.push_back(timed("walk_calibration", 3.0, [&] {
    if (!path) throw NumericError("trajectory unavailable");
    Worst w;
    for (const auto& c : walk_calibration(p, *path)) w.take(std::abs(c.z), c.name);
    return Outcome{w.value, "max |z| over pooled transition kinds, worst " + w.where};
  }));
}

}  // namespace

RunReport run_verification(const Params& p, const VerifyOptions& opt) {
  RunReport rep;
  rep.params = p;
  rep.wmax = opt.wmax;
  validate(p);
  const bool eigen = opt.suite == Suite::Eigen || opt.suite == Suite::All;
  const bool ortho = opt.suite == Suite::Ortho || opt.suite == Suite::All;
  const bool rec = opt.suite == Suite::Recursion || opt.suite == Suite::All;
  if (eigen) {
    const StructureSet S = build_structure(p);
    std::vector<EigenFunction> efs;
    std::string build_error;
    try {
      for (int w = 0; w <= opt.wmax; ++w)
        for (int r = 0; r <= p.ell; ++r)
          if (in_S(p, w, r)) efs.push_back(f_wr(S, w, r));
    } catch (const std::exception& e) {
      build_error = e.what();
    }
    if (!build_error.empty()) {
      rep.checks.push_back(timed("construction", 0.0, [&]() -> Outcome { throw NumericError(build_error); }));
    }
    eigen_suite(p, opt, S, efs, rep.checks);
  }
  if (ortho) ortho_suite(p, opt, rep.checks);
  if (rec) recursion_suite(p, opt, rep.checks);
  return rep;
}

std::vector<Params> default_grid() {
  std::vector<Params> g;
  for (int n : {2, 3})
    for (int k = 1; k <= n - 1; ++k)
      for (int l : {0, 1, 2})
        for (int m : {0, 1}) g.push_back(Params::integer(n, k, l, m));
  return g;
}

std::vector<RunReport> run_grid(const std::vector<Params>& grid, const VerifyOptions& opt, int threads) {
  std::vector<RunReport> out(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) out[i] = run_verification(grid[i], opt);
  };
  const int nt = std::max(1, std::min<int>(threads, static_cast<int>(grid.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

int default_thread_count() {
  if (const char* env = std::getenv("MVOP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 256L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace mvop
