// Command-line front end: eigen, family, gram, recursion, walk, verify.
// Exit codes: 0 success, 2 bad input, 3 numeric failure (including a failed check).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mvop/errors.hpp"
#include "mvop/family.hpp"
#include "mvop/orthogonality.hpp"
#include "mvop/recurrence.hpp"
#include "mvop/serialize.hpp"
#include "mvop/verify.hpp"

namespace {

constexpr int kBadInput = 2;
constexpr int kNumericFailure = 3;

struct Options {
  int n = 2, k = 1, ell = 1, m = 0;
  bool jacobi = false;
  double alpha = 0.5, beta = 1.5;
  int w = 0, r = 0, wmax = 4;
  std::int64_t steps = 1000;
  std::uint64_t seed = 42;
  int start_w = 0, start_r = 0;
  std::string format, out, suite = "all";
  std::vector<CLI::Option*> param_flags;
};

void add_params(CLI::App* sub, Options& o) {
  o.param_flags.push_back(sub->add_option("--n", o.n, "n (integer mode)"));
  o.param_flags.push_back(sub->add_option("--k", o.k, "k"));
  o.param_flags.push_back(sub->add_option("--ell", o.ell, "ell"));
  o.param_flags.push_back(sub->add_option("--m", o.m, "m (integer mode)"));
  o.param_flags.push_back(sub->add_flag("--jacobi", o.jacobi, "use the continuous (alpha, beta) parameters"));
  sub->add_option("--alpha", o.alpha, "alpha > -1 (jacobi mode)");
  sub->add_option("--beta", o.beta, "beta > -1 (jacobi mode)");
  sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", o.out, "write to this file instead of stdout");
}

mvop::Params params_of(const Options& o) {
  const auto p = o.jacobi ? mvop::Params::jacobi(o.alpha, o.beta, o.k, o.ell) : mvop::Params::integer(o.n, o.k, o.ell, o.m);
  mvop::validate(p);
  return p;
}

bool any_param_flag(const Options& o) {
  for (const auto* f : o.param_flags)
    if (f->count() > 0) return true;
  return false;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw mvop::ParameterError("cannot open output file " + o.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

bool csv(const Options& o, bool default_csv) { return o.format.empty() ? default_csv : o.format == "csv"; }

int run_eigen(const Options& o) {
  const auto p = params_of(o);
  const auto ef = mvop::f_wr(p, o.w, o.r);
  emit(o, csv(o, false) ? mvop::eigen_csv(ef) : mvop::eigen_json(p, ef));
  return 0;
}

int run_family(const Options& o) {
  const auto p = params_of(o);
  const auto S = mvop::build_structure(p);
  std::vector<mvop::PolynomialPackage> pk;
  for (int w = 0; w <= o.wmax; ++w) pk.push_back(mvop::assemble_P(S, w));
  emit(o, csv(o, false) ? mvop::family_csv(pk) : mvop::family_json(p, pk));
  return 0;
}

int run_gram(const Options& o) {
  const auto p = params_of(o);
  const auto g = mvop::gram(mvop::make_weight(p), o.wmax);
  emit(o, csv(o, true) ? mvop::gram_csv(g) : mvop::gram_json(p, g));
  std::cerr << "max off-diagonal ratio " << mvop::format_double(g.max_offdiag_ratio) << ", matrix level "
            << mvop::format_double(g.matrix_level_max_ratio) << '\n';
  return g.max_offdiag_ratio <= 1e-9 && g.matrix_level_max_ratio <= 1e-9 ? 0 : kNumericFailure;
}

int run_recursion(const Options& o) {
  const auto p = params_of(o);
  std::vector<mvop::RecursionBlocks> bl;
  std::vector<double> res;
  for (int w = 0; w <= o.wmax; ++w) {
    bl.push_back(mvop::blocks(p, w));
    res.push_back(mvop::three_term_residual(p, w));
  }
  emit(o, csv(o, false) ? mvop::recursion_csv(bl) : mvop::recursion_json(p, bl, res));
  for (double x : res)
    if (!(x <= 1e-9)) return kNumericFailure;
  return 0;
}

int run_walk(const Options& o) {
  const auto p = params_of(o);
  const auto path = mvop::walk(p, o.steps, o.seed, {o.start_w, o.start_r});
  emit(o, csv(o, true) ? mvop::walk_csv(path) : mvop::walk_json(p, o.seed, path));
  return 0;
}

int run_verify(const Options& o) {
  mvop::VerifyOptions vo;
  vo.wmax = o.wmax;
  vo.suite = mvop::parse_suite(o.suite);
  vo.seed = o.seed;
  std::vector<mvop::Params> grid;
  if (any_param_flag(o)) {
    grid.push_back(params_of(o));
  } else {
    grid = mvop::default_grid();
  }
  const auto reports = mvop::run_grid(grid, vo, mvop::default_thread_count());
  emit(o, csv(o, false) ? mvop::reports_csv(reports) : mvop::reports_json(reports));
  bool ok = true;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      if (!c.passed) {
        std::cerr << "FAIL " << r.params.describe() << ' ' << c.name << ": " << c.detail << '\n';
        ok = false;
      }
    }
  }
  return ok ? 0 : kNumericFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-valued orthogonal polynomials from one-step spherical functions"};
  app.require_subcommand(1);
  Options o;

  auto* eigen = app.add_subcommand("eigen", "eigenvalues, F(0) and coefficients of F_{w,r}");
  add_params(eigen, o);
  eigen->add_option("--w", o.w, "degree w >= 0");
  eigen->add_option("--r", o.r, "0 <= r <= ell");

  auto* family = app.add_subcommand("family", "all P_w up to wmax");
  add_params(family, o);
  family->add_option("--wmax", o.wmax, "largest degree");

  auto* gram = app.add_subcommand("gram", "Gram matrix of F_{w,r}, w <= wmax");
  add_params(gram, o);
  gram->add_option("--wmax", o.wmax, "largest degree");

  auto* rec = app.add_subcommand("recursion", "three-term recursion blocks and residuals");
  add_params(rec, o);
  rec->add_option("--wmax", o.wmax, "largest degree");

  auto* wk = app.add_subcommand("walk", "random walk driven by the recursion blocks");
  add_params(wk, o);
  wk->add_option("--steps", o.steps, "number of steps");
  wk->add_option("--seed", o.seed, "generator seed");
  wk->add_option("--start-w", o.start_w, "starting w");
  wk->add_option("--start-r", o.start_r, "starting r");

  auto* ver = app.add_subcommand("verify", "run the verification checks (default grid unless parameters are given)");
  add_params(ver, o);
  ver->add_option("--wmax", o.wmax, "largest degree");
  ver->add_option("--suite", o.suite, "eigen, ortho, recursion or all")
      ->check(CLI::IsMember({"eigen", "ortho", "recursion", "all"}));
  ver->add_option("--seed", o.seed, "seed for random test data");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kBadInput;
  }

  try {
    if (*eigen) return run_eigen(o);
    if (*family) return run_family(o);
    if (*gram) return run_gram(o);
    if (*rec) return run_recursion(o);
    if (*wk) return run_walk(o);
    if (*ver) return run_verify(o);
  } catch (const mvop::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kBadInput;
}
