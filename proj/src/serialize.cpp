#include "mvop/serialize.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"

namespace mvop {

using nlohmann::ordered_json;

namespace {

constexpr int kIndent = 2;

ordered_json to_j(const VectorR& v) { return ordered_json(v.std_vector()); }

ordered_json to_j(const MatrixR& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_j(m.row(i)));
  return rows;
}

template <class T>
ordered_json coeffs_j(const Polynomial<T>& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_j(c));
  return a;
}

ordered_json params_j(const Params& p) {
  ordered_json j;
  if (p.is_integer()) {
    j["mode"] = "integer";
    j["n"] = p.n;
    j["k"] = p.k;
    j["ell"] = p.ell;
    j["m"] = p.m;
  } else {
    j["mode"] = "jacobi";
    j["alpha"] = p.alpha;
    j["beta"] = p.beta;
    j["k"] = p.k;
    j["ell"] = p.ell;
  }
  return j;
}

ordered_json report_j(const RunReport& r) {
  ordered_json j;
  j["params"] = params_j(r.params);
  j["wmax"] = r.wmax;
  j["passed"] = r.all_passed();
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["status"] = c.passed ? "pass" : "fail";
    // JSON has no infinity; a check that threw reports null.
    if (std::isfinite(c.max_residual)) {
      cj["max_residual"] = c.max_residual;
    } else {
      cj["max_residual"] = nullptr;
    }
    cj["tolerance"] = c.tolerance;
    cj["wall_seconds"] = c.wall_seconds;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

std::string params_json(const Params& p) { return params_j(p).dump(kIndent); }

std::string eigen_json(const Params& p, const EigenFunction& ef) {
  ordered_json j;
  j["params"] = params_j(p);
  j["label"] = {{"w", ef.w}, {"r", ef.r}};
  j["lambda"] = ef.spectral.lambda;
  j["mu"] = ef.spectral.mu;
  j["F0"] = ef.poly.is_zero() ? ordered_json::array() : to_j(ef.poly[0]);
  j["coeffs"] = coeffs_j(ef.poly);
  return j.dump(kIndent);
}

std::string family_json(const Params& p, const std::vector<PolynomialPackage>& packages) {
  ordered_json j;
  j["params"] = params_j(p);
  j["wmax"] = packages.empty() ? -1 : packages.back().w;
  ordered_json polys = ordered_json::array();
  for (const auto& pk : packages) polys.push_back({{"w", pk.w}, {"coeffs", coeffs_j(pk.P)}});
  j["polynomials"] = std::move(polys);
  return j.dump(kIndent);
}

std::string recursion_json(const Params& p, const std::vector<RecursionBlocks>& blocks,
                           const std::vector<double>& residuals) {
  ordered_json j;
  j["params"] = params_j(p);
  ordered_json arr = ordered_json::array();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    ordered_json b;
    b["w"] = blocks[i].w;
    b["A"] = to_j(blocks[i].A);
    b["B"] = to_j(blocks[i].B);
    b["C"] = to_j(blocks[i].C);
    if (i < residuals.size()) b["three_term_residual"] = residuals[i];
    arr.push_back(std::move(b));
  }
  j["blocks"] = std::move(arr);
  return j.dump(kIndent);
}

std::string gram_json(const Params& p, const GramResult& g) {
  ordered_json j;
  j["params"] = params_j(p);
  ordered_json labels = ordered_json::array();
  for (const auto& [w, r] : g.labels) labels.push_back({{"w", w}, {"r", r}});
  j["labels"] = std::move(labels);
  j["gram"] = to_j(g.gram);
  j["max_offdiag_ratio"] = g.max_offdiag_ratio;
  j["matrix_level_max_ratio"] = g.matrix_level_max_ratio;
  j["min_diagonal"] = g.min_diagonal;
  return j.dump(kIndent);
}

std::string walk_json(const Params& p, std::uint64_t seed, const std::vector<WalkState>& path) {
  ordered_json j;
  j["params"] = params_j(p);
  j["seed"] = seed;
  ordered_json arr = ordered_json::array();
  for (const auto& s : path) arr.push_back({s.w, s.r});
  j["trajectory"] = std::move(arr);
  return j.dump(kIndent);
}

std::string report_json(const RunReport& report) { return report_j(report).dump(kIndent); }

std::string reports_json(const std::vector<RunReport>& reports) {
  ordered_json j;
  bool all = true;
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    all = all && r.all_passed();
    arr.push_back(report_j(r));
  }
  j["passed"] = all;
  j["reports"] = std::move(arr);
  return j.dump(kIndent);
}

std::string json_roundtrip(const std::string& text) { return ordered_json::parse(text).dump(kIndent); }

std::string format_double(double x) { return ordered_json(x).dump(); }

std::string gram_csv(const GramResult& g) {
  std::ostringstream os;
  os << "label";
  for (const auto& [w, r] : g.labels) os << ",w" << w << "r" << r;
  os << '\n';
  for (std::size_t i = 0; i < g.labels.size(); ++i) {
    os << 'w' << g.labels[i].first << 'r' << g.labels[i].second;
    for (std::size_t j = 0; j < g.labels.size(); ++j) os << ',' << format_double(g.gram(i, j));
    os << '\n';
  }
  return os.str();
}

std::string walk_csv(const std::vector<WalkState>& path) {
  std::ostringstream os;
  os << "step,w,r\n";
  for (std::size_t i = 0; i < path.size(); ++i) os << i << ',' << path[i].w << ',' << path[i].r << '\n';
  return os.str();
}

std::string recursion_csv(const std::vector<RecursionBlocks>& blocks) {
  std::ostringstream os;
  os << "w,block,row,col,value\n";
  for (const auto& b : blocks) {
    const std::pair<const char*, const MatrixR*> mats[] = {{"A", &b.A}, {"B", &b.B}, {"C", &b.C}};
    for (const auto& [name, m] : mats)
      for (std::size_t i = 0; i < m->rows(); ++i)
        for (std::size_t j = 0; j < m->cols(); ++j)
          os << b.w << ',' << name << ',' << i << ',' << j << ',' << format_double((*m)(i, j)) << '\n';
  }
  return os.str();
}

std::string eigen_csv(const EigenFunction& ef) {
  std::ostringstream os;
  os << "power,component,value\n";
  for (std::size_t j = 0; j < ef.poly.size(); ++j)
    for (std::size_t s = 0; s < ef.poly[j].size(); ++s) os << j << ',' << s << ',' << format_double(ef.poly[j][s]) << '\n';
  return os.str();
}

std::string family_csv(const std::vector<PolynomialPackage>& packages) {
  std::ostringstream os;
  os << "w,power,row,col,value\n";
  for (const auto& pk : packages)
    for (std::size_t j = 0; j < pk.P.size(); ++j)
      for (std::size_t r = 0; r < pk.P[j].rows(); ++r)
        for (std::size_t c = 0; c < pk.P[j].cols(); ++c)
          os << pk.w << ',' << j << ',' << r << ',' << c << ',' << format_double(pk.P[j](r, c)) << '\n';
  return os.str();
}

std::string reports_csv(const std::vector<RunReport>& reports) {
  std::ostringstream os;
  os << "params,check,status,max_residual,tolerance,wall_seconds\n";
  for (const auto& rep : reports)
    for (const auto& c : rep.checks)
      os << '"' << rep.params.describe() << "\"," << c.name << ',' << (c.passed ? "pass" : "fail") << ','
         << format_double(c.max_residual) << ',' << format_double(c.tolerance) << ',' << format_double(c.wall_seconds)
         << '\n';
  return os.str();
}

}  // namespace mvop
