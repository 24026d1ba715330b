#pragma once

#include <cmath>
#include <vector>

#include "doctest.h"
#include "mvop/linalg.hpp"
#include "mvop/params.hpp"

namespace testing {

// Reference parameter point used throughout: n=2, k=1, ell=1, m=0.
inline mvop::Params p0() { return mvop::Params::integer(2, 1, 1, 0); }

inline void check_matrix(const mvop::MatrixR& got, const std::vector<std::vector<double>>& want, double tol = 1e-12) {
  REQUIRE(got.rows() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    REQUIRE(got.cols() == want[i].size());
    for (std::size_t j = 0; j < want[i].size(); ++j) {
      INFO("entry (" << i << "," << j << ")");
      CHECK(got(i, j) == doctest::Approx(want[i][j]).epsilon(tol).scale(1.0));
    }
  }
}

inline void check_vector(const mvop::VectorR& got, const std::vector<double>& want, double tol = 1e-12) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    INFO("component " << i);
    CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol).scale(1.0));
  }
}

// coefficient j, component s
inline void check_poly(const mvop::VectorPolynomial& got, const std::vector<std::vector<double>>& want, double tol = 1e-12) {
  const auto t = got.trimmed();
  REQUIRE(t.size() == want.size());
  for (std::size_t j = 0; j < want.size(); ++j) {
    INFO("power " << j);
    check_vector(t[j], want[j], tol);
  }
}

}  // namespace testing
