#include <set>

#include "helpers.hpp"
#include "mvop/errors.hpp"
#include "mvop/recurrence.hpp"

using namespace mvop;
using testing::check_matrix;

namespace {

void check_blocks(const Params& p, int w, const std::vector<std::vector<double>>& A, const std::vector<std::vector<double>>& B,
                  const std::vector<std::vector<double>>& C) {
  const auto b = blocks(p, w);
  check_matrix(b.A, A, 1e-13);
  check_matrix(b.B, B, 1e-13);
  check_matrix(b.C, C, 1e-13);
}

}  // namespace

TEST_SUITE("recurrence") {
  TEST_CASE("a^2 and b^2 at the origin") {
    const auto p = testing::p0();
    CHECK(a_sq(p, Slot::One, 0, 0) == doctest::Approx(0.5));
    CHECK(a_sq(p, Slot::KPlusOne, 0, 0) == doctest::Approx(0.5));
    CHECK(a_sq(p, Slot::NPlusOne, 0, 0) == 0.0);
    CHECK(b_sq(p, Slot::One, Slot::One, 0, 0) == doctest::Approx(0.25));
  }

  TEST_CASE("blocks at the reference point") {
    const auto p = testing::p0();
    check_blocks(p, 0, {{0, 0}, {0, 0}}, {{3.0 / 8, 1.0 / 4}, {1.0 / 8, 7.0 / 20}}, {{3.0 / 8, 0}, {1.0 / 8, 2.0 / 5}});
    check_blocks(p, 1, {{3.0 / 40, 1.0 / 20}, {0, 1.0 / 10}}, {{31.0 / 72, 4.0 / 45}, {1.0 / 18, 136.0 / 315}},
                 {{16.0 / 45, 0}, {1.0 / 18, 5.0 / 14}});
    check_blocks(p, 3, {{5.0 / 32, 1.0 / 48}, {0, 1.0 / 6}}, {{381.0 / 800, 2.0 / 75}, {1.0 / 50, 392.0 / 825}},
                 {{8.0 / 25, 0}, {1.0 / 50, 7.0 / 22}});
  }

  TEST_CASE("blocks for n=3 k=1 ell=2 m=1") {
    const auto p = Params::integer(3, 1, 2, 1);
    check_blocks(p, 1, {{3.0 / 56, 1.0 / 24, 0}, {0, 7.0 / 108, 1.0 / 27}, {0, 0, 4.0 / 45}},
                 {{46.0 / 105, 7.0 / 40, 0}, {7.0 / 135, 57.0 / 140, 20.0 / 189}, {0, 2.0 / 35, 302.0 / 693}},
                 {{7.0 / 24, 0, 0}, {1.0 / 27, 8.0 / 27, 0}, {0, 1.0 / 20, 81.0 / 220}});
    check_blocks(p, 3, {{4.0 / 33, 1.0 / 30, 0}, {0, 27.0 / 208, 27.0 / 1040}, {0, 0, 27.0 / 182}},
                 {{2334.0 / 5005, 1.0 / 14, 0}, {9.0 / 364, 25.0 / 56, 7.0 / 156}, {0, 1.0 / 42, 458.0 / 975}},
                 {{4.0 / 13, 0, 0}, {4.0 / 195, 4.0 / 13, 0}, {0, 4.0 / 175, 176.0 / 525}});
  }

  TEST_CASE("three-term residual") {
    CHECK(three_term_residual(testing::p0(), 0) <= 1e-10);
    for (int w = 1; w <= 4; ++w) CHECK(three_term_residual(testing::p0(), w) <= 1e-9);
    for (int w = 0; w <= 4; ++w) CHECK(three_term_residual(Params::integer(3, 2, 0, 1), w) <= 1e-9);
    for (int w = 0; w <= 4; ++w) CHECK(three_term_residual(Params::jacobi(0.5, 1.5, 1, 2), w) <= 1e-9);
  }

  TEST_CASE("blocks need m >= 0") {
    CHECK_THROWS_AS(blocks(Params::integer(2, 1, 1, -1), 1), ParameterError);
  }

  TEST_CASE("walk never leaves w >= 0 and is reproducible") {
    const auto p = testing::p0();
    const auto a = walk(p, 2000, 42);
    const auto b = walk(p, 2000, 42);
    CHECK(a == b);
    CHECK(a.size() == 2001);
    CHECK(a.front() == WalkState{0, 0});
    for (const auto& s : a) {
      CHECK(s.w >= 0);
      CHECK(s.r >= 0);
      CHECK(s.r <= 1);
    }
    CHECK(walk(p, 2000, 43) != a);
  }

  TEST_CASE("walk steps follow the block pattern") {
    const auto p = Params::integer(3, 1, 2, 1);
    const auto path = walk(p, 5000, 9, {2, 1});
    for (std::size_t i = 1; i < path.size(); ++i) {
      const int dw = path[i].w - path[i - 1].w;
      CHECK(std::abs(dw) <= 1);
      CHECK(std::abs(path[i].r - path[i - 1].r) <= 1);
      const auto bl = blocks(p, path[i - 1].w);
      const MatrixR& M = dw < 0 ? bl.A : (dw == 0 ? bl.B : bl.C);
      CHECK(M(static_cast<std::size_t>(path[i - 1].r), static_cast<std::size_t>(path[i].r)) > 0);
    }
  }

  TEST_CASE("walk calibration at the reference point") {
    const auto p = testing::p0();
    const auto path = walk(p, 100000, 42);
    const auto cats = walk_calibration(p, path);
    CHECK(!cats.empty());
    for (const auto& c : cats) {
      INFO(c.name);
      CHECK(std::abs(c.z) <= 3.0);
    }
  }
}
