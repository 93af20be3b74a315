#include <doctest.h>

#include <random>

#include "isgx/error.hpp"
#include "isgx/linalg.hpp"
#include "test_helpers.hpp"

using namespace isgx;
using namespace isgx::testing;

TEST_CASE("regular representation matrices") {
  const auto sl = semilattice_action();
  const auto rep = regular_rep(*sl);
  CHECK(rep.dim == 2);
  // u_f = diag(1, 0), u_e = I.
  Mat uf(2, 2);
  uf << 1, 0, 0, 0;
  CHECK(linalg::operator_norm(rep.u[1] - uf) == 0.0);
  CHECK(linalg::operator_norm(rep.u[0] - Mat::Identity(2, 2)) == 0.0);

  const auto z2 = z2_partial_2pt_action();
  // Full swap action for the antidiagonal example.
  const auto swap_pa = make_action({"x0", "x1"}, {"e", "s"}, {{0, 1}, {1, 0}}, {0, 1}, 0,
                                   {{0, 1}, {0, 1}}, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
  const auto swap_rep = regular_rep(*swap_pa);
  Mat anti(2, 2);
  anti << 0, 1, 1, 0;
  CHECK(linalg::operator_norm(swap_rep.u[1] - anti) == 0.0);
  (void)z2;
}

TEST_CASE("validate_covariant passes for regular reps of all bundled actions") {
  for (const auto& pa : bundled_actions()) {
    const auto rep = regular_rep(*pa);
    const auto report = validate_covariant(*pa, rep);
    CHECK(report.passed());
    // u_g u_{g*} is the D_g projection for the regular rep.
    for (int g = 0; g < pa->semigroup().size(); ++g) {
      const double r = linalg::operator_norm(rep.u[g] * rep.u[pa->semigroup().inv(g)] -
                                             rep.ideal_projection(pa->ideal(g)));
      CHECK(r == 0.0);
    }
  }
}

TEST_CASE("validate_covariant over random tautological scenarios") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    const auto pa = random_tautological_action(rng);
    REQUIRE(validate_axioms(*pa).passed());
    CHECK(validate_covariant(*pa, regular_rep(*pa)).passed());
  }
}

TEST_CASE("wrong initial space is caught") {
  const auto sl = semilattice_action();
  auto rep = regular_rep(*sl);
  rep.u[1] = Mat::Zero(2, 2);
  rep.u[1](1, 1) = 1.0;  // diag(0,1): a projection, but onto the wrong line
  const auto report = validate_covariant(*sl, rep);
  REQUIRE_FALSE(report.passed());
  bool initial = false;
  for (const auto& f : report.failures()) initial = initial || f.check == "initial-space";
  CHECK(initial);
}

TEST_CASE("direct sums of covariant reps are covariant") {
  for (const auto& pa : bundled_actions()) {
    const auto rep = regular_rep(*pa);
    CHECK(validate_covariant(*pa, direct_sum(rep, rep)).passed());
  }
}

TEST_CASE("shape mismatches are structural errors") {
  const auto sl = semilattice_action();
  auto rep = regular_rep(*sl);
  rep.u.pop_back();
  CHECK_THROWS_AS(validate_covariant(*sl, rep), StructureError);
}

TEST_CASE("word isometry: the worked I(X) example") {
  const auto pa = ix2_action();
  const auto rep = regular_rep(*pa);
  const auto& sg = pa->semigroup();

  const std::vector<int> word{sg.index_of("swap"), sg.index_of("p0")};
  CHECK(word_isometry_check(*pa, rep, word).passed());

  // W = u_swap u_{p0} is the matrix unit e_{x1,x0}.
  Mat w = rep.u[word[0]] * rep.u[word[1]];
  Mat expected = Mat::Zero(2, 2);
  expected(1, 0) = 1.0;
  CHECK(linalg::operator_norm(w - expected) == 0.0);
}

TEST_CASE("word checks pass for all words of length <= 3") {
  for (const auto& pa : bundled_actions()) {
    const auto rep = regular_rep(*pa);
    const int m = pa->semigroup().size();
    for (int len = 1; len <= 3; ++len) {
      for (const auto& word : words_of_length(m, len)) {
        CHECK(word_isometry_check(*pa, rep, word).passed());
        CHECK(word_identity_check(*pa, rep, word).passed());
      }
    }
  }
}

TEST_CASE("word identity: semilattice idempotent example") {
  const auto sl = semilattice_action();
  const auto rep = regular_rep(*sl);
  const std::vector<int> word{1, 1};  // [f, f]
  CHECK(word_identity_check(*sl, rep, word).passed());
}

TEST_CASE("the matrix words form an inverse semigroup of partial isometries") {
  for (const auto& pa : bundled_actions()) {
    const auto rep = regular_rep(*pa);
    // Closure of {u_g} under products.
    std::vector<Mat> closure = rep.u;
    auto contains = [&closure](const Mat& m) {
      for (const auto& c : closure)
        if (linalg::operator_norm(c - m) <= 1e-9) return true;
      return false;
    };
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (std::size_t j = 0; j < closure.size(); ++j) {
        const Mat prod = closure[i] * closure[j];
        if (!contains(prod)) closure.push_back(prod);
        REQUIRE(closure.size() < 200);
      }
    }
    for (const auto& w : closure) {
      // Partial isometry, adjoint-closed, and range projections commute.
      CHECK(linalg::operator_norm(w * w.adjoint() * w - w) <= 1e-9);
      CHECK(contains(w.adjoint()));
      for (const auto& v : closure) {
        const Mat p = w * w.adjoint(), q = v * v.adjoint();
        CHECK(linalg::operator_norm(p * q - q * p) <= 1e-9);
      }
    }
  }
}

TEST_CASE("condition 2 failure: swap without the table being a group") {
  // Regular rep of the corrupt-table action: u_{ss} = u_s but u_s u_s = I.
  const auto pa = make_action({"x0", "x1"}, {"e", "s"}, {{0, 1}, {1, 1}}, {0, 1}, 0,
                              {{0, 1}, {0, 1}}, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
  const auto report = validate_covariant(*pa, regular_rep(*pa));
  REQUIRE_FALSE(report.passed());
  bool cond2 = false;
  for (const auto& f : report.failures()) cond2 = cond2 || f.check == "condition-2";
  CHECK(cond2);
}
