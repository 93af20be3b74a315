#include <doctest.h>

#include "isgx/error.hpp"
#include "isgx/lifted_semigroup.hpp"
#include "isgx/linalg.hpp"
#include "test_helpers.hpp"

using namespace isgx;
using namespace isgx::testing;

namespace {
constexpr int U = PartialBijection::kUndefined;

int find_pair(const LiftedSemigroup& sg, const PartialBijection& map, const Mat& mat) {
  for (int s = 0; s < sg.size(); ++s) {
    if (sg.element(s).map_part == map &&
        linalg::operator_norm(sg.element(s).mat_part - mat) <= 1e-12)
      return s;
  }
  return -1;
}
}  // namespace

TEST_CASE("S_G of the semilattice scenario has two elements") {
  const auto pa = semilattice_action();
  const auto sg = build_sg(*pa, regular_rep(*pa));
  CHECK(sg.size() == 2);

  // Hand closure: the unit pair and the idempotent pair (id_{x0}, diag(1,0)).
  Mat p(2, 2);
  p << 1, 0, 0, 0;
  CHECK(find_pair(sg, PartialBijection::identity(2), Mat::Identity(2, 2)) >= 0);
  CHECK(find_pair(sg, PartialBijection({0, U}), p) >= 0);
}

TEST_CASE("S_G of the three-point Z2 scenario has three elements") {
  const auto pa = z2_partial_3pt_action();
  const auto sg = build_sg(*pa, regular_rep(*pa));
  CHECK(sg.size() == 3);

  // Hand closure: unit, t = (swap01, U), t^2 = (id01, diag(1,1,0)) with t^2
  // idempotent and distinct from the unit.
  Mat swap = Mat::Zero(3, 3);
  swap(1, 0) = swap(0, 1) = 1.0;
  Mat proj = Mat::Zero(3, 3);
  proj(0, 0) = proj(1, 1) = 1.0;
  const int unit = find_pair(sg, PartialBijection::identity(3), Mat::Identity(3, 3));
  const int t = find_pair(sg, PartialBijection({1, 0, U}), swap);
  const int t2 = find_pair(sg, PartialBijection({0, 1, U}), proj);
  REQUIRE(unit >= 0);
  REQUIRE(t >= 0);
  REQUIRE(t2 >= 0);
  const auto& abs = sg.abstract();
  CHECK(abs.mult(t, t) == t2);
  CHECK(abs.is_idempotent(t2));
  CHECK(t2 != unit);
  CHECK(abs.unit() == unit);
}

TEST_CASE("S_G of the two-point Z2 scenario collapses to two elements") {
  // Here (alpha_s, u_s) is already idempotent: t^2 = t.
  const auto pa = z2_partial_2pt_action();
  const auto sg = build_sg(*pa, regular_rep(*pa));
  CHECK(sg.size() == 2);
  const int t = sg.lift_of(1);
  CHECK(sg.abstract().mult(t, t) == t);
  // E_{t^2} = {x0} and nu_{t^2} = diag(1, 0).
  CHECK(sg.E(sg.abstract().mult(t, t)) == Ideal::from_points(2, {0}));
  Mat p(2, 2);
  p << 1, 0, 0, 0;
  CHECK(linalg::operator_norm(sg.element(sg.abstract().mult(t, t)).mat_part - p) == 0.0);
}

TEST_CASE("S_G of the tautological I(X) action is I(X) itself") {
  const auto pa = ix2_action();
  const auto sg = build_sg(*pa, regular_rep(*pa));
  CHECK(sg.size() == 7);
  // alpha is multiplicative here, so lifting is injective on G.
  for (int g = 0; g < pa->semigroup().size(); ++g)
    CHECK(sg.element(sg.lift_of(g)).map_part == pa->map(g));
}

TEST_CASE("build_sg asserts inverse closure and validates the laws") {
  for (const auto& pa : bundled_actions()) {
    const auto sg = build_sg(*pa, regular_rep(*pa));
    const auto& abs = sg.abstract();
    for (int s = 0; s < sg.size(); ++s) {
      CHECK(sg.element(abs.inv(s)).map_part == sg.element(s).map_part.inverse());
      CHECK(linalg::operator_norm(sg.element(abs.inv(s)).mat_part -
                                  sg.element(s).mat_part.adjoint()) <= 1e-12);
    }
  }
}

TEST_CASE("closure budget guards pathological matrix parts") {
  // A fake "representation" with an irrational rotation never closes.
  const auto pa = trivial_group_action();
  MatrixRep fake;
  fake.dim = 2;
  fake.labeling = {0, 1};
  Mat rot(2, 2);
  const double theta = 1.0;
  rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  fake.u = {rot};
  CHECK_THROWS_AS(build_sg(*pa, fake, 1e-9, 64), ResourceError);
}

TEST_CASE("beta is a genuine action with full domains") {
  for (const auto& pa : bundled_actions()) {
    const auto sg = build_sg(*pa, regular_rep(*pa));
    const auto beta = beta_action(sg);
    CHECK(validate_axioms(beta).passed());
    CHECK(check_beta_multiplicativity(sg).passed());
    // The unit acts identically on all of X.
    CHECK(beta.map(beta.semigroup().unit()).is_identity());
    CHECK(beta.ideal(beta.semigroup().unit()).is_full());
  }
}

TEST_CASE("E_s matches the displayed ideal chain") {
  for (const auto& pa : bundled_actions()) {
    const auto sg = build_sg(*pa, regular_rep(*pa));
    const auto& src = pa->semigroup();
    for (int s = 0; s < sg.size(); ++s) {
      // E_s = D_{g1} D_{g1 g2} ... D_{g1...gn} over the witness word.
      Ideal expected = Ideal::full(pa->ground().size());
      int prod = -1;
      for (int g : sg.element(s).witness_word) {
        prod = prod < 0 ? g : src.mult(prod, g);
        expected = expected.intersect(pa->ideal(prod));
      }
      CHECK(sg.E(s) == expected);
    }
  }
}

TEST_CASE("nu is covariant for beta") {
  for (const auto& pa : bundled_actions()) {
    const auto rep = regular_rep(*pa);
    const auto sg = build_sg(*pa, rep);
    const auto beta = beta_action(sg);
    const auto nu = nu_from_u(sg, rep);
    CHECK(linalg::operator_norm(nu.u[sg.abstract().unit()] -
                                Mat::Identity(rep.dim, rep.dim)) == 0.0);
    CHECK(validate_covariant(beta, nu).passed());
  }
}

TEST_CASE("key identity s(s1s2)* = s1s2(s1s2)* holds in every bundled S_G") {
  for (const auto& pa : bundled_actions()) {
    const auto sg = build_sg(*pa, regular_rep(*pa));
    CHECK(check_sg_key_identity(sg).passed());
  }
}

TEST_CASE("omega round trip recovers u exactly") {
  for (const auto& pa : bundled_actions()) {
    const auto rep = regular_rep(*pa);
    const auto sg = build_sg(*pa, rep);
    const auto nu = nu_from_u(sg, rep);
    const auto omega = omega_from_z(sg, nu, *pa);
    for (int g = 0; g < pa->semigroup().size(); ++g)
      CHECK(linalg::operator_norm(omega.u[g] - rep.u[g]) <= 1e-12);
  }
}

TEST_CASE("omega_from_z rejects non-covariant z") {
  const auto pa = semilattice_action();
  const auto rep = regular_rep(*pa);
  const auto sg = build_sg(*pa, rep);
  auto z = nu_from_u(sg, rep);
  z.u[1] = Mat::Identity(2, 2);  // break the lifted idempotent
  CHECK_THROWS_AS(omega_from_z(sg, z, *pa), PreconditionError);
}

TEST_CASE("sg JSON dump carries witnesses and supports") {
  const auto pa = z2_partial_3pt_action();
  const auto sg = build_sg(*pa, regular_rep(*pa));
  const auto doc = sg.to_json();
  CHECK(doc["size"] == 3);
  CHECK(doc["elements"].size() == 3);
  CHECK(doc["mult"].size() == 3);
  for (const auto& e : doc["elements"]) {
    CHECK(e.contains("witness"));
    CHECK(e.contains("E_support"));
  }
}
