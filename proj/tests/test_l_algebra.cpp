#include <doctest.h>

#include <random>

#include "isgx/error.hpp"
#include "isgx/l_algebra.hpp"
#include "test_helpers.hpp"

using namespace isgx;
using namespace isgx::testing;

namespace {

AlgebraElement vec2(Complex a, Complex b) {
  Vec v(2);
  v << a, b;
  return AlgebraElement(v);
}

// Oracle: the convolution formula evaluated directly through apply(), with
// no structure-constant table involved.
LElement convolve_directly(const PartialAction& pa, const LElement& x, const LElement& y) {
  const auto& sg = pa.semigroup();
  LElement out;
  for (const auto& [h, xh] : x.coeffs) {
    for (const auto& [k, yk] : y.coeffs) {
      const int g = sg.mult(h, k);
      const AlgebraElement term = pa.apply(h, pa.apply(sg.inv(h), xh) * yk);
      auto it = out.coeffs.find(g);
      if (it == out.coeffs.end())
        out.coeffs.emplace(g, term);
      else
        it->second = it->second + term;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("basis enumeration and dimension") {
  const auto counts = std::vector<std::pair<std::shared_ptr<const PartialAction>, int>>{
      {semilattice_action(), 3},     // 2 + 1
      {z2_partial_3pt_action(), 5},  // 3 + 2
      {ix2_action(), 8},             // 0+1+1+2+2+1+1
      {chain3_action(), 6},          // 3 + 2 + 1
      {trivial_group_action(), 2}};
  for (const auto& [pa, expected] : counts) {
    const LAlgebra lalg(pa);
    CHECK(lalg.dim() == expected);
    int by_supports = 0;
    for (int g = 0; g < pa->semigroup().size(); ++g) by_supports += pa->ideal(g).dim();
    CHECK(lalg.dim() == by_supports);
  }
}

TEST_CASE("delta enforces the support constraint") {
  const auto pa = semilattice_action();
  const LAlgebra lalg(pa);

  CHECK(lalg.delta(AlgebraElement::zero(2), 1).zero());
  CHECK_NOTHROW(lalg.delta(vec2(3, 5), 0));                    // D_e = X
  CHECK_THROWS_AS(lalg.delta(vec2(3, 5), 1), DomainError);     // x1 off D_f
  CHECK_NOTHROW(lalg.delta(vec2(3, 1e-12), 1));                // residue zeroed
}

TEST_CASE("convolution: unit and the worked examples") {
  const auto pa = semilattice_action();
  const LAlgebra lalg(pa);
  const LElement one = lalg.unit();

  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec xv(lalg.dim());
  for (int i = 0; i < lalg.dim(); ++i) xv(i) = Complex(gauss(rng), gauss(rng));
  const LElement x = lalg.from_vector(xv);
  CHECK(lalg.max_coeff_diff(lalg.convolve(one, x), x) == 0.0);
  CHECK(lalg.max_coeff_diff(lalg.convolve(x, one), x) == 0.0);

  // (2 on x0) δ_f ∗ (3,5) δ_e = (6 on x0) δ_f.
  const LElement lhs = lalg.convolve(lalg.delta(vec2(2, 0), 1), lalg.delta(vec2(3, 5), 0));
  const LElement expect = lalg.delta(vec2(6, 0), 1);
  CHECK(lalg.max_coeff_diff(lhs, expect) == 0.0);

  // Two-point Z2: (7 on x0) δ_s ∗ (2 on x0) δ_s = (14 on x0) δ_e.
  const auto z2 = z2_partial_2pt_action();
  const LAlgebra lz2(z2);
  const LElement prod = lz2.convolve(lz2.delta(vec2(7, 0), 1), lz2.delta(vec2(2, 0), 1));
  CHECK(lz2.max_coeff_diff(prod, lz2.delta(vec2(14, 0), 0)) == 0.0);
}

TEST_CASE("table-based convolution agrees with the direct formula") {
  std::mt19937_64 rng(23);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const auto& pa : bundled_actions()) {
    const LAlgebra lalg(pa);
    for (int trial = 0; trial < 30; ++trial) {
      Vec xv(lalg.dim()), yv(lalg.dim());
      for (int i = 0; i < lalg.dim(); ++i) {
        xv(i) = Complex(gauss(rng), gauss(rng));
        yv(i) = Complex(gauss(rng), gauss(rng));
      }
      const LElement x = lalg.from_vector(xv), y = lalg.from_vector(yv);
      CHECK(lalg.max_coeff_diff(lalg.convolve(x, y), convolve_directly(*pa, x, y)) <= 1e-12);
    }
  }
}

TEST_CASE("convolution preserves the support invariant") {
  std::mt19937_64 rng(29);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const auto& pa : bundled_actions()) {
    const LAlgebra lalg(pa);
    for (int trial = 0; trial < 20; ++trial) {
      Vec xv(lalg.dim()), yv(lalg.dim());
      for (int i = 0; i < lalg.dim(); ++i) {
        xv(i) = Complex(gauss(rng), gauss(rng));
        yv(i) = Complex(gauss(rng), gauss(rng));
      }
      const LElement z = lalg.convolve(lalg.from_vector(xv), lalg.from_vector(yv));
      for (const auto& [g, a] : z.coeffs) CHECK(a.supported_in(pa->ideal(g), 0.0));
      const LElement st = lalg.star(lalg.from_vector(xv));
      for (const auto& [g, a] : st.coeffs) CHECK(a.supported_in(pa->ideal(g), 0.0));
    }
  }
}

TEST_CASE("star: examples and involutivity") {
  const auto pa = semilattice_action();
  const LAlgebra lalg(pa);

  // star of a δ_e conjugates.
  const LElement se = lalg.star(lalg.delta(vec2(Complex(1, 2), Complex(0, -3)), 0));
  CHECK(lalg.max_coeff_diff(se, lalg.delta(vec2(Complex(1, -2), Complex(0, 3)), 0)) == 0.0);

  // Swap action: star((1, 2i) δ_swap) = (-2i, 1) δ_swap.
  const auto swap_pa = make_action({"x0", "x1"}, {"e", "s"}, {{0, 1}, {1, 0}}, {0, 1}, 0,
                                   {{0, 1}, {0, 1}}, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
  const LAlgebra lswap(swap_pa);
  const LElement ss = lswap.star(lswap.delta(vec2(Complex(1, 0), Complex(0, 2)), 1));
  CHECK(lswap.max_coeff_diff(ss, lswap.delta(vec2(Complex(0, -2), Complex(1, 0)), 1)) == 0.0);

  std::mt19937_64 rng(31);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const auto& act : bundled_actions()) {
    const LAlgebra l(act);
    for (int trial = 0; trial < 20; ++trial) {
      Vec v(l.dim());
      for (int i = 0; i < l.dim(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
      const LElement x = l.from_vector(v);
      CHECK(l.max_coeff_diff(l.star(l.star(x)), x) <= 1e-12);
      CHECK(std::abs(l.l1_norm(l.star(x)) - l.l1_norm(x)) <= 1e-12);
    }
  }
}

TEST_CASE("l1 norm") {
  const auto pa = semilattice_action();
  const LAlgebra lalg(pa);
  CHECK(lalg.l1_norm(LElement{}) == 0.0);
  // ||(3,4i) δ_e|| + ||(5 on x0) δ_f|| = 4 + 5.
  const LElement x = lalg.delta(vec2(3, Complex(0, 4)), 0) + lalg.delta(vec2(5, 0), 1);
  CHECK(lalg.l1_norm(x) == doctest::Approx(9.0).epsilon(1e-12));
}

TEST_CASE("Banach *-algebra laws hold on every bundled action") {
  for (const auto& pa : bundled_actions()) {
    const LAlgebra lalg(pa);
    const auto report = verify_banach_star_laws(lalg, 0, 100, 1e-12);
    CHECK(report.passed());
  }
}

TEST_CASE("a corrupted convolution fails associativity with a witness") {
  const auto pa = z2_partial_3pt_action();
  const LAlgebra lalg(pa);
  // Drop the outer beta_h(...) wrapper from the formula.
  const MultiplyFn corrupted = [&pa](const LElement& x, const LElement& y) {
    const auto& sg = pa->semigroup();
    LElement out;
    for (const auto& [h, xh] : x.coeffs) {
      for (const auto& [k, yk] : y.coeffs) {
        const int g = sg.mult(h, k);
        const AlgebraElement term = pa->apply(sg.inv(h), xh) * yk;  // no beta_h around it
        auto it = out.coeffs.find(g);
        if (it == out.coeffs.end())
          out.coeffs.emplace(g, term);
        else
          it->second = it->second + term;
      }
    }
    return out;
  };
  const auto report = verify_banach_star_laws(lalg, 0, 20, 1e-12, corrupted);
  REQUIRE_FALSE(report.passed());
  bool assoc = false;
  for (const auto& f : report.failures())
    assoc = assoc || (f.check == "associativity" && !f.witness.empty());
  CHECK(assoc);
}

TEST_CASE("coordinates round trip") {
  const auto pa = ix2_action();
  const LAlgebra lalg(pa);
  std::mt19937_64 rng(37);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(lalg.dim());
  for (int i = 0; i < lalg.dim(); ++i) v(i) = Complex(gauss(rng), gauss(rng));
  CHECK((lalg.to_vector(lalg.from_vector(v)) - v).norm() == 0.0);
}
