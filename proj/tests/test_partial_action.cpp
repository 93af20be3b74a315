#include <doctest.h>

#include <random>

#include "isgx/error.hpp"
#include "test_helpers.hpp"

using namespace isgx;
using namespace isgx::testing;

namespace {
constexpr int U = PartialBijection::kUndefined;
}

TEST_CASE("validate_axioms passes on the bundled actions") {
  for (const auto& pa : bundled_actions()) {
    const auto report = validate_axioms(*pa);
    CHECK(report.passed());
    CHECK(pa->map(pa->semigroup().unit()).is_identity());
  }
}

TEST_CASE("tautological actions are always valid") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const auto pa = random_tautological_action(rng);
    CHECK(validate_axioms(*pa).passed());
  }
}

TEST_CASE("corrupt table breaks axiom (iii) with witness x0") {
  // {e, s} with the table declaring s*s = s while alpha_s is the full swap.
  const auto pa = make_action({"x0", "x1"}, {"e", "s"}, {{0, 1}, {1, 1}}, {0, 1}, 0,
                              {{0, 1}, {0, 1}}, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});
  const auto report = validate_axioms(*pa);
  REQUIRE_FALSE(report.passed());
  bool found = false;
  for (const auto& f : report.failures())
    found = found || (f.check == "axiom-iii" && f.witness.find("x=x0") != std::string::npos);
  CHECK(found);
}

TEST_CASE("structural defects are reported distinctly from axioms") {
  // dom(alpha_f) declared on the wrong point.
  const auto pa = make_action({"x0", "x1"}, {"e", "f"}, {{0, 1}, {1, 1}}, {0, 1}, 0,
                              {{0, 1}, {0}}, {{{0, 0}, {1, 1}}, {{1, 1}}});
  const auto report = validate_axioms(*pa);
  REQUIRE_FALSE(report.passed());
  for (const auto& f : report.failures()) CHECK(f.check.rfind("structure.", 0) == 0);
}

TEST_CASE("D_e must be the whole algebra") {
  const auto pa = make_action({"x0", "x1"}, {"e"}, {{0}}, {0}, 0, {{0}}, {{{0, 0}}});
  const auto report = validate_axioms(*pa);
  REQUIRE_FALSE(report.passed());
  CHECK(report.failures().front().check == "structure.unit-ideal");
}

TEST_CASE("composite of words") {
  const auto pa = ix2_action();
  const auto& sg = pa->semigroup();

  const std::vector<int> just_unit{sg.unit()};
  CHECK(composite(*pa, just_unit).is_identity());

  int swap = sg.index_of("swap"), p0 = sg.index_of("p0");
  // alpha_swap ∘ alpha_{id_{x0}} = [x0 -> x1].
  const std::vector<int> word{swap, p0};
  CHECK(composite(*pa, word) == PartialBijection({1, U}));

  // word = [g, g*]: identity on ran(alpha_g).
  for (int g = 0; g < sg.size(); ++g) {
    const std::vector<int> w{g, sg.inv(g)};
    const auto c = composite(*pa, w);
    CHECK(c.domain() == pa->map(g).range());
    for (int x : c.domain()) CHECK(c.apply(x) == x);
  }

  CHECK_THROWS_AS(composite(*pa, std::vector<int>{}), PreconditionError);
}

TEST_CASE("composite agrees with the pointwise oracle") {
  std::mt19937_64 rng(11);
  for (const auto& pa : bundled_actions()) {
    const int m = pa->semigroup().size();
    for (int len = 1; len <= 3; ++len) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> word(len);
        for (auto& g : word) g = static_cast<int>(rng() % m);
        const auto comp = composite(*pa, word);
        for (int x = 0; x < pa->ground().size(); ++x)
          CHECK(comp.apply(x) == apply_word_pointwise(*pa, word, x));
      }
    }
  }
}

TEST_CASE("domain formula: base case and the worked example") {
  const auto pa = ix2_action();
  const auto& sg = pa->semigroup();

  // n = 1: dom alpha_s = supp D_{s*}.
  for (int s = 0; s < sg.size(); ++s) {
    const std::vector<int> w{s};
    const auto res = check_domain_formula(*pa, w);
    CHECK(res.ok);
    CHECK(res.domain_formula == pa->ideal(sg.inv(s)));
  }

  // word = [swap, id_{x0}]: both sides are {x0} / range {x1}.
  const std::vector<int> word{sg.index_of("swap"), sg.index_of("p0")};
  const auto res = check_domain_formula(*pa, word);
  CHECK(res.ok);
  CHECK(res.domain_formula == Ideal::from_points(2, {0}));
  CHECK(res.range_formula == Ideal::from_points(2, {1}));
}

TEST_CASE("domain formula: the literal-statement variant can differ and is flagged") {
  // For the word [x0->x1, e] the all-starred product ends in D_{g*} = {x0}
  // while the variant with the last factor unstarred ends in D_g = {x1}.
  // The composite's true domain is {x0}: the starred form is the right one.
  const auto pa = ix2_action();
  const auto& sg = pa->semigroup();
  int q = -1;
  for (int g = 0; g < sg.size(); ++g)
    if (pa->map(g) == PartialBijection({1, U})) q = g;
  REQUIRE(q >= 0);
  const std::vector<int> word{q, sg.unit()};
  const auto res = check_domain_formula(*pa, word);
  CHECK(res.ok);
  CHECK_FALSE(res.statement_variant_equal);
  CHECK(res.domain_formula == Ideal::from_points(2, {0}));
}

TEST_CASE("domain formula holds for all words up to length 4") {
  for (const auto& pa : bundled_actions()) {
    const int m = pa->semigroup().size();
    for (int len = 1; len <= 4; ++len) {
      for (const auto& word : words_of_length(m, len)) {
        const auto res = check_domain_formula(*pa, word);
        CHECK(res.ok);
        if (!res.ok) {
          CAPTURE(len);
          break;
        }
      }
    }
  }
}

TEST_CASE("translate lemma") {
  const auto pa = ix2_action();
  const auto& sg = pa->semigroup();

  // t = e: both sides are the plain intersection.
  for (int s = 0; s < sg.size(); ++s) {
    const std::vector<int> slist{s};
    CHECK(check_translate_lemma(*pa, sg.unit(), slist).ok);
  }

  // t = swap, s-list = [id_{x0}]: alpha_swap({x0}) = {x1}.
  const std::vector<int> slist{sg.index_of("p0")};
  CHECK(check_translate_lemma(*pa, sg.index_of("swap"), slist).ok);

  // Exhaustive over all (t, s-list) with |s-list| <= 2 on all bundled actions.
  for (const auto& act : bundled_actions()) {
    const int m = act->semigroup().size();
    for (int t = 0; t < m; ++t)
      for (int len = 1; len <= 2; ++len)
        for (const auto& slist2 : words_of_length(m, len))
          CHECK(check_translate_lemma(*act, t, slist2).ok);
  }
}

TEST_CASE("apply: examples") {
  const auto sl = semilattice_action();
  const auto z2 = make_action({"x0", "x1"}, {"e", "s"}, {{0, 1}, {1, 0}}, {0, 1}, 0,
                              {{0, 1}, {0, 1}}, {{{0, 0}, {1, 1}}, {{0, 1}, {1, 0}}});

  // g = e leaves elements untouched.
  Vec v(2);
  v << Complex(3, 0), Complex(0, 5);
  const AlgebraElement a(v);
  CHECK(sl->apply(0, a).approx_equal(a, 0.0));

  // Swap action permutes coordinates: (1, 2i) -> (2i, 1).
  Vec w(2);
  w << Complex(1, 0), Complex(0, 2);
  Vec expect(2);
  expect << Complex(0, 2), Complex(1, 0);
  CHECK(z2->apply(1, AlgebraElement(w)).approx_equal(AlgebraElement(expect), 0.0));

  // Semilattice f acts as the identity on D_f = {x0}.
  Vec b(2);
  b << Complex(3, 0), Complex(0, 0);
  CHECK(sl->apply(1, AlgebraElement(b)).approx_equal(AlgebraElement(b), 0.0));
}

TEST_CASE("apply: support tolerance and domain errors") {
  const auto sl = semilattice_action();
  Vec v(2);
  v << Complex(3, 0), Complex(1e-12, 0);
  // Tiny off-support residue is zeroed.
  const auto out = sl->apply(1, AlgebraElement(v));
  CHECK(out.at(1) == Complex(0, 0));
  CHECK(out.at(0) == Complex(3, 0));

  Vec bad(2);
  bad << Complex(3, 0), Complex(1, 0);
  CHECK_THROWS_AS(sl->apply(1, AlgebraElement(bad)), DomainError);
  try {
    sl->apply(1, AlgebraElement(bad));
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("x1") != std::string::npos);
  }
}

TEST_CASE("apply is an ideal isomorphism") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (const auto& pa : bundled_actions()) {
    const int n = pa->ground().size();
    for (int g = 0; g < pa->semigroup().size(); ++g) {
      const int gi = pa->semigroup().inv(g);
      auto random_in = [&](const Ideal& d) {
        Vec v = Vec::Zero(n);
        for (int x : d.points()) v(x) = Complex(gauss(rng), gauss(rng));
        return AlgebraElement(v);
      };
      for (int trial = 0; trial < 10; ++trial) {
        const auto a = random_in(pa->ideal(gi));
        const auto b = random_in(pa->ideal(gi));
        // alpha_{g*} inverts alpha_g.
        CHECK(pa->apply(gi, pa->apply(g, a)).approx_equal(a, 1e-12));
        // Multiplicative and *-preserving.
        CHECK(pa->apply(g, a * b).approx_equal(pa->apply(g, a) * pa->apply(g, b), 1e-12));
        CHECK(pa->apply(g, a.conjugate()).approx_equal(pa->apply(g, a).conjugate(), 1e-12));
        // Linear.
        CHECK(pa->apply(g, a + b).approx_equal(pa->apply(g, a) + pa->apply(g, b), 1e-12));
        // Lands in D_g.
        CHECK(pa->apply(g, a).supported_in(pa->ideal(g), 0.0));
      }
    }
  }
}

TEST_CASE("empty ideals are allowed") {
  // I(X) contains the empty bijection; its ideal is empty and alpha is the
  // empty map.
  const auto pa = ix2_action();
  int empty_elem = -1;
  for (int g = 0; g < pa->semigroup().size(); ++g)
    if (pa->ideal(g).dim() == 0) empty_elem = g;
  REQUIRE(empty_elem >= 0);
  CHECK(validate_axioms(*pa).passed());
  const auto zero = pa->apply(empty_elem, AlgebraElement::zero(2));
  CHECK(zero.sup_norm() == 0.0);
}
