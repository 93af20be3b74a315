#include <doctest.h>

#include <random>

#include "isgx/error.hpp"
#include "isgx/partial_bijection.hpp"

using namespace isgx;

namespace {
constexpr int U = PartialBijection::kUndefined;

PartialBijection random_pbij(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-1, n - 1);
  std::vector<int> image(n, U);
  std::vector<bool> used(n, false);
  for (int x = 0; x < n; ++x) {
    const int y = entry(rng);
    if (y >= 0 && !used[y]) {
      image[x] = y;
      used[y] = true;
    }
  }
  return PartialBijection(std::move(image));
}
}  // namespace

TEST_CASE("partial bijection construction validates") {
  CHECK_NOTHROW(PartialBijection({1, 0}));
  CHECK_NOTHROW(PartialBijection({U, U}));
  CHECK_THROWS_AS(PartialBijection({0, 0}), StructureError);   // not injective
  CHECK_THROWS_AS(PartialBijection({2, 0}), StructureError);   // out of range
  CHECK_THROWS_AS(PartialBijection({}), StructureError);       // empty ground set
}

TEST_CASE("compose applies the right factor first") {
  const auto id = PartialBijection::identity(2);
  const auto f = PartialBijection({0, U});  // x0 -> x0

  CHECK(compose(id, f) == f);
  CHECK(compose(f, id) == f);

  // [x0->x1] after [x1->x0] is the identity on {x1}.
  const auto a = PartialBijection({1, U});
  const auto b = PartialBijection({U, 0});
  CHECK(compose(a, b) == PartialBijection({U, 1}));

  const auto empty = PartialBijection::empty_map(2);
  CHECK(compose(empty, f) == empty);
  CHECK(compose(f, empty) == empty);

  CHECK_THROWS_AS(compose(PartialBijection::identity(2), PartialBijection::identity(3)),
                  StructureError);
}

TEST_CASE("invert is the pointwise inverse") {
  CHECK(invert(PartialBijection::identity(2)) == PartialBijection::identity(2));
  CHECK(invert(PartialBijection({1, U})) == PartialBijection({U, 0}));
  CHECK(invert(PartialBijection::empty_map(3)) == PartialBijection::empty_map(3));
}

TEST_CASE("inverse laws and associativity on random partial bijections") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const auto s = random_pbij(rng, n);
    const auto t = random_pbij(rng, n);
    const auto u = random_pbij(rng, n);

    CHECK(compose(compose(s, t), u) == compose(s, compose(t, u)));
    CHECK(compose(compose(s, s.inverse()), s) == s);
    CHECK(s.inverse().inverse() == s);

    // s^{-1} s is the identity on dom(s), s s^{-1} on ran(s).
    const auto left = compose(s.inverse(), s);
    for (int x : s.domain()) CHECK(left.apply(x) == x);
    CHECK(left.domain() == s.domain());
  }
}

TEST_CASE("domain and range bookkeeping") {
  const auto a = PartialBijection({1, U, 0});
  CHECK(a.domain() == std::vector<int>{0, 2});
  CHECK(a.range() == std::vector<int>{0, 1});
  CHECK(a.domain_size() == 2);
  CHECK_FALSE(a.is_identity());
  CHECK(PartialBijection::partial_identity(3, {0, 2}) == PartialBijection({0, U, 2}));
}

TEST_CASE("string rendering") {
  const GroundSet ground({"x0", "x1"});
  CHECK(PartialBijection({1, 0}).to_string(ground) == "(x0->x1)(x1->x0)");
  CHECK(PartialBijection::empty_map(2).to_string(ground) == "(empty)");
}
