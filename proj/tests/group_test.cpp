#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigidpq/group.hpp"

using namespace rigidpq;

namespace {

GroupElement el(Int n, Int a, Int b) { return {GroupModulus{n}, a, b}; }
Character ch(Int n, Int a, Int b) { return {GroupModulus{n}, a, b}; }

}  // namespace

TEST(GroupCore, ResiduesAreNormalized) {
  const auto g = el(8, -1, 17);
  EXPECT_EQ(g.a(), 7);
  EXPECT_EQ(g.b(), 1);
  const auto c = ch(8, -9, 8);
  EXPECT_EQ(c.alpha(), 7);
  EXPECT_EQ(c.beta(), 0);
}

TEST(GroupCore, ModulusBelowTwoIsRejected) {
  EXPECT_THROW(GroupModulus{1}, DomainError);
  EXPECT_THROW(GroupModulus{0}, DomainError);
}

TEST(GroupCore, ElementOrder) {
  const GroupModulus n{8};
  EXPECT_EQ(element_order(n, el(8, 0, 0)), 1);
  EXPECT_EQ(element_order(n, el(8, 1, 0)), 8);
  EXPECT_EQ(oracle::order_by_repeated_addition(8, {4, 4}), 2);
  EXPECT_EQ(element_order(n, el(8, 4, 4)), 2);
}

TEST(GroupCore, ElementOrderMatchesRepeatedAddition) {
  for (Int n : {2, 4, 6, 8, 9, 12, 30}) {
    const GroupModulus m{n};
    for (Int a = 0; a < n; ++a)
      for (Int b = 0; b < n; ++b) {
        const Int k = element_order(m, el(n, a, b));
        ASSERT_EQ(k, oracle::order_by_repeated_addition(n, {a, b})) << n << ' ' << a << ' ' << b;
        ASSERT_EQ((n * n) % k, 0);
        ASSERT_EQ(scale(m, k, el(n, a, b)), GroupElement{});
      }
  }
}

TEST(GroupCore, CyclicIntersection) {
  const GroupModulus n{8};
  const auto i = cyclic_intersection(n, el(8, 1, 0), el(8, 1, 2));
  EXPECT_EQ(i, (std::vector<GroupElement>{el(8, 0, 0), el(8, 4, 0)}));

  ASSERT_EQ(oracle::intersection(8, {1, 0}, {0, 1}), (std::set<oracle::Pair>{{0, 0}}));
  EXPECT_EQ(cyclic_intersection(n, el(8, 1, 0), el(8, 0, 1)), std::vector<GroupElement>{el(8, 0, 0)});

  const auto g = el(8, 2, 6);
  EXPECT_EQ(cyclic_intersection(n, g, g), cyclic_subgroup(n, g));
}

TEST(GroupCore, CyclicIntersectionIsSymmetricSubgroup) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Int n = 2 + static_cast<Int>(rng() % 20);
    const GroupModulus m{n};
    const auto g = el(n, static_cast<Int>(rng() % n), static_cast<Int>(rng() % n));
    const auto h = el(n, static_cast<Int>(rng() % n), static_cast<Int>(rng() % n));
    const auto i = cyclic_intersection(m, g, h);
    ASSERT_EQ(i, cyclic_intersection(m, h, g));
    ASSERT_TRUE(std::binary_search(i.begin(), i.end(), GroupElement{}));
    for (const auto& x : i)
      for (const auto& y : i) ASSERT_TRUE(std::binary_search(i.begin(), i.end(), add(m, x, y)));
    const auto expected = oracle::intersection(n, {g.a(), g.b()}, {h.a(), h.b()});
    ASSERT_EQ(i.size(), expected.size());
  }
}

TEST(GroupCore, CharEval) {
  const GroupModulus n{8};
  EXPECT_EQ(char_eval(n, ch(8, 2, 1), el(8, 1, 0)).exponent(), 2);
  EXPECT_TRUE(char_eval(n, ch(8, 0, 0), el(8, 5, 3)).is_one());
  EXPECT_TRUE(char_eval(n, ch(8, 2, 1), el(8, 4, 0)).is_one());
}

TEST(GroupCore, CharEvalIsBilinear) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Int n = 2 + static_cast<Int>(rng() % 40);
    const GroupModulus m{n};
    auto r = [&] { return static_cast<Int>(rng() % n); };
    const auto g = el(n, r(), r()), h = el(n, r(), r());
    const auto x = ch(n, r(), r()), y = ch(n, r(), r());
    ASSERT_EQ(char_eval(m, x, add(m, g, h)), char_eval(m, x, g) * char_eval(m, x, h));
    ASSERT_EQ(char_eval(m, add(m, x, y), g), char_eval(m, x, g) * char_eval(m, y, g));
  }
}

TEST(GroupCore, RootOfUnityComparisonIsModular) {
  const GroupModulus n{8};
  EXPECT_EQ(RootOfUnityExponent(n, 3), RootOfUnityExponent(n, 11));
  EXPECT_EQ(RootOfUnityExponent(n, -2), RootOfUnityExponent(n, 6));
  EXPECT_NE(RootOfUnityExponent(n, 2), RootOfUnityExponent(n, 4));
  EXPECT_TRUE((RootOfUnityExponent(n, 5) * RootOfUnityExponent(n, 5).inverse()).is_one());
}

TEST(GroupCore, ApplyTwist) {
  const GroupModulus n{8};
  EXPECT_EQ(apply_twist(n, TwistMatrix::standard(n), el(8, 1, 0)), el(8, 1, 2));
  EXPECT_EQ(apply_twist(n, TwistMatrix::identity(n), el(8, 3, 5)), el(8, 3, 5));
  EXPECT_EQ(apply_twist(n, TwistMatrix::identity(n), ch(8, 3, 5)), ch(8, 3, 5));
}

TEST(GroupCore, TwistNotInvertibleWhenThreeDividesN) {
  try {
    TwistMatrix::standard(GroupModulus{9});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInvertible);
    EXPECT_STREQ(e.what(), "twist not invertible mod n");
  }
  EXPECT_THROW(TwistMatrix(GroupModulus{8}, 2, 0, 0, 1), Error);
}

TEST(GroupCore, TwistInverseRoundTrip) {
  std::mt19937_64 rng(3);
  int tested = 0;
  while (tested < 300) {
    const Int n = 2 + static_cast<Int>(rng() % 50);
    const GroupModulus m{n};
    auto r = [&] { return static_cast<Int>(rng() % n); };
    const Int a = r(), b = r(), c = r(), d = r();
    if (!inverse_mod(a * d - b * c, n)) continue;
    const TwistMatrix t{m, a, b, c, d};
    EXPECT_EQ(t * t.inverse(), TwistMatrix::identity(m));
    EXPECT_EQ(t.transpose_inverse() * t.transpose(), TwistMatrix::identity(m));
    const auto v = el(n, r(), r());
    EXPECT_EQ(apply_twist(m, t, apply_twist(m, t.inverse(), v)), v);
    ++tested;
  }
}

TEST(GroupCore, InverseMod) {
  EXPECT_EQ(inverse_mod(3, 8), 3);
  EXPECT_EQ(inverse_mod(3, 10), 7);
  EXPECT_FALSE(inverse_mod(3, 9));
  EXPECT_FALSE(inverse_mod(0, 5));
}
