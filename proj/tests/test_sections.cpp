#include "tropbundle/bundle.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

namespace tropbundle {
namespace {

Bundle line_bundle(const Curve& curve, long slope, const Rational& value_at_0 = Rational(0)) {
  return Bundle::single_transition(curve, {Permutation::identity(1), {AffineFn{Rational(slope), value_at_0}}});
}

Divisor times(const Divisor& d, int n) {
  Divisor out;
  for (int i = 0; i < n; ++i) out = out + d;
  return out;
}

/// Σ w·p mod L.
Rational abel_jacobi(const Divisor& d, const Rational& length) {
  Rational sum(0);
  for (const auto& p : d.points()) sum += Rational(static_cast<long>(p.weight)) * p.position;
  return mod_positive(sum, length);
}

TEST(CanonicalSection, TrivialBundleGetsTheZeroSection) {
  const Curve curve = make_curve(Rational(2), 4);
  const Section s = canonical_section(Bundle::trivial(curve, 2));
  ASSERT_EQ(s.components.size(), 4U);
  for (int i = 0; i < 4; ++i) {
    for (const auto& u : s.components[i]) EXPECT_EQ(u, PLFn::constant(curve.arc(i), 0));
  }
  EXPECT_TRUE(chern1(Bundle::trivial(curve, 2), s).empty());
}

TEST(CanonicalSection, LineBundleOfDegreeTwo) {
  const Curve curve = make_curve(Rational(1), 3);
  const Bundle f = line_bundle(curve, -2);
  const Section s = canonical_section(f);
  EXPECT_TRUE(is_section_of(f, s));
  const Divisor d = chern1(f, s);
  EXPECT_EQ(divisor_degree(d), 2);
  for (const auto& p : d.points()) EXPECT_GT(p.weight, 0);
}

TEST(CanonicalSection, DirectSumIsComponentwise) {
  testing::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const Curve curve = testing::random_curve(rng);
    const Bundle f = testing::random_bundle(rng, curve, testing::uniform_int(rng, 1, 2));
    const Bundle g = testing::random_bundle(rng, curve, testing::uniform_int(rng, 1, 2));
    const Section sf = canonical_section(f), sg = canonical_section(g);
    const Section sum = canonical_section(direct_sum(f, g));
    for (int i = 0; i < curve.charts(); ++i) {
      auto expected = sf.components[i];
      expected.insert(expected.end(), sg.components[i].begin(), sg.components[i].end());
      ASSERT_EQ(sum.components[i], expected);
    }
  }
}

TEST(Chern1, RejectsIncompatibleSections) {
  const Curve curve = make_curve(Rational(1), 3);
  const Bundle f = line_bundle(curve, -1);
  Section zero;
  for (int i = 0; i < 3; ++i) zero.components.push_back({PLFn::constant(curve.arc(i), 0)});
  EXPECT_FALSE(is_section_of(f, zero));
  EXPECT_FALSE(section_mismatches(f, zero).empty());
  EXPECT_THROW(chern1(f, zero), std::invalid_argument);
  EXPECT_TRUE(is_section_of(Bundle::trivial(curve, 1), zero));
}

TEST(Chern1, WrongShapeIsReported) {
  const Curve curve = make_curve(Rational(1), 3);
  EXPECT_FALSE(section_mismatches(Bundle::trivial(curve, 1), Section{}).empty());
}

class RandomSections : public ::testing::TestWithParam<int> {};

TEST_P(RandomSections, CanonicalSectionIsCompatibleAndHasTheBundleDegree) {
  testing::Rng rng(500 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    const Bundle f = testing::random_bundle(rng);
    const Section s = canonical_section(f);
    ASSERT_TRUE(section_mismatches(f, s).empty());
    ASSERT_EQ(divisor_degree(chern1(f, s)), degree(f));
  }
}

TEST_P(RandomSections, PerturbingByAGlobalFunction) {
  testing::Rng rng(600 + GetParam());
  for (int trial = 0; trial < 20; ++trial) {
    const Bundle f = testing::random_bundle(rng, 3);
    const Section s = canonical_section(f);
    const CircleFn h = testing::random_global_fn(rng, f.curve().length());
    const Section t = s.plus(h, f.curve());
    ASSERT_TRUE(is_section_of(f, t));
    const Divisor before = chern1(f, s), after = chern1(f, t);
    ASSERT_EQ(divisor_degree(after), divisor_degree(before));
    ASSERT_EQ(after - before, times(pl_divisor(h), f.rank()));
  }
}

TEST_P(RandomSections, AbelJacobiSumDetectsLineBundleIsomorphism) {
  testing::Rng rng(700 + GetParam());
  for (int trial = 0; trial < 40; ++trial) {
    const Curve curve = testing::random_curve(rng);
    const long d = static_cast<long>(testing::uniform_int(rng, -3, 3));
    const Rational a = testing::random_rational(rng);
    const Bundle f = apply_gauge(line_bundle(curve, -d, a), testing::random_gauge(rng, curve, 1));
    const Rational b = testing::uniform_int(rng, 0, 1) == 0
                           ? testing::random_rational(rng)
                           : a + Rational(static_cast<long>(testing::uniform_int(rng, -2, 2))) * curve.length();
    const Bundle g = line_bundle(curve, -d, b);
    const Rational af = abel_jacobi(chern1(f, canonical_section(f)), curve.length());
    const Rational ag = abel_jacobi(chern1(g, canonical_section(g)), curve.length());
    ASSERT_EQ(af == ag, is_isomorphic(f, g));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSections, ::testing::Range(0, 5));

}  // namespace
}  // namespace tropbundle
