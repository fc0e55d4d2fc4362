#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "generators.hpp"
#include "psgkit/similarity.hpp"

using namespace psgkit;
using psgkit::test::Rng;

namespace
{

LabelMultiset ms(std::initializer_list<std::pair<const char *, std::size_t>> entries)
{
  LabelMultiset out;
  for (const auto & [label, count] : entries) {
    out.add(Label(label), count);
  }
  return out;
}

// Expands a multiset into one label per element.
std::vector<std::string> flatten(const LabelMultiset & m)
{
  std::vector<std::string> out;
  for (const auto & [label, count] : m.entries()) {
    out.insert(out.end(), count, label.text());
  }
  return out;
}

// Element-by-element scan: keep each element of n1 whose label appears
// anywhere in n2.
std::vector<std::string> brute_filter(const LabelMultiset & n1, const LabelMultiset & n2)
{
  const auto b = flatten(n2);
  std::vector<std::string> out;
  for (const auto & x : flatten(n1)) {
    for (const auto & y : b) {
      if (x == y) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

// Independent fraction arithmetic on plain integers, reduced by std::gcd.
struct Frac
{
  std::int64_t num;
  std::int64_t den;
};

Frac reduce(std::int64_t num, std::int64_t den)
{
  if (num == 0) {
    return {0, 1};
  }
  const auto g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

Frac frac(std::size_t i, std::size_t n)
{
  return n == 0 ? Frac{0, 1} : reduce(static_cast<std::int64_t>(i), static_cast<std::int64_t>(n));
}

Frac sub(Frac a, Frac b) { return reduce(a.num * b.den - b.num * a.den, a.den * b.den); }
Frac add(Frac a, Frac b) { return reduce(a.num * b.den + b.num * a.den, a.den * b.den); }
Frac abs(Frac a) { return {a.num < 0 ? -a.num : a.num, a.den}; }
bool less(Frac a, Frac b) { return a.num * b.den < b.num * a.den; }
Frac half(Frac a) { return reduce(a.num, a.den * 2); }

void expect_eq(const Rational & r, Frac f, const char * what)
{
  EXPECT_EQ(r.numerator(), f.num) << what;
  EXPECT_EQ(r.denominator(), f.den) << what;
}

}  // namespace

TEST(FilterIntersection, KeepsMultiplicityOfFirstArgument)
{
  EXPECT_EQ(filter_intersection(ms({{"a", 2}, {"b", 1}}), ms({{"a", 1}, {"c", 3}})), ms({{"a", 2}}));
}

TEST(FilterIntersection, IdentityWhenEqual)
{
  const auto n = ms({{"a", 2}, {"b", 5}});
  EXPECT_EQ(filter_intersection(n, n), n);
}

TEST(FilterIntersection, IsAsymmetricInCardinality)
{
  const auto a = ms({{"x", 5}, {"y", 1}});
  const auto b = ms({{"x", 1}, {"z", 2}});
  EXPECT_EQ(filter_intersection(a, b).cardinality(), 5u);
  EXPECT_EQ(filter_intersection(b, a).cardinality(), 1u);
}

TEST(FilterIntersection, EmptyInputs)
{
  EXPECT_TRUE(filter_intersection({}, ms({{"a", 1}})).empty());
  EXPECT_TRUE(filter_intersection(ms({{"a", 1}}), {}).empty());
}

TEST(FilterIntersection, MatchesBruteForceOracleOnRandomPairs)
{
  Rng rng(0x5eed0001);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = test::random_multiset(rng, 12, 8, 6);
    const auto b = test::random_multiset(rng, 12, 8, 6);
    const auto got = flatten(filter_intersection(a, b));
    ASSERT_EQ(got, brute_filter(a, b)) << "trial " << trial;
  }
}

TEST(PercentIntersection, PublishedValues)
{
  EXPECT_EQ(percent_intersection(44, 68), Rational(11, 17));
  EXPECT_EQ(render_percent(percent_intersection(44, 68)), "64.71");
  EXPECT_EQ(percent_intersection(23, 35), Rational(23, 35));
  EXPECT_EQ(render_percent(percent_intersection(23, 35)), "65.71");
}

TEST(PercentIntersection, EmptyBaseIsZero)
{
  EXPECT_EQ(percent_intersection(0, 0), Rational(0));
  EXPECT_EQ(percent_intersection(LabelMultiset{}, LabelMultiset{}), Rational(0));
}

TEST(PercentIntersection, RejectsIntersectionLargerThanBase)
{
  EXPECT_THROW(percent_intersection(3, 2), std::invalid_argument);
}

TEST(PercentagesDistance, PublishedValues)
{
  EXPECT_EQ(percentages_distance(Rational(11, 17), Rational(23, 35)), Rational(6, 595));
  EXPECT_EQ(percentages_distance(Rational(17, 24), Rational(19, 27)), Rational(1, 216));
  EXPECT_EQ(percentages_distance(Rational(2, 3), Rational(2, 3)), Rational(0));
}

TEST(LowerBound, PublishedValues)
{
  const Rational l_spt = lower_bound(Rational(11, 17), Rational(23, 35), Rational(6, 595));
  EXPECT_EQ(l_spt, Rational(379, 595));
  EXPECT_EQ(render_percent(l_spt), "63.70");
  const Rational l_psg = lower_bound(Rational(17, 24), Rational(19, 27), Rational(1, 216));
  EXPECT_EQ(l_psg, Rational(151, 216));
  EXPECT_EQ(render_percent(l_psg), "69.91");
  EXPECT_EQ(lower_bound(Rational(1), Rational(1), Rational(0)), Rational(1));
}

TEST(LowerBound, TakesAbsoluteValueWhenEtaExceedsMinimum)
{
  // min = 1/10, eta = 8/10 -> |1/10 - 8/10| = 7/10
  EXPECT_EQ(lower_bound(Rational(1, 10), Rational(9, 10), Rational(8, 10)), Rational(7, 10));
}

TEST(RenderPercent, RoundsHalfAwayFromZero)
{
  EXPECT_EQ(render_percent(Rational(1, 8)), "12.50");
  EXPECT_EQ(render_percent(Rational(1, 800)), "0.13");  // 0.125 -> 0.13
  EXPECT_EQ(render_percent(Rational(-1, 800)), "-0.13");
  EXPECT_EQ(render_percent(Rational(1, 3)), "33.33");
  EXPECT_EQ(render_percent(Rational(2, 3)), "66.67");
  EXPECT_EQ(render_percent(Rational(1)), "100.00");
  EXPECT_EQ(render_percent(Rational(0)), "0.00");
  EXPECT_EQ(render_percent(Rational(382, 595), 4), "64.2017");
}

TEST(ToFractionString, LowestTerms)
{
  EXPECT_EQ(to_fraction_string(Rational(44, 68)), "11/17");
  EXPECT_EQ(to_fraction_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_fraction_string(Rational(0, 5)), "0");
}

TEST(SimilarityReport, PublishedSptCardinalities)
{
  const auto r = similarity_from_counts(68, 35, 44, 23);
  EXPECT_EQ(r.p1, Rational(11, 17));
  EXPECT_EQ(r.p2, Rational(23, 35));
  EXPECT_EQ(r.eta, Rational(6, 595));
  EXPECT_EQ(r.lower, Rational(379, 595));
  EXPECT_EQ(r.range_lo_pct, "63.70");
  EXPECT_EQ(r.range_hi_pct, "64.71");
  EXPECT_EQ(r.average_pct, "64.21");
  EXPECT_EQ(r.average, Rational(382, 595));
  EXPECT_EQ(r.average_exact_pct, "64.20");
}

TEST(SimilarityReport, PublishedPsgCardinalities)
{
  const auto r = similarity_from_counts(24, 27, 17, 19);
  EXPECT_EQ(r.eta, Rational(1, 216));
  EXPECT_EQ(r.lower, Rational(151, 216));
  EXPECT_EQ(r.range_lo_pct, "69.91");
  EXPECT_EQ(r.range_hi_pct, "70.37");
  EXPECT_EQ(r.average_pct, "70.14");
  EXPECT_EQ(r.average, Rational(303, 432));
  EXPECT_EQ(r.average_exact_pct, "70.14");
}

TEST(SimilarityReport, PublishedAverageDifference)
{
  const auto spt = similarity_from_counts(68, 35, 44, 23);
  const auto psg = similarity_from_counts(24, 27, 17, 19);
  const Rational diff = psg.average - spt.average;
  EXPECT_EQ(diff, Rational(303, 432) - Rational(382, 595));
  EXPECT_EQ(render_percent(diff), "5.94");
}

TEST(SimilarityReport, SelfSimilarityIsFull)
{
  const auto n = ms({{"a", 3}, {"b", 1}});
  const auto r = similarity_report(n, n);
  EXPECT_EQ(r.p1, Rational(1));
  EXPECT_EQ(r.p2, Rational(1));
  EXPECT_EQ(r.eta, Rational(0));
  EXPECT_EQ(r.lower, Rational(1));
  EXPECT_EQ(r.average, Rational(1));
  EXPECT_EQ(r.range_lo_pct, "100.00");
  EXPECT_EQ(r.range_hi_pct, "100.00");
  EXPECT_EQ(r.average_pct, "100.00");
}

TEST(SimilarityReport, EmptyInputsGiveZero)
{
  const auto r = similarity_report({}, {});
  EXPECT_EQ(r.n1_card, 0u);
  EXPECT_EQ(r.average, Rational(0));
  EXPECT_EQ(r.average_pct, "0.00");
}

TEST(SimilarityReport, MatchesIndependentOracleOnRandomPairs)
{
  Rng rng(0x5eed0002);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto a = test::random_multiset(rng, 10, 7, 9);
    const auto b = test::random_multiset(rng, 10, 7, 9);
    const auto r = similarity_report(a, b);
    const auto i1 = brute_filter(a, b).size();
    const auto i2 = brute_filter(b, a).size();
    ASSERT_EQ(r.i1_card, i1);
    ASSERT_EQ(r.i2_card, i2);
    const Frac p1 = frac(i1, a.cardinality());
    const Frac p2 = frac(i2, b.cardinality());
    const Frac eta = abs(sub(p1, p2));
    const Frac lo = less(p1, p2) ? p1 : p2;
    const Frac lower = abs(sub(lo, eta));
    const Frac avg = half(add(lower, lo));
    expect_eq(r.p1, p1, "p1");
    expect_eq(r.p2, p2, "p2");
    expect_eq(r.eta, eta, "eta");
    expect_eq(r.lower, lower, "lower");
    expect_eq(r.range_lo, lower, "range_lo");
    expect_eq(r.range_hi, lo, "range_hi");
    expect_eq(r.average, avg, "average");
    if (::testing::Test::HasFailure()) {
      FAIL() << "trial " << trial;
    }
  }
}

TEST(SimilarityReport, SymmetricUnderSwap)
{
  Rng rng(0x5eed0003);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = test::random_multiset(rng, 8, 6, 5);
    const auto b = test::random_multiset(rng, 8, 6, 5);
    const auto ab = similarity_report(a, b);
    const auto ba = similarity_report(b, a);
    ASSERT_EQ(ab.p1, ba.p2);
    ASSERT_EQ(ab.p2, ba.p1);
    ASSERT_EQ(ab.i1_card, ba.i2_card);
    ASSERT_EQ(ab.eta, ba.eta);
    ASSERT_EQ(ab.lower, ba.lower);
    ASSERT_EQ(ab.range_lo, ba.range_lo);
    ASSERT_EQ(ab.range_hi, ba.range_hi);
    ASSERT_EQ(ab.average, ba.average);
    ASSERT_EQ(ab.average_pct, ba.average_pct);
  }
}

TEST(SimilarityReport, SelfAndDisjointOnRandomMultisets)
{
  Rng rng(0x5eed0004);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = test::random_prefixed_multiset(rng, "a");
    const auto b = test::random_prefixed_multiset(rng, "b");
    const auto self = similarity_report(a, a);
    ASSERT_EQ(self.average, Rational(1));
    ASSERT_EQ(self.average_pct, "100.00");
    const auto disjoint = similarity_report(a, b);
    ASSERT_EQ(disjoint.p1, Rational(0));
    ASSERT_EQ(disjoint.p2, Rational(0));
    ASSERT_EQ(disjoint.eta, Rational(0));
    ASSERT_EQ(disjoint.lower, Rational(0));
    ASSERT_EQ(disjoint.average, Rational(0));
    ASSERT_EQ(disjoint.average_pct, "0.00");
  }
}

TEST(SimilarityReport, BoundsHoldWhenEtaWithinMinimum)
{
  Rng rng(0x5eed0005);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto r = similarity_report(
      test::random_multiset(rng, 9, 7, 6), test::random_multiset(rng, 9, 7, 6));
    ASSERT_GE(r.eta, Rational(0));
    ASSERT_LE(r.eta, Rational(1));
    const Rational lo = std::min(r.p1, r.p2);
    if (r.eta <= lo) {
      ASSERT_GE(r.lower, Rational(0));
      ASSERT_LE(r.lower, lo);
      ASSERT_LE(lo, Rational(1));
    }
    ASSERT_EQ(r.average * 2, r.range_lo + r.range_hi);
  }
}
