// psgkit/similarity.hpp - multiset node-overlap similarity
//
//   I1 = N1 filtered by N2,  I2 = N2 filtered by N1
//   P1 = |I1| / |N1|,        P2 = |I2| / |N2|
//   eta = |P1 - P2|
//   L = |min(P1, P2) - eta|
//   R = [L, min(P1, P2)],    A = (L + min(P1, P2)) / 2
//
// All quantities are exact rationals. An empty base yields a percentage of 0.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

#include "psgkit/graph.hpp"

namespace psgkit
{

/// Always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// "n/d", or "n" when the denominator is 1.
std::string to_fraction_string(const Rational & r);

/// 100 * r rounded half away from zero to `decimals` places, e.g. "64.71".
std::string render_percent(const Rational & r, int decimals = 2);

/// Entries of `n1` (at n1's multiplicity) whose label occurs in `n2`.
/// Not symmetric: filter_intersection(a, b) and filter_intersection(b, a)
/// generally differ in cardinality.
LabelMultiset filter_intersection(const LabelMultiset & n1, const LabelMultiset & n2);

/// |i| / |n|; 0 when |n| = 0.
Rational percent_intersection(const LabelMultiset & i, const LabelMultiset & n);
Rational percent_intersection(std::size_t i_card, std::size_t n_card);

Rational percentages_distance(const Rational & p1, const Rational & p2);

Rational lower_bound(const Rational & p1, const Rational & p2, const Rational & eta);

struct SimilarityReport
{
  std::size_t n1_card = 0;
  std::size_t n2_card = 0;
  std::size_t i1_card = 0;
  std::size_t i2_card = 0;
  Rational p1;
  Rational p2;
  Rational eta;
  Rational lower;
  Rational range_lo;
  Rational range_hi;
  Rational average;

  // Two-decimal percentage strings. `average_pct` is the midpoint of the
  // two rendered range bounds, which is how published tables that list
  // R and A side by side stay mutually consistent; `average` above holds
  // the exact value and `average_exact_pct` its direct rendering.
  std::string p1_pct;
  std::string p2_pct;
  std::string eta_pct;
  std::string lower_pct;
  std::string range_lo_pct;
  std::string range_hi_pct;
  std::string average_pct;
  std::string average_exact_pct;

  friend bool operator==(const SimilarityReport &, const SimilarityReport &) = default;
};

/// Steps 2-5 from the four cardinalities alone. Requires i1 <= n1, i2 <= n2.
SimilarityReport similarity_from_counts(
  std::size_t n1_card, std::size_t n2_card, std::size_t i1_card, std::size_t i2_card);

/// Full five-step procedure on two label multisets.
SimilarityReport similarity_report(const LabelMultiset & n1, const LabelMultiset & n2);

}  // namespace psgkit
