#include "psgkit/similarity.hpp"

#include <algorithm>
#include <stdexcept>

namespace psgkit
{

namespace
{

using Wide = __int128;

Wide pow10(int decimals)
{
  Wide p = 1;
  for (int i = 0; i < decimals; ++i) {
    p *= 10;
  }
  return p;
}

// round(100 * r * 10^decimals), half away from zero.
Wide scaled_round(const Rational & r, int decimals)
{
  const Wide num = static_cast<Wide>(r.numerator()) * 100 * pow10(decimals);
  const Wide den = r.denominator();
  const Wide mag = num < 0 ? -num : num;
  const Wide q = (2 * mag + den) / (2 * den);
  return num < 0 ? -q : q;
}

std::string format_scaled(Wide value, int decimals)
{
  const bool negative = value < 0;
  Wide mag = negative ? -value : value;
  const Wide scale = pow10(decimals);
  const Wide whole = mag / scale;
  Wide frac = mag % scale;
  std::string digits;
  Wide w = whole;
  do {
    digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(w % 10)));
    w /= 10;
  } while (w != 0);
  std::string out = (negative ? "-" : "") + digits;
  if (decimals > 0) {
    std::string f(static_cast<std::size_t>(decimals), '0');
    for (int i = decimals - 1; i >= 0; --i) {
      f[static_cast<std::size_t>(i)] = static_cast<char>('0' + static_cast<int>(frac % 10));
      frac /= 10;
    }
    out += "." + f;
  }
  return out;
}

Rational abs_diff(const Rational & a, const Rational & b)
{
  return a > b ? a - b : b - a;
}

}  // namespace

std::string to_fraction_string(const Rational & r)
{
  if (r.denominator() == 1) {
    return std::to_string(r.numerator());
  }
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string render_percent(const Rational & r, int decimals)
{
  if (decimals < 0 || decimals > 12) {
    throw std::invalid_argument("render_percent: decimals out of range");
  }
  return format_scaled(scaled_round(r, decimals), decimals);
}

LabelMultiset filter_intersection(const LabelMultiset & n1, const LabelMultiset & n2)
{
  LabelMultiset out;
  for (const auto & [label, count] : n1.entries()) {
    if (n2.contains(label)) {
      out.add(label, count);
    }
  }
  return out;
}

Rational percent_intersection(std::size_t i_card, std::size_t n_card)
{
  if (n_card == 0) {
    return Rational(0);
  }
  if (i_card > n_card) {
    throw std::invalid_argument("intersection larger than its base multiset");
  }
  return Rational(static_cast<std::int64_t>(i_card), static_cast<std::int64_t>(n_card));
}

Rational percent_intersection(const LabelMultiset & i, const LabelMultiset & n)
{
  return percent_intersection(i.cardinality(), n.cardinality());
}

Rational percentages_distance(const Rational & p1, const Rational & p2)
{
  return abs_diff(p1, p2);
}

Rational lower_bound(const Rational & p1, const Rational & p2, const Rational & eta)
{
  return abs_diff(std::min(p1, p2), eta);
}

SimilarityReport similarity_from_counts(
  std::size_t n1_card, std::size_t n2_card, std::size_t i1_card, std::size_t i2_card)
{
  SimilarityReport r;
  r.n1_card = n1_card;
  r.n2_card = n2_card;
  r.i1_card = i1_card;
  r.i2_card = i2_card;
  r.p1 = percent_intersection(i1_card, n1_card);
  r.p2 = percent_intersection(i2_card, n2_card);
  r.eta = percentages_distance(r.p1, r.p2);
  r.lower = lower_bound(r.p1, r.p2, r.eta);
  r.range_lo = r.lower;
  r.range_hi = std::min(r.p1, r.p2);
  r.average = (r.range_lo + r.range_hi) / 2;

  r.p1_pct = render_percent(r.p1);
  r.p2_pct = render_percent(r.p2);
  r.eta_pct = render_percent(r.eta);
  r.lower_pct = render_percent(r.lower);
  r.range_lo_pct = render_percent(r.range_lo);
  r.range_hi_pct = render_percent(r.range_hi);
  const Wide sum = scaled_round(r.range_lo, 2) + scaled_round(r.range_hi, 2);
  r.average_pct = format_scaled((sum + 1) / 2, 2);
  r.average_exact_pct = render_percent(r.average);
  return r;
}

SimilarityReport similarity_report(const LabelMultiset & n1, const LabelMultiset & n2)
{
  const auto i1 = filter_intersection(n1, n2);
  const auto i2 = filter_intersection(n2, n1);
  return similarity_from_counts(
    n1.cardinality(), n2.cardinality(), i1.cardinality(), i2.cardinality());
}

}  // namespace psgkit
