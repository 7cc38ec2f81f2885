#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace djc {

using Rational = mpq_class;

struct Point2 {
  Rational x;
  Rational y;
  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

/// Accepts "n", "n/d", and finite decimals such as "-1.25" or "3e-2",
/// converted exactly. Throws Parse.
Rational parse_rational(std::string_view text);
/// "n" for integers, "n/d" otherwise, always in lowest terms.
std::string format_rational(const Rational& r);

/// Sign of the cross product (b - a) x (c - a).
int orientation(const Point2& a, const Point2& b, const Point2& c);
Rational squared_distance(const Point2& a, const Point2& b);

/// p on the closed segment ab.
bool on_segment(const Point2& p, const Point2& a, const Point2& b);
/// p on the segment ab, excluding both endpoints.
bool strictly_inside_segment(const Point2& p, const Point2& a, const Point2& b);

/// True iff the open segments ab and cd cross at a single point interior to
/// both; writes the point to `at`.
bool proper_intersection(const Point2& a, const Point2& b, const Point2& c, const Point2& d, Point2* at);
/// True iff the closed segments share at least one point.
bool segments_touch(const Point2& a, const Point2& b, const Point2& c, const Point2& d);

}  // namespace djc
