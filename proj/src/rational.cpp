#include "djc/rational.hpp"

#include <cctype>

#include "djc/error.hpp"

namespace djc {

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorCode::Parse, "bad number '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  Rational out;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) bad_number(text);
    out = Rational(n, d);
    out.canonicalize();
  } else {
    std::string_view mant = body;
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      mant = body.substr(0, e);
      auto ex = body.substr(e + 1);
      bool eneg = false;
      if (!ex.empty() && (ex[0] == '-' || ex[0] == '+')) {
        eneg = ex[0] == '-';
        ex.remove_prefix(1);
      }
      if (!all_digits(ex) || ex.size() > 6) bad_number(text);
      exponent = std::stol(std::string(ex));
      if (eneg) exponent = -exponent;
    }
    std::string digits;
    long scale = 0;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) {
      auto ip = mant.substr(0, dot), fp = mant.substr(dot + 1);
      if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
        bad_number(text);
      digits = std::string(ip) + std::string(fp);
      scale = static_cast<long>(fp.size());
    } else {
      if (!all_digits(mant)) bad_number(text);
      digits = std::string(mant);
    }
    mpz_class n(digits);
    const long shift = exponent - scale;
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    out = shift >= 0 ? Rational(n * ten_pow) : Rational(n, ten_pow);
    out.canonicalize();
  }
  return negative ? Rational(-out) : out;
}

std::string format_rational(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int orientation(const Point2& a, const Point2& b, const Point2& c) {
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return sgn(v);
}

Rational squared_distance(const Point2& a, const Point2& b) {
  Rational dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool strictly_inside_segment(const Point2& p, const Point2& a, const Point2& b) {
  return on_segment(p, a, b) && !(p == a) && !(p == b);
}

bool proper_intersection(const Point2& a, const Point2& b, const Point2& c, const Point2& d, Point2* at) {
  const int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
  if (o1 == 0 || o2 == 0 || o3 == 0 || o4 == 0) return false;
  if (o1 == o2 || o3 == o4) return false;
  if (at) {
    // a + t (b - a) with t = ((c - a) x (d - c)) / ((b - a) x (d - c))
    Rational rx = b.x - a.x, ry = b.y - a.y, sx = d.x - c.x, sy = d.y - c.y;
    Rational denom = rx * sy - ry * sx;
    Rational t = ((c.x - a.x) * sy - (c.y - a.y) * sx) / denom;
    at->x = a.x + t * rx;
    at->y = a.y + t * ry;
  }
  return true;
}

bool segments_touch(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
  if (proper_intersection(a, b, c, d, nullptr)) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

}  // namespace djc
