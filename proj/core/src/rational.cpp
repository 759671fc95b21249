#include "qlogic/rational.hpp"

#include <cctype>

#include "qlogic/error.hpp"

namespace qlogic {

std::string to_string(const Rational& r) { return r.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw Error("malformed rational '" + std::string(text) + "'");
    Integer d{std::string(den)};
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num)), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw Error("malformed decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac));
    value = Rational(num, scale);
  } else {
    if (!all_digits(s)) throw Error("malformed number '" + std::string(text) + "'");
    value = Rational(Integer(std::string(s)));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return;
  for (auto& x : v) x /= g;
}

IntVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(Integer(x.get_num() * (l / x.get_den())));
  make_primitive(out);
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace qlogic
