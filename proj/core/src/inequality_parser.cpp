#include <cctype>
#include <string>

#include "qlogic/error.hpp"
#include "qlogic/geometry.hpp"

namespace qlogic {

namespace {

struct Side {
  RatVector coefficients;
  Rational constant = 0;
};

std::size_t resolve(const std::string& name, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == name) return i;
  std::size_t k = 0;
  while (k < name.size() && std::isalpha(static_cast<unsigned char>(name[k]))) ++k;
  if (k > 0 && k < name.size()) {
    bool digits = true;
    for (std::size_t j = k; j < name.size(); ++j) digits = digits && std::isdigit(static_cast<unsigned char>(name[j]));
    if (digits && name.size() - k < 9) {
      const std::size_t n = std::stoul(name.substr(k));
      if (n >= 1 && n <= labels.size()) return n - 1;
    }
  }
  throw Error("inequality: unknown variable '" + name + "'");
}

void add_term(Side& side, const std::string& term, int sign, const std::vector<std::string>& labels) {
  if (term.empty()) throw Error("inequality: empty term");
  std::string coef, var;
  if (auto star = term.find('*'); star != std::string::npos) {
    coef = term.substr(0, star);
    var = term.substr(star + 1);
    if (coef.empty() || var.empty()) throw Error("inequality: malformed term '" + term + "'");
  } else {
    bool is_label = false;
    for (const auto& l : labels) is_label = is_label || l == term;
    std::size_t k = 0;
    if (!is_label)
      while (k < term.size() && (std::isdigit(static_cast<unsigned char>(term[k])) || term[k] == '.' || term[k] == '/')) ++k;
    coef = term.substr(0, k);
    var = term.substr(k);
  }
  Rational c = 1;
  if (!coef.empty()) {
    try {
      c = parse_rational(coef);
    } catch (const Error&) {
      throw Error("inequality: bad coefficient '" + coef + "'");
    }
  }
  c *= sign;
  if (var.empty())
    side.constant += c;
  else
    side.coefficients[resolve(var, labels)] += c;
}

Side parse_side(const std::string& text, const std::vector<std::string>& labels) {
  Side side;
  side.coefficients.assign(labels.size(), Rational(0));
  std::string term;
  int sign = 1;
  bool pending = false;  // a sign was read and still needs a term
  for (std::size_t i = 0; i <= text.size(); ++i) {
    const char ch = i < text.size() ? text[i] : '\0';
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '+' || ch == '-' || ch == '\0') {
      if (!term.empty()) {
        add_term(side, term, sign, labels);
        term.clear();
        pending = false;
      } else if (pending) {
        throw Error("inequality: missing term");
      }
      if (ch == '\0') break;
      sign = ch == '-' ? -1 : 1;
      pending = true;
      continue;
    }
    term += ch;
  }
  return side;
}

}  // namespace

Inequality parse_inequality(std::string_view text, const std::vector<std::string>& labels) {
  std::string s(text);
  for (auto [from, to] : {std::pair<std::string, std::string>{"≥", ">="}, {"≤", "<="}}) {
    for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from)) s.replace(pos, from.size(), to);
  }
  auto ge = s.find(">=");
  auto le = s.find("<=");
  if ((ge == std::string::npos) == (le == std::string::npos))
    throw Error("inequality: expected exactly one of >= or <=");
  const bool greater = ge != std::string::npos;
  const std::size_t at = greater ? ge : le;
  if (s.find(">=", at + 2) != std::string::npos || s.find("<=", at + 2) != std::string::npos)
    throw Error("inequality: expected exactly one of >= or <=");
  const std::string left = s.substr(0, at);
  const std::string right = s.substr(at + 2);
  if (left.find_first_not_of(" \t") == std::string::npos || right.find_first_not_of(" \t") == std::string::npos)
    throw Error("inequality: empty side");
  Side l = parse_side(left, labels);
  Side r = parse_side(right, labels);
  if (!greater) std::swap(l, r);
  RatVector c(labels.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = l.coefficients[i] - r.coefficients[i];
  return Inequality::from_rational(c, r.constant - l.constant);
}

}  // namespace qlogic
