#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace qlogic {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// "p/q" or "p"; always canonical (lowest terms, positive denominator).
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q" or a finite decimal like "0.25".
Rational parse_rational(std::string_view text);

/// Scales `v` by the lcm of its denominators and divides by the gcd of the
/// numerators, so the result is a primitive integer vector with the same
/// direction. The zero vector maps to the zero vector.
IntVector primitive_integer(const RatVector& v);

/// Divides by the gcd of all entries (no-op on the zero vector).
void make_primitive(IntVector& v);

RatVector to_rational(const IntVector& v);

}  // namespace qlogic
