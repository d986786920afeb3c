#pragma once

#include <gmpxx.h>

#include <string>

namespace ecg {

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator; zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const std::string& num, const std::string& den = "1");
std::string rational_to_string(const Rational& q);
std::string numerator_string(const Rational& q);
std::string denominator_string(const Rational& q);

}  // namespace ecg
