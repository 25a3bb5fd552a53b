#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace crl {

using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(long n, long k);
Integer factorial(long n);

// Canonical text form: "3", "-3/2".
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Throws ValidationError when the value does not fit.
std::int64_t to_int64(const Integer& z);

}  // namespace crl
