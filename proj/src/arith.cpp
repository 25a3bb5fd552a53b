#include "crl/arith.hpp"

#include "crl/error.hpp"

namespace crl {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(long n) {
  if (n < 0) throw ValidationError("factorial of a negative integer");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const Integer& z) { return z.get_str(); }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw ValidationError("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

}  // namespace crl
