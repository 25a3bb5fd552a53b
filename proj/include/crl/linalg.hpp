#pragma once

// Dense exact linear algebra over Q, elimination over word-size prime
// fields, and a certified nullspace: modular kernel, lifted by CRT and
// rational reconstruction, then checked exactly against the input.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "crl/arith.hpp"

namespace crl::linalg {

using RationalRow = std::vector<Rational>;
using RationalMatrix = std::vector<RationalRow>;
using IntegerRow = std::vector<Integer>;
using IntegerMatrix = std::vector<IntegerRow>;

struct Echelon {
  RationalMatrix rows;               // nonzero rows of the reduced row-echelon form
  std::vector<std::size_t> pivots;   // pivot column of each row
  std::size_t cols = 0;

  std::size_t rank() const { return rows.size(); }
};

// Reduced row-echelon form. Every row must have `cols` entries.
Echelon rref(RationalMatrix m, std::size_t cols);

// Basis of {v : M v = 0}, itself in reduced row-echelon form (canonical).
RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols);
RationalMatrix nullspace(const Echelon& e);

std::size_t rank(const RationalMatrix& m, std::size_t cols);

// Scales v to a primitive integer vector whose first nonzero entry is positive.
std::vector<Integer> primitive_integer_vector(const RationalRow& v);

struct ModularEchelon {
  std::uint32_t prime = 0;
  std::vector<std::vector<std::uint32_t>> rows;  // reduced row-echelon form mod p
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> independent_rows;     // input rows that raised the rank, in order
  std::size_t cols = 0;

  std::size_t rank() const { return rows.size(); }
};

// Gaussian elimination over Z/p; p must be an odd prime below 2^31.
ModularEchelon rref_mod_p(const IntegerMatrix& m, std::size_t cols, std::uint32_t p);
std::size_t rank_mod_p(const IntegerMatrix& m, std::size_t cols, std::uint32_t p);

// Integer r/s with r = s a (mod n), |r|, s <= sqrt(n/2); false if none exists.
bool rational_reconstruct(const Integer& a, const Integer& n, Rational& out);

struct CertifiedKernel {
  RationalMatrix basis;       // reduced row-echelon form
  std::size_t rank = 0;
  std::size_t modular_rank = 0;
  std::size_t primes_used = 0;
  bool certified = false;     // basis verified exactly: M v = 0 and dim = cols - rank
  bool exact_fallback = false;
};

// Kernel of M over Q. Primes beyond `primes` are generated as needed; after
// `max_primes` the computation falls back to exact elimination over Q.
CertifiedKernel certified_nullspace(const IntegerMatrix& m, std::size_t cols,
                                    const std::vector<std::uint32_t>& primes,
                                    std::size_t max_primes = 64);

// M v over Z for an integer vector v.
IntegerRow multiply(const IntegerMatrix& m, const std::vector<Integer>& v);

RationalMatrix to_rational(const IntegerMatrix& m);

}  // namespace crl::linalg
