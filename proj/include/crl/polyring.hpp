#pragma once

// Exact multivariate polynomials over Q, binary forms, Sylvester resultants
// and discriminants.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crl/arith.hpp"

namespace crl {

// Ordered list of variable names; polynomials over different variable sets
// never mix implicitly.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> find(std::string_view name) const;
  // Throws ValidationError for an unknown name.
  std::size_t index(std::string_view name) const;

  bool operator==(const VarSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;
VarSetPtr make_vars(std::vector<std::string> names);

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic order, larger monomials first.
struct DegLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, DegLexGreater>;

  explicit MultiPoly(VarSetPtr vars);

  static MultiPoly constant(VarSetPtr vars, const Rational& c);
  static MultiPoly variable(VarSetPtr vars, std::string_view name);
  static MultiPoly variable(VarSetPtr vars, std::size_t index);
  static MultiPoly monomial(VarSetPtr vars, Exponents exps, const Rational& c = 1);

  const VarSetPtr& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  // Homogeneous of the given degree in the listed variables (ignoring others).
  bool is_homogeneous_in(std::span<const std::size_t> block, int degree) const;

  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned k) const;
  MultiPoly derivative(std::size_t var, unsigned times = 1) const;
  MultiPoly derivative(std::string_view var, unsigned times = 1) const;
  MultiPoly substitute(std::size_t var, const MultiPoly& value) const;
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;

  // Ring homomorphism sending variable i to images[i]; all images must share
  // the target variable set.
  MultiPoly compose(std::span<const MultiPoly> images, const VarSetPtr& target) const;
  // Same polynomial over a variable set containing every variable used here.
  MultiPoly embed(const VarSetPtr& target) const;

  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const MultiPoly& o) const;

  std::string to_string() const;

 private:
  void require_same_vars(const MultiPoly& o) const;

  VarSetPtr vars_;
  TermMap terms_;
};

// Grammar: sums/differences of products of rationals, identifiers, and
// parenthesized expressions, with nonnegative integer powers:
//   "3/2*x^2*y - a1*x*y^2"
MultiPoly parse_poly(std::string_view text, const VarSetPtr& vars);
// Variables are collected in order of first appearance.
MultiPoly parse_poly(std::string_view text);

nlohmann::json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j);

enum class Convention {
  Plain,     // F = sum c_k x^k y^(q-k)
  Binomial,  // F = sum binom(q,k) a_k x^k y^(q-k)
};

// A form of degree q in x, y whose q+1 coefficients are polynomials in
// auxiliary variables.
class BinaryForm {
 public:
  BinaryForm(std::vector<MultiPoly> coeffs, Convention convention);

  // Reads the coefficients of x^k y^(q-k) from an expanded polynomial.
  static BinaryForm from_poly(const MultiPoly& p, std::size_t x, std::size_t y, int degree,
                              Convention convention = Convention::Plain);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Convention convention() const { return convention_; }
  const std::vector<MultiPoly>& coefficients() const { return coeffs_; }
  const VarSetPtr& vars() const { return coeffs_.front().vars(); }

  // Coefficient of x^k y^(q-k) in the expanded form.
  MultiPoly plain_coefficient(int k) const;
  BinaryForm to_plain() const;
  BinaryForm to_binomial() const;

  MultiPoly expand(std::size_t x, std::size_t y) const;

  BinaryForm derivative_x() const;
  BinaryForm derivative_y() const;

 private:
  std::vector<MultiPoly> coeffs_;
  Convention convention_;
};

// Determinant of the (m+n)x(m+n) Sylvester matrix: n rows of A's coefficients
// in descending powers of x, then m rows of B's, each shifted one column.
MultiPoly sylvester_resultant(const BinaryForm& a, const BinaryForm& b);

// Resultant of dF/dx and dF/dy.
MultiPoly discriminant(const BinaryForm& f);

// Determinant of a square matrix of polynomials by row expansion with
// memoized column subsets. Intended for n <= ~16.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, const VarSetPtr& vars);

}  // namespace crl
