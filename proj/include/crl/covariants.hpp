#pragma once

// Covariants of the generic binary form F = sum binom(d,j) a_j x^j y^(d-j):
// transvectants by the Omega process, the named covariants, expression
// parsing, and exact vanishing tests on the parameterized loci.

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "crl/arith.hpp"
#include "crl/partitions.hpp"
#include "crl/polyring.hpp"

namespace crl {

// a0..ad, x, y.
VarSetPtr covariant_vars(int d);

struct CovariantExpr {
  int d = 0;
  int p = 0;  // degree in a_0..a_d
  int q = 0;  // order in x, y
  MultiPoly body;
  std::string label;

  CovariantExpr(int d, int p, int q, MultiPoly body, std::string label);

  // Throws InconsistencyError unless the body is bihomogeneous of type (p, q).
  void check_type() const;
  bool is_zero() const { return body.is_zero(); }
};

CovariantExpr generic_form(int d);
CovariantExpr constant_covariant(int d, const Rational& c);

// ((q1-r)!(q2-r)!)/(q1!q2!) sum_i (-1)^i binom(r,i) d^r A/dx^(r-i)dy^i * d^r B/dx^i dy^(r-i).
CovariantExpr transvectant(const CovariantExpr& a, const CovariantExpr& b, int r);

CovariantExpr operator*(const CovariantExpr& a, const CovariantExpr& b);
CovariantExpr operator*(const Rational& c, const CovariantExpr& a);
// Sums need equal types (or a zero summand).
CovariantExpr operator+(const CovariantExpr& a, const CovariantExpr& b);
CovariantExpr operator-(const CovariantExpr& a, const CovariantExpr& b);

// F; H = (F,F)^2 for d >= 2; i = (F,F)^4 for d >= 4; A = (i,i)^2 for d >= 5;
// FF6 = (F,F)^6 for d >= 6.
std::map<std::string, CovariantExpr> named_covariants(int d);

// Names, integers, + - *, '.' as a product, ^ for powers, T(a,b,r) and
// (a,b)^r for transvectants ((a,b) alone is r = 1):
//   "25*H^2 - 6*i*F^2", "5*i.H + 6*F.(i,F)^2", "T(F,H,1)".
CovariantExpr parse_covariant(std::string_view text, int d);

// Every coefficient of x^k y^(q-k) is nonzero and the body has torus weight
// zero (a_j of weight 2j - d, x of weight -1, y of weight 1).
bool has_irreducible_weight_profile(const CovariantExpr& c);

// The covariant evaluated on F = prod_r G_r^r with symbolic G_r.
MultiPoly substitute_on_locus(const CovariantExpr& c, const Partition& lambda);
bool vanishes_on_locus(const CovariantExpr& c, const Partition& lambda);

// Basis of the integer relations sum c_i basis_i = 0 on the locus, each a
// primitive vector with positive first nonzero entry.
std::vector<std::vector<Integer>> calibrate_combination(const std::vector<CovariantExpr>& basis,
                                                        const Partition& lambda);

struct CriterionCovariant {
  std::string text;
  int order = 0;  // order listed in the table
  CovariantExpr expr;
};

struct CriterionEntry {
  int m = 0;
  std::vector<CriterionCovariant> covariants;
};

// The minimal generators by degree for two-part partitions with 4 <= d <= 6.
// Throws ValidationError for pairs outside the table.
std::vector<CriterionEntry> criterion_table(int d, const Partition& lambda);
std::vector<std::pair<int, Partition>> criterion_table_keys();

nlohmann::json to_json(const CovariantExpr& c);

}  // namespace crl
