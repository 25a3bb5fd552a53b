#pragma once

// Ground truth for (I_X)_m: the kernel of the substitution map
//   C[a_0..a_d]_m -> C[g], a_j -> q_j(g),
// where q_j is the coefficient of x^j y^(d-j) in prod_r G_r(x, y)^r and
// G_r = sum_k g_{r,k} x^k y^(e_r - k). The map preserves the torus weight
// (weight(a_j) = 2j - d, weight(g_{r,k}) = 2k - e_r), so the kernel is
// computed one weight block at a time and its character read off from the
// block dimensions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crl/charring.hpp"
#include "crl/linalg.hpp"
#include "crl/partitions.hpp"
#include "crl/polyring.hpp"

namespace crl {

struct SubstitutionMap {
  Partition lambda;
  VarSetPtr params;                    // g{r}_{k}, ordered by r then k
  std::vector<MultiPoly> images;       // q_0..q_d over params
  std::vector<int> param_weights;      // 2k - e_r per parameter
  std::map<int, std::vector<std::size_t>> blocks;  // r -> parameter indices

  int degree() const { return lambda.degree(); }
};

// Expands prod_r G_r^r and checks that each q_j has degree r in every block
// and weight 2j - d. Violations throw InconsistencyError.
SubstitutionMap build_parameterization(const Partition& lambda);

// Name of the parameter g_{r,k}.
std::string param_name(int r, int k);

struct KernelOptions {
  std::size_t max_ambient_dim = 5000;
  std::vector<std::uint32_t> modular_primes{2147483647u, 2147483629u, 2147483587u};
  bool keep_basis = true;
};

struct WeightBlock {
  int weight = 0;
  std::vector<std::size_t> columns;      // indices into GradedPiece::monomials
  std::size_t image_rows = 0;            // parameter monomials of this weight
  std::size_t rank = 0;
  std::size_t modular_rank = 0;
  linalg::RationalMatrix kernel;         // RREF basis over `columns`
  std::size_t kernel_dim = 0;
};

struct GradedPiece {
  Partition lambda;
  int m = 0;
  std::vector<Exponents> monomials;      // degree-m monomials in a_0..a_d
  std::vector<WeightBlock> blocks;       // increasing weight
  bool certified = false;                // exact confirmation passed in every block

  std::size_t dim_ambient() const { return monomials.size(); }
  std::size_t dim_ideal() const;
  std::map<int, std::size_t> kernel_weight_dims() const;
  const WeightBlock* block(int weight) const;
};

int monomial_weight(const Exponents& a_exponents, int d);

// All exponent vectors of total degree m in nvars variables, lex-descending.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int m);

GradedPiece graded_piece_kernel(const Partition& lambda, int m, const KernelOptions& options = {});

// Character from the weight-block kernel dimensions. Throws
// InconsistencyError if the blocks are not symmetric or a multiplicity is
// negative.
Character kernel_character(const GradedPiece& piece);
Character kernel_character(const Partition& lambda, int m, const KernelOptions& options = {});

// Kernel basis vectors as polynomials in a_0..a_d.
std::vector<MultiPoly> kernel_polynomials(const GradedPiece& piece);
VarSetPtr coefficient_vars(int d);

// dim (I_m) - dim (a_0..a_d) * I_(m-1), for m = 1..m_max.
std::map<int, std::size_t> minimal_generators_by_degree(const Partition& lambda, int m_max,
                                                        const KernelOptions& options = {});
// Same, reusing pieces computed for consecutive degrees.
std::size_t new_generators(const GradedPiece& lower, const GradedPiece& upper);

std::size_t hilbert_function(const Partition& lambda, int m, const KernelOptions& options = {});

struct GradedPieceReport {
  Partition lambda;
  int m = 0;
  std::size_t dim_ideal = 0;
  Character character;
  std::size_t dim_ambient = 0;
  std::optional<std::size_t> minimal_generators;
  std::size_t hilbert_value = 0;
  bool certified = false;
};

GradedPieceReport make_report(const GradedPiece& piece, const GradedPiece* lower = nullptr);
nlohmann::json to_json(const GradedPieceReport& r);

// ---------------------------------------------------------------------------
// Groebner elimination cross-check.

struct GroebnerOptions {
  double timeout_s = 120.0;
  std::size_t max_basis_size = 20000;
};

struct GroebnerResult {
  Partition lambda;
  bool completed = false;
  std::string status;
  std::vector<MultiPoly> generators;  // homogeneous in a_0..a_d
  std::size_t basis_size = 0;         // size of the full elimination basis
};

// Buchberger on the graph ideal (a_j - q_j(u)) in the monic chart a_0 = 1,
// with parameters eliminated by a block order (grevlex on the parameters,
// then grevlex on a_1..a_d), followed by homogenization with a_0. Running
// out of budget is reported in the result, not thrown.
GroebnerResult groebner_eliminate(const Partition& lambda, const GroebnerOptions& options = {});

// dim of the degree-m part of the ideal generated by homogeneous polynomials.
std::size_t ideal_dimension_in_degree(const std::vector<MultiPoly>& generators, int d, int m);

nlohmann::json to_json(const GroebnerResult& g);

}  // namespace crl
