#pragma once

// Characters of the global sections of the twisted complex G(m) built from
// the n-th row of the Eagon-Northcott spectral sequence, and the resulting
// prediction of the graded pieces (I_X)_m.
//
// Indices follow the shifted complex: G^p is nonzero only for
// n+1-d <= p <= n+1-M, and H^0(G^p(m)) = sum over M-1 <= alpha <= n-p of
//   Q(alpha, p) = M(alpha) (x) Sym^(m+p+alpha-n-1)(Sym^d) (x) wedge^(n+2-p)(Sym^d),
//   M(alpha)    = (x)_r Sym^z(alpha,r)(Sym^e_r),  z(alpha, r) = r alpha + r - e_r - 1.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "crl/charring.hpp"
#include "crl/partitions.hpp"

namespace crl {

struct TermDescriptor {
  int twist = 0;      // m
  int index = 0;      // p
  int alpha = 0;
  std::map<int, int> z_values;  // r -> z(alpha, r)
  int sym_exponent = 0;         // m + p + alpha - n - 1
  int wedge_index = 0;          // n + 2 - p
  Character character;

  bool is_zero() const { return character.is_zero(); }
};

nlohmann::json to_json(const TermDescriptor& t);

// Inclusive range of p where G^p can be nonzero.
std::pair<int, int> complex_index_range(const Partition& lambda);

int z_value(const Partition& lambda, int alpha, int r);

Character m_alpha_char(const Partition& lambda, int alpha);

TermDescriptor q_term(const Partition& lambda, int m, int alpha, int p);
Character q_term_char(const Partition& lambda, int m, int alpha, int p);

// H^0(P^d, G^p(m)).
Character h0_gp_char(const Partition& lambda, int m, int p);

// Every nonzero Q(alpha, p) for this twist.
std::vector<TermDescriptor> complex_terms(const Partition& lambda, int m);

// sum_p (-1)^p chi(H^0(G^p(m))), a virtual character.
Character euler_h0_char(const Partition& lambda, int m);

// True for the partitions whose D-correction is known: one part, two
// distinct parts, (3,3), (3,2,2).
bool d_sheaf_supported(const Partition& lambda);

// chi(H^0(P^d, D(m))). Throws UnsupportedError for other partitions.
Character d_sheaf_char(const Partition& lambda, int m);

inline const std::vector<std::string>& prediction_assumptions() {
  static const std::vector<std::string> kAssumptions{"H1_IX_vanishes", "H1_OX_vanishes"};
  return kAssumptions;
}

struct IdealPrediction {
  Partition lambda;
  int twist;
  std::vector<TermDescriptor> terms;
  Character euler;
  Character d_correction;
  Character predicted;
  std::vector<std::string> assumptions;
};

nlohmann::json to_json(const IdealPrediction& p);

// euler + D-correction, assuming H^1(I_X(m)) = H^1(O_X(m)) = 0. Throws
// InconsistencyError if the result is virtual (an assumption fails).
IdealPrediction predict_ideal(const Partition& lambda, int m);
Character predicted_ideal_char(const Partition& lambda, int m);

// Character of the next syzygy module in degree m: the degree-m part of the
// free module on the known generators, minus the predicted (I_X)_m.
Character syzygy_char_step(const Partition& lambda, int m,
                           const std::vector<std::pair<int, Character>>& known_generators);

}  // namespace crl
