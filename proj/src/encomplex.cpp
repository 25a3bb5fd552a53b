#include "crl/encomplex.hpp"

#include "crl/error.hpp"

namespace crl {

std::pair<int, int> complex_index_range(const Partition& lambda) {
  const int n = lambda.num_parts();
  return {n + 1 - lambda.degree(), n + 1 - lambda.cohomology_threshold()};
}

int z_value(const Partition& lambda, int alpha, int r) {
  return r * alpha + r - lambda.exponent(r) - 1;
}

Character m_alpha_char(const Partition& lambda, int alpha) {
  Character out = Character::trivial();
  for (const auto& [r, e] : lambda.exponents()) {
    const int z = z_value(lambda, alpha, r);
    if (z < 0) return {};
    out = tensor(out, plethysm_sym_sym(z, e));
  }
  return out;
}

TermDescriptor q_term(const Partition& lambda, int m, int alpha, int p) {
  if (m < 0) throw ValidationError("twist m must be nonnegative");
  const int n = lambda.num_parts();
  const int d = lambda.degree();
  TermDescriptor t;
  t.twist = m;
  t.index = p;
  t.alpha = alpha;
  for (const auto& [r, e] : lambda.exponents()) t.z_values[r] = z_value(lambda, alpha, r);
  t.sym_exponent = m + p + alpha - n - 1;
  t.wedge_index = n + 2 - p;

  if (t.sym_exponent < 0 || t.wedge_index < 0 || t.wedge_index > d + 1) return t;
  Character ma = m_alpha_char(lambda, alpha);
  if (ma.is_zero()) return t;
  t.character = tensor(tensor(ma, plethysm_sym_sym(t.sym_exponent, d)), wedge_sym(t.wedge_index, d));
  return t;
}

Character q_term_char(const Partition& lambda, int m, int alpha, int p) {
  return q_term(lambda, m, alpha, p).character;
}

Character h0_gp_char(const Partition& lambda, int m, int p) {
  const auto [lo, hi] = complex_index_range(lambda);
  Character out;
  if (p < lo || p > hi) return out;
  const int n = lambda.num_parts();
  for (int alpha = lambda.cohomology_threshold() - 1; alpha <= n - p; ++alpha)
    out += q_term_char(lambda, m, alpha, p);
  return out;
}

std::vector<TermDescriptor> complex_terms(const Partition& lambda, int m) {
  const auto [lo, hi] = complex_index_range(lambda);
  const int n = lambda.num_parts();
  std::vector<TermDescriptor> out;
  for (int p = lo; p <= hi; ++p) {
    for (int alpha = lambda.cohomology_threshold() - 1; alpha <= n - p; ++alpha) {
      TermDescriptor t = q_term(lambda, m, alpha, p);
      if (!t.is_zero()) out.push_back(std::move(t));
    }
  }
  return out;
}

Character euler_h0_char(const Partition& lambda, int m) {
  const auto [lo, hi] = complex_index_range(lambda);
  Character out;
  for (int p = lo; p <= hi; ++p) {
    const Character h = h0_gp_char(lambda, m, p);
    if (p % 2 == 0)
      out += h;
    else
      out -= h;
  }
  return out;
}

namespace {

Character sym(int k) { return k < 0 ? Character{} : Character::irreducible(k); }

}  // namespace

bool d_sheaf_supported(const Partition& lambda) {
  const auto parts = lambda.parts();
  if (parts.size() == 1) return true;
  if (parts.size() == 2 && parts[0] != parts[1]) return true;
  return parts == std::vector<int>{3, 3} || parts == std::vector<int>{3, 2, 2};
}

Character d_sheaf_char(const Partition& lambda, int m) {
  if (m < 0) throw ValidationError("twist m must be nonnegative");
  const auto parts = lambda.parts();
  const int d = lambda.degree();
  // f_(d) is an isomorphism onto the rational normal curve.
  if (parts.size() == 1) return {};
  if (parts.size() == 2 && parts[0] != parts[1]) return sym(d * m - 2);
  if (parts == std::vector<int>{3, 3}) return {};
  if (parts == std::vector<int>{3, 2, 2}) {
    Character out;
    if (5 * m - 3 >= 0 && 2 * m - 1 >= 0) out += cg_tensor(5 * m - 3, 2 * m - 1);
    return out + sym(7 * m - 2);
  }
  throw UnsupportedError("unknown D: the cokernel sheaf is not known for lambda = " + lambda.to_string());
}

IdealPrediction predict_ideal(const Partition& lambda, int m) {
  IdealPrediction out{lambda, m, complex_terms(lambda, m), {}, {}, {}, prediction_assumptions()};
  for (const auto& t : out.terms) {
    if (t.index % 2 == 0)
      out.euler += t.character;
    else
      out.euler -= t.character;
  }
  out.d_correction = d_sheaf_char(lambda, m);
  out.predicted = out.euler + out.d_correction;
  if (!out.predicted.is_nonnegative())
    throw InconsistencyError("predicted (I_X)_" + std::to_string(m) + " for " + lambda.to_string() +
                             " is virtual (" + out.predicted.to_string() +
                             "); the vanishing assumptions fail for this twist");
  return out;
}

Character predicted_ideal_char(const Partition& lambda, int m) { return predict_ideal(lambda, m).predicted; }

Character syzygy_char_step(const Partition& lambda, int m,
                           const std::vector<std::pair<int, Character>>& known_generators) {
  Character free_part;
  for (const auto& [deg, gens] : known_generators) {
    if (deg > m) continue;
    free_part += tensor(plethysm_sym_sym(m - deg, lambda.degree()), gens);
  }
  Character out = free_part - predicted_ideal_char(lambda, m);
  if (!out.is_nonnegative())
    throw InconsistencyError("syzygy character in degree " + std::to_string(m) + " is virtual (" +
                             out.to_string() + "); the exactness assumptions fail");
  return out;
}

nlohmann::json to_json(const TermDescriptor& t) {
  nlohmann::json z = nlohmann::json::object();
  for (const auto& [r, v] : t.z_values) z[std::to_string(r)] = v;
  return {{"m", t.twist},           {"p", t.index},
          {"alpha", t.alpha},       {"z_values", z},
          {"sym_exponent", t.sym_exponent}, {"wedge_index", t.wedge_index},
          {"character", to_json(t.character)}};
}

nlohmann::json to_json(const IdealPrediction& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : p.terms) terms.push_back(to_json(t));
  return {{"partition", to_json(p.lambda)},
          {"m", p.twist},
          {"terms", terms},
          {"euler", to_json(p.euler)},
          {"d_correction", to_json(p.d_correction)},
          {"predicted", to_json(p.predicted)},
          {"assumptions", p.assumptions},
          {"method", "complex-prediction"}};
}

}  // namespace crl
