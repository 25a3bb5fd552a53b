#include "crl/ideal_la.hpp"

#include <algorithm>
#include <bit>
#include <type_traits>
#include <unordered_map>

#include "crl/error.hpp"

namespace crl {

std::string param_name(int r, int k) { return "g" + std::to_string(r) + "_" + std::to_string(k); }

VarSetPtr coefficient_vars(int d) {
  std::vector<std::string> names;
  for (int j = 0; j <= d; ++j) names.push_back("a" + std::to_string(j));
  return make_vars(std::move(names));
}

SubstitutionMap build_parameterization(const Partition& lambda) {
  SubstitutionMap s{lambda, nullptr, {}, {}, {}};
  std::vector<std::string> names;
  for (const auto& [r, e] : lambda.exponents()) {
    for (int k = 0; k <= e; ++k) {
      s.blocks[r].push_back(names.size());
      s.param_weights.push_back(2 * k - e);
      names.push_back(param_name(r, k));
    }
  }
  const std::size_t nparams = names.size();
  s.params = make_vars(names);
  names.push_back("x");
  names.push_back("y");
  const VarSetPtr ring = make_vars(names);
  const std::size_t x = nparams;
  const std::size_t y = nparams + 1;

  MultiPoly f = MultiPoly::constant(ring, 1);
  for (const auto& [r, e] : lambda.exponents()) {
    MultiPoly g(ring);
    for (int k = 0; k <= e; ++k) {
      Exponents ex(ring->size(), 0);
      ex[s.blocks[r][k]] = 1;
      ex[x] = k;
      ex[y] = e - k;
      g.add_term(ex, 1);
    }
    f *= g.pow(static_cast<unsigned>(r));
  }

  const int d = lambda.degree();
  s.images.assign(d + 1, MultiPoly(s.params));
  for (const auto& [ex, c] : f.terms()) {
    if (ex[x] + ex[y] != d) throw InconsistencyError("parameterization is not a form of degree d");
    s.images[ex[x]].add_term(Exponents(ex.begin(), ex.begin() + nparams), c);
  }

  for (int j = 0; j <= d; ++j) {
    const MultiPoly& q = s.images[j];
    for (const auto& [r, idx] : s.blocks)
      if (!q.is_homogeneous_in(idx, r))
        throw InconsistencyError("q_" + std::to_string(j) + " is not of degree " + std::to_string(r) +
                                 " in the G_" + std::to_string(r) + " coefficients");
    for (const auto& [ex, c] : q.terms()) {
      int w = 0;
      for (std::size_t i = 0; i < nparams; ++i) w += ex[i] * s.param_weights[i];
      if (w != 2 * j - d) throw InconsistencyError("q_" + std::to_string(j) + " is not of weight 2j - d");
    }
  }
  return s;
}

int monomial_weight(const Exponents& a, int d) {
  int w = 0;
  for (std::size_t j = 0; j < a.size(); ++j) w += a[j] * (2 * static_cast<int>(j) - d);
  return w;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int m) {
  std::vector<Exponents> out;
  if (nvars == 0 || m < 0) return out;
  Exponents cur(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int c = left; c >= 0; --c) {
      cur[i] = c;
      self(self, i + 1, left - c);
    }
    cur[i] = 0;
  };
  rec(rec, 0, m);
  return out;
}

std::size_t GradedPiece::dim_ideal() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.kernel_dim;
  return n;
}

std::map<int, std::size_t> GradedPiece::kernel_weight_dims() const {
  std::map<int, std::size_t> out;
  for (const auto& b : blocks) out[b.weight] = b.kernel_dim;
  return out;
}

const WeightBlock* GradedPiece::block(int weight) const {
  for (const auto& b : blocks)
    if (b.weight == weight) return &b;
  return nullptr;
}

namespace {

// Parameter monomials packed into one word, `bits` per variable.
struct Packing {
  std::size_t nvars = 0;
  unsigned bits = 0;

  std::uint64_t pack(const Exponents& e) const {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < nvars; ++i) key |= static_cast<std::uint64_t>(e[i]) << (i * bits);
    return key;
  }
  int exponent(std::uint64_t key, std::size_t i) const {
    return static_cast<int>((key >> (i * bits)) & ((std::uint64_t{1} << bits) - 1));
  }
};

template <class T>
using PackedPoly = std::vector<std::pair<std::uint64_t, T>>;

template <class T>
PackedPoly<T> multiply(const PackedPoly<T>& a, const PackedPoly<T>& b) {
  std::unordered_map<std::uint64_t, T> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) acc[ka + kb] += ca * cb;
  PackedPoly<T> out(acc.begin(), acc.end());
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  return out;
}

template <class T>
T to_coeff(const Rational& q) {
  if (q.get_den() != 1) throw InconsistencyError("parameterization has a non-integral coefficient");
  if constexpr (std::is_same_v<T, Integer>) {
    return q.get_num();
  } else {
    return static_cast<T>(to_int64(q.get_num()));
  }
}

Integer as_integer(const Integer& z) { return z; }
Integer as_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

// Images of every degree-m monomial, by depth-first search over
// nondecreasing index sequences so each prefix product is computed once.
template <class T>
std::vector<PackedPoly<Integer>> compute_images(const SubstitutionMap& s, const Packing& pk, int m,
                                                const std::map<Exponents, std::size_t>& index) {
  const int d = s.degree();
  std::vector<PackedPoly<T>> q(d + 1);
  for (int j = 0; j <= d; ++j) {
    for (const auto& [ex, c] : s.images[j].terms()) q[j].emplace_back(pk.pack(ex), to_coeff<T>(c));
    std::sort(q[j].begin(), q[j].end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  }
  std::vector<PackedPoly<Integer>> out(index.size());
  Exponents ex(d + 1, 0);
  auto rec = [&](auto&& self, int start, int depth, const PackedPoly<T>& image) -> void {
    if (depth == m) {
      PackedPoly<Integer> z;
      z.reserve(image.size());
      for (const auto& [k, c] : image)
        if (c != 0) z.emplace_back(k, as_integer(c));
      out[index.at(ex)] = std::move(z);
      return;
    }
    for (int j = start; j <= d; ++j) {
      ++ex[j];
      self(self, j, depth + 1, multiply(image, q[j]));
      --ex[j];
    }
  };
  PackedPoly<T> one{{0, T(1)}};
  rec(rec, 0, 0, one);
  return out;
}

}  // namespace

GradedPiece graded_piece_kernel(const Partition& lambda, int m, const KernelOptions& options) {
  if (m < 1) throw ValidationError("graded piece degree m must be at least 1");
  const int d = lambda.degree();
  const Integer ambient = binomial(d + m, m);
  if (ambient > Integer(static_cast<unsigned long>(options.max_ambient_dim)))
    throw BudgetExceeded("ambient dimension binom(" + std::to_string(d + m) + "," + std::to_string(m) +
                         ") = " + to_string(ambient) + " exceeds the budget " +
                         std::to_string(options.max_ambient_dim) + " (raise max_ambient_dim / CRL_MAX_DIM)");

  const SubstitutionMap s = build_parameterization(lambda);
  GradedPiece piece;
  piece.lambda = lambda;
  piece.m = m;
  piece.monomials = monomials_of_degree(d + 1, m);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < piece.monomials.size(); ++i) index[piece.monomials[i]] = i;

  Packing pk;
  pk.nvars = s.params->size();
  int max_r = 0;
  for (const auto& [r, e] : lambda.exponents()) max_r = std::max(max_r, r);
  pk.bits = std::bit_width(static_cast<unsigned>(m * max_r));
  if (pk.nvars * pk.bits > 64)
    throw BudgetExceeded("parameter monomials of degree " + std::to_string(m) + " do not fit the packed representation");

  // All coefficients are positive, so each is bounded by the value at 1,
  // which is (prod (e_r + 1)^r)^m.
  Integer bound = 1;
  for (const auto& [r, e] : lambda.exponents()) {
    Integer f;
    mpz_ui_pow_ui(f.get_mpz_t(), static_cast<unsigned long>(e + 1), static_cast<unsigned long>(r));
    bound *= f;
  }
  mpz_pow_ui(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(m));
  const bool small = bound < (Integer(1) << 62);
  const auto images = small ? compute_images<std::int64_t>(s, pk, m, index) : compute_images<Integer>(s, pk, m, index);

  std::map<int, std::vector<std::size_t>> by_weight;
  for (std::size_t i = 0; i < piece.monomials.size(); ++i) by_weight[monomial_weight(piece.monomials[i], d)].push_back(i);

  piece.certified = true;
  for (const auto& [w, cols] : by_weight) {
    WeightBlock b;
    b.weight = w;
    b.columns = cols;

    std::vector<std::uint64_t> keys;
    for (std::size_t c : cols)
      for (const auto& [k, v] : images[c]) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (std::uint64_t k : keys) {
      int kw = 0;
      for (std::size_t i = 0; i < pk.nvars; ++i) kw += pk.exponent(k, i) * s.param_weights[i];
      if (kw != w) throw InconsistencyError("substitution map does not preserve weight");
    }
    std::unordered_map<std::uint64_t, std::size_t> row_of;
    for (std::size_t i = 0; i < keys.size(); ++i) row_of[keys[i]] = i;

    linalg::IntegerMatrix a(keys.size(), linalg::IntegerRow(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (const auto& [k, v] : images[cols[j]]) a[row_of.at(k)][j] = v;
    b.image_rows = keys.size();

    auto kernel = linalg::certified_nullspace(a, cols.size(), options.modular_primes);
    b.rank = kernel.rank;
    b.modular_rank = kernel.modular_rank;
    b.kernel_dim = kernel.basis.size();
    if (options.keep_basis) b.kernel = std::move(kernel.basis);
    piece.certified = piece.certified && kernel.certified;
    piece.blocks.push_back(std::move(b));
  }
  return piece;
}

Character kernel_character(const GradedPiece& piece) {
  std::map<int, std::int64_t> counts;
  for (const auto& b : piece.blocks) counts[b.weight] = static_cast<std::int64_t>(b.kernel_dim);
  Character c;
  try {
    c = char_from_weights(counts);
  } catch (const ValidationError& e) {
    throw InconsistencyError(std::string("kernel weight blocks are not symmetric: ") + e.what());
  } catch (const InconsistencyError& e) {
    throw InconsistencyError(std::string("kernel is not a representation: ") + e.what());
  }
  if (c.dim() != static_cast<std::int64_t>(piece.dim_ideal()))
    throw InconsistencyError("kernel character dimension differs from the kernel dimension");
  return c;
}

Character kernel_character(const Partition& lambda, int m, const KernelOptions& options) {
  KernelOptions o = options;
  o.keep_basis = false;
  return kernel_character(graded_piece_kernel(lambda, m, o));
}

std::vector<MultiPoly> kernel_polynomials(const GradedPiece& piece) {
  const VarSetPtr vars = coefficient_vars(piece.lambda.degree());
  std::vector<MultiPoly> out;
  for (const auto& b : piece.blocks) {
    if (b.kernel.size() != b.kernel_dim) throw ValidationError("kernel basis was not kept");
    for (const auto& v : b.kernel) {
      MultiPoly p(vars);
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p.add_term(piece.monomials[b.columns[i]], v[i]);
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::size_t new_generators(const GradedPiece& lower, const GradedPiece& upper) {
  if (!(lower.lambda == upper.lambda) || lower.m + 1 != upper.m)
    throw ValidationError("new_generators needs consecutive graded pieces of the same locus");
  const int d = upper.lambda.degree();
  std::size_t spanned = 0;
  for (const auto& ub : upper.blocks) {
    if (ub.kernel_dim == 0) continue;
    std::map<Exponents, std::size_t> upper_index;
    for (std::size_t i = 0; i < ub.columns.size(); ++i) upper_index[upper.monomials[ub.columns[i]]] = i;

    linalg::IntegerMatrix rows;
    for (int j = 0; j <= d; ++j) {
      const WeightBlock* lb = lower.block(ub.weight - (2 * j - d));
      if (!lb || lb->kernel_dim == 0) continue;
      if (lb->kernel.size() != lb->kernel_dim) throw ValidationError("kernel basis was not kept");
      for (const auto& v : lb->kernel) {
        const auto z = linalg::primitive_integer_vector(v);
        linalg::IntegerRow row(ub.columns.size(), 0);
        for (std::size_t i = 0; i < z.size(); ++i) {
          if (z[i] == 0) continue;
          Exponents e = lower.monomials[lb->columns[i]];
          ++e[j];
          row[upper_index.at(e)] = z[i];
        }
        rows.push_back(std::move(row));
      }
    }
    if (rows.empty()) continue;
    // The products lie in the upper kernel, so a modular rank that reaches
    // its dimension is exact.
    std::size_t r = linalg::rank_mod_p(rows, ub.columns.size(), 2147483647u);
    if (r < ub.kernel_dim) r = linalg::rank(linalg::to_rational(rows), ub.columns.size());
    spanned += r;
  }
  return upper.dim_ideal() - spanned;
}

std::map<int, std::size_t> minimal_generators_by_degree(const Partition& lambda, int m_max,
                                                        const KernelOptions& options) {
  std::map<int, std::size_t> out;
  KernelOptions o = options;
  o.keep_basis = true;
  std::optional<GradedPiece> prev;
  for (int m = 1; m <= m_max; ++m) {
    GradedPiece cur = graded_piece_kernel(lambda, m, o);
    out[m] = prev ? new_generators(*prev, cur) : cur.dim_ideal();
    prev = std::move(cur);
  }
  return out;
}

std::size_t hilbert_function(const Partition& lambda, int m, const KernelOptions& options) {
  KernelOptions o = options;
  o.keep_basis = false;
  const GradedPiece p = graded_piece_kernel(lambda, m, o);
  return p.dim_ambient() - p.dim_ideal();
}

GradedPieceReport make_report(const GradedPiece& piece, const GradedPiece* lower) {
  GradedPieceReport r;
  r.lambda = piece.lambda;
  r.m = piece.m;
  r.dim_ideal = piece.dim_ideal();
  r.character = kernel_character(piece);
  r.dim_ambient = piece.dim_ambient();
  if (lower)
    r.minimal_generators = new_generators(*lower, piece);
  else if (piece.m == 1)
    r.minimal_generators = r.dim_ideal;
  r.hilbert_value = r.dim_ambient - r.dim_ideal;
  r.certified = piece.certified;
  return r;
}

nlohmann::json to_json(const GradedPieceReport& r) {
  nlohmann::json j{{"partition", to_json(r.lambda)},
                   {"m", r.m},
                   {"dim_ideal", r.dim_ideal},
                   {"character", to_json(r.character)},
                   {"dim_ambient", r.dim_ambient},
                   {"hilbert_value", r.hilbert_value},
                   {"certified", r.certified},
                   {"method", "linear-algebra"}};
  j["minimal_generators"] = r.minimal_generators ? nlohmann::json(*r.minimal_generators) : nlohmann::json(nullptr);
  return j;
}

}  // namespace crl
