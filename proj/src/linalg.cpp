#include "crl/linalg.hpp"

#include <algorithm>

#include "crl/error.hpp"

namespace crl::linalg {

Echelon rref(RationalMatrix m, std::size_t cols) {
  for (const auto& row : m)
    if (row.size() != cols) throw ValidationError("rref: ragged matrix");
  Echelon out;
  out.cols = cols;
  std::size_t lead = 0;
  Rational factor;
  for (std::size_t col = 0; col < cols && lead < m.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[lead], m[pivot]);
    const Rational inv = 1 / m[lead][col];
    for (std::size_t c = col; c < cols; ++c) m[lead][c] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead || m[r][col] == 0) continue;
      factor = m[r][col];
      for (std::size_t c = col; c < cols; ++c)
        if (m[lead][c] != 0) m[r][c] -= factor * m[lead][c];
    }
    out.pivots.push_back(col);
    ++lead;
  }
  m.resize(lead);
  out.rows = std::move(m);
  return out;
}

RationalMatrix nullspace(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    RationalRow v(e.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  return rref(std::move(basis), e.cols).rows;
}

RationalMatrix nullspace(const RationalMatrix& m, std::size_t cols) { return nullspace(rref(m, cols)); }

std::size_t rank(const RationalMatrix& m, std::size_t cols) { return rref(m, cols).rank(); }

std::vector<Integer> primitive_integer_vector(const RationalRow& v) {
  Integer den = 1;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& q : v) {
    Integer z = q.get_num() * (den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    out.push_back(z);
  }
  if (g == 0) return out;
  int sign = 1;
  for (const auto& z : out) {
    if (z != 0) {
      sign = z < 0 ? -1 : 1;
      break;
    }
  }
  for (auto& z : out) z = z / g * sign;
  return out;
}

namespace {

using Row64 = std::vector<std::uint64_t>;

std::uint64_t inverse_mod(std::uint64_t x, std::uint64_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = x % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

// Incremental reduced echelon form: every stored row is zero at the pivots
// of the others, so a new row is reduced in one sweep.
struct EchelonBuilder {
  std::uint64_t p;
  std::size_t cols;
  std::vector<Row64> rows;
  std::vector<std::size_t> pivots;

  bool insert(Row64 row) {
    for (std::size_t b = 0; b < rows.size(); ++b) {
      const std::uint64_t f = row[pivots[b]];
      if (f == 0) continue;
      const auto& br = rows[b];
      for (std::size_t c = pivots[b]; c < cols; ++c)
        if (br[c]) row[c] = (row[c] + (p - f) * br[c]) % p;
    }
    std::size_t piv = 0;
    while (piv < cols && row[piv] == 0) ++piv;
    if (piv == cols) return false;
    const std::uint64_t inv = inverse_mod(row[piv], p);
    for (std::size_t c = piv; c < cols; ++c) row[c] = row[c] * inv % p;
    for (auto& br : rows) {
      const std::uint64_t f = br[piv];
      if (f == 0) continue;
      for (std::size_t c = piv; c < cols; ++c)
        if (row[c]) br[c] = (br[c] + (p - f) * row[c]) % p;
    }
    rows.push_back(std::move(row));
    pivots.push_back(piv);
    return true;
  }

  void sort_by_pivot() {
    std::vector<std::size_t> order(rows.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots[a] < pivots[b]; });
    std::vector<Row64> r;
    std::vector<std::size_t> pv;
    for (std::size_t i : order) {
      r.push_back(std::move(rows[i]));
      pv.push_back(pivots[i]);
    }
    rows = std::move(r);
    pivots = std::move(pv);
  }
};

Row64 reduce_row(const IntegerRow& row, std::size_t cols, std::uint64_t p) {
  if (row.size() != cols) throw ValidationError("modular elimination: ragged matrix");
  Row64 r(cols);
  for (std::size_t c = 0; c < cols; ++c) r[c] = mpz_fdiv_ui(row[c].get_mpz_t(), static_cast<unsigned long>(p));
  return r;
}

// RREF of the kernel of an echelon form, mod p.
EchelonBuilder kernel_mod_p(const EchelonBuilder& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t pv : e.pivots) is_pivot[pv] = true;
  EchelonBuilder k{e.p, e.cols, {}, {}};
  for (std::size_t free = 0; free < e.cols; ++free) {
    if (is_pivot[free]) continue;
    Row64 v(e.cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = (e.p - e.rows[i][free]) % e.p;
    k.insert(std::move(v));
  }
  k.sort_by_pivot();
  return k;
}

std::uint32_t previous_prime(std::uint32_t below) {
  Integer z = below;
  do {
    z -= 1;
  } while (z > 2 && mpz_probab_prime_p(z.get_mpz_t(), 30) == 0);
  if (z <= 2) throw BudgetExceeded("ran out of word-size primes");
  return static_cast<std::uint32_t>(z.get_ui());
}

bool is_zero_vector(const IntegerRow& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z == 0; });
}

}  // namespace

ModularEchelon rref_mod_p(const IntegerMatrix& m, std::size_t cols, std::uint32_t p) {
  if (p < 3) throw ValidationError("rref_mod_p: prime must be odd");
  EchelonBuilder e{p, cols, {}, {}};
  ModularEchelon out;
  out.prime = p;
  out.cols = cols;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (e.rows.size() == cols) break;
    if (e.insert(reduce_row(m[i], cols, p))) out.independent_rows.push_back(i);
  }
  e.sort_by_pivot();
  out.pivots = e.pivots;
  for (auto& r : e.rows) out.rows.emplace_back(r.begin(), r.end());
  return out;
}

std::size_t rank_mod_p(const IntegerMatrix& m, std::size_t cols, std::uint32_t p) {
  return rref_mod_p(m, cols, p).rank();
}

bool rational_reconstruct(const Integer& a, const Integer& n, Rational& out) {
  Integer r0 = n;
  Integer r1 = a % n;
  if (r1 < 0) r1 += n;
  Integer s0 = 0;
  Integer s1 = 1;
  Integer bound;
  mpz_fdiv_q_2exp(bound.get_mpz_t(), n.get_mpz_t(), 1);
  mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
  Integer q;
  Integer t;
  while (r1 > bound) {
    q = r0 / r1;
    t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s1 == 0 || abs(s1) > bound) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, s1);
  out.canonicalize();
  return true;
}

IntegerRow multiply(const IntegerMatrix& m, const std::vector<Integer>& v) {
  IntegerRow out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (row.size() != v.size()) throw ValidationError("multiply: dimension mismatch");
    Integer acc = 0;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0 && row[c] != 0) acc += row[c] * v[c];
    out.push_back(std::move(acc));
  }
  return out;
}

CertifiedKernel certified_nullspace(const IntegerMatrix& m, std::size_t cols,
                                    const std::vector<std::uint32_t>& primes, std::size_t max_primes) {
  CertifiedKernel out;
  if (cols == 0) {
    out.certified = true;
    return out;
  }

  std::size_t best_rank = 0;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> kernel_pivots;
  std::vector<std::vector<Integer>> residues;  // CRT images of the kernel RREF
  Integer modulus = 1;
  bool have = false;
  std::uint32_t next = primes.empty() ? 2147483647u : primes.back();

  for (std::size_t used = 0; used < max_primes; ++used) {
    std::uint32_t p;
    if (used < primes.size()) {
      p = primes[used];
    } else {
      next = previous_prime(next);
      p = next;
    }
    ++out.primes_used;

    EchelonBuilder e{p, cols, {}, {}};
    for (const auto& row : m) {
      if (e.rows.size() == cols) break;
      e.insert(reduce_row(row, cols, p));
    }
    e.sort_by_pivot();
    const EchelonBuilder k = kernel_mod_p(e);

    // A prime is bad when it lowers the rank or moves a pivot later.
    const bool better = !have || e.rows.size() > best_rank ||
                        (e.rows.size() == best_rank && e.pivots < pivots);
    const bool same = have && e.rows.size() == best_rank && e.pivots == pivots && k.pivots == kernel_pivots;
    if (better) {
      have = true;
      best_rank = e.rows.size();
      pivots = e.pivots;
      kernel_pivots = k.pivots;
      modulus = p;
      residues.assign(k.rows.size(), std::vector<Integer>(cols));
      for (std::size_t i = 0; i < k.rows.size(); ++i)
        for (std::size_t c = 0; c < cols; ++c) residues[i][c] = static_cast<unsigned long>(k.rows[i][c]);
    } else if (same) {
      const Integer P = p;
      Integer inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
      for (std::size_t i = 0; i < k.rows.size(); ++i) {
        for (std::size_t c = 0; c < cols; ++c) {
          Integer& x = residues[i][c];
          Integer diff = Integer(static_cast<unsigned long>(k.rows[i][c])) - x;
          Integer t = diff * inv;
          mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), P.get_mpz_t());
          x += modulus * t;
        }
      }
      modulus *= P;
    } else {
      continue;
    }
    out.modular_rank = best_rank;

    if (best_rank == cols) {
      // rank over Q is at least the rank mod p, and at most cols.
      out.rank = cols;
      out.certified = true;
      return out;
    }

    RationalMatrix basis(residues.size(), RationalRow(cols));
    bool ok = true;
    for (std::size_t i = 0; i < residues.size() && ok; ++i)
      for (std::size_t c = 0; c < cols && ok; ++c) ok = rational_reconstruct(residues[i][c], modulus, basis[i][c]);
    if (!ok) continue;

    bool verified = true;
    for (const auto& v : basis) {
      if (!is_zero_vector(multiply(m, primitive_integer_vector(v)))) {
        verified = false;
        break;
      }
    }
    if (!verified) continue;

    // The lifted rows are independent (echelon shape), lie in the kernel,
    // and number cols - rank_p >= dim ker, so they span it.
    out.basis = std::move(basis);
    out.rank = cols - out.basis.size();
    out.certified = true;
    return out;
  }

  out.exact_fallback = true;
  out.basis = nullspace(to_rational(m), cols);
  out.rank = cols - out.basis.size();
  out.certified = true;
  return out;
}

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    RationalRow r;
    r.reserve(row.size());
    for (const auto& v : row) r.emplace_back(v);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace crl::linalg
