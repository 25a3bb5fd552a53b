#include <algorithm>
#include <chrono>
#include <set>

#include "crl/error.hpp"
#include "crl/ideal_la.hpp"

namespace crl {

namespace {

using Mono = std::vector<int>;

struct Term {
  Mono e;
  Rational c;
};

// Terms sorted by decreasing monomial order; leading term first.
using Poly = std::vector<Term>;

// Block order: grevlex on the first `split` variables, ties broken by
// grevlex on the rest.
struct BlockOrder {
  std::size_t split = 0;

  static int grevlex(const Mono& a, const Mono& b, std::size_t lo, std::size_t hi) {
    int da = 0;
    int db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = hi; i-- > lo;)
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    return 0;
  }

  int compare(const Mono& a, const Mono& b) const {
    if (int c = grevlex(a, b, 0, split)) return c;
    return grevlex(a, b, split, a.size());
  }
};

bool divides(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono lcm(const Mono& a, const Mono& b) {
  Mono out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Mono quotient(const Mono& a, const Mono& b) {
  Mono out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

bool coprime(const Mono& a, const Mono& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

int degree(const Mono& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

class Engine {
 public:
  explicit Engine(BlockOrder order) : order_(order) {}

  void sort(Poly& p) const {
    std::sort(p.begin(), p.end(), [&](const Term& a, const Term& b) { return order_.compare(a.e, b.e) > 0; });
  }

  // f - c * x^m * g
  Poly sub_mul(const Poly& f, const Rational& c, const Mono& m, const Poly& g) const {
    Poly out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Mono shifted(m.size());
    while (i < f.size() || j < g.size()) {
      if (j < g.size())
        for (std::size_t k = 0; k < m.size(); ++k) shifted[k] = g[j].e[k] + m[k];
      const int cmp = i == f.size() ? -1 : j == g.size() ? 1 : order_.compare(f[i].e, shifted);
      if (cmp > 0) {
        out.push_back(f[i++]);
      } else if (cmp < 0) {
        out.push_back({shifted, -c * g[j++].c});
      } else {
        Rational v = f[i].c - c * g[j].c;
        if (v != 0) out.push_back({f[i].e, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static void make_monic(Poly& p) {
    if (p.empty()) return;
    const Rational inv = 1 / p.front().c;
    for (auto& t : p) t.c *= inv;
  }

  Poly reduce(Poly f, const std::vector<Poly>& basis) const {
    Poly r;
    while (!f.empty()) {
      const Poly* hit = nullptr;
      for (const auto& g : basis) {
        if (!g.empty() && divides(g.front().e, f.front().e)) {
          hit = &g;
          break;
        }
      }
      if (hit) {
        f = sub_mul(f, f.front().c / hit->front().c, quotient(f.front().e, hit->front().e), *hit);
      } else {
        r.push_back(std::move(f.front()));
        f.erase(f.begin());
      }
    }
    make_monic(r);
    return r;
  }

  Poly spoly(const Poly& f, const Poly& g) const {
    const Mono l = lcm(f.front().e, g.front().e);
    Poly a;
    for (const auto& t : f) {
      Mono e = t.e;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += l[k] - f.front().e[k];
      a.push_back({std::move(e), t.c / f.front().c});
    }
    return sub_mul(a, 1 / g.front().c, quotient(l, g.front().e), g);
  }

 private:
  BlockOrder order_;
};

}  // namespace

GroebnerResult groebner_eliminate(const Partition& lambda, const GroebnerOptions& options) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  const int d = lambda.degree();
  const SubstitutionMap s = build_parameterization(lambda);

  // Monic chart: g_{r,0} = 1, so a_0 = 1. Remaining parameters u come first.
  std::vector<std::size_t> u_params;
  for (std::size_t i = 0; i < s.params->size(); ++i)
    if (!s.params->name(i).ends_with("_0")) u_params.push_back(i);
  const std::size_t nu = u_params.size();
  const std::size_t nvars = nu + static_cast<std::size_t>(d);  // u..., a_1..a_d
  Engine eng(BlockOrder{nu});

  std::vector<Poly> gens;
  for (int j = 1; j <= d; ++j) {
    Poly p;
    Mono aj(nvars, 0);
    aj[nu + j - 1] = 1;
    p.push_back({aj, 1});
    std::map<Mono, Rational> q;
    for (const auto& [ex, c] : s.images[j].terms()) {
      Mono e(nvars, 0);
      for (std::size_t k = 0; k < nu; ++k) e[k] = ex[u_params[k]];
      q[e] -= c;
    }
    for (auto& [e, c] : q)
      if (c != 0) p.push_back({e, c});
    eng.sort(p);
    Engine::make_monic(p);
    gens.push_back(std::move(p));
  }

  GroebnerResult out;
  out.lambda = lambda;

  std::vector<Poly> basis;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add = [&](Poly p) {
    const std::size_t k = basis.size();
    basis.push_back(std::move(p));
    for (std::size_t i = 0; i < k; ++i) pending.insert({i, k});
  };
  for (auto& g : gens) add(std::move(g));

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) > 0; };

  bool budget_hit = false;
  while (!pending.empty()) {
    if (std::chrono::duration<double>(clock::now() - start).count() > options.timeout_s) {
      out.status = "timeout after " + std::to_string(options.timeout_s) + " s";
      budget_hit = true;
      break;
    }
    if (basis.size() > options.max_basis_size) {
      out.status = "basis size budget exceeded";
      budget_hit = true;
      break;
    }
    // Normal strategy: smallest lcm degree first.
    auto best = pending.begin();
    int best_deg = degree(lcm(basis[best->first].front().e, basis[best->second].front().e));
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      const int dg = degree(lcm(basis[it->first].front().e, basis[it->second].front().e));
      if (dg < best_deg) {
        best = it;
        best_deg = dg;
      }
    }
    const auto [i, j] = *best;
    pending.erase(best);
    const Mono& li = basis[i].front().e;
    const Mono& lj = basis[j].front().e;
    if (coprime(li, lj)) continue;
    const Mono l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || basis[k].empty()) continue;
      chain = divides(basis[k].front().e, l) && !is_pending(i, k) && !is_pending(j, k);
    }
    if (chain) continue;
    Poly h = eng.reduce(eng.spoly(basis[i], basis[j]), basis);
    if (!h.empty()) add(std::move(h));
  }
  out.basis_size = basis.size();
  if (budget_hit) return out;

  // Reduced basis.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      if (divides(basis[k].front().e, basis[i].front().e))
        redundant = basis[k].front().e != basis[i].front().e || k < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(minimal[k]);
    minimal[i] = eng.reduce(minimal[i], others);
  }
  out.basis_size = minimal.size();

  // Elements free of u, homogenized by a_0.
  const VarSetPtr avars = coefficient_vars(d);
  for (const auto& p : minimal) {
    const bool u_free = std::all_of(p.begin(), p.end(), [&](const Term& t) {
      return std::all_of(t.e.begin(), t.e.begin() + static_cast<std::ptrdiff_t>(nu), [](int v) { return v == 0; });
    });
    if (!u_free) continue;
    int top = 0;
    for (const auto& t : p) top = std::max(top, degree(t.e));
    linalg::RationalRow coeffs;
    for (const auto& t : p) coeffs.push_back(t.c);
    const auto z = linalg::primitive_integer_vector(coeffs);
    MultiPoly h(avars);
    for (std::size_t k = 0; k < p.size(); ++k) {
      Exponents e(d + 1, 0);
      e[0] = top - degree(p[k].e);
      for (int jj = 1; jj <= d; ++jj) e[jj] = p[k].e[nu + jj - 1];
      h.add_term(e, Rational(z[k]));
    }
    out.generators.push_back(std::move(h));
  }
  std::stable_sort(out.generators.begin(), out.generators.end(),
                   [](const MultiPoly& a, const MultiPoly& b) { return a.total_degree() < b.total_degree(); });
  out.completed = true;
  out.status = "completed";
  return out;
}

std::size_t ideal_dimension_in_degree(const std::vector<MultiPoly>& generators, int d, int m) {
  const auto monos = monomials_of_degree(d + 1, m);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[monos[i]] = i;
  linalg::IntegerMatrix rows;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw ValidationError("ideal_dimension_in_degree needs homogeneous generators");
    if (g.vars()->size() != static_cast<std::size_t>(d + 1))
      throw ValidationError("generators must be polynomials in a_0..a_d");
    const int k = g.total_degree();
    if (k > m) continue;
    linalg::RationalRow coeffs;
    std::vector<Exponents> exps;
    for (const auto& [e, c] : g.terms()) {
      exps.push_back(e);
      coeffs.push_back(c);
    }
    const auto z = linalg::primitive_integer_vector(coeffs);
    for (const auto& mu : monomials_of_degree(d + 1, m - k)) {
      linalg::IntegerRow row(monos.size(), 0);
      for (std::size_t t = 0; t < exps.size(); ++t) {
        Exponents e = exps[t];
        for (std::size_t v = 0; v < e.size(); ++v) e[v] += mu[v];
        row[index.at(e)] = z[t];
      }
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return 0;
  return linalg::certified_nullspace(rows, monos.size(), {2147483647u, 2147483629u}).rank;
}

nlohmann::json to_json(const GroebnerResult& g) {
  nlohmann::json gens = nlohmann::json::array();
  std::map<int, int> by_degree;
  for (const auto& p : g.generators) {
    gens.push_back(p.to_string());
    ++by_degree[p.total_degree()];
  }
  nlohmann::json degs = nlohmann::json::object();
  for (const auto& [k, n] : by_degree) degs[std::to_string(k)] = n;
  return {{"partition", to_json(g.lambda)},
          {"completed", g.completed},
          {"status", g.status},
          {"generators", gens},
          {"generator_degrees", degs},
          {"basis_size", g.basis_size},
          {"method", "groebner"}};
}

}  // namespace crl
