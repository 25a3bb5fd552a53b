#include "crl/covariants.hpp"

#include <cctype>

#include "crl/error.hpp"
#include "crl/ideal_la.hpp"
#include "crl/linalg.hpp"

namespace crl {

VarSetPtr covariant_vars(int d) {
  if (d < 1) throw ValidationError("base degree must be positive");
  std::vector<std::string> names;
  for (int j = 0; j <= d; ++j) names.push_back("a" + std::to_string(j));
  names.push_back("x");
  names.push_back("y");
  return make_vars(std::move(names));
}

CovariantExpr::CovariantExpr(int d_, int p_, int q_, MultiPoly body_, std::string label_)
    : d(d_), p(p_), q(q_), body(std::move(body_)), label(std::move(label_)) {}

void CovariantExpr::check_type() const {
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  for (const auto& [e, c] : body.terms()) {
    int pa = 0;
    for (std::size_t j = 0; j < n; ++j) pa += e[j];
    if (pa != p || e[n] + e[n + 1] != q)
      throw InconsistencyError("covariant " + label + " is not of type (" + std::to_string(p) + "," +
                               std::to_string(q) + ")");
  }
}

CovariantExpr generic_form(int d) {
  const VarSetPtr v = covariant_vars(d);
  MultiPoly f(v);
  for (int j = 0; j <= d; ++j) {
    Exponents e(v->size(), 0);
    e[j] = 1;
    e[d + 1] = j;
    e[d + 2] = d - j;
    f.add_term(e, Rational(binomial(d, j)));
  }
  return {d, 1, d, std::move(f), "F"};
}

CovariantExpr constant_covariant(int d, const Rational& c) {
  return {d, 0, 0, MultiPoly::constant(covariant_vars(d), c), to_string(c)};
}

CovariantExpr transvectant(const CovariantExpr& a, const CovariantExpr& b, int r) {
  if (a.d != b.d) throw ValidationError("transvectant of covariants over different base degrees");
  if (r < 0 || r > a.q || r > b.q)
    throw ValidationError("transvectant order " + std::to_string(r) + " out of range for orders " +
                          std::to_string(a.q) + " and " + std::to_string(b.q));
  const std::size_t x = a.d + 1;
  const std::size_t y = a.d + 2;
  MultiPoly sum(a.body.vars());
  for (int i = 0; i <= r; ++i) {
    const MultiPoly da = a.body.derivative(x, r - i).derivative(y, i);
    const MultiPoly db = b.body.derivative(x, i).derivative(y, r - i);
    MultiPoly t = da * db;
    t *= Rational(binomial(r, i) * (i % 2 ? -1 : 1));
    sum += t;
  }
  Rational prefactor(factorial(a.q - r) * factorial(b.q - r), factorial(a.q) * factorial(b.q));
  prefactor.canonicalize();
  sum *= prefactor;
  CovariantExpr out{a.d, a.p + b.p, a.q + b.q - 2 * r, std::move(sum),
                    "(" + a.label + "," + b.label + ")^" + std::to_string(r)};
  out.check_type();
  return out;
}

CovariantExpr operator*(const CovariantExpr& a, const CovariantExpr& b) {
  if (a.d != b.d) throw ValidationError("product of covariants over different base degrees");
  return {a.d, a.p + b.p, a.q + b.q, a.body * b.body, a.label + "*" + b.label};
}

CovariantExpr operator*(const Rational& c, const CovariantExpr& a) {
  return {a.d, a.p, a.q, c * a.body, to_string(c) + "*" + a.label};
}

namespace {

CovariantExpr combine(const CovariantExpr& a, const CovariantExpr& b, int sign) {
  if (a.d != b.d) throw ValidationError("sum of covariants over different base degrees");
  MultiPoly body = sign > 0 ? a.body + b.body : a.body - b.body;
  const std::string label = a.label + (sign > 0 ? " + " : " - ") + b.label;
  if (a.is_zero()) return {b.d, b.p, b.q, std::move(body), label};
  if (!b.is_zero() && (a.p != b.p || a.q != b.q))
    throw ValidationError("sum of covariants of different types (" + std::to_string(a.p) + "," +
                          std::to_string(a.q) + ") and (" + std::to_string(b.p) + "," + std::to_string(b.q) + ")");
  return {a.d, a.p, a.q, std::move(body), label};
}

}  // namespace

CovariantExpr operator+(const CovariantExpr& a, const CovariantExpr& b) { return combine(a, b, 1); }
CovariantExpr operator-(const CovariantExpr& a, const CovariantExpr& b) { return combine(a, b, -1); }

std::map<std::string, CovariantExpr> named_covariants(int d) {
  std::map<std::string, CovariantExpr> out;
  const CovariantExpr f = generic_form(d);
  out.emplace("F", f);
  if (d >= 2) {
    CovariantExpr h = transvectant(f, f, 2);
    h.label = "H";
    out.emplace("H", std::move(h));
  }
  if (d >= 4) {
    CovariantExpr i = transvectant(f, f, 4);
    i.label = "i";
    if (d >= 5) {
      CovariantExpr a = transvectant(i, i, 2);
      a.label = "A";
      out.emplace("A", std::move(a));
    }
    out.emplace("i", std::move(i));
  }
  if (d >= 6) {
    CovariantExpr s = transvectant(f, f, 6);
    s.label = "FF6";
    out.emplace("FF6", std::move(s));
  }
  return out;
}

namespace {

class CovariantParser {
 public:
  CovariantParser(std::string_view text, int d) : text_(text), d_(d), names_(named_covariants(d)) {}

  CovariantExpr parse() {
    CovariantExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    e.label = std::string(text_);
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ValidationError("covariant expression \"" + std::string(text_) + "\" at " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail("integer too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  CovariantExpr expr() {
    CovariantExpr acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  CovariantExpr term() {
    CovariantExpr acc = unary();
    for (;;) {
      if (eat('*') || eat('.'))
        acc = acc * unary();
      else
        return acc;
    }
  }

  CovariantExpr unary() {
    if (eat('-')) return Rational(-1) * unary();
    return power();
  }

  CovariantExpr power() {
    bool pair = false;
    CovariantExpr base = primary(pair);
    if (pair) return base;
    if (eat('^')) {
      const int k = integer();
      CovariantExpr out = constant_covariant(d_, 1);
      for (int i = 0; i < k; ++i) out = out * base;
      return out;
    }
    return base;
  }

  // `pair` reports a (a,b)^r transvectant, whose exponent is already consumed.
  CovariantExpr primary(bool& pair) {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return constant_covariant(d_, integer());
    if (c == '(') {
      ++pos_;
      CovariantExpr first = expr();
      if (eat(',')) {
        CovariantExpr second = expr();
        expect(')');
        const int r = eat('^') ? integer() : 1;
        pair = true;
        return transvectant(first, second, r);
      }
      expect(')');
      return first;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (name == "T" && eat('(')) {
        CovariantExpr a = expr();
        expect(',');
        CovariantExpr b = expr();
        expect(',');
        const int r = integer();
        expect(')');
        return transvectant(a, b, r);
      }
      const auto it = names_.find(name);
      if (it == names_.end()) fail("unknown covariant '" + name + "' for d = " + std::to_string(d_));
      return it->second;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  int d_;
  std::map<std::string, CovariantExpr> names_;
  std::size_t pos_ = 0;
};

}  // namespace

CovariantExpr parse_covariant(std::string_view text, int d) { return CovariantParser(text, d).parse(); }

bool has_irreducible_weight_profile(const CovariantExpr& c) {
  const std::size_t x = c.d + 1;
  std::vector<bool> seen(c.q + 1, false);
  for (const auto& [e, coef] : c.body.terms()) {
    int w = monomial_weight(Exponents(e.begin(), e.begin() + c.d + 1), c.d) - e[x] + e[x + 1];
    if (w != 0) return false;
    seen[e[x]] = true;
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

MultiPoly substitute_on_locus(const CovariantExpr& c, const Partition& lambda) {
  if (lambda.degree() != c.d)
    throw ValidationError("covariant over d = " + std::to_string(c.d) + " evaluated on a partition of " +
                          std::to_string(lambda.degree()));
  const SubstitutionMap s = build_parameterization(lambda);
  std::vector<std::string> names = s.params->names();
  names.push_back("x");
  names.push_back("y");
  const VarSetPtr target = make_vars(names);
  std::vector<MultiPoly> images;
  for (int j = 0; j <= c.d; ++j) {
    MultiPoly img = s.images[j].embed(target);
    img *= Rational(1, binomial(c.d, j));
    images.push_back(std::move(img));
  }
  images.push_back(MultiPoly::variable(target, "x"));
  images.push_back(MultiPoly::variable(target, "y"));
  return c.body.compose(images, target);
}

bool vanishes_on_locus(const CovariantExpr& c, const Partition& lambda) {
  return substitute_on_locus(c, lambda).is_zero();
}

std::vector<std::vector<Integer>> calibrate_combination(const std::vector<CovariantExpr>& basis,
                                                        const Partition& lambda) {
  if (basis.empty()) throw ValidationError("calibration needs a nonempty basis");
  for (const auto& b : basis)
    if (b.d != basis.front().d || b.p != basis.front().p || b.q != basis.front().q)
      throw ValidationError("calibration basis elements must share base degree and type");

  std::vector<MultiPoly> values;
  for (const auto& b : basis) values.push_back(substitute_on_locus(b, lambda));
  std::map<Exponents, std::size_t> row_of;
  for (const auto& v : values)
    for (const auto& [e, c] : v.terms()) row_of.emplace(e, 0);
  std::size_t r = 0;
  for (auto& [e, idx] : row_of) idx = r++;
  linalg::RationalMatrix m(row_of.size(), linalg::RationalRow(basis.size(), 0));
  for (std::size_t k = 0; k < values.size(); ++k)
    for (const auto& [e, c] : values[k].terms()) m[row_of.at(e)][k] = c;

  std::vector<std::vector<Integer>> out;
  for (const auto& v : linalg::nullspace(m, basis.size())) out.push_back(linalg::primitive_integer_vector(v));
  return out;
}

namespace {

struct TableRow {
  int d;
  std::vector<int> parts;
  int m;
  std::vector<std::pair<std::string, int>> covariants;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows{
      {4, {3, 1}, 2, {{"i", 0}}},
      {4, {3, 1}, 3, {{"(F,H)^4", 0}}},
      {4, {2, 2}, 3, {{"(F,H)", 6}}},
      {5, {4, 1}, 2, {{"i", 2}}},
      {5, {3, 2}, 4, {{"25*H^2 - 6*i*F^2", 12}, {"5*i*H + 6*F*(i,F)^2", 8}, {"2*i^2 + 15*(i,H)^2", 4}, {"A", 0}}},
      {6, {5, 1}, 2, {{"i", 4}, {"(F,F)^6", 0}}},
      {6, {4, 2}, 2, {{"(F,F)^6", 0}}},
      {6, {4, 2}, 3, {{"(F,i)^4", 2}}},
      {6, {4, 2}, 4, {{"27*H^2 - 8*i*F^2", 16}, {"3*i*H + 4*F*(F,i)^2", 12}, {"(i,i)^4", 0}}},
      {6, {3, 3}, 3, {{"(F,H)", 12}, {"(F,i)", 8}, {"8*F*(F,F)^6 - 75*(F,i)^2", 6}}},
  };
  return rows;
}

}  // namespace

std::vector<std::pair<int, Partition>> criterion_table_keys() {
  std::vector<std::pair<int, Partition>> out;
  for (const auto& row : table_rows()) {
    std::pair<int, Partition> key{row.d, Partition::from_parts(row.parts)};
    if (out.empty() || !(out.back().first == key.first && out.back().second == key.second)) out.push_back(key);
  }
  return out;
}

std::vector<CriterionEntry> criterion_table(int d, const Partition& lambda) {
  std::vector<CriterionEntry> out;
  for (const auto& row : table_rows()) {
    if (row.d != d || !(Partition::from_parts(row.parts) == lambda)) continue;
    CriterionEntry entry;
    entry.m = row.m;
    for (const auto& [text, order] : row.covariants) {
      CovariantExpr c = parse_covariant(text, d);
      if (c.p != row.m || c.q != order)
        throw InconsistencyError("table covariant " + text + " has type (" + std::to_string(c.p) + "," +
                                 std::to_string(c.q) + "), expected (" + std::to_string(row.m) + "," +
                                 std::to_string(order) + ")");
      entry.covariants.push_back({text, order, std::move(c)});
    }
    out.push_back(std::move(entry));
  }
  if (out.empty())
    throw ValidationError("no criterion table entry for d = " + std::to_string(d) + ", lambda = " + lambda.to_string());
  return out;
}

nlohmann::json to_json(const CovariantExpr& c) {
  return {{"d", c.d}, {"p", c.p}, {"q", c.q}, {"label", c.label}, {"terms", c.body.size()}};
}

}  // namespace crl
