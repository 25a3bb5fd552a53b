#include "crl/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <unordered_map>

#include "crl/error.hpp"

namespace crl {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw ValidationError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw ValidationError("duplicate variable name: " + names_[i]);
  }
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw ValidationError("unknown variable: " + std::string(name));
}

VarSetPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool DegLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// --- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(VarSetPtr vars) : vars_(std::move(vars)) {
  if (!vars_) throw ValidationError("polynomial without a variable set");
}

MultiPoly MultiPoly::constant(VarSetPtr vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::string_view name) {
  const std::size_t i = vars->index(name);
  return variable(std::move(vars), i);
}

MultiPoly MultiPoly::variable(VarSetPtr vars, std::size_t index) {
  if (index >= vars->size()) throw ValidationError("variable index out of range");
  Exponents e(vars->size(), 0);
  e[index] = 1;
  return monomial(std::move(vars), std::move(e));
}

MultiPoly MultiPoly::monomial(VarSetPtr vars, Exponents exps, const Rational& c) {
  if (exps.size() != vars->size()) throw ValidationError("exponent vector length mismatch");
  for (int x : exps)
    if (x < 0) throw ValidationError("negative exponent");
  MultiPoly p(std::move(vars));
  p.add_term(exps, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return crl::total_degree(terms_.begin()->first);
}

int MultiPoly::degree_in(std::size_t var) const {
  int deg = terms_.empty() ? -1 : 0;
  for (const auto& [e, c] : terms_) deg = std::max(deg, e.at(var));
  return deg;
}

bool MultiPoly::is_homogeneous() const {
  const int deg = total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return crl::total_degree(t.first) == deg; });
}

bool MultiPoly::is_homogeneous_in(std::span<const std::size_t> block, int degree) const {
  for (const auto& [e, c] : terms_) {
    int deg = 0;
    for (std::size_t v : block) deg += e.at(v);
    if (deg != degree) return false;
  }
  return true;
}

Rational MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::require_same_vars(const MultiPoly& o) const {
  if (vars_ != o.vars_ && !(*vars_ == *o.vars_))
    throw ValidationError("polynomials over different variable sets");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  require_same_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b);
  MultiPoly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = a.vars_->size();
  Exponents e(n);
  Rational c;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      c = ca * cb;
      out.add_term(e, c);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::size_t var, unsigned times) const {
  if (var >= vars_->size()) throw ValidationError("variable index out of range");
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] < static_cast<int>(times)) continue;
    Rational f = c;
    for (unsigned t = 0; t < times; ++t) f *= e[var] - static_cast<int>(t);
    Exponents d = e;
    d[var] -= static_cast<int>(times);
    out.add_term(d, f);
  }
  return out;
}

MultiPoly MultiPoly::derivative(std::string_view var, unsigned times) const {
  return derivative(vars_->index(var), times);
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& value) const {
  require_same_vars(value);
  if (var >= vars_->size()) throw ValidationError("variable index out of range");
  std::vector<MultiPoly> images;
  images.reserve(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i)
    images.push_back(i == var ? value : variable(vars_, i));
  return compose(images, vars_);
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  return substitute(vars_->index(var), value);
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> images, const VarSetPtr& target) const {
  if (images.size() != vars_->size())
    throw ValidationError("compose: one image per variable is required");
  for (const auto& img : images)
    if (img.vars() != target && !(*img.vars() == *target))
      throw ValidationError("compose: image over a different variable set");

  // powers[i][k] = images[i]^k, built lazily.
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };

  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::embed(const VarSetPtr& target) const {
  std::vector<std::size_t> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto j = target->find(vars_->name(i));
    if (!j) {
      bool used = std::any_of(terms_.begin(), terms_.end(),
                              [&](const auto& t) { return t.first[i] != 0; });
      if (used) throw ValidationError("embed: target lacks variable " + vars_->name(i));
      map[i] = target->size();
    } else {
      map[i] = *j;
    }
  }
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) f[map[i]] = e[i];
    out.add_term(f, c);
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_->size()) throw ValidationError("evaluate: point dimension mismatch");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return (vars_ == o.vars_ || *vars_ == *o.vars_) && terms_ == o.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_->name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

// --- parsing ----------------------------------------------------------------

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, VarSetPtr vars) : text_(text), vars_(std::move(vars)) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ValidationError("polynomial parse error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(vars_);
    bool negate = false;
    if (accept('-'))
      negate = true;
    else
      accept('+');
    MultiPoly t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+'))
        acc += term();
      else if (accept('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc *= Rational(1) / d.coefficient(Exponents(vars_->size(), 0));
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly factor() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MultiPoly::constant(vars_, Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return MultiPoly::variable(vars_, text_.substr(start, pos_ - start));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  VarSetPtr vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const VarSetPtr& vars) {
  return PolyParser(text, vars).parse();
}

MultiPoly parse_poly(std::string_view text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return parse_poly(text, make_vars(std::move(names)));
}

nlohmann::json to_json(const MultiPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
  return {{"variables", p.vars()->names()}, {"terms", terms}, {"text", p.to_string()}};
}

MultiPoly poly_from_json(const nlohmann::json& j) {
  auto vars = make_vars(j.at("variables").get<std::vector<std::string>>());
  MultiPoly p(vars);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exponents").get<Exponents>();
    if (e.size() != vars->size()) throw ValidationError("exponent vector length mismatch");
    p.add_term(e, Rational(t.at("coefficient").get<std::string>()));
  }
  return p;
}

// --- binary forms -----------------------------------------------------------

BinaryForm::BinaryForm(std::vector<MultiPoly> coeffs, Convention convention)
    : coeffs_(std::move(coeffs)), convention_(convention) {
  if (coeffs_.empty()) throw ValidationError("binary form needs at least one coefficient");
  for (const auto& c : coeffs_)
    if (!(*c.vars() == *coeffs_.front().vars()))
      throw ValidationError("binary form coefficients over different variable sets");
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p, std::size_t x, std::size_t y, int degree,
                                 Convention convention) {
  std::vector<MultiPoly> coeffs(static_cast<std::size_t>(degree) + 1, MultiPoly(p.vars()));
  for (const auto& [e, c] : p.terms()) {
    if (e[x] + e[y] != degree) throw ValidationError("polynomial is not a form of the declared degree");
    Exponents rest = e;
    rest[x] = rest[y] = 0;
    coeffs[static_cast<std::size_t>(e[x])].add_term(rest, c);
  }
  BinaryForm plain(std::move(coeffs), Convention::Plain);
  return convention == Convention::Plain ? plain : plain.to_binomial();
}

MultiPoly BinaryForm::plain_coefficient(int k) const {
  const auto& c = coeffs_.at(static_cast<std::size_t>(k));
  if (convention_ == Convention::Plain) return c;
  return c * Rational(binomial(degree(), k));
}

BinaryForm BinaryForm::to_plain() const {
  if (convention_ == Convention::Plain) return *this;
  std::vector<MultiPoly> out;
  for (int k = 0; k <= degree(); ++k) out.push_back(plain_coefficient(k));
  return BinaryForm(std::move(out), Convention::Plain);
}

BinaryForm BinaryForm::to_binomial() const {
  if (convention_ == Convention::Binomial) return *this;
  std::vector<MultiPoly> out;
  for (int k = 0; k <= degree(); ++k)
    out.push_back(coeffs_[static_cast<std::size_t>(k)] * (Rational(1) / Rational(binomial(degree(), k))));
  return BinaryForm(std::move(out), Convention::Binomial);
}

MultiPoly BinaryForm::expand(std::size_t x, std::size_t y) const {
  const auto& vs = vars();
  MultiPoly out(vs);
  for (int k = 0; k <= degree(); ++k) {
    Exponents e(vs->size(), 0);
    e.at(x) = k;
    e.at(y) = degree() - k;
    out += plain_coefficient(k) * MultiPoly::monomial(vs, e);
  }
  return out;
}

BinaryForm BinaryForm::derivative_x() const {
  if (degree() == 0) return BinaryForm({MultiPoly(vars())}, Convention::Plain);
  std::vector<MultiPoly> out;
  for (int k = 1; k <= degree(); ++k) out.push_back(plain_coefficient(k) * Rational(k));
  return BinaryForm(std::move(out), Convention::Plain);
}

BinaryForm BinaryForm::derivative_y() const {
  if (degree() == 0) return BinaryForm({MultiPoly(vars())}, Convention::Plain);
  std::vector<MultiPoly> out;
  for (int k = 0; k < degree(); ++k) out.push_back(plain_coefficient(k) * Rational(degree() - k));
  return BinaryForm(std::move(out), Convention::Plain);
}

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, const VarSetPtr& vars) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly::constant(vars, 1);
  if (n > 24) throw BudgetExceeded("determinant: matrix too large for subset expansion");
  for (const auto& row : m)
    if (row.size() != n) throw ValidationError("determinant: matrix is not square");

  // minors[mask] = signed sum over assignments of the first popcount(mask)
  // rows to the columns in mask.
  std::unordered_map<std::uint32_t, MultiPoly> level{{0u, MultiPoly::constant(vars, 1)}};
  for (std::size_t row = 0; row < n; ++row) {
    std::unordered_map<std::uint32_t, MultiPoly> next;
    for (const auto& [mask, acc] : level) {
      for (std::size_t col = 0; col < n; ++col) {
        const std::uint32_t bit = 1u << col;
        if ((mask & bit) || m[row][col].is_zero()) continue;
        const int above = __builtin_popcount(mask >> (col + 1));
        MultiPoly t = acc * m[row][col];
        if (above & 1) t = -t;
        auto it = next.find(mask | bit);
        if (it == next.end())
          next.emplace(mask | bit, std::move(t));
        else
          it->second += t;
      }
    }
    level = std::move(next);
  }
  auto it = level.find((n == 32) ? 0xffffffffu : ((1u << n) - 1));
  return it == level.end() ? MultiPoly(vars) : it->second;
}

MultiPoly sylvester_resultant(const BinaryForm& a, const BinaryForm& b) {
  const int m = a.degree();
  const int n = b.degree();
  if (m < 1 || n < 1) throw ValidationError("sylvester_resultant: degrees must be at least 1");
  if (!(*a.vars() == *b.vars())) throw ValidationError("sylvester_resultant: different variable sets");
  const auto& vars = a.vars();
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<MultiPoly>> mat(size, std::vector<MultiPoly>(size, MultiPoly(vars)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k)
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = a.plain_coefficient(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k)
      mat[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + k)] = b.plain_coefficient(n - k);
  return determinant(mat, vars);
}

MultiPoly discriminant(const BinaryForm& f) {
  if (f.degree() < 2) throw ValidationError("discriminant: degree must be at least 2");
  return sylvester_resultant(f.derivative_x(), f.derivative_y());
}

}  // namespace crl
