#include "crl/charring.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "crl/error.hpp"

namespace crl {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw InconsistencyError("character multiplicity overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw InconsistencyError("character multiplicity overflow");
  return out;
}

}  // namespace

Character::Character(const Mults& mults) {
  for (const auto& [k, m] : mults) add(k, m);
}

Character Character::irreducible(int k, std::int64_t mult) {
  Character c;
  c.add(k, mult);
  return c;
}

void Character::add(int k, std::int64_t m) {
  if (k < 0) throw ValidationError("character index must be nonnegative");
  if (m == 0) return;
  auto [it, inserted] = mults_.try_emplace(k, m);
  if (!inserted) {
    it->second = checked_add(it->second, m);
    if (it->second == 0) mults_.erase(it);
  }
}

std::int64_t Character::mult(int k) const {
  auto it = mults_.find(k);
  return it == mults_.end() ? 0 : it->second;
}

bool Character::is_nonnegative() const {
  return std::all_of(mults_.begin(), mults_.end(), [](const auto& km) { return km.second > 0; });
}

int Character::highest() const { return mults_.empty() ? -1 : mults_.rbegin()->first; }

std::int64_t Character::dim() const {
  std::int64_t d = 0;
  for (const auto& [k, m] : mults_) d = checked_add(d, checked_mul(m, k + 1));
  return d;
}

std::map<int, std::int64_t> Character::weights() const {
  if (!is_nonnegative()) throw InconsistencyError("weights of a virtual character");
  std::map<int, std::int64_t> out;
  for (const auto& [k, m] : mults_)
    for (int w = -k; w <= k; w += 2) out[w] += m;
  return out;
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [k, m] : o.mults_) add(k, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [k, m] : o.mults_) add(k, -m);
  return *this;
}

Character& Character::operator*=(std::int64_t c) {
  if (c == 0) {
    mults_.clear();
    return *this;
  }
  for (auto& [k, m] : mults_) m = checked_mul(m, c);
  return *this;
}

std::string Character::to_string() const {
  if (mults_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = mults_.rbegin(); it != mults_.rend(); ++it) {
    const auto [k, m] = *it;
    const std::int64_t mag = m < 0 ? -m : m;
    if (first)
      out += m < 0 ? "-" : "";
    else
      out += m < 0 ? " - " : " + ";
    first = false;
    if (mag != 1) out += std::to_string(mag);
    out += "s" + std::to_string(k);
  }
  return out;
}

std::string Character::to_brace_string() const {
  if (!is_nonnegative()) throw InconsistencyError("brace form of a virtual character");
  std::string out = "{";
  bool first = true;
  for (auto it = mults_.rbegin(); it != mults_.rend(); ++it) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(it->first);
    if (it->second != 1) out += "^" + std::to_string(it->second);
  }
  return out + "}";
}

Character cg_tensor(int m, int n) {
  if (m < 0 || n < 0) throw ValidationError("cg_tensor: negative degree");
  Character out;
  for (int r = 0; r <= std::min(m, n); ++r) out += Character::irreducible(m + n - 2 * r);
  return out;
}

Character tensor(const Character& a, const Character& b) {
  std::map<int, std::int64_t> acc;
  for (const auto& [k, x] : a.mults()) {
    for (const auto& [l, y] : b.mults()) {
      const std::int64_t xy = checked_mul(x, y);
      for (int r = 0; r <= std::min(k, l); ++r) {
        auto& slot = acc[k + l - 2 * r];
        slot = checked_add(slot, xy);
      }
    }
  }
  return Character(acc);
}

namespace {

// counts[s] = number of partitions of s into at most `parts` parts, each at
// most `max_part`, for s = 0..max_r. O(max_r * parts * max_part).
std::vector<std::int64_t> partition_counts(int max_r, int parts, int max_part) {
  const auto R = static_cast<std::size_t>(max_r);
  const auto K = static_cast<std::size_t>(parts);
  // exact[k][s]: partitions of s into exactly k parts drawn from sizes seen so far.
  std::vector<std::vector<std::int64_t>> exact(K + 1, std::vector<std::int64_t>(R + 1, 0));
  exact[0][0] = 1;
  for (int size = 1; size <= max_part; ++size) {
    const auto z = static_cast<std::size_t>(size);
    for (std::size_t k = 1; k <= K; ++k)
      for (std::size_t s = z; s <= R; ++s) exact[k][s] = checked_add(exact[k][s], exact[k - 1][s - z]);
  }
  std::vector<std::int64_t> counts(R + 1, 0);
  for (std::size_t s = 0; s <= R; ++s)
    for (std::size_t k = 0; k <= K; ++k) counts[s] = checked_add(counts[s], exact[k][s]);
  return counts;
}

}  // namespace

std::int64_t bounded_partitions(int r, int parts, int max_part) {
  if (r < 0 || parts < 0 || max_part < 0) return 0;
  return partition_counts(r, parts, max_part).back();
}

Character plethysm_sym_sym(int m, int n) {
  if (n < 0) throw ValidationError("plethysm_sym_sym: negative inner degree");
  if (m < 0) return {};
  const int top = m * n;
  const auto p = partition_counts(top / 2, m, n);
  Character out;
  for (int r = 0; r <= top / 2; ++r) {
    const auto i = static_cast<std::size_t>(r);
    out += Character::irreducible(top - 2 * r, p[i] - (r == 0 ? 0 : p[i - 1]));
  }
  return out;
}

Character wedge_sym(int k, int n) {
  if (n < 0) throw ValidationError("wedge_sym: negative degree");
  if (k < 0 || k > n + 1) return {};
  return plethysm_sym_sym(k, n + 1 - k);
}

Character char_from_weights(const std::map<int, std::int64_t>& weight_counts) {
  auto count = [&](int w) -> std::int64_t {
    auto it = weight_counts.find(w);
    return it == weight_counts.end() ? 0 : it->second;
  };
  for (const auto& [w, c] : weight_counts) {
    if (c < 0) throw ValidationError("char_from_weights: negative weight count");
    if (count(-w) != c) throw ValidationError("char_from_weights: weight multiset is not symmetric");
  }
  Character::Mults mults;
  const int top = weight_counts.empty() ? -1 : weight_counts.rbegin()->first;
  for (int w = 0; w <= top; ++w) {
    const std::int64_t m = count(w) - count(w + 2);
    if (m < 0)
      throw InconsistencyError("char_from_weights: weight " + std::to_string(w) +
                               " has fewer vectors than weight " + std::to_string(w + 2));
    mults[w] = m;
  }
  return Character(mults);
}

Character parse_character(std::string_view text) {
  auto fail = [&](const std::string& msg) -> Character {
    throw ValidationError("character parse error: " + msg + " in '" + std::string(text) + "'");
  };
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) return fail("empty input");
  if (s == "0") return {};

  Character out;
  std::size_t i = 0;
  auto number = [&]() -> long {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (start == i) fail("expected a number");
    return std::stol(s.substr(start, i - start));
  };

  if (s.front() == '{') {
    if (s.back() != '}') return fail("missing '}'");
    i = 1;
    if (s.size() == 2) return out;
    while (i < s.size() - 1) {
      const int k = static_cast<int>(number());
      long m = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        m = number();
      }
      out += Character::irreducible(k, m);
      if (s[i] == ',') ++i;
      else if (i != s.size() - 1) return fail("expected ',' or '}'");
    }
    return out;
  }

  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      return fail("expected '+' or '-'");
    }
    std::int64_t m = 1;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      m = number();
      if (i < s.size() && s[i] == '*') ++i;
    }
    if (i >= s.size() || s[i] != 's') return fail("expected 's'");
    ++i;
    const int k = static_cast<int>(number());
    out += Character::irreducible(k, sign * m);
  }
  return out;
}

nlohmann::json to_json(const Character& c) {
  nlohmann::json mults = nlohmann::json::object();
  for (const auto& [k, m] : c.mults()) mults[std::to_string(k)] = m;
  return {{"mults", mults}, {"text", c.to_string()}, {"dim", c.dim()}};
}

Character character_from_json(const nlohmann::json& j) {
  const auto& mults = j.contains("mults") ? j.at("mults") : j;
  Character::Mults out;
  for (const auto& [k, m] : mults.items()) out[std::stoi(k)] = m.get<std::int64_t>();
  return Character(out);
}

}  // namespace crl
