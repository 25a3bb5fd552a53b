#pragma once

// Virtual characters of SL2: integer combinations of the irreducible
// characters s_k = chi(Sym^k V).

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace crl {

class Character {
 public:
  using Mults = std::map<int, std::int64_t>;

  Character() = default;
  // Zero entries are dropped; negative k is rejected.
  explicit Character(const Mults& mults);

  static Character irreducible(int k, std::int64_t mult = 1);
  static Character trivial() { return irreducible(0); }

  const Mults& mults() const { return mults_; }
  std::int64_t mult(int k) const;
  bool is_zero() const { return mults_.empty(); }
  bool is_nonnegative() const;
  int highest() const;  // -1 when zero

  // sum mult_k (k+1); may be negative for virtual characters.
  std::int64_t dim() const;

  // Weight multiset as weight -> count; requires a nonnegative character.
  std::map<int, std::int64_t> weights() const;

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(std::int64_t c);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Character a, std::int64_t c) { return a *= c; }
  friend Character operator*(std::int64_t c, Character a) { return a *= c; }
  bool operator==(const Character&) const = default;

  // "s12 + s8 + 2s4 - s0"; "0" for the zero character.
  std::string to_string() const;
  // "{30,26,22^2}"; nonnegative characters only.
  std::string to_brace_string() const;

 private:
  void add(int k, std::int64_t m);

  Mults mults_;
};

// Sym^m V (x) Sym^n V.
Character cg_tensor(int m, int n);

// Bilinear extension of cg_tensor.
Character tensor(const Character& a, const Character& b);

// Number of partitions of r into at most parts parts, each at most max_part.
std::int64_t bounded_partitions(int r, int parts, int max_part);

// Sym^m(Sym^n V) by the Cayley-Sylvester formula; zero for m < 0.
Character plethysm_sym_sym(int m, int n);

// wedge^k(Sym^n V) = Sym^k(Sym^(n+1-k) V); zero outside 0 <= k <= n+1.
Character wedge_sym(int k, int n);

// The unique character with the given weight multiplicities. Throws
// ValidationError for asymmetric input and InconsistencyError when a
// multiplicity would be negative.
Character char_from_weights(const std::map<int, std::int64_t>& weight_counts);

// Accepts "s12 + 2s7 - s0", "0", or brace form "{12,8,4,0}" / "{7^2,3}".
Character parse_character(std::string_view text);

nlohmann::json to_json(const Character& c);
Character character_from_json(const nlohmann::json& j);

}  // namespace crl
