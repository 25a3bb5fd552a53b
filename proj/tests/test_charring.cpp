#include <doctest.h>

#include <random>

#include "crl/arith.hpp"
#include "crl/charring.hpp"
#include "crl/error.hpp"
#include "weight_oracle.hpp"

using namespace crl;

namespace {

Character from_oracle(const oracle::Weights& w) { return Character(oracle::decompose(w)); }

}  // namespace

TEST_CASE("cg_tensor examples") {
  CHECK(cg_tensor(2, 3) == parse_character("s5 + s3 + s1"));
  CHECK(cg_tensor(0, 7) == Character::irreducible(7));
  const Character c = cg_tensor(5, 5);
  CHECK(c == parse_character("s10 + s8 + s6 + s4 + s2 + s0"));
  CHECK(c.dim() == 36);
}

TEST_CASE("tensor examples") {
  CHECK(tensor(Character::irreducible(2), Character::trivial()) == Character::irreducible(2));
  CHECK(tensor(parse_character("s1 + s0"), Character::irreducible(1)) == parse_character("s2 + s1 + s0"));
  CHECK(tensor(Character::irreducible(3), Character::irreducible(4)).dim() == 20);
}

TEST_CASE("plethysm examples") {
  for (int n = 0; n <= 6; ++n) CHECK(plethysm_sym_sym(1, n) == Character::irreducible(n));
  CHECK(plethysm_sym_sym(2, 5) == parse_character("s10 + s6 + s2"));
  for (int m = 0; m <= 6; ++m) CHECK(plethysm_sym_sym(m, 0) == Character::trivial());
  CHECK(plethysm_sym_sym(-1, 3).is_zero());
}

TEST_CASE("wedge examples") {
  for (int n = 0; n <= 8; ++n) CHECK(wedge_sym(n + 1, n) == Character::trivial());
  CHECK(wedge_sym(2, 3) == parse_character("s4 + s0"));
  CHECK(wedge_sym(0, 7) == Character::trivial());
  CHECK(wedge_sym(9, 7).is_zero());
}

TEST_CASE("char_from_weights") {
  CHECK(char_from_weights({{1, 1}, {-1, 1}}) == Character::irreducible(1));
  CHECK(char_from_weights({{2, 1}, {0, 2}, {-2, 1}}) == parse_character("s2 + s0"));
  CHECK(char_from_weights(oracle::sym_power(2, 5)) == plethysm_sym_sym(2, 5));
  CHECK_THROWS_AS(char_from_weights({{2, 1}}), ValidationError);
  CHECK_THROWS_AS(char_from_weights({{2, 1}, {-2, 1}}), InconsistencyError);
}

TEST_CASE("oracle: plethysm for m, n <= 8") {
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; n <= 8; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      CHECK(plethysm_sym_sym(m, n) == from_oracle(oracle::sym_power(m, n)));
      CHECK(plethysm_sym_sym(m, n).dim() == to_int64(binomial(n + m, m)));
    }
}

TEST_CASE("oracle: Clebsch-Gordan for m, n <= 12") {
  for (int m = 0; m <= 12; ++m)
    for (int n = 0; n <= 12; ++n)
      CHECK(cg_tensor(m, n) == from_oracle(oracle::tensor(oracle::irreducible(m), oracle::irreducible(n))));
}

TEST_CASE("oracle: exterior powers for k <= n+1 <= 13") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n + 1; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(wedge_sym(k, n) == from_oracle(oracle::wedge_power(k, n)));
    }
}

TEST_CASE("ring laws on random characters") {
  std::mt19937 rng(20261016);
  auto random_char = [&] {
    Character::Mults m;
    std::uniform_int_distribution<int> k(0, 6);
    std::uniform_int_distribution<int> c(-2, 3);
    for (int i = 0; i < 3; ++i) m[k(rng)] += c(rng);
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
    return Character(m);
  };
  for (int trial = 0; trial < 200; ++trial) {
    const Character a = random_char();
    const Character b = random_char();
    const Character c = random_char();
    CHECK(tensor(a, b) == tensor(b, a));
    CHECK(tensor(tensor(a, b), c) == tensor(a, tensor(b, c)));
    CHECK(tensor(a, b + c) == tensor(a, b) + tensor(a, c));
    CHECK(tensor(a, b).dim() == a.dim() * b.dim());
  }
}

TEST_CASE("parsing and printing") {
  const Character c = parse_character("s13 + s11 + 2s7 - s0");
  CHECK(c.mult(7) == 2);
  CHECK(c.mult(0) == -1);
  CHECK(c.to_string() == "s13 + s11 + 2s7 - s0");
  CHECK(parse_character(c.to_string()) == c);
  CHECK(parse_character("0").is_zero());
  CHECK(Character().to_string() == "0");
  const Character b = parse_character("{30,26,24,22^2,2^2}");
  CHECK(b.mult(22) == 2);
  CHECK(b.to_brace_string() == "{30,26,24,22^2,2^2}");
  CHECK_THROWS_AS(parse_character("s"), ValidationError);
  CHECK_THROWS_AS(parse_character("t3"), ValidationError);
  CHECK(character_from_json(to_json(c)) == c);
  CHECK(to_json(c)["text"] == c.to_string());
}

TEST_CASE("virtual characters") {
  const Character v = Character::irreducible(4) - Character::irreducible(2) * 2;
  CHECK_FALSE(v.is_nonnegative());
  CHECK(v.dim() == 5 - 6);
  CHECK(v.highest() == 4);
  CHECK((v - v).is_zero());
  CHECK_THROWS(Character::irreducible(-1));
}
