#include <doctest.h>

#include "crl/covariants.hpp"
#include "crl/error.hpp"

using namespace crl;

namespace {

Partition L(const char* text) { return Partition::parse(text); }

CovariantExpr xy_form(int d, const char* body, int q) {
  return CovariantExpr(d, 0, q, parse_poly(body, covariant_vars(d)), body);
}

}  // namespace

TEST_CASE("transvectant normalization") {
  const CovariantExpr x2 = xy_form(2, "x^2", 2);
  const CovariantExpr y2 = xy_form(2, "y^2", 2);
  CHECK(transvectant(x2, y2, 2).body == parse_poly("1", covariant_vars(2)));
  CHECK(transvectant(x2, y2, 0).body == parse_poly("x^2*y^2", covariant_vars(2)));
  CHECK(transvectant(xy_form(2, "x", 1), xy_form(2, "y", 1), 1).body == parse_poly("1", covariant_vars(2)));
  CHECK_THROWS_AS(transvectant(x2, y2, 3), ValidationError);
}

TEST_CASE("antisymmetry and vanishing of odd self-transvectants") {
  for (int d = 2; d <= 6; ++d) {
    const auto named = named_covariants(d);
    const CovariantExpr& f = named.at("F");
    const CovariantExpr& h = named.at("H");
    CHECK(transvectant(f, f, 1).is_zero());
    for (int r = 0; r <= std::min(4, std::min(f.q, h.q)); ++r) {
      const CovariantExpr ab = transvectant(f, h, r);
      const CovariantExpr ba = transvectant(h, f, r);
      CAPTURE(d);
      CAPTURE(r);
      CHECK(ab.body == (r % 2 ? Rational(-1) : Rational(1)) * ba.body);
    }
  }
}

TEST_CASE("named covariants and their types") {
  const auto n4 = named_covariants(4);
  CHECK(n4.count("A") == 0);
  CHECK(n4.at("i").p == 2);
  CHECK(n4.at("i").q == 0);
  for (int d = 2; d <= 6; ++d) {
    const auto named = named_covariants(d);
    CHECK(named.at("F").p == 1);
    CHECK(named.at("F").q == d);
    CHECK(named.at("H").p == 2);
    CHECK(named.at("H").q == 2 * d - 4);
    if (d >= 4) CHECK(named.at("i").q == 2 * d - 8);
    if (d >= 5) {
      CHECK(named.at("A").p == 4);
      CHECK(named.at("A").q == 4 * d - 20);
    }
    if (d >= 6) CHECK(named.at("FF6").q == 2 * d - 12);
    for (const auto& [name, c] : named) {
      c.check_type();
      CHECK_FALSE(c.is_zero());
    }
  }
  const auto n2 = named_covariants(2);
  CHECK(n2.at("H").body == parse_poly("2*a0*a2 - 2*a1^2", covariant_vars(2)));
}

TEST_CASE("generic form") {
  const CovariantExpr f = generic_form(3);
  CHECK(f.body == parse_poly("a0*y^3 + 3*a1*x*y^2 + 3*a2*x^2*y + a3*x^3", covariant_vars(3)));
  CHECK(has_irreducible_weight_profile(f));
  CHECK(has_irreducible_weight_profile(named_covariants(5).at("H")));
  CHECK_FALSE(has_irreducible_weight_profile(xy_form(3, "x^2", 2)));
}

TEST_CASE("vanishing on loci") {
  for (int d = 2; d <= 6; ++d) {
    const Partition rnc = Partition::from_parts(std::vector<int>{d});
    const auto named = named_covariants(d);
    CHECK(vanishes_on_locus(named.at("H"), rnc));
    CHECK_FALSE(vanishes_on_locus(named.at("F"), rnc));
    CHECK(substitute_on_locus(named.at("F"), rnc).total_degree() == d + d);
  }
  CHECK_FALSE(vanishes_on_locus(named_covariants(4).at("H"), L("3,1")));
  CHECK(vanishes_on_locus(named_covariants(4).at("i"), L("3,1")));
  CHECK_FALSE(vanishes_on_locus(named_covariants(4).at("i"), L("2,2")));
  CHECK_THROWS_AS(vanishes_on_locus(generic_form(4), L("3,2")), ValidationError);
}

TEST_CASE("parsing") {
  const auto n = named_covariants(5);
  CHECK(parse_covariant("F", 5).body == n.at("F").body);
  CHECK(parse_covariant("(F,F)^2", 5).body == n.at("H").body);
  CHECK(parse_covariant("T(F,F,2)", 5).body == n.at("H").body);
  CHECK(parse_covariant("(i,F)", 5).body == transvectant(n.at("i"), n.at("F"), 1).body);
  CHECK(parse_covariant("i.H", 5).body == (n.at("i") * n.at("H")).body);
  CHECK(parse_covariant("H^2 - H*H", 5).is_zero());
  const CovariantExpr c = parse_covariant("25*H^2 - 6*i*F^2", 5);
  CHECK(c.p == 4);
  CHECK(c.q == 12);
  CHECK_THROWS_AS(parse_covariant("Q", 5), ValidationError);
  CHECK_THROWS_AS(parse_covariant("(F,H", 5), ValidationError);
  CHECK_THROWS_AS(parse_covariant("F + H", 5), ValidationError);
  CHECK_THROWS_AS(parse_covariant("i", 3), ValidationError);
}

TEST_CASE("calibration recovers the table coefficients") {
  const auto n5 = named_covariants(5);
  const auto& F = n5.at("F");
  const auto& H = n5.at("H");
  const auto& i = n5.at("i");
  const auto c1 = calibrate_combination({H * H, i * F * F}, L("3,2"));
  REQUIRE(c1.size() == 1);
  CHECK(c1[0] == std::vector<Integer>{25, -6});
  const auto c2 = calibrate_combination({i * H, F * transvectant(i, F, 2)}, L("3,2"));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == std::vector<Integer>{5, 6});
  const auto c3 = calibrate_combination({i * i, transvectant(i, H, 2)}, L("3,2"));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0] == std::vector<Integer>{2, 15});

  const auto n6 = named_covariants(6);
  const auto c4 = calibrate_combination({n6.at("F") * n6.at("FF6"), transvectant(n6.at("F"), n6.at("i"), 2)}, L("3,3"));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0] == std::vector<Integer>{8, -75});
  CHECK(calibrate_combination({F}, L("3,2")).empty());
  CHECK_THROWS_AS(calibrate_combination({}, L("3,2")), ValidationError);
  CHECK_THROWS_AS(calibrate_combination({F, H}, L("3,2")), ValidationError);
}

TEST_CASE("criterion table covariants vanish and are nonzero") {
  const auto keys = criterion_table_keys();
  CHECK(keys.size() == 7);
  for (const auto& [d, l] : keys)
    for (const auto& entry : criterion_table(d, l))
      for (const auto& c : entry.covariants) {
        CAPTURE(c.text);
        CAPTURE(l.to_string());
        CHECK(c.expr.p == entry.m);
        CHECK(c.expr.q == c.order);
        CHECK_FALSE(c.expr.is_zero());
        CHECK(vanishes_on_locus(c.expr, l));
        CHECK(has_irreducible_weight_profile(c.expr));
      }
  CHECK_THROWS_AS(criterion_table(5, L("2,2,1")), ValidationError);
}

TEST_CASE("JSON form") {
  const auto j = to_json(named_covariants(4).at("H"));
  CHECK(j["p"] == 2);
  CHECK(j["q"] == 4);
}
