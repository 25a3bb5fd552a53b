#include <doctest.h>

#include "crl/encomplex.hpp"
#include "crl/error.hpp"
#include "crl/ideal_la.hpp"

using namespace crl;

namespace {

Partition L(const char* text) { return Partition::parse(text); }
Character C(const char* text) { return parse_character(text); }

}  // namespace

TEST_CASE("parameterization of the rational normal curve") {
  for (int d = 1; d <= 6; ++d) {
    const SubstitutionMap s = build_parameterization(Partition::from_parts(std::vector<int>{d}));
    REQUIRE(s.images.size() == static_cast<std::size_t>(d + 1));
    CHECK(s.params->names() == std::vector<std::string>{param_name(d, 0), param_name(d, 1)});
    const MultiPoly g0 = MultiPoly::variable(s.params, 0);
    const MultiPoly g1 = MultiPoly::variable(s.params, 1);
    for (int j = 0; j <= d; ++j) {
      MultiPoly expect = MultiPoly::constant(s.params, Rational(binomial(d, j)));
      for (int i = 0; i < j; ++i) expect = expect * g1;
      for (int i = j; i < d; ++i) expect = expect * g0;
      CHECK(s.images[j] == expect);
    }
  }
}

TEST_CASE("parameterization invariants") {
  for (const char* t : {"3,2", "3,2,2", "2,1,1", "3,3"}) {
    const Partition l = L(t);
    const SubstitutionMap s = build_parameterization(l);
    CAPTURE(t);
    CHECK(s.images.size() == static_cast<std::size_t>(l.degree() + 1));
    std::size_t nparams = 0;
    for (const auto& [r, e] : l.exponents()) nparams += e + 1;
    CHECK(s.params->size() == nparams);
    CHECK(s.param_weights.size() == nparams);
    int degree = 0;
    for (const auto& [r, e] : l.exponents()) degree += r;
    for (const auto& q : s.images) {
      CHECK_FALSE(q.is_zero());
      CHECK(q.is_homogeneous());
      CHECK(q.total_degree() == degree);
    }
  }
  const SubstitutionMap s = build_parameterization(L("3,2"));
  CHECK(s.images[0] == parse_poly("g2_0^2*g3_0^3", s.params));
  CHECK(s.images[5] == parse_poly("g2_1^2*g3_1^3", s.params));
  CHECK(s.images[1] == parse_poly("2*g2_0*g2_1*g3_0^3 + 3*g2_0^2*g3_0^2*g3_1", s.params));
}

TEST_CASE("monomials and weights") {
  const auto mons = monomials_of_degree(3, 2);
  CHECK(mons.size() == 6);
  CHECK(mons.front() == Exponents{2, 0, 0});
  CHECK(mons.back() == Exponents{0, 0, 2});
  CHECK(monomial_weight({1, 0, 1}, 2) == 0);
  CHECK(monomial_weight({0, 0, 2}, 2) == 4);
}

TEST_CASE("graded pieces of known dimension") {
  const GradedPiece p = graded_piece_kernel(L("3,2"), 4);
  CHECK(p.dim_ambient() == 126);
  CHECK(p.dim_ideal() == 28);
  CHECK(p.certified);
  CHECK(kernel_character(p) == C("s12 + s8 + s4 + s0"));
  CHECK(graded_piece_kernel(L("3,2,2"), 6).dim_ideal() == 364);
  for (int d = 1; d <= 6; ++d)
    CHECK(graded_piece_kernel(Partition::from_parts(std::vector<int>{d}), 1).dim_ideal() == 0);
  CHECK(kernel_character(L("3,3"), 3) == C("s12 + s8 + s6"));
}

TEST_CASE("rational normal curve quadrics") {
  for (int d = 3; d <= 6; ++d) {
    Character expect;
    for (int r = 1; 2 * d - 4 * r >= 0; ++r) expect = expect + Character::irreducible(2 * d - 4 * r);
    CAPTURE(d);
    CHECK(kernel_character(Partition::from_parts(std::vector<int>{d}), 2) == expect);
  }
}

TEST_CASE("weight blocks are symmetric and sum to the kernel") {
  for (const char* t : {"3,2", "4,1", "2,2,1", "3,3"})
    for (int m = 1; m <= 4; ++m) {
      const GradedPiece p = graded_piece_kernel(L(t), m);
      const auto dims = p.kernel_weight_dims();
      std::size_t total = 0;
      std::size_t columns = 0;
      for (const auto& [w, k] : dims) {
        total += k;
        const auto it = dims.find(-w);
        CHECK((it == dims.end() ? 0 : it->second) == k);
      }
      for (const auto& b : p.blocks) {
        columns += b.columns.size();
        CHECK(b.rank + b.kernel_dim == b.columns.size());
        CHECK(b.kernel.size() == b.kernel_dim);
      }
      CHECK(total == p.dim_ideal());
      CHECK(columns == p.dim_ambient());
      CHECK(kernel_character(p).dim() == static_cast<long>(p.dim_ideal()));
    }
}

TEST_CASE("kernel polynomials vanish on the parameterization") {
  for (const char* t : {"3,2", "2,1,1"}) {
    const Partition l = L(t);
    const SubstitutionMap s = build_parameterization(l);
    const int m = l.num_parts() == 2 ? 4 : 3;
    const GradedPiece p = graded_piece_kernel(l, m);
    const auto polys = kernel_polynomials(p);
    CHECK(polys.size() == p.dim_ideal());
    for (const auto& f : polys) {
      CHECK(f.is_homogeneous());
      CHECK(f.total_degree() == m);
      CHECK(f.compose(s.images, s.params).is_zero());
    }
  }
}

TEST_CASE("minimal generators by degree") {
  CHECK(minimal_generators_by_degree(L("3,2"), 5) ==
        std::map<int, std::size_t>{{1, 0}, {2, 0}, {3, 0}, {4, 28}, {5, 0}});
  const auto g33 = minimal_generators_by_degree(L("3,3"), 4);
  CHECK(g33.at(3) == 29);
  CHECK(g33.at(4) == 0);
  CHECK(minimal_generators_by_degree(L("5"), 2).at(2) == 10);
}

TEST_CASE("Hilbert function") {
  const MultiPoly h32 = hilbert_polynomial_two_part(L("3,2"));
  const MultiPoly h41 = hilbert_polynomial_two_part(L("4,1"));
  for (int m = 3; m <= 5; ++m) {
    CHECK(Rational(static_cast<long>(hilbert_function(L("3,2"), m))) == h32.evaluate(std::vector<Rational>{Rational(m)}));
    CHECK(hilbert_function(L("3,2"), m) == static_cast<std::size_t>(6 * m * m + 2));
  }
  CHECK(hilbert_function(L("3,2"), 1) == 6);
  CHECK(hilbert_function(L("3,2"), 2) == 21);
  for (int m = 1; m <= 4; ++m) {
    CHECK(Rational(static_cast<long>(hilbert_function(L("4,1"), m))) == h41.evaluate(std::vector<Rational>{Rational(m)}));
  }
}

TEST_CASE("budget and argument errors") {
  KernelOptions small;
  small.max_ambient_dim = 10;
  CHECK_THROWS_AS(graded_piece_kernel(L("3,2"), 4, small), BudgetExceeded);
  CHECK_THROWS_AS(graded_piece_kernel(L("3,2"), 0), ValidationError);
}

TEST_CASE("report and JSON") {
  const GradedPiece lower = graded_piece_kernel(L("3,2"), 3);
  const GradedPiece upper = graded_piece_kernel(L("3,2"), 4);
  const GradedPieceReport r = make_report(upper, &lower);
  CHECK(r.dim_ideal == 28);
  REQUIRE(r.minimal_generators.has_value());
  CHECK(*r.minimal_generators == 28);
  CHECK(r.hilbert_value == 98);
  CHECK(r.certified);
  const auto j = to_json(r);
  CHECK(j["method"] == "linear-algebra");
  CHECK(j["dim_ideal"] == 28);
  CHECK(j["certified"] == true);
  CHECK(to_json(make_report(upper))["minimal_generators"].is_null());
  CHECK(make_report(graded_piece_kernel(L("3"), 1)).minimal_generators == std::optional<std::size_t>(0));
}
