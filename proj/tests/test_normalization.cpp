#include "doctest.h"
#include "logres/normalization.hpp"
#include "test_util.hpp"

using namespace logres;
using logres::testing::P;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

MeroFraction F(const char* num, const char* den, const std::vector<std::string>& vars) {
  return {P(num, vars), P(den, vars)};
}

// h(x(t), y(t)) by full substitution, then dropping t^k for k >= N.
bool vanishes_to_order(const DivisorGerm& D, const BranchParam& b) {
  std::size_t passive = 0;
  for (const auto& c : b.coords) passive += !c;
  std::size_t m = 1 + passive, next = 1;
  std::vector<Poly> images;
  for (const auto& c : b.coords) {
    if (c) {
      Poly img(m);
      for (const auto& t : c->terms()) img += Poly::monomial(m, Monomial::variable(0, t.mono[0]), t.coef);
      images.push_back(img);
    } else {
      images.push_back(Poly::variable(m, next++));
    }
  }
  Poly value = D.h().substitute(images);
  for (const auto& t : value.terms())
    if (t.mono[0] < b.truncation) return false;
  return true;
}

// dim Õ/O_D from the common-denominator form N/d: colength(N + h) subtracted
// from colength(d, h), up to sign.
long colength_gap(const FractionalIdeal& M) {
  const DivisorGerm& D = M.germ();
  auto a = local_colength(M.numerator_ideal());
  auto b = local_colength(Ideal(D.nvars(), {M.denominator(), D.h()}));
  REQUIRE(a);
  REQUIRE(b);
  return static_cast<long>(*b) - static_cast<long>(*a);
}

}  // namespace

TEST_CASE("cusp from a branch file") {
  auto D = DivisorGerm::parse(XY, "x^2 - y^3");
  auto br = branches_from_json(D, R"([{"param": {"x": [[3, "1"]], "y": [[2, "1"]]}, "truncation": 16}])");
  REQUIRE(br.size() == 1);
  auto N = validate_branches(D, br);
  CHECK(equals(*N.normalization, FractionalIdeal::make(D, {F("1", "1", XY), F("x", "y", XY)})));
  CHECK(equals(*N.conductor, FractionalIdeal::from_ideal(D, {P("x", XY), P("y", XY)})));
  CHECK(is_weakly_holomorphic(N, F("x", "y", XY)) == true);
  CHECK(is_weakly_holomorphic(N, F("y^2", "x", XY)) == true);
  CHECK(is_weakly_holomorphic(N, F("y", "x", XY)) == false);
  CHECK(is_weakly_holomorphic(N, F("1", "y", XY)) == false);
  // Round trip through the file format.
  auto again = branches_from_json(D, branches_to_json(D, br));
  CHECK(again.front().coords == br.front().coords);
}

TEST_CASE("node and smooth germ") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto br = branches_from_json(node, R"([{"param": {"x": [], "y": [[1, "1"]]}, "truncation": 8},
                                         {"param": {"x": [[1, "1"]], "y": []}, "truncation": 8}])");
  auto N = validate_branches(node, br);
  CHECK(equals(*N.normalization, FractionalIdeal::make(node, {F("1", "1", XY), F("y", "x+y", XY)})));
  CHECK(equals(*N.conductor, FractionalIdeal::from_ideal(node, {P("x", XY), P("y", XY)})));
  auto comp = normalization_from_components(node, {P("x", XY), P("y", XY)});
  CHECK(equals(*N.normalization, *comp.normalization));

  auto smooth = DivisorGerm::parse(XY, "x");
  auto S = validate_branches(smooth, branches_from_json(smooth, R"([{"param": {"x": [], "y": [[1, "1"]]}, "truncation": 4}])"));
  CHECK(equals(*S.normalization, FractionalIdeal::unit(smooth)));
  CHECK(equals(*S.conductor, FractionalIdeal::unit(smooth)));
  CHECK(equals(*normalization_smooth(smooth).conductor, FractionalIdeal::unit(smooth)));
}

TEST_CASE("branch certification failures") {
  auto D = DivisorGerm::parse(XY, "x^2 - y^3");
  auto load = [&](const char* text) { return validate_branches(D, branches_from_json(D, text)); };
  CHECK_THROWS_AS(load(R"([{"param": {"x": [[3, "1"]], "y": [[2, "2"]]}, "truncation": 16}])"), NormalizationError);
  CHECK_THROWS_AS(load(R"([{"param": {"x": [[6, "1"]], "y": [[4, "1"]]}, "truncation": 16}])"), NormalizationError);
  CHECK_THROWS_AS(load(R"([{"param": {"x": [[0, "1"], [3, "1"]], "y": [[2, "1"]]}, "truncation": 16}])"),
                  NormalizationError);
  // Jets too short to see the order of the Jacobian element.
  auto E = DivisorGerm::parse(XY, "x^3 - y^2");
  CHECK_THROWS_AS(
      validate_branches(E, branches_from_json(E, R"([{"param": {"x": [[2, "1"]], "y": [[3, "1"]]}, "truncation": 4}])")),
      TruncationInsufficient);
  CHECK_NOTHROW(
      validate_branches(E, branches_from_json(E, R"([{"param": {"x": [[2, "1"]], "y": [[3, "1"]]}, "truncation": 5}])")));
  auto node = DivisorGerm::parse(XY, "x*y");
  CHECK_THROWS_AS(validate_branches(node, branches_from_json(node, R"([{"param": {"x": [], "y": [[1, "1"]]}, "truncation": 8}])")),
                  NormalizationError);
  CHECK_THROWS_AS(branches_from_json(D, R"([{"param": {"x": [[3, "1"]]}, "truncation": 16}])"), std::invalid_argument);
  CHECK_THROWS_AS(branches_from_json(D, R"([{"param": {"w": [[3, "1"]]}, "truncation": 16}])"), std::invalid_argument);
  CHECK_THROWS_AS(branches_from_json(D, "not json"), std::invalid_argument);
}

TEST_CASE("rational Newton-Puiseux") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto r = puiseux_rational(node, 10);
  REQUIRE(r.supported);
  CHECK(r.branches.size() == 2);

  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  auto c = puiseux_rational(cusp, 10);
  REQUIRE(c.supported);
  REQUIRE(c.branches.size() == 1);
  CHECK(*c.branches[0].coords[0] == P("t^3", {"t"}));
  CHECK(*c.branches[0].coords[1] == P("t^2", {"t"}));

  CHECK_FALSE(puiseux_rational(DivisorGerm::parse(XY, "x^2 - 2*y^2"), 10).supported);
  CHECK_FALSE(normalization_from_puiseux(DivisorGerm::parse(XY, "x^2 - 2*y^2")).has_value());

  struct Case {
    const char* h;
    std::size_t branches;
  };
  for (Case k : {Case{"x*y*(x+y)", 3}, Case{"x*y*(x-y)", 3}, Case{"x*(x+y)", 2}, Case{"x*(x+y^2)", 2},
                 Case{"x*(x+y^3)", 2}, Case{"x^4 + y^5 + x*y^4", 1}, Case{"x^2 - y^4", 2},
                 Case{"x^3 - y^7 + x^2*y^2", 2}, Case{"y^2 - x^3 - x^2", 2}, Case{"(x^2 - y^3)*(x^3 - y^2)", 2}}) {
    auto D = DivisorGerm::parse(XY, k.h);
    auto res = puiseux_rational(D, 30);
    REQUIRE_MESSAGE(res.supported, k.h);
    CHECK_MESSAGE(res.branches.size() == k.branches, k.h);
    for (const auto& b : res.branches) CHECK_MESSAGE(vanishes_to_order(D, b), k.h);
  }
}

TEST_CASE("delta invariant matches the Milnor formula") {
  // dim Õ/O = delta = (mu + r - 1) / 2 and dim O/C = delta (Gorenstein).
  for (const char* h : {"x*y", "x^2 - y^3", "x*y*(x+y)", "x*(x+y^2)", "x*(x+y^3)", "x^4 + y^5 + x*y^4", "x^2 - y^4",
                        "x^3 - y^7 + x^2*y^2", "(x^2 - y^3)*(x^3 - y^2)"}) {
    auto D = DivisorGerm::parse(XY, h);
    auto N = normalization_from_puiseux(D);
    REQUIRE_MESSAGE(N.has_value(), h);
    long mu = static_cast<long>(milnor_number(D).value());
    long r = static_cast<long>(N->branches.size());
    long delta = (mu + r - 1) / 2;
    CHECK_MESSAGE(colength_gap(*N->normalization) == delta, h);
    CHECK_MESSAGE(-colength_gap(*N->conductor) == delta, h);
  }
}

TEST_CASE("structural properties of the normalization") {
  for (const char* h : {"x*y", "x^2 - y^3", "x*y*(x-y)", "x*(x+y^2)", "x^4 + y^5 + x*y^4"}) {
    auto D = DivisorGerm::parse(XY, h);
    auto N = normalization_from_puiseux(D, 0, 7);
    REQUIRE(N.has_value());
    const auto& O = *N->normalization;
    const auto& C = *N->conductor;
    CHECK(includes(O, FractionalIdeal::unit(D)));
    CHECK(includes(O, product(O, O)));
    CHECK(includes(FractionalIdeal::unit(D), C));
    CHECK(includes(C, product(C, O)));
    CHECK(includes(C, jacobian_fractional(D)));
    for (const auto& g : O.generators()) CHECK(is_weakly_holomorphic(*N, g) == true);
  }
}

TEST_CASE("suspension of the cusp") {
  auto D = DivisorGerm::parse(XYZ, "x^2 - y^3");
  auto N = normalization_from_puiseux(D);
  REQUIRE(N.has_value());
  CHECK(N->branches.front().coords[2] == std::nullopt);
  CHECK(equals(*N->normalization, FractionalIdeal::make(D, {F("1", "1", XYZ), F("x", "y", XYZ)})));
  CHECK(equals(*N->conductor, FractionalIdeal::from_ideal(D, {P("x", XYZ), P("y", XYZ)})));
  for (auto f : {F("x", "y", XYZ), F("z*x", "y", XYZ), F("1", "y", XYZ), F("x", "y*(1+z)", XYZ), F("x", "y*z", XYZ)})
    CHECK(is_weakly_holomorphic(*N, f) == N->normalization->contains(f));
  CHECK_THROWS_AS(branches_from_json(D, R"([{"param": {"x": [[3, "1"]], "y": [[2, "1"]], "z": []}, "truncation": 9}])"),
                  std::invalid_argument);
}

TEST_CASE("arrangements of smooth components") {
  auto D = DivisorGerm::parse(XYZ, "x*y*z");
  auto N = normalization_from_components(D, {P("x", XYZ), P("y", XYZ), P("z", XYZ)});
  CHECK(is_weakly_holomorphic(N, F("x", "x+y+z", XYZ)) == false);
  CHECK(is_weakly_holomorphic(N, F("y*z", "x*y+y*z+x*z", XYZ)) == true);
  CHECK(includes(*N.conductor, jacobian_fractional(D)));
  CHECK_THROWS_AS(normalization_from_components(DivisorGerm::parse(XY, "x^2 - y^3"), {P("x^2 - y^3", XY)}),
                  NormalizationError);
}

TEST_CASE("Whitney umbrella parametrization") {
  auto D = DivisorGerm::parse(XYZ, "x^2 - y^2*z");
  std::vector<std::string> st{"s", "t"};
  auto N = normalization_from_parametrization(D, {st, {P("s*t", st), P("t", st), P("s^2", st)}});
  CHECK(is_weakly_holomorphic(N, F("x", "y", XYZ)) == true);
  CHECK(is_weakly_holomorphic(N, F("z", "y", XYZ)) == false);
  CHECK(is_weakly_holomorphic(N, F("1", "y", XYZ)) == false);
  CHECK_THROWS_AS(conductor(N), NormalizationError);
  CHECK_THROWS_AS(normalization_from_parametrization(D, {st, {P("s", st), P("t", st), P("s", st)}}),
                  NormalizationError);
}
