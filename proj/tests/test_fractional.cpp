#include "doctest.h"
#include "logres/fractional_ideal.hpp"
#include "test_util.hpp"

using namespace logres;
using logres::testing::P;

namespace {

const std::vector<std::string> XY{"x", "y"};

MeroFraction F(const char* num, const char* den) { return {P(num, XY), P(den, XY)}; }

}  // namespace

TEST_CASE("make with a common denominator") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto I = FractionalIdeal::make(node, {F("1", "1"), F("y", "x+y")});
  CHECK(I.denominator() == P("x+y", XY));
  CHECK(I.numerator_ideal().equals_local(Ideal(2, {P("x+y", XY), P("y", XY), P("x*y", XY)})));
  CHECK(I.contains(F("x", "x+y")));
  CHECK_FALSE(I.contains(F("1", "x+y")));

  auto O = FractionalIdeal::make(node, {F("1", "1")});
  CHECK(equals(O, FractionalIdeal::unit(node)));

  try {
    FractionalIdeal::make(node, {F("1", "x")});
    FAIL("expected a zero divisor error");
  } catch (const ZeroDivisorError& e) {
    CHECK(e.witness() == P("y", XY));
    CHECK(node.divisible_local(e.witness() * e.denominator()));
  }
}

TEST_CASE("nonzerodivisors modulo h") {
  auto node = DivisorGerm::parse(XY, "x*y");
  CHECK(is_nonzerodivisor(node, P("x+y", XY)));
  CHECK_FALSE(is_nonzerodivisor(node, P("x", XY)));
  CHECK(is_nonzerodivisor(node, P("1+x", XY)));
  // Locally (x-1)y is y times a unit: a zero divisor.
  CHECK_FALSE(is_nonzerodivisor(node, P("(x-1)*y", XY)));
  // Oracle: <h> : q == <h> at the origin.
  for (const char* q : {"x+y", "x", "x^2+y^3", "y*(1+x)", "2*x-y"}) {
    Poly qp = P(q, XY);
    Ideal quot = ideal_quotient(node.principal(), Ideal(2, {qp}));
    CHECK(is_nonzerodivisor(node, qp) == node.principal().contains_local(quot));
  }
}

TEST_CASE("duals of Jacobian ideals") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto Jn = jacobian_fractional(node);
  auto expected_node = FractionalIdeal::make(node, {F("1", "1"), F("y", "x+y")});
  CHECK(equals(dual(Jn), expected_node));

  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  auto Jc = jacobian_fractional(cusp);
  CHECK(equals(dual(Jc), FractionalIdeal::make(cusp, {F("1", "1"), F("y", "x")})));
  // Numerator oracle: <x, x^2 - y^3> : <x, y^2> = <x, y>.
  CHECK(ideal_quotient(Ideal(2, {P("x", XY), cusp.h()}), Jc.numerator_ideal()).equals(Ideal(2, {P("x", XY), P("y", XY)})));

  auto O = FractionalIdeal::unit(cusp);
  CHECK(equals(dual(O), O));
}

TEST_CASE("inclusion, product and reflexivity") {
  for (const char* h : {"x*y", "x^2 - y^3", "x*y*(x+y)", "x*(x+y^2)"}) {
    auto D = DivisorGerm::parse(XY, h);
    auto J = jacobian_fractional(D);
    auto O = FractionalIdeal::unit(D);
    auto R = dual(J);
    CHECK(equals(J, J));
    CHECK(equals(product(O, J), J));
    CHECK(includes(O, J));
    CHECK(includes(R, O));
    // Duality reverses inclusions.
    CHECK(includes(dual(J), dual(O)));
    CHECK(is_reflexive(J));
    CHECK(is_reflexive(O));
    auto pr = product(J, R);
    CHECK(includes(O, pr));
  }
}

TEST_CASE("duals agree across nonzerodivisor choices") {
  auto D = DivisorGerm::parse(XY, "x*y*(x+y)");
  auto J = jacobian_fractional(D);
  auto base = dual(J, 0);
  for (std::uint64_t seed : {1u, 2u, 17u}) CHECK(equals(dual(J, seed), base));
}
