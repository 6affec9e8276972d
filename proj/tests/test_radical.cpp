#include "doctest.h"
#include "logres/radical.hpp"
#include "test_util.hpp"

using namespace logres;
using logres::testing::P;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

Ideal ideal(const std::vector<std::string>& v, std::initializer_list<const char*> gens) {
  std::vector<Poly> ps;
  for (const char* g : gens) ps.push_back(P(g, v));
  return Ideal(v.size(), ps);
}

}  // namespace

TEST_CASE("cusp Jacobian ideal is not radical") {
  auto r = radical_test_local(ideal(XY, {"x", "y^2"}));
  CHECK(r.verdict == RadicalVerdict::not_radical);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == P("y", XY));
  CHECK(r.witness_power == 2);
  CHECK(r.radical_ideal.equals(ideal(XY, {"x", "y"})));
}

TEST_CASE("maximal ideal is radical") {
  CHECK(radical_test(ideal(XY, {"x", "y"})).verdict == RadicalVerdict::radical);
  CHECK(radical_test_local(ideal(XY, {"x", "y"})).verdict == RadicalVerdict::radical);
}

TEST_CASE("squarefree univariate ideal is radical") {
  std::vector<std::string> v{"x"};
  CHECK(radical_test(ideal(v, {"x^2 + 1"})).verdict == RadicalVerdict::radical);
  CHECK(radical_test(ideal(v, {"x^3 - x^2"})).verdict == RadicalVerdict::not_radical);
  // x^2 + 1 is a unit at the origin.
  CHECK(radical_test_local(ideal(v, {"x^2 + 1"})).verdict == RadicalVerdict::radical);
}

TEST_CASE("Jacobian of xyz is the radical ideal of the coordinate axes") {
  Ideal J = ideal(XYZ, {"x*y*z", "y*z", "x*z", "x*y"});
  Ideal axes = intersect(intersect(ideal(XYZ, {"x", "y"}), ideal(XYZ, {"x", "z"})), ideal(XYZ, {"y", "z"}));
  CHECK(J.equals(axes));
  CHECK(radical(J).equals(axes));
  CHECK(radical_test_local(J).verdict == RadicalVerdict::radical);
}

TEST_CASE("radicals of mixed-dimension ideals") {
  CHECK(radical(ideal(XY, {"x^2", "x*y"})).equals(ideal(XY, {"x"})));
  CHECK(radical(ideal(XYZ, {"x^2", "y*z"})).equals(ideal(XYZ, {"x", "y*z"})));
  Ideal umbrella_jacobian = ideal(XYZ, {"x^2 - y^2*z", "2*x", "-2*y*z", "-y^2"});
  auto r = radical_test_local(umbrella_jacobian);
  CHECK(r.verdict == RadicalVerdict::not_radical);
  CHECK(r.radical_ideal.equals(ideal(XYZ, {"x", "y"})));
  // Away from the origin the embedded point does not matter.
  CHECK(radical(ideal(XY, {"(x-1)^2", "(x-1)*y"})).equals(ideal(XY, {"x-1"})));
  CHECK(radical_test_local(ideal(XY, {"(x-1)^2", "(x-1)*y"})).verdict == RadicalVerdict::radical);
}

TEST_CASE("radical contains the ideal and lies in its radical") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2; ++k) {
      Poly a = logres::testing::random_poly_at_origin(rng, 3, 2, 2);
      gens.push_back(a * a * logres::testing::random_poly(rng, 3, 1, 2));
    }
    Ideal I(3, gens);
    Ideal R = radical(I);
    CHECK(R.contains(I));
    for (const auto& g : R.gens()) {
      bool nilpotent = false;
      Poly power = g;
      for (int k = 1; k <= 16 && !nilpotent; ++k, power = power * g) nilpotent = I.contains(power);
      CHECK(nilpotent);
    }
    CHECK(radical(R).equals(R));
  }
}
