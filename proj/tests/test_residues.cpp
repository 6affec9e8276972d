#include "doctest.h"
#include "logres/residues.hpp"
#include "test_util.hpp"

using namespace logres;
using logres::testing::P;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

std::vector<Poly> A(std::initializer_list<const char*> coeffs, const std::vector<std::string>& v = XY) {
  std::vector<Poly> out;
  for (const char* c : coeffs) out.push_back(P(c, v));
  return out;
}

LogOneForm form(std::vector<Poly> a) {
  std::size_t n = a.front().nvars();
  return {std::move(a), Poly::constant(n, 1)};
}

// Pullback of a polynomial along the branch x = 0, y = t (as a polynomial
// in the single variable t).
Poly on_y_axis(const Poly& f) {
  std::vector<Poly> images{Poly(1), Poly::variable(1, 0)};
  return f.substitute(images);
}

}  // namespace

TEST_CASE("logarithmic 1-forms") {
  auto node = DivisorGerm::parse(XY, "x*y");
  CHECK(is_logarithmic(node, A({"y", "0"})));
  CHECK_FALSE(is_logarithmic(node, A({"1", "0"})));
  CHECK(is_logarithmic(node, A({"x*y*(1+x)", "x*y*y"})));
}

TEST_CASE("residue of dx/x on the node") {
  auto node = DivisorGerm::parse(XY, "x*y");
  MeroFraction r = residue(node, form(A({"y", "0"})));
  CHECK(fraction_equal(node, r, {P("y", XY), P("x+y", XY)}));
  // Hand certificate: (x+y)(y, 0) = y (y, x) + xy (1, -1)... checked directly.
  CHECK(P("x+y", XY) * P("y", XY) == P("y", XY) * P("y", XY) + node.h() * P("1", XY));
}

TEST_CASE("holomorphic forms have zero residue") {
  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  MeroFraction r = residue(cusp, form({cusp.h() * P("1+y", XY), cusp.h() * P("x", XY)}));
  CHECK(fraction_equal(cusp, r, {Poly(2), Poly::constant(2, 1)}));
}

TEST_CASE("residue on three lines restricts to -1/y") {
  auto D = DivisorGerm::parse(XY, "x*y*(x-y)");
  // (1/(x-y)) (dx/x - dy/y) = (y dx - x dy) / h.
  auto a = A({"y", "-x"});
  REQUIRE(is_logarithmic(D, a));
  MeroFraction r = residue(D, form(a));
  Poly num = on_y_axis(r.num), den = on_y_axis(r.den);
  REQUIRE_FALSE(den.is_zero());
  // num/den == -1/t  <=>  t * num == -den.
  CHECK(num * Poly::variable(1, 0) == -den);
}

TEST_CASE("residue valuations on x(x + y^m)") {
  std::vector<std::string> t{"t"};
  for (int m = 1; m <= 3; ++m) {
    std::string h = "x*(x+y^" + std::to_string(m) + ")";
    auto D = DivisorGerm::parse(XY, h);
    auto a = A({"y", ("-" + std::to_string(m) + "*x").c_str()});
    REQUIRE(is_logarithmic(D, a));
    MeroFraction r = residue(D, form(a));
    Poly num = on_y_axis(r.num), den = on_y_axis(r.den);
    REQUIRE_FALSE(den.is_zero());
    CHECK(num.order() - den.order() == 1 - m);
  }
}

TEST_CASE("residue certificates are well defined") {
  for (const char* h : {"x*y", "x^2 - y^3", "x*y*(x-y)", "x*(x+y^2)"}) {
    auto D = DivisorGerm::parse(XY, h);
    auto fr = is_free(D);
    REQUIRE(fr.free);
    for (const auto& w : log_forms_basis(D, *fr.basis)) {
      auto certs = residue_certificates(D, w.a, 2);
      REQUIRE(certs.size() == 2);
      CHECK(certs[0].g.monic() != certs[1].g.monic());
      CHECK(D.divisible_local(certs[0].xi * certs[1].g - certs[1].xi * certs[0].g));
      for (const auto& row : fr.basis->rows) {
        VectorField delta{row};
        for (const auto& c : certs) CHECK(sigma_check(D, delta, w.a, c));
      }
    }
  }
}

TEST_CASE("sigma check examples on the node") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto a = A({"y", "0"});
  auto certs = residue_certificates(node, a, 1);
  REQUIRE(certs.size() == 1);
  CHECK(sigma_check(node, VectorField{A({"x", "0"})}, a, certs[0]));
  CHECK(sigma_check(node, VectorField{A({"0", "1"})}, a, certs[0]));
  ResidueCertificate hol{P("1", XY), Poly(2), {P("1", XY), Poly(2)}};
  CHECK(sigma_check(node, VectorField{A({"x^2+3", "y-7"})}, A({"x*y", "0"}), hol));
}

TEST_CASE("residue modules") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto Rn = residue_module(node);
  CHECK(equals(Rn, FractionalIdeal::make(node, {{P("1", XY), P("1", XY)}, {P("y", XY), P("x+y", XY)}})));
  auto smooth = DivisorGerm::parse(XY, "x");
  CHECK(equals(residue_module(smooth), FractionalIdeal::unit(smooth)));
  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  CHECK(equals(residue_module(cusp), FractionalIdeal::make(cusp, {{P("1", XY), P("1", XY)}, {P("y", XY), P("x", XY)}})));
  // Residues of a basis of logarithmic forms generate the same module.
  for (const DivisorGerm& D : {node, cusp}) {
    auto fr = is_free(D);
    std::vector<MeroFraction> res;
    for (const auto& w : log_forms_basis(D, *fr.basis)) res.push_back(residue(D, w));
    CHECK(equals(FractionalIdeal::make(D, res), residue_module(D)));
  }
}

TEST_CASE("mu of residues and the Gorenstein verdict") {
  auto smooth = DivisorGerm::parse(XY, "x");
  auto m = mu_residues(smooth);
  CHECK(m.count == 1);
  CHECK(m.contains_unit);
  CHECK(gorenstein_singular_locus(smooth) == GorensteinVerdict::empty);

  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  m = mu_residues(cusp);
  CHECK(m.count == 2);
  CHECK(m.contains_unit);
  CHECK(gorenstein_singular_locus(cusp) == GorensteinVerdict::gorenstein);

  auto node = DivisorGerm::parse(XY, "x*y");
  m = mu_residues(node);
  CHECK(m.count == 2);
  CHECK(m.contains_unit);

  CHECK(gorenstein_singular_locus(DivisorGerm::parse(XY, "x*y*(x+y)")) == GorensteinVerdict::gorenstein);
  CHECK(gorenstein_singular_locus(DivisorGerm::parse(XYZ, "x^2 - y^2*z")) == GorensteinVerdict::undecided);
}

TEST_CASE("direct sum of components") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto ds = direct_sum_check(node, A({"x", "y"}));
  CHECK(ds.idempotent_certified);
  CHECK(ds.equals_residues);
  CHECK(fraction_equal(node, ds.idempotents[0], {P("y", XY), P("x+y", XY)}));

  auto xyz = DivisorGerm::parse(XYZ, "x*y*z");
  auto d3 = direct_sum_check(xyz, A({"x", "y", "z"}, XYZ));
  CHECK(d3.idempotent_certified);
  CHECK(d3.equals_residues);

  auto three = DivisorGerm::parse(XY, "x*y*(x-y)");
  auto dt = direct_sum_check(three, A({"x", "y", "x-y"}));
  CHECK(dt.idempotent_certified);
  CHECK_FALSE(dt.equals_residues);
  CHECK(includes(residue_module(three), dt.module));

  auto smooth = DivisorGerm::parse(XY, "x");
  CHECK(direct_sum_check(smooth, A({"x"})).equals_residues);

  CHECK_THROWS_AS(direct_sum_check(node, A({"x"})), InvalidFactorization);
  CHECK_THROWS_AS(direct_sum_check(node, A({"x", "x*y"})), InvalidFactorization);
}
