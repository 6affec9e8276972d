#include "doctest.h"
#include "logres/criteria.hpp"
#include "test_util.hpp"

using namespace logres;
using logres::testing::P;

namespace {

const std::vector<std::string> XY{"x", "y"};
const std::vector<std::string> XYZ{"x", "y", "z"};

std::vector<Poly> factors(const std::vector<const char*>& fs, const std::vector<std::string>& vars) {
  std::vector<Poly> out;
  for (const char* f : fs) out.push_back(P(f, vars));
  return out;
}

DivisorReport run(const std::vector<std::string>& vars, const char* h, std::vector<const char*> fs = {}) {
  AnalyzeOptions opt;
  if (!fs.empty()) opt.factors = factors(fs, vars);
  return analyze(DivisorGerm::parse(vars, h), opt);
}

}  // namespace

TEST_CASE("condition C") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto N = normalization_from_puiseux(node);
  CHECK(check_condition_C(node, residue_module(node), &*N).verdict == Verdict::yes);

  auto tri = DivisorGerm::parse(XY, "x*y*(x-y)");
  auto Nt = normalization_from_puiseux(tri);
  auto c = check_condition_C(tri, residue_module(tri), &*Nt);
  CHECK(c.verdict == Verdict::no);
  CHECK(c.witness.find("order -1") != std::string::npos);

  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  auto Nc = normalization_from_puiseux(cusp);
  auto cc = check_condition_C(cusp, residue_module(cusp), &*Nc);
  CHECK(cc.verdict == Verdict::no);
  CHECK(cc.witness.find("y/x") != std::string::npos);
}

TEST_CASE("integral equations certify weak holomorphy") {
  auto umbrella = DivisorGerm::parse(XYZ, "x^2 - y^2*z");
  CHECK(integral_equation_degree(umbrella, {P("x", XYZ), P("y", XYZ)}) == 2);
  CHECK_FALSE(integral_equation_degree(umbrella, {P("1", XYZ), P("y", XYZ)}).has_value());
  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  CHECK(integral_equation_degree(cusp, {P("x", XY), P("y", XY)}) == 2);  // (x/y)^2 = y
  CHECK(integral_equation_degree(cusp, {P("1", XY), P("1", XY)}) == 1);
}

TEST_CASE("conditions G and D") {
  auto node = DivisorGerm::parse(XY, "x*y");
  auto N = normalization_from_puiseux(node);
  CHECK(check_condition_G(node, &*N).verdict == Verdict::yes);
  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  auto Nc = normalization_from_puiseux(cusp);
  auto g = check_condition_G(cusp, &*Nc);
  CHECK(g.verdict == Verdict::no);
  CHECK(g.witness.find("conductor but not in the Jacobian") != std::string::npos);
  auto smooth = DivisorGerm::parse(XY, "x");
  auto Ns = normalization_smooth(smooth);
  CHECK(check_condition_G(smooth, &Ns).verdict == Verdict::yes);
  CHECK(check_condition_G(cusp, nullptr).verdict == Verdict::undecided);

  CHECK(check_condition_D(DivisorGerm::parse(XYZ, "x*y*z")).verdict == Verdict::yes);
  auto d = check_condition_D(cusp);
  CHECK(d.verdict == Verdict::no);
  CHECK(d.witness.rfind("y ", 0) == 0);
  CHECK(check_condition_D(DivisorGerm::parse(XYZ, "x*y*(x+y)*(x+y*z)")).verdict == Verdict::no);
}

TEST_CASE("normal crossing at the origin") {
  auto xyz = DivisorGerm::parse(XYZ, "x*y*z");
  CHECK(check_normal_crossing_at_origin(xyz, factors({"x", "y", "z"}, XYZ)));
  auto tangent = DivisorGerm::parse(XY, "x*(x+y^2)");
  CHECK_FALSE(check_normal_crossing_at_origin(tangent, factors({"x", "x+y^2"}, XY)));
  auto lines = DivisorGerm::parse(XY, "x*y*(x-y)");
  CHECK_FALSE(check_normal_crossing_at_origin(lines, factors({"x", "y", "x-y"}, XY)));
  CHECK_THROWS_AS(check_normal_crossing_at_origin(lines, factors({"x", "y"}, XY)), InvalidFactorization);
  // The Jacobian rank oracle agrees with the Milnor number test on curves.
  CHECK(check_condition_F(tangent, nullptr, Verdict::yes, Verdict::yes, Verdict::yes).verdict == Verdict::no);
  CHECK(check_condition_F(DivisorGerm::parse(XY, "x*y"), nullptr, Verdict::yes, Verdict::yes, Verdict::yes).verdict ==
        Verdict::yes);
}

TEST_CASE("condition B") {
  CHECK(check_condition_B(DivisorGerm::parse(XY, "x*y"), nullptr).verdict == Verdict::yes);
  CHECK(check_condition_B(DivisorGerm::parse(XYZ, "x*y"), nullptr).verdict == Verdict::yes);
  CHECK(check_condition_B(DivisorGerm::parse(XY, "x^2 - y^3"), nullptr).verdict == Verdict::no);
  auto xyz = DivisorGerm::parse(XYZ, "x*y*z");
  CHECK(check_condition_B(xyz, nullptr).verdict == Verdict::undecided);
  auto fx = factors({"x", "y", "z"}, XYZ);
  CHECK(check_condition_B(xyz, &fx).verdict == Verdict::yes);
  auto four = DivisorGerm::parse(XYZ, "x*y*(x+y)*(x+y*z)");
  auto f4 = factors({"x", "y", "x+y", "x+y*z"}, XYZ);
  CHECK(check_condition_B(four, &f4).verdict == Verdict::no);
}

TEST_CASE("classification of Gorenstein singular loci") {
  auto cusp = DivisorGerm::parse(XY, "x^2 - y^3");
  auto c = classify_gorenstein_locus(cusp, gorenstein_singular_locus(cusp));
  CHECK(c.verdict == GorensteinClass::suspension_of_quasihomogeneous_plane_curve);
  CHECK(c.euler_field == "(1/2*x)*d/dx + (1/3*y)*d/dy");
  CHECK(c.passive_variables.empty());

  auto susp = DivisorGerm::parse(XYZ, "x^2 - y^3");
  auto s = classify_gorenstein_locus(susp, gorenstein_singular_locus(susp));
  CHECK(s.verdict == GorensteinClass::suspension_of_quasihomogeneous_plane_curve);
  CHECK(s.passive_variables == std::vector<std::string>{"z"});

  // A hidden suspension: x^2 - (y+z)^3 splits after one shear.
  auto hidden = DivisorGerm::parse(XYZ, "x^2 - (y+z)^3");
  auto hs = classify_gorenstein_locus(hidden, gorenstein_singular_locus(hidden));
  CHECK(hs.verdict == GorensteinClass::suspension_of_quasihomogeneous_plane_curve);
  CHECK(hs.substitutions.size() == 1);

  auto smooth = DivisorGerm::parse(XY, "x");
  auto sm = classify_gorenstein_locus(smooth, gorenstein_singular_locus(smooth));
  CHECK(sm.verdict == GorensteinClass::not_applicable);
  CHECK(sm.diagnostic == "singular locus is empty");
}

TEST_CASE("analyze: spec pipeline examples") {
  auto xyz = run(XYZ, "x*y*z", {"x", "y", "z"});
  for (const Check* c : {&xyz.free, &xyz.jacobian_radical, &xyz.jacobian_eq_conductor, &xyz.residues_weakly_holomorphic,
                         &xyz.normal_crossing_at_origin, &xyz.normal_crossing_codim1})
    CHECK(c->verdict == Verdict::yes);
  CHECK(xyz.direct_sum == true);

  auto umbrella = run(XYZ, "x^2 - y^2*z");
  CHECK(umbrella.free.verdict == Verdict::no);
  CHECK(umbrella.residues_weakly_holomorphic.verdict == Verdict::yes);
  CHECK(umbrella.normal_crossing_at_origin.verdict == Verdict::no);

  auto four = run(XYZ, "x*y*(x+y)*(x+y*z)", {"x", "y", "x+y", "x+y*z"});
  CHECK(four.free.verdict == Verdict::yes);
  CHECK(four.jacobian_radical.verdict == Verdict::no);
  CHECK(four.crosscheck == Crosscheck{Verdict::no, Verdict::no, Verdict::no});

  auto cusp = run(XY, "x^2 - y^3");
  CHECK(cusp.free.verdict == Verdict::yes);
  CHECK(cusp.jacobian_radical.verdict == Verdict::no);
  CHECK(cusp.gorenstein_singular_locus == "gorenstein");
  CHECK(cusp.crosscheck == Crosscheck{Verdict::no, Verdict::no, Verdict::no});
  CHECK(cusp.mu_residues == 2);
  CHECK(cusp.residues_contain_unit);

  auto node = run(XY, "x*y", {"x", "y"});
  CHECK(node.crosscheck == Crosscheck{Verdict::yes, Verdict::yes, Verdict::yes});
  auto tri = run(XY, "x*y*(x+y)");
  CHECK(tri.crosscheck == Crosscheck{Verdict::no, Verdict::no, Verdict::no});

  auto nonqh = run(XY, "x^4 + y^5 + x*y^4");
  CHECK(nonqh.euler_homogeneous.verdict == Verdict::no);
  CHECK_FALSE(nonqh.residues_contain_unit);
}

TEST_CASE("report JSON is reproducible and round-trips") {
  for (const char* h : {"x*y", "x^2 - y^3", "x*(x+y^2)"}) {
    auto a = run(XY, h);
    auto b = run(XY, h);
    CHECK(report_to_json(a) == report_to_json(b));
    CHECK(report_from_json(report_to_json(a)) == a);
    CHECK(report_to_json(report_from_json(report_to_json(a))) == report_to_json(a));
  }
  CHECK_THROWS_AS(report_from_json("{}"), std::invalid_argument);
}
