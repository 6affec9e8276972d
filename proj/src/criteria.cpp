#include "logres/criteria.hpp"

#include <algorithm>
#include <chrono>

#include "logres/radical.hpp"

namespace logres {

namespace {

Check yes(std::string certificate) { return {Verdict::yes, "", std::move(certificate)}; }
Check no(std::string witness) { return {Verdict::no, std::move(witness), ""}; }
Check undecided(std::string why) { return {Verdict::undecided, std::move(why), ""}; }

std::size_t rank(std::vector<std::vector<Rational>> rows) {
  std::size_t r = 0, cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      Rational f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

bool smooth_at_origin(const Poly& f) {
  for (std::size_t v = 0; v < f.nvars(); ++v)
    if (is_unit_local(f.derivative(v))) return true;
  return false;
}

bool all_smooth(const std::vector<Poly>& factors) {
  return std::all_of(factors.begin(), factors.end(), smooth_at_origin);
}

DivisorGerm curve_factor(const DivisorGerm& D, const Poly& h) {
  auto sup = h.support();
  std::vector<std::size_t> map(D.nvars(), 0);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < D.nvars(); ++i)
    if (sup[i]) {
      map[i] = names.size();
      names.push_back(D.names()[i]);
    }
  return DivisorGerm(Ring(names), h.remap(names.size(), map));
}

std::size_t occurring(const Poly& h) {
  auto sup = h.support();
  return static_cast<std::size_t>(std::count(sup.begin(), sup.end(), true));
}

std::string field_to_string(const DivisorGerm& D, const VectorField& f) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + D.to_string(f.coeffs[i]) + ")*d/d" + D.names()[i];
  }
  return out.empty() ? "0" : out;
}

std::string curve_milnor_witness(std::size_t mu) {
  return "curve factor has Milnor number " + std::to_string(mu) + " at the origin; normal crossing needs at most 1";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    case Verdict::undecided: return "undecided";
  }
  return "undecided";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "true") return Verdict::yes;
  if (s == "false") return Verdict::no;
  if (s == "undecided") return Verdict::undecided;
  throw std::invalid_argument("unknown verdict " + s);
}

std::optional<int> integral_equation_degree(const DivisorGerm& D, const MeroFraction& f, int max_degree) {
  std::vector<MeroFraction> gens{{D.ring().one(), D.ring().one()}};
  MeroFraction power = gens.front();
  for (int k = 1; k <= max_degree; ++k) {
    power = {D.mod_h(power.num * f.num), power.den * f.den};
    if (FractionalIdeal::make(D, gens).contains(power)) return k;
    gens.push_back(power);
  }
  return std::nullopt;
}

Check check_condition_C(const DivisorGerm& D, const FractionalIdeal& residues, const NormalizationData* N) {
  auto gens = residues.minimal_generators();
  bool open = N == nullptr;
  if (N) {
    for (const auto& g : gens) {
      auto w = is_weakly_holomorphic(*N, g);
      if (!w) {
        open = true;
        break;
      }
      if (!*w) {
        std::string where;
        for (std::size_t b = 0; b < N->branches.size(); ++b) {
          auto vn = t_order(pullback(N->branches[b], g.num), N->branches[b].truncation);
          auto vd = t_order(pullback(N->branches[b], g.den), N->branches[b].truncation);
          if (!vd || !vn || *vn >= *vd) continue;
          where = "; order " + std::to_string(*vn - *vd) + " on branch " + std::to_string(b + 1);
          break;
        }
        return no("residue " + to_string(D, g) + " is not weakly holomorphic" + where);
      }
    }
    if (!open)
      return yes("all " + std::to_string(gens.size()) + " residue generators are weakly holomorphic (" + N->source +
                 ")");
  }
  std::string degrees;
  for (const auto& g : gens) {
    auto k = integral_equation_degree(D, g);
    if (!k) return undecided("no normalization data and no integral equation of degree <= 4 for " + to_string(D, g));
    degrees += (degrees.empty() ? "" : ", ") + std::to_string(*k);
  }
  return yes("integral equations for the residue generators of degrees " + degrees);
}

Check check_condition_G(const DivisorGerm& D, const NormalizationData* N) {
  if (!N || !N->conductor) return undecided("conductor not available for this germ");
  FractionalIdeal J = jacobian_fractional(D);
  const FractionalIdeal& C = *N->conductor;
  for (const auto& g : C.generators())
    if (!J.contains(g)) return no(to_string(D, g) + " lies in the conductor but not in the Jacobian ideal");
  for (const auto& g : J.generators())
    if (!C.contains(g)) return no(to_string(D, g) + " lies in the Jacobian ideal but not in the conductor");
  return yes("Jacobian ideal and conductor both equal " + C.to_string());
}

Check check_condition_D(const DivisorGerm& D) {
  auto r = radical_test_local(D.jacobian_pullback());
  switch (r.verdict) {
    case RadicalVerdict::radical:
      return yes("every generator of the radical lies in <h, dh> at the origin");
    case RadicalVerdict::not_radical:
      return no(D.to_string(*r.witness) + " is not in the Jacobian ideal but its power " +
                std::to_string(r.witness_power) + " is");
    case RadicalVerdict::undecided: break;
  }
  return undecided("radical membership search exhausted");
}

bool check_normal_crossing_at_origin(const DivisorGerm& D, const std::vector<Poly>& factors) {
  validate_factors(D, factors);
  std::size_t n = D.nvars();
  if (factors.size() > n || !all_smooth(factors)) return false;
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : factors) {
    std::vector<Rational> row;
    for (std::size_t v = 0; v < n; ++v) row.push_back(f.derivative(v).constant_term());
    rows.push_back(std::move(row));
  }
  return rank(rows) == factors.size();
}

Check check_condition_F(const DivisorGerm& D, const std::vector<Poly>* factors, Verdict free, Verdict euler,
                        Verdict radical) {
  if (factors) {
    if (check_normal_crossing_at_origin(D, *factors))
      return yes("factor differentials are linearly independent at the origin");
    if (factors->size() > D.nvars()) return no("more factors than variables");
    if (!all_smooth(*factors)) return no("a factor is singular at the origin");
    return no("factor differentials are linearly dependent at the origin");
  }
  if (is_smooth(D)) return yes("smooth at the origin");
  if (is_curve_or_suspension(D)) {
    auto mu = milnor_number(curve_factor(D, D.h())).value_or(0);
    if (mu <= 1) return yes("curve factor is a node (Milnor number 1)");
    return no(curve_milnor_witness(mu));
  }
  if (free == Verdict::no) return no("not free, while normal crossing divisors are free");
  if (euler == Verdict::no) return no("not Euler homogeneous, while normal crossing divisors are");
  if (radical == Verdict::no) return no("Jacobian ideal not radical, while it is for normal crossing divisors");
  return undecided("no factorization given");
}

bool pairwise_transversal_codim1(const DivisorGerm& D, const std::vector<Poly>& factors) {
  std::size_t n = D.nvars();
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j) {
      std::vector<Poly> gens{factors[i], factors[j]};
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
          gens.push_back(factors[i].derivative(a) * factors[j].derivative(b) -
                         factors[i].derivative(b) * factors[j].derivative(a));
      if (local_dimension(Ideal(n, gens)) > static_cast<int>(n) - 3) return false;
    }
  return true;
}

Check check_condition_B(const DivisorGerm& D, const std::vector<Poly>* factors) {
  if (is_smooth(D)) return yes("smooth at the origin");
  if (is_curve_or_suspension(D)) {
    auto mu = milnor_number(curve_factor(D, D.h())).value_or(0);
    if (mu <= 1) return yes("curve factor is a node (Milnor number 1)");
    return no(curve_milnor_witness(mu));
  }
  if (!factors || !all_smooth(*factors)) return undecided("codimension-one locus not analysed for this germ");
  validate_factors(D, *factors);
  std::size_t n = D.nvars();
  const auto& f = *factors;
  int bound = static_cast<int>(n) - 3;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      if (!pairwise_transversal_codim1(D, {f[i], f[j]}))
        return no("components " + D.to_string(f[i]) + " and " + D.to_string(f[j]) +
                  " are tangent along a set of codimension one in D");
      for (std::size_t k = j + 1; k < f.size(); ++k) {
        int d = local_dimension(Ideal(n, {f[i], f[j], f[k]}));
        if (d > bound)
          return no("components " + D.to_string(f[i]) + ", " + D.to_string(f[j]) + ", " + D.to_string(f[k]) +
                    " meet in dimension " + std::to_string(d));
      }
    }
  return yes("components pairwise transversal with triple intersections of codimension two in D");
}

Crosscheck free_divisor_crosscheck(const DivisorGerm& D, const Check& B, const Check& Dc, const Check& G) {
  Crosscheck c{B.verdict, Dc.verdict, G.verdict};
  std::optional<Verdict> seen;
  for (Verdict v : {c.B, c.D, c.G}) {
    if (v == Verdict::undecided) continue;
    if (seen && *seen != v)
      throw ConsistencyViolation("free divisor " + D.to_string(D.h()) + ": conditions B, D, G disagree (" +
                                 to_string(c.B) + ", " + to_string(c.D) + ", " + to_string(c.G) + ")");
    seen = v;
  }
  return c;
}

std::string to_string(GorensteinClass c) {
  return c == GorensteinClass::not_applicable ? "not_applicable" : "suspension_of_quasihomogeneous_plane_curve";
}

GorensteinClass gorenstein_class_from_string(const std::string& s) {
  if (s == "not_applicable") return GorensteinClass::not_applicable;
  if (s == "suspension_of_quasihomogeneous_plane_curve") return GorensteinClass::suspension_of_quasihomogeneous_plane_curve;
  throw std::invalid_argument("unknown classification " + s);
}

Classification classify_gorenstein_locus(const DivisorGerm& D, GorensteinVerdict g) {
  Classification out;
  if (g != GorensteinVerdict::gorenstein) {
    out.diagnostic = "singular locus is " + to_string(g);
    return out;
  }
  std::size_t n = D.nvars();
  Poly h = D.h();
  bool progress = true;
  while (occurring(h) > 2 && progress) {
    progress = false;
    for (std::size_t i = 0; i < n && !progress; ++i)
      for (std::size_t j = 0; j < n && !progress; ++j) {
        if (i == j) continue;
        for (int c : {1, -1, 2, -2}) {
          std::vector<Poly> images;
          for (std::size_t v = 0; v < n; ++v) images.push_back(Poly::variable(n, v));
          images[i] += Poly::variable(n, j) * Rational(c);
          Poly s = h.substitute(images);
          if (occurring(s) < occurring(h)) {
            h = s;
            out.substitutions.push_back(D.names()[i] + " -> " + D.names()[i] + (c > 0 ? " + " : " - ") +
                                        (std::abs(c) == 1 ? "" : std::to_string(std::abs(c)) + "*") + D.names()[j]);
            progress = true;
            break;
          }
        }
      }
  }
  auto sup = h.support();
  for (std::size_t v = 0; v < n; ++v) (sup[v] ? out.curve_variables : out.passive_variables).push_back(D.names()[v]);
  if (occurring(h) != 2) {
    out.diagnostic = "no splitting into a plane curve found within the shear schedule";
    return out;
  }
  DivisorGerm C = curve_factor(D, h);
  auto e = is_euler_homogeneous(C);
  if (!e.euler)
    throw ConsistencyViolation("Gorenstein singular locus but the plane curve factor " + C.to_string(C.h()) +
                               " is not Euler homogeneous");
  VectorField chi;
  bool divisible = true;
  for (const auto& c : e.field.coeffs) {
    auto q = exact_divide(c, e.unit);
    divisible = divisible && q.has_value();
    chi.coeffs.push_back(q ? *q : c);
  }
  out.verdict = GorensteinClass::suspension_of_quasihomogeneous_plane_curve;
  out.euler_field = field_to_string(C, divisible ? chi : e.field);
  if (!divisible) out.euler_field = "(" + out.euler_field + ") / (" + C.to_string(e.unit) + ")";
  return out;
}

bool DivisorReport::operator==(const DivisorReport& o) const {
  auto key = [](const DivisorReport& r) {
    return std::tie(r.schema, r.vars, r.poly, r.factors, r.seed, r.precision, r.free, r.euler_homogeneous,
                    r.jacobian_radical, r.jacobian_eq_conductor, r.residues_weakly_holomorphic,
                    r.normal_crossing_codim1, r.normal_crossing_at_origin, r.gorenstein_singular_locus, r.mu_residues,
                    r.residues_contain_unit, r.direct_sum, r.crosscheck, r.classification, r.jacobian_ideal,
                    r.residue_module, r.normalization, r.conductor, r.normalization_source, r.truncation, r.branches,
                    r.consistency);
  };
  return key(*this) == key(o);
}

DivisorReport analyze(const DivisorGerm& D, const AnalyzeOptions& opt) {
  using clock = std::chrono::steady_clock;
  DivisorReport r;
  auto stage_start = clock::now();
  auto stage = [&](const std::string& name) {
    auto now = clock::now();
    r.timings.push_back({name, std::chrono::duration<double, std::milli>(now - stage_start).count()});
    stage_start = now;
  };
  auto record = [&](std::string name, bool applicable, bool holds, std::string detail) {
    if (applicable && !holds) throw ConsistencyViolation(name + " violated on " + D.to_string(D.h()) + ": " + detail);
    r.consistency.push_back({std::move(name), applicable ? "verified" : "not_applicable", std::move(detail)});
  };

  r.vars = D.names();
  r.poly = D.to_string(D.h());
  r.seed = opt.seed;
  r.precision = opt.precision;
  const std::vector<Poly>* factors = opt.factors ? &*opt.factors : nullptr;
  if (factors) {
    validate_factors(D, *factors);
    for (const auto& f : *factors) r.factors.push_back(D.to_string(f));
  }

  auto fr = is_free(D);
  if (fr.free)
    r.free = yes("Saito matrix with determinant (" + D.to_string(fr.basis->unit) + ")*h, unit at the origin");
  else
    r.free = no("logarithmic vector fields need " + std::to_string(fr.min_generators) + " > " +
                std::to_string(D.nvars()) + " generators");
  auto eu = is_euler_homogeneous(D);
  if (eu.euler)
    r.euler_homogeneous = yes("chi = " + field_to_string(D, eu.field) + " satisfies chi(h) = (" +
                              D.to_string(eu.unit) + ")*h");
  else
    r.euler_homogeneous = no("h is not in the ideal of its partials at the origin");
  record("euler_two_routes", true, eu.euler == eu.membership, "syzygy witness and local membership agree");
  stage("freeness_euler");

  FractionalIdeal J = jacobian_fractional(D);
  FractionalIdeal R = residue_module(D, opt.seed);
  r.jacobian_ideal = J.to_string();
  r.residue_module = R.to_string();
  auto mu = mu_residues(R);
  r.mu_residues = mu.count;
  r.residues_contain_unit = mu.contains_unit;
  auto gor = gorenstein_singular_locus(D, fr.free, mu);
  r.gorenstein_singular_locus = to_string(gor);
  stage("residues");

  std::optional<NormalizationData> N;
  if (opt.branches) {
    N = validate_branches(D, *opt.branches, opt.seed);
  } else if (is_smooth(D)) {
    N = normalization_smooth(D);
  } else {
    if (is_curve_or_suspension(D)) N = normalization_from_puiseux(D, opt.precision, opt.seed);
    if (!N && factors && all_smooth(*factors)) N = normalization_from_components(D, *factors, opt.seed);
    if (!N && opt.parametrization) N = normalization_from_parametrization(D, *opt.parametrization);
  }
  if (N) {
    r.normalization_source = N->source;
    r.truncation = N->truncation;
    r.branches = N->branches.size();
    if (N->normalization) r.normalization = N->normalization->to_string();
    if (N->conductor) r.conductor = N->conductor->to_string();
  } else {
    r.normalization_source = "none";
  }
  stage("normalization");

  const NormalizationData* Np = N ? &*N : nullptr;
  r.residues_weakly_holomorphic = check_condition_C(D, R, Np);
  r.jacobian_eq_conductor = check_condition_G(D, Np);
  r.jacobian_radical = check_condition_D(D);
  r.normal_crossing_codim1 = check_condition_B(D, factors);
  r.normal_crossing_at_origin = check_condition_F(D, factors, r.free.verdict, r.euler_homogeneous.verdict,
                                                  r.jacobian_radical.verdict);
  stage("conditions");

  if (factors) {
    auto ds = direct_sum_check(D, *factors, R);
    if (!ds.idempotent_certified) throw ConsistencyViolation("idempotent certificate failed");
    r.direct_sum = ds.equals_residues;
  }
  r.classification = classify_gorenstein_locus(D, gor);

  // Known equivalences between the computed quantities.
  bool free = fr.free;
  FractionalIdeal O = FractionalIdeal::unit(D);
  {
    bool ok = includes(O, J) && includes(R, O);
    std::string chain = "J in O_D in R_D";
    if (N && N->normalization && N->conductor) {
      const auto& Ot = *N->normalization;
      const auto& C = *N->conductor;
      ok = ok && includes(C, J) && includes(O, C) && includes(Ot, O) && includes(R, Ot);
      chain = "J in C_D in O_D in normalization in R_D";
    }
    record("inclusion_chain", true, ok, chain);
  }
  if (free) {
    record("free_jacobian_dual_of_residues", true, equals(dual(R, opt.seed), J), "dual(R_D) = J_D");
    record("free_jacobian_reflexive", true, equals(dual(dual(J, opt.seed), opt.seed), J), "J_D double dual");
    r.crosscheck = free_divisor_crosscheck(D, r.normal_crossing_codim1, r.jacobian_radical, r.jacobian_eq_conductor);
    record("free_conditions_B_D_G_agree", true, true,
           "(" + to_string(r.crosscheck.B) + ", " + to_string(r.crosscheck.D) + ", " + to_string(r.crosscheck.G) + ")");
    bool decided = r.residues_weakly_holomorphic.verdict != Verdict::undecided &&
                   r.jacobian_eq_conductor.verdict != Verdict::undecided;
    record("free_conditions_C_G_agree", decided,
           r.residues_weakly_holomorphic.verdict == r.jacobian_eq_conductor.verdict,
           "C " + to_string(r.residues_weakly_holomorphic.verdict) + ", G " +
               to_string(r.jacobian_eq_conductor.verdict));
    record("free_residues_cyclic_iff_smooth", true, (mu.count == 1) == is_smooth(D),
           "minimal residue generators " + std::to_string(mu.count));
    record("free_unit_residue_iff_euler", true, mu.contains_unit == eu.euler,
           std::string("1 minimal generator of R_D: ") + (mu.contains_unit ? "yes" : "no"));
  } else {
    for (const char* name : {"free_jacobian_dual_of_residues", "free_jacobian_reflexive", "free_conditions_B_D_G_agree",
                             "free_conditions_C_G_agree", "free_residues_cyclic_iff_smooth",
                             "free_unit_residue_iff_euler"})
      record(name, false, true, "not free");
  }
  {
    bool applicable = r.normal_crossing_codim1.verdict == Verdict::yes &&
                      r.residues_weakly_holomorphic.verdict != Verdict::undecided;
    record("normal_crossing_codim1_implies_C", applicable, r.residues_weakly_holomorphic.verdict == Verdict::yes,
           "B " + to_string(r.normal_crossing_codim1.verdict) + ", C " +
               to_string(r.residues_weakly_holomorphic.verdict));
  }
  {
    bool applicable = factors && all_smooth(*factors) && r.residues_weakly_holomorphic.verdict != Verdict::undecided;
    bool expected = applicable && r.residues_weakly_holomorphic.verdict == Verdict::yes &&
                    pairwise_transversal_codim1(D, *factors);
    record("direct_sum_iff_C_and_transversal", applicable, !applicable || *r.direct_sum == expected,
           applicable ? std::string("direct sum ") + (*r.direct_sum ? "true" : "false") : "needs smooth factors");
  }
  record("gorenstein_locus_classification",
         gor == GorensteinVerdict::gorenstein && r.classification.diagnostic.empty(),
         r.classification.verdict == GorensteinClass::suspension_of_quasihomogeneous_plane_curve,
         r.classification.diagnostic.empty() ? to_string(r.classification.verdict) : r.classification.diagnostic);
  stage("consistency");
  return r;
}

}  // namespace logres
