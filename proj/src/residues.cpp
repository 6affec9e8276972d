#include "logres/residues.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace logres {

namespace {

Poly one(std::size_t n) { return Poly::constant(n, 1); }

bool certificate_holds(const DivisorGerm& D, const std::vector<Poly>& a, const ResidueCertificate& c) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (c.g * a[i] != c.xi * D.partials()[i] + D.h() * c.b[i]) return false;
  return true;
}

ResidueCertificate from_syzygy(const ModuleElement& s, std::size_t n) {
  ResidueCertificate c;
  c.g = s[0];
  c.xi = -s[1];
  for (std::size_t k = 0; k < n; ++k) c.b.push_back(-s[2 + k]);
  return c;
}

ModuleElement combine(const std::vector<ModuleElement>& syz, const std::vector<Poly>& coefs) {
  ModuleElement out(syz.front().size(), Poly(syz.front().front().nvars()));
  for (std::size_t i = 0; i < syz.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += syz[i][j] * coefs[i];
  return out;
}

}  // namespace

bool is_logarithmic(const DivisorGerm& D, const std::vector<Poly>& a) {
  const auto& dh = D.partials();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!D.divisible_local(dh[i] * a[j] - dh[j] * a[i])) return false;
  return true;
}

bool is_logarithmic(const DivisorGerm& D, const LogOneForm& w) { return is_logarithmic(D, w.a); }

std::vector<ResidueCertificate> residue_certificates(const DivisorGerm& D, const std::vector<Poly>& a,
                                                     std::size_t count, std::uint64_t seed, std::size_t budget) {
  std::size_t n = D.nvars();
  if (a.size() != n) throw std::invalid_argument("1-form has the wrong number of coefficients");
  // Columns a, grad h, h e_1, ..., h e_n of a map O^(n+2) -> O^n.
  std::vector<ModuleElement> cols{a, D.partials()};
  for (std::size_t k = 0; k < n; ++k) {
    ModuleElement e(n, Poly(n));
    e[k] = D.h();
    cols.push_back(std::move(e));
  }
  auto syz = syzygies(cols, n);
  std::vector<ResidueCertificate> out;
  std::vector<Poly> seen;
  std::size_t tried = 0;
  auto consider = [&](const ModuleElement& s) {
    ++tried;
    if (s[0].is_zero()) return;
    Poly key = s[0].monic();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    if (!is_nonzerodivisor(D, s[0])) return;
    seen.push_back(key);
    ResidueCertificate c = from_syzygy(s, n);
    if (!certificate_holds(D, a, c)) throw std::logic_error("residue certificate does not multiply back");
    out.push_back(std::move(c));
  };
  for (const auto& s : syz) {
    if (out.size() >= count || tried >= budget) break;
    consider(s);
  }
  if (out.size() < count && syz.size() > 1) consider(combine(syz, std::vector<Poly>(syz.size(), one(n))));
  // Random combinations with affine-linear polynomial coefficients.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  while (out.size() < count && tried < budget && !syz.empty()) {
    std::vector<Poly> c;
    for (std::size_t i = 0; i < syz.size(); ++i) {
      Poly p = Poly::constant(n, coef(rng));
      for (std::size_t v = 0; v < n; ++v) p += Poly::variable(n, v) * Rational(coef(rng));
      c.push_back(std::move(p));
    }
    consider(combine(syz, c));
  }
  return out;
}

MeroFraction residue(const DivisorGerm& D, const LogOneForm& w, std::uint64_t seed, std::size_t budget) {
  auto certs = residue_certificates(D, w.a, 1, seed, budget);
  if (certs.empty()) throw std::runtime_error("residue: no nonzerodivisor certificate within the trial budget");
  Poly unit = w.unit.is_zero() ? one(D.nvars()) : w.unit;
  return {certs.front().xi, certs.front().g * unit};
}

FractionalIdeal residue_module(const DivisorGerm& D, std::uint64_t seed) { return dual(jacobian_fractional(D), seed); }

bool sigma_check(const DivisorGerm& D, const VectorField& delta, const std::vector<Poly>& a,
                 const ResidueCertificate& cert) {
  Poly pairing(D.nvars());
  for (std::size_t i = 0; i < a.size(); ++i) pairing += delta.coeffs[i] * a[i];
  return D.divisible_local(cert.g * pairing - delta.apply(D.h()) * cert.xi);
}

MuResidues mu_residues(const FractionalIdeal& R) {
  const DivisorGerm& D = R.germ();
  std::size_t n = D.nvars();
  MuResidues out;
  std::vector<Poly> row = R.numerators();
  row.push_back(D.h());
  out.count = min_generators_from_relations(R.numerators().size(), syzygies(row)).count;
  std::vector<Poly> mN{D.h()};
  for (const auto& p : R.numerators())
    for (std::size_t i = 0; i < n; ++i) mN.push_back(p * Poly::variable(n, i));
  out.contains_unit = R.contains({one(n), one(n)}) && !Ideal(n, mN).contains_local(R.denominator());
  return out;
}

MuResidues mu_residues(const DivisorGerm& D, std::uint64_t seed) { return mu_residues(residue_module(D, seed)); }

std::string to_string(GorensteinVerdict v) {
  switch (v) {
    case GorensteinVerdict::empty: return "empty";
    case GorensteinVerdict::gorenstein: return "gorenstein";
    case GorensteinVerdict::not_gorenstein: return "not_gorenstein";
    case GorensteinVerdict::undecided: return "undecided";
  }
  return "undecided";
}

GorensteinVerdict gorenstein_singular_locus(const DivisorGerm& D, bool free, const MuResidues& mu) {
  if (D.jacobian_pullback().is_unit_local()) return GorensteinVerdict::empty;
  if (!free) return GorensteinVerdict::undecided;
  return mu.count == 2 && mu.contains_unit ? GorensteinVerdict::gorenstein : GorensteinVerdict::not_gorenstein;
}

GorensteinVerdict gorenstein_singular_locus(const DivisorGerm& D, std::uint64_t seed) {
  if (D.jacobian_pullback().is_unit_local()) return GorensteinVerdict::empty;
  return gorenstein_singular_locus(D, is_free(D).free, mu_residues(D, seed));
}

void validate_factors(const DivisorGerm& D, const std::vector<Poly>& factors) {
  std::size_t n = D.nvars();
  if (factors.empty()) throw InvalidFactorization("no factors given");
  Poly prod = one(n);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Poly& f = factors[i];
    if (f.nvars() != n) throw InvalidFactorization("factor ring mismatch");
    if (f.is_constant()) throw InvalidFactorization("constant factor");
    if (f.constant_term() != 0) throw InvalidFactorization("factor " + D.to_string(f) + " does not vanish at the origin");
    if (!is_squarefree(f)) throw InvalidFactorization("factor " + D.to_string(f) + " is not squarefree");
    for (std::size_t j = 0; j < i; ++j)
      if (!gcd(f, factors[j]).is_constant())
        throw InvalidFactorization("factors " + D.to_string(factors[j]) + " and " + D.to_string(f) + " are not coprime");
    prod = prod * f;
  }
  auto q = exact_divide(D.h(), prod);
  if (!q || !q->is_constant()) throw InvalidFactorization("product of the factors differs from h");
}

DirectSum direct_sum_check(const DivisorGerm& D, const std::vector<Poly>& factors, const FractionalIdeal& residues) {
  validate_factors(D, factors);
  std::size_t n = D.nvars();
  std::vector<Poly> g;
  Poly s(n);
  for (const auto& f : factors) {
    g.push_back(exact_divide(D.h(), f).value());
    s += g.back();
  }
  if (!is_nonzerodivisor(D, s)) throw std::logic_error("idempotent denominator is a zero divisor");
  DirectSum out;
  bool ok = true;
  for (const auto& gi : g) {
    out.idempotents.push_back({gi, s});
    // e_i^2 == e_i  <=>  g_i^2 == g_i s modulo h.
    ok = ok && exact_divide(gi * gi - gi * s, D.h()).has_value();
  }
  Poly sum(n);
  for (const auto& gi : g) sum += gi;
  ok = ok && sum == s;
  out.idempotent_certified = ok;
  out.module = FractionalIdeal(D, g, s);
  out.equals_residues = equals(out.module, residues);
  return out;
}

DirectSum direct_sum_check(const DivisorGerm& D, const std::vector<Poly>& factors, std::uint64_t seed) {
  return direct_sum_check(D, factors, residue_module(D, seed));
}

}  // namespace logres
