#include "logres/fractional_ideal.hpp"

#include <algorithm>
#include <random>

namespace logres {

namespace {

Poly one(std::size_t n) { return Poly::constant(n, 1); }

void require_same_germ(const FractionalIdeal& a, const FractionalIdeal& b) {
  if (!(a.germ() == b.germ())) throw std::invalid_argument("fractional ideals over different germs");
}

// Ideal generated by f * gens together with h.
Ideal scaled_with_h(const DivisorGerm& D, const Poly& f, const std::vector<Poly>& gens) {
  std::vector<Poly> out{D.h()};
  for (const auto& g : gens) out.push_back(f * g);
  return Ideal(D.nvars(), std::move(out));
}

MeroFraction simplify(const MeroFraction& f) {
  std::size_t n = f.den.nvars();
  if (f.num.is_zero()) return {Poly(n), one(n)};
  Poly g = gcd(f.num, f.den);
  Poly num = exact_divide(f.num, g).value();
  Poly den = exact_divide(f.den, g).value();
  if (den.is_constant()) return {num * (1 / den.constant_term()), one(n)};
  // Make the denominator's leading coefficient 1.
  Rational lc = den.terms().front().coef;
  return {num * (1 / lc), den * (1 / lc)};
}

}  // namespace

bool fraction_equal(const DivisorGerm& D, const MeroFraction& a, const MeroFraction& b) {
  return D.divisible_local(a.num * b.den - b.num * a.den);
}

std::string to_string(const DivisorGerm& D, const MeroFraction& f) {
  MeroFraction s = simplify(f);
  std::string num = D.to_string(s.num);
  if (s.den.is_constant()) return num;
  if (s.num.size() > 1) num = "(" + num + ")";
  std::string den = D.to_string(s.den);
  if (s.den.size() > 1 || den.find('*') != std::string::npos) den = "(" + den + ")";
  return num + "/" + den;
}

std::optional<Poly> zero_divisor_witness(const DivisorGerm& D, const Poly& q) {
  std::size_t n = D.nvars();
  if (q.is_zero() || D.divisible_local(q)) return one(n);
  // <h> : q = <h / gcd(h, q)>, which is <h> at the origin iff the gcd is a
  // local unit.
  Poly g = gcd(D.h(), q);
  if (is_unit_local(g)) return std::nullopt;
  return exact_divide(D.h(), g).value();
}

bool is_nonzerodivisor(const DivisorGerm& D, const Poly& q) { return !zero_divisor_witness(D, q).has_value(); }

std::optional<Poly> find_nonzerodivisor(const DivisorGerm& D, const std::vector<Poly>& gens, std::uint64_t seed,
                                        std::size_t budget) {
  std::vector<Poly> pool;
  for (const auto& g : gens)
    if (!D.divisible_local(g)) pool.push_back(g);
  if (pool.empty()) return std::nullopt;
  std::size_t tried = 0;
  for (const auto& g : pool) {
    if (tried++ >= budget) return std::nullopt;
    if (is_nonzerodivisor(D, g)) return g;
  }
  if (pool.size() > 1) {
    Poly sum(D.nvars());
    for (const auto& g : pool) sum += g;
    ++tried;
    if (is_nonzerodivisor(D, sum)) return sum;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-3, 3);
  while (tried++ < budget) {
    Poly c(D.nvars());
    for (const auto& g : pool) c += g * Rational(coef(rng));
    if (!c.is_zero() && is_nonzerodivisor(D, c)) return c;
  }
  return std::nullopt;
}

FractionalIdeal::FractionalIdeal(DivisorGerm D, std::vector<Poly> num, Poly den)
    : germ_(std::move(D)), den_(std::move(den)) {
  for (auto& p : num) {
    Poly r = germ_.mod_h(p);
    if (r.is_zero()) continue;
    if (std::find(num_.begin(), num_.end(), r) == num_.end()) num_.push_back(std::move(r));
  }
}

FractionalIdeal FractionalIdeal::make(const DivisorGerm& D, const std::vector<MeroFraction>& gens) {
  std::size_t n = D.nvars();
  std::vector<Poly> dens;
  for (const auto& f : gens) {
    if (auto w = zero_divisor_witness(D, f.den))
      throw ZeroDivisorError("denominator " + D.to_string(f.den) + " is a zero divisor modulo h", f.den, *w);
    if (f.den.is_constant()) continue;
    Poly m = f.den.monic();
    if (std::find(dens.begin(), dens.end(), m) == dens.end()) dens.push_back(m);
  }
  Poly den = one(n);
  for (const auto& d : dens) den = den * d;
  std::vector<Poly> num;
  for (const auto& f : gens) {
    // f.num / f.den = f.num * (den / f.den) / den.
    num.push_back(f.num * exact_divide(den, f.den).value());
  }
  FractionalIdeal out(D, num, den);
  if (!find_nonzerodivisor(D, out.num_, 0)) throw std::invalid_argument("module contains no nonzerodivisor");
  return out;
}

FractionalIdeal FractionalIdeal::from_ideal(const DivisorGerm& D, const std::vector<Poly>& gens) {
  std::vector<MeroFraction> fr;
  for (const auto& g : gens) fr.push_back({g, one(D.nvars())});
  return make(D, fr);
}

FractionalIdeal FractionalIdeal::unit(const DivisorGerm& D) { return FractionalIdeal(D, {one(D.nvars())}, one(D.nvars())); }

Ideal FractionalIdeal::numerator_ideal() const { return scaled_with_h(germ_, one(germ_.nvars()), num_); }

std::vector<MeroFraction> FractionalIdeal::generators() const {
  std::vector<MeroFraction> out;
  for (const auto& p : num_) out.push_back({p, den_});
  return out;
}

std::vector<MeroFraction> FractionalIdeal::minimal_generators() const {
  std::vector<Poly> row = num_;
  row.push_back(germ_.h());
  auto mg = min_generators_from_relations(num_.size(), syzygies(row));
  std::vector<MeroFraction> out;
  for (std::size_t i : mg.selected) out.push_back(simplify({num_[i], den_}));
  return out;
}

bool FractionalIdeal::contains(const MeroFraction& f) const {
  return scaled_with_h(germ_, f.den, num_).contains_local(f.num * den_);
}

std::string FractionalIdeal::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& f : minimal_generators()) {
    if (!first) out += ", ";
    first = false;
    out += logres::to_string(germ_, f);
  }
  return out + "}";
}

bool includes(const FractionalIdeal& a, const FractionalIdeal& b) {
  require_same_germ(a, b);
  Ideal target = scaled_with_h(a.germ(), b.denominator(), a.numerators());
  return std::all_of(b.numerators().begin(), b.numerators().end(),
                     [&](const Poly& nb) { return target.contains_local(nb * a.denominator()); });
}

bool equals(const FractionalIdeal& a, const FractionalIdeal& b) { return includes(a, b) && includes(b, a); }

FractionalIdeal product(const FractionalIdeal& a, const FractionalIdeal& b) {
  require_same_germ(a, b);
  std::vector<Poly> num;
  for (const auto& p : a.numerators())
    for (const auto& q : b.numerators()) num.push_back(p * q);
  return FractionalIdeal(a.germ(), std::move(num), a.denominator() * b.denominator());
}

FractionalIdeal dual(const FractionalIdeal& I, std::uint64_t seed) {
  const DivisorGerm& D = I.germ();
  auto q = find_nonzerodivisor(D, I.numerators(), seed);
  if (!q) throw std::runtime_error("dual: no nonzerodivisor found in the numerator");
  // f = g d / q lies in the dual iff g * N is in <q, h>.
  Ideal Q = ideal_quotient(Ideal(D.nvars(), {*q, D.h()}), I.numerator_ideal());
  std::vector<Poly> num;
  for (const auto& g : Q.gens()) num.push_back(g * I.denominator());
  FractionalIdeal out(D, std::move(num), *q);
  FractionalIdeal pr = product(I, out);
  Ideal target(D.nvars(), {pr.denominator(), D.h()});
  for (const auto& p : pr.numerators())
    if (!target.contains_local(p)) throw std::logic_error("dual: I * dual(I) is not contained in O_D");
  return out;
}

bool is_reflexive(const FractionalIdeal& I, std::uint64_t seed) { return equals(dual(dual(I, seed), seed), I); }

FractionalIdeal jacobian_fractional(const DivisorGerm& D) {
  std::size_t n = D.nvars();
  std::vector<Poly> gens = jacobian_generators(D);
  // A smooth germ has a unit partial; keep the representation small.
  for (const auto& g : gens)
    if (is_unit_local(g)) return FractionalIdeal::unit(D);
  return FractionalIdeal(D, gens, one(n));
}

}  // namespace logres
