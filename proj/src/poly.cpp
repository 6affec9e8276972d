#include "logres/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace logres {

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
}

Monomial Monomial::variable(std::size_t i, int power) {
  Monomial m;
  m.set(i, power);
  return m;
}

void Monomial::set(std::size_t i, int e) {
  if (e < 0 || e > 0xffff) throw std::out_of_range("exponent out of range");
  degree_ += e - exps_[i];
  exps_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    int e = exps_[i] + other.exps_[i];
    if (e > 0xffff) throw std::overflow_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  int d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    d += r.exps_[i];
  }
  r.degree_ = d;
  return r;
}

Monomial Monomial::quotient_by(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.exps_[i] = static_cast<std::uint16_t>(exps_[i] - divisor.exps_[i]);
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

bool canonical_greater(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

Poly::Poly(std::size_t nvars) : nvars_(nvars) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
}

Poly::Poly(std::size_t nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
  if (nvars > kMaxVars) throw std::invalid_argument("too many variables");
  normalize();
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
  if (i >= nvars) throw std::out_of_range("variable index out of range");
  Poly p(nvars);
  p.terms_.push_back({Monomial::variable(i), 1});
  return p;
}

Poly Poly::monomial(std::size_t nvars, const Monomial& m, const Rational& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return canonical_greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return 0;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) {
    return canonical_greater(t.mono, x);
  });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

int Poly::order() const { return terms_.empty() ? -1 : terms_.back().mono.degree(); }

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

bool Poly::is_homogeneous() const { return degree() == order(); }

std::vector<bool> Poly::support() const {
  std::vector<bool> used(nvars_, false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (t.mono[i] != 0) used[i] = true;
  return used;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && canonical_greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || canonical_greater(b[j].mono, a[i].mono)) {
      out.push_back(b[j++]);
      if (subtract) out.back().coef = -out.back().coef;
    } else {
      Rational c = subtract ? Rational(a[i].coef - b[j].coef) : Rational(a[i].coef + b[j].coef);
      if (c != 0) out.push_back({a[i].mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same_ring(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars()) throw std::invalid_argument("polynomials live in different rings");
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  check_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_ring(*this, other);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= c;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same_ring(a, b);
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) prod.push_back({s.mono * t.mono, s.coef * t.coef});
  return Poly(a.nvars_, std::move(prod));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef) return false;
  return true;
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the canonical order.
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coef * e});
  }
  return Poly(nvars_, std::move(out));
}

Poly Poly::homogeneous_part(int deg) const {
  Poly r(nvars_);
  for (const auto& t : terms_)
    if (t.mono.degree() == deg) r.terms_.push_back(t);
  return r;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitute: wrong number of images");
  std::size_t target = images.empty() ? 0 : images[0].nvars();
  Poly result(target);
  // Cache powers per variable.
  std::vector<std::vector<Poly>> powers(nvars_);
  for (const auto& t : terms_) {
    Poly term = constant(target, t.coef);
    for (std::size_t i = 0; i < nvars_; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
      term = term * pw[e];
    }
    result += term;
  }
  return result;
}

Poly Poly::remap(std::size_t target_nvars, std::span<const std::size_t> var_map) const {
  if (var_map.size() != nvars_) throw std::invalid_argument("remap: wrong map size");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map[i] >= target_nvars) throw std::out_of_range("remap: target index");
      m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    }
    out.push_back({m, t.coef});
  }
  return Poly(target_nvars, std::move(out));
}

Poly Poly::monic() const {
  if (terms_.empty()) return *this;
  Rational inv = 1 / terms_.front().coef;
  Poly r = *this;
  r *= inv;
  return r;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : terms_) {
    num_gcd = gcd(num_gcd, mpz_class(t.coef.get_num()));
    den_lcm = lcm(den_lcm, mpz_class(t.coef.get_den()));
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  Poly r = *this;
  r *= abs(scale);
  return r;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Poly::to_string(const std::vector<std::string>& names) const {
  if (names.size() < nvars_) throw std::invalid_argument("to_string: not enough variable names");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coef;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << c.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      int e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

Ring::Ring(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw std::invalid_argument("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name: " + names_[i]);
  }
}

int Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

bool is_unit_local(const Poly& p) { return p.constant_term() != 0; }

}  // namespace logres
