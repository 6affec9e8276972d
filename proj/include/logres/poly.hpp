#ifndef LOGRES_POLY_HPP
#define LOGRES_POLY_HPP

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace logres {

using Rational = mpq_class;

inline constexpr std::size_t kMaxVars = 12;

/// Exponent vector of fixed capacity; the ambient variable count is tracked by
/// the owning polynomial.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exps);

  static Monomial variable(std::size_t i, int power = 1);

  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);
  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // Requires divides(*this).
  Monomial quotient_by(const Monomial& divisor) const;
  bool coprime(const Monomial& other) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Rational coef;
};

/// Exact multivariate polynomial over the rationals in a fixed number of
/// variables. Terms are kept sorted by descending degree-reverse-lexicographic
/// order with no zero coefficients, so structural equality is mathematical
/// equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars);
  Poly(std::size_t nvars, std::vector<Term> terms);  // normalizes

  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t i);
  static Poly monomial(std::size_t nvars, const Monomial& m, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree of a term; -1 for zero.
  int order() const;
  int degree_in(std::size_t var) const;
  bool is_homogeneous() const;
  /// Variables that occur in some term.
  std::vector<bool> support() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly mul_monomial(const Monomial& m, const Rational& c) const;
  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;
  /// Homogeneous component of the given total degree.
  Poly homogeneous_part(int deg) const;

  /// Replaces x_i by images[i]; all images share one variable count.
  Poly substitute(std::span<const Poly> images) const;
  /// Re-embeds into a ring with `target_nvars` variables, sending x_i to
  /// x_{var_map[i]}.
  Poly remap(std::size_t target_nvars, std::span<const std::size_t> var_map) const;

  /// Makes the leading coefficient (in canonical order) equal to one.
  Poly monic() const;
  /// Scales by a positive rational so all coefficients are coprime integers.
  Poly primitive() const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  void normalize();

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Canonical descending term order used for stored polynomials.
bool canonical_greater(const Monomial& a, const Monomial& b);

/// Variable names of a polynomial ring.
class Ring {
 public:
  Ring() = default;
  explicit Ring(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  /// Index of a variable, or -1.
  int index_of(const std::string& name) const;

  Poly zero() const { return Poly(size()); }
  Poly one() const { return Poly::constant(size(), 1); }
  Poly var(std::size_t i) const { return Poly::variable(size(), i); }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::vector<std::string> names_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses `expr := term (('+'|'-') term)*`, `term := factor ('*' factor)*`,
/// `factor := base ('^' uint)?`, `base := rational | var | '(' expr ')'`.
/// A leading sign on an expression or factor is accepted.
Poly parse(const std::string& expr, const Ring& ring);
Poly parse(const std::string& expr, const std::vector<std::string>& vars);

/// Rational literal such as "3", "-2/7".
Rational parse_rational(const std::string& text);

/// True iff p(0) != 0, i.e. p is a unit of the local ring at the origin.
bool is_unit_local(const Poly& p);

std::string rational_to_string(const Rational& q);

}  // namespace logres

#endif  // LOGRES_POLY_HPP
