#ifndef LOGRES_FRACTIONAL_IDEAL_HPP
#define LOGRES_FRACTIONAL_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logres/divisor.hpp"

namespace logres {

/// Element num/den of the total quotient ring of O_D.
struct MeroFraction {
  Poly num;
  Poly den;
};

/// num/den == other.num/other.den in the total quotient ring at the origin.
bool fraction_equal(const DivisorGerm& D, const MeroFraction& a, const MeroFraction& b);
std::string to_string(const DivisorGerm& D, const MeroFraction& f);

class ZeroDivisorError : public std::invalid_argument {
 public:
  ZeroDivisorError(const std::string& what, Poly denominator, Poly witness)
      : std::invalid_argument(what), denominator_(std::move(denominator)), witness_(std::move(witness)) {}
  const Poly& denominator() const { return denominator_; }
  /// Nonzero modulo h while witness * denominator is zero modulo h.
  const Poly& witness() const { return witness_; }

 private:
  Poly denominator_;
  Poly witness_;
};

/// Returns std::nullopt when q is a nonzerodivisor on O_D at the origin,
/// otherwise a witness w not in <h> with w * q in <h>.
std::optional<Poly> zero_divisor_witness(const DivisorGerm& D, const Poly& q);
bool is_nonzerodivisor(const DivisorGerm& D, const Poly& q);

/// Deterministic search for a nonzerodivisor inside an ideal: its generators
/// in order, their sum, then seeded random small combinations.
std::optional<Poly> find_nonzerodivisor(const DivisorGerm& D, const std::vector<Poly>& gens, std::uint64_t seed,
                                        std::size_t budget = 32);

/// Finitely generated O_D-submodule (num + <h>) / den of the total quotient
/// ring, where den is a nonzerodivisor and num contains one.
class FractionalIdeal {
 public:
  FractionalIdeal() = default;

  /// Common-denominator form of the O_D-module generated by the fractions.
  /// Throws ZeroDivisorError for a zero-divisor denominator and
  /// std::invalid_argument when the module contains no nonzerodivisor.
  static FractionalIdeal make(const DivisorGerm& D, const std::vector<MeroFraction>& gens);
  static FractionalIdeal from_ideal(const DivisorGerm& D, const std::vector<Poly>& gens);
  static FractionalIdeal unit(const DivisorGerm& D);
  /// Trusted constructor: den is a certified nonzerodivisor.
  FractionalIdeal(DivisorGerm D, std::vector<Poly> num, Poly den);

  const DivisorGerm& germ() const { return germ_; }
  /// Numerator generators reduced modulo h (h itself omitted).
  const std::vector<Poly>& numerators() const { return num_; }
  const Poly& denominator() const { return den_; }
  /// The numerator ideal including h.
  Ideal numerator_ideal() const;
  std::vector<MeroFraction> generators() const;
  /// A minimal generating set at the origin drawn from generators().
  std::vector<MeroFraction> minimal_generators() const;

  bool contains(const MeroFraction& f) const;

  std::string to_string() const;

 private:
  DivisorGerm germ_;
  std::vector<Poly> num_;
  Poly den_;
};

/// a contains b.
bool includes(const FractionalIdeal& a, const FractionalIdeal& b);
bool equals(const FractionalIdeal& a, const FractionalIdeal& b);
FractionalIdeal product(const FractionalIdeal& a, const FractionalIdeal& b);
/// {f : f * I in O_D}.
FractionalIdeal dual(const FractionalIdeal& I, std::uint64_t seed = 0);
bool is_reflexive(const FractionalIdeal& I, std::uint64_t seed = 0);

/// The Jacobian ideal of D as a fractional ideal with denominator 1.
FractionalIdeal jacobian_fractional(const DivisorGerm& D);

}  // namespace logres

#endif  // LOGRES_FRACTIONAL_IDEAL_HPP
