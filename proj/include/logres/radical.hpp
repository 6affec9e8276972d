#ifndef LOGRES_RADICAL_HPP
#define LOGRES_RADICAL_HPP

#include <optional>
#include <string>

#include "logres/ideal.hpp"

namespace logres {

enum class RadicalVerdict { radical, not_radical, undecided };

std::string to_string(RadicalVerdict v);

/// Radical verdict with its certificate. For not_radical, `witness` lies
/// outside the ideal while witness^witness_power lies inside. For radical,
/// every generator of `radical_ideal` (which always contains the radical)
/// lies in the ideal.
struct RadicalResult {
  RadicalVerdict verdict = RadicalVerdict::undecided;
  Ideal radical_ideal;
  std::optional<Poly> witness;
  unsigned witness_power = 0;
};

/// Radical of an ideal of Q[x]: recursion over maximal independent sets,
/// squarefree eliminants over the function field (Seidenberg) and
/// contraction by saturation.
Ideal radical(const Ideal& I);

/// Radicality in the polynomial ring.
RadicalResult radical_test(const Ideal& I, unsigned max_power = 64);
/// Radicality in the localization at the origin.
RadicalResult radical_test_local(const Ideal& I, unsigned max_power = 64);

}  // namespace logres

#endif  // LOGRES_RADICAL_HPP
