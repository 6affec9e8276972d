#ifndef LOGRES_NORMALIZATION_HPP
#define LOGRES_NORMALIZATION_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logres/fractional_ideal.hpp"

namespace logres {

class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The jets are too short to decide; retry with a larger truncation.
class TruncationInsufficient : public NormalizationError {
 public:
  using NormalizationError::NormalizationError;
};

/// Truncated parametrization of one curve branch. coords[i] is a polynomial
/// in the single variable t for curve variables and empty for passive
/// (suspension) variables, which are carried along unchanged. Coefficients of
/// t^k for k < truncation are exact.
struct BranchParam {
  std::vector<std::optional<Poly>> coords;
  int truncation = 0;
};

/// Pullback of f along a branch, truncated below t^truncation. The result
/// lives in Q[t, passive variables] with t as variable 0.
Poly pullback(const BranchParam& b, const Poly& f);
/// Lowest t-degree of a pullback; std::nullopt when it vanishes to the
/// truncation order.
std::optional<int> t_order(const Poly& p, int truncation);

/// Variables that occur in h.
std::vector<std::size_t> curve_variables(const DivisorGerm& D);
/// Some partial derivative of h is a unit at the origin.
bool is_smooth(const DivisorGerm& D);
/// Plane curve, possibly times a smooth factor: h involves exactly two
/// variables.
bool is_curve_or_suspension(const DivisorGerm& D);

struct PuiseuxResult {
  bool supported = false;
  std::vector<BranchParam> branches;
  std::string reason;
};

/// Newton-Puiseux branches with rational coefficients, truncated at
/// `truncation`. Unsupported when a root extraction leaves the rationals.
PuiseuxResult puiseux_rational(const DivisorGerm& D, int truncation);

/// Branch list in the JSON format
/// [{"param": {"x": [[3, "1"]], "y": [[2, "1"]]}, "truncation": 16}].
/// Throws std::invalid_argument on malformed input.
std::vector<BranchParam> branches_from_json(const DivisorGerm& D, const std::string& text);
std::string branches_to_json(const DivisorGerm& D, const std::vector<BranchParam>& branches);

/// Polynomial map from (Q^k, 0) onto D, finite and birational (a
/// normalization). images[i] is the pullback of variable i.
struct Parametrization {
  std::vector<std::string> params;
  std::vector<Poly> images;
};

enum class NormalizationKind { smooth, curve, components, parametrization };
std::string to_string(NormalizationKind k);

struct NormalizationData {
  NormalizationKind kind = NormalizationKind::smooth;
  std::string source;
  std::vector<BranchParam> branches;
  std::optional<Parametrization> parametrization;
  /// Weakly holomorphic functions and the conductor; absent for the
  /// parametrization class.
  std::optional<FractionalIdeal> normalization;
  std::optional<FractionalIdeal> conductor;
  int truncation = 0;
};

NormalizationData normalization_smooth(const DivisorGerm& D);
/// Certifies the branches (vanishing to the truncation order, primitivity,
/// branch multiplicities summing to the multiplicity of h, distinctness) and
/// assembles the normalization and the conductor. Throws NormalizationError.
NormalizationData validate_branches(const DivisorGerm& D, std::vector<BranchParam> branches, std::uint64_t seed = 0,
                                    const std::string& source = "user");
/// Puiseux branches with adaptive truncation; std::nullopt when unsupported.
/// precision = 0 picks 2 * Milnor number + 8.
std::optional<NormalizationData> normalization_from_puiseux(const DivisorGerm& D, int precision = 0,
                                                             std::uint64_t seed = 0);
/// Union of components smooth at the origin: the normalization is their
/// disjoint union, generated by the component idempotents.
NormalizationData normalization_from_components(const DivisorGerm& D, const std::vector<Poly>& factors,
                                                std::uint64_t seed = 0);
/// Checks that the parametrization maps into D and the origin to the origin.
NormalizationData normalization_from_parametrization(const DivisorGerm& D, Parametrization p);

/// Weak holomorphy of num/den. For branches: t-order of the numerator
/// pullback at least that of the denominator on every branch. std::nullopt
/// when the truncation cannot decide.
std::optional<bool> is_weakly_holomorphic(const NormalizationData& N, const MeroFraction& f);

/// The conductor dual(normalization); throws NormalizationError when the
/// normalization is not available.
const FractionalIdeal& conductor(const NormalizationData& N);

/// Milnor number of an isolated singularity; std::nullopt when infinite.
std::optional<std::size_t> milnor_number(const DivisorGerm& D);

}  // namespace logres

#endif  // LOGRES_NORMALIZATION_HPP
