#ifndef LOGRES_CRITERIA_HPP
#define LOGRES_CRITERIA_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logres/normalization.hpp"
#include "logres/residues.hpp"

namespace logres {

enum class Verdict { yes, no, undecided };
/// "true", "false", "undecided".
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// A verdict with its witness (for false) or certificate (for true).
struct Check {
  Verdict verdict = Verdict::undecided;
  std::string witness;
  std::string certificate;
  friend bool operator==(const Check&, const Check&) = default;
};

/// A known equivalence between computed quantities was violated. This
/// indicates a bug in the implementation.
class ConsistencyViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Degree k of an integral equation f^k in <1, f, ..., f^(k-1)>, searched up
/// to max_degree; such an equation certifies weak holomorphy.
std::optional<int> integral_equation_degree(const DivisorGerm& D, const MeroFraction& f, int max_degree = 4);

/// Residues weakly holomorphic. Uses the normalization data when present,
/// otherwise integral equations (which can only certify true).
Check check_condition_C(const DivisorGerm& D, const FractionalIdeal& residues, const NormalizationData* N);
/// Jacobian ideal equals the conductor.
Check check_condition_G(const DivisorGerm& D, const NormalizationData* N);
/// Jacobian ideal radical at the origin.
Check check_condition_D(const DivisorGerm& D);
/// Coordinate-system criterion: m <= n, every factor smooth, rank m at 0.
/// Throws InvalidFactorization.
bool check_normal_crossing_at_origin(const DivisorGerm& D, const std::vector<Poly>& factors);
/// Normal crossing at the origin, with or without a factorization.
Check check_condition_F(const DivisorGerm& D, const std::vector<Poly>* factors, Verdict free, Verdict euler,
                        Verdict radical);
/// Normal crossing in codimension one: decided for smooth germs, curves and
/// their suspensions, and factorizations into components smooth at 0.
Check check_condition_B(const DivisorGerm& D, const std::vector<Poly>* factors);

/// Components pairwise transversal away from a set of codimension two in D.
bool pairwise_transversal_codim1(const DivisorGerm& D, const std::vector<Poly>& factors);

struct Crosscheck {
  Verdict B = Verdict::undecided, D = Verdict::undecided, G = Verdict::undecided;
  friend bool operator==(const Crosscheck&, const Crosscheck&) = default;
};
/// On a free germ the decided verdicts among B, D and G agree. Throws
/// ConsistencyViolation otherwise.
Crosscheck free_divisor_crosscheck(const DivisorGerm& D, const Check& B, const Check& Dc, const Check& G);

enum class GorensteinClass { not_applicable, suspension_of_quasihomogeneous_plane_curve };
std::string to_string(GorensteinClass c);
GorensteinClass gorenstein_class_from_string(const std::string& s);

struct Classification {
  GorensteinClass verdict = GorensteinClass::not_applicable;
  std::vector<std::string> curve_variables;
  std::vector<std::string> passive_variables;
  /// Linear substitutions applied to split off passive variables.
  std::vector<std::string> substitutions;
  std::string euler_field;
  std::string diagnostic;
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Classification of germs with Gorenstein singular locus of codimension one:
/// split off passive variables (after shears x_i -> x_i + c x_j from a fixed
/// schedule) and certify the remaining plane curve Euler homogeneous.
Classification classify_gorenstein_locus(const DivisorGerm& D, GorensteinVerdict g);

struct ConsistencyEntry {
  std::string name;
  std::string status;  // "verified" or "not_applicable"
  std::string detail;
  friend bool operator==(const ConsistencyEntry&, const ConsistencyEntry&) = default;
};

struct AnalyzeOptions {
  std::optional<std::vector<Poly>> factors;
  std::optional<std::vector<BranchParam>> branches;
  std::optional<Parametrization> parametrization;
  int precision = 0;
  std::uint64_t seed = 0;
};

struct DivisorReport {
  int schema = 1;
  std::vector<std::string> vars;
  std::string poly;
  std::vector<std::string> factors;
  std::uint64_t seed = 0;
  int precision = 0;

  Check free;
  Check euler_homogeneous;
  Check jacobian_radical;            // (D)
  Check jacobian_eq_conductor;       // (G)
  Check residues_weakly_holomorphic; // (C)
  Check normal_crossing_codim1;      // (B)
  Check normal_crossing_at_origin;   // (F)
  std::string gorenstein_singular_locus;
  std::size_t mu_residues = 0;
  bool residues_contain_unit = false;
  std::optional<bool> direct_sum;
  Crosscheck crosscheck;
  Classification classification;

  std::string jacobian_ideal;
  std::string residue_module;
  std::string normalization;
  std::string conductor;
  std::string normalization_source;
  int truncation = 0;
  std::size_t branches = 0;

  std::vector<ConsistencyEntry> consistency;
  /// Wall-clock milliseconds per stage; not part of the JSON form or of
  /// equality, so that reports are reproducible.
  std::vector<std::pair<std::string, double>> timings;

  bool operator==(const DivisorReport& o) const;
};

/// Runs every check. Throws ConsistencyViolation when a known equivalence
/// fails, NormalizationError or InvalidFactorization on bad optional input.
DivisorReport analyze(const DivisorGerm& D, const AnalyzeOptions& options = {});

std::string report_to_json(const DivisorReport& r);
/// Throws std::invalid_argument on malformed input.
DivisorReport report_from_json(const std::string& text);
std::string report_to_text(const DivisorReport& r);

}  // namespace logres

#endif  // LOGRES_CRITERIA_HPP
