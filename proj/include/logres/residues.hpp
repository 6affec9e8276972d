#ifndef LOGRES_RESIDUES_HPP
#define LOGRES_RESIDUES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logres/divisor.hpp"
#include "logres/fractional_ideal.hpp"

namespace logres {

/// g * a = xi * grad(h) + h * b with g a nonzerodivisor modulo h.
struct ResidueCertificate {
  Poly g;
  Poly xi;
  std::vector<Poly> b;
};

/// The 1-form (sum a_i dx_i) / h is logarithmic.
bool is_logarithmic(const DivisorGerm& D, const std::vector<Poly>& a);
bool is_logarithmic(const DivisorGerm& D, const LogOneForm& w);

/// Up to `count` certificates with pairwise distinct g.
std::vector<ResidueCertificate> residue_certificates(const DivisorGerm& D, const std::vector<Poly>& a,
                                                     std::size_t count = 1, std::uint64_t seed = 0,
                                                     std::size_t budget = 32);

/// Residue xi / (g * unit) of a logarithmic 1-form. Throws std::runtime_error
/// when no nonzerodivisor certificate is found within the budget.
MeroFraction residue(const DivisorGerm& D, const LogOneForm& w, std::uint64_t seed = 0, std::size_t budget = 32);

/// R_D as the dual of the Jacobian ideal.
FractionalIdeal residue_module(const DivisorGerm& D, std::uint64_t seed = 0);

/// g * sum delta_i a_i == dh(delta) * xi modulo h.
bool sigma_check(const DivisorGerm& D, const VectorField& delta, const std::vector<Poly>& a,
                 const ResidueCertificate& cert);

struct MuResidues {
  std::size_t count = 0;
  bool contains_unit = false;
};

MuResidues mu_residues(const DivisorGerm& D, std::uint64_t seed = 0);
MuResidues mu_residues(const FractionalIdeal& R);

enum class GorensteinVerdict { empty, gorenstein, not_gorenstein, undecided };
std::string to_string(GorensteinVerdict v);

GorensteinVerdict gorenstein_singular_locus(const DivisorGerm& D, bool free, const MuResidues& mu);
GorensteinVerdict gorenstein_singular_locus(const DivisorGerm& D, std::uint64_t seed = 0);

class InvalidFactorization : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Factors pairwise coprime and squarefree with product equal to h up to a
/// nonzero constant; throws InvalidFactorization otherwise.
void validate_factors(const DivisorGerm& D, const std::vector<Poly>& factors);

/// Idempotents e_i = (h/f_i) / sum_j (h/f_j) of the components.
struct DirectSum {
  std::vector<MeroFraction> idempotents;
  bool idempotent_certified = false;  // e_i^2 == e_i and sum e_i == 1 mod h
  FractionalIdeal module;             // generated by the idempotents
  bool equals_residues = false;
};

DirectSum direct_sum_check(const DivisorGerm& D, const std::vector<Poly>& factors, const FractionalIdeal& residues);
DirectSum direct_sum_check(const DivisorGerm& D, const std::vector<Poly>& factors, std::uint64_t seed = 0);

}  // namespace logres

#endif  // LOGRES_RESIDUES_HPP
