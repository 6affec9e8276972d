#ifndef LOGRES_ENGINE_HPP
#define LOGRES_ENGINE_HPP

// Low-level Groebner/standard basis engine over sparse vectors of terms.
//
// Ideals are rank-1 modules. Module terms are ordered position-over-term:
// a smaller component index dominates, then the monomial order decides.
// Global orders run Buchberger with classical division; the local order runs
// Mora's tangent cone algorithm, whose normal form decides membership in the
// localization at the origin.

#include <cstdint>
#include <optional>
#include <vector>

#include "logres/monomial_order.hpp"
#include "logres/poly.hpp"

namespace logres::engine {

struct ModTerm {
  Monomial mono;
  std::uint32_t comp = 0;
  Rational coef;
};

/// Nonzero terms sorted descending in a TermOrder.
using Vec = std::vector<ModTerm>;

class TermOrder {
 public:
  explicit TermOrder(MonomialOrder mono) : mono_(std::move(mono)) {}

  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return mono_.compare(a, b);
  }
  int compare(const ModTerm& a, const ModTerm& b) const { return compare(a.mono, a.comp, b.mono, b.comp); }

  bool is_local() const { return mono_.is_local(); }
  const MonomialOrder& monomial_order() const { return mono_; }

 private:
  MonomialOrder mono_;
};

void sort_vec(Vec& v, const TermOrder& order);
Vec add(const Vec& a, const Vec& b, const TermOrder& order);
/// f - c * m * g.
Vec sub_mul(const Vec& f, const Rational& c, const Monomial& m, const Vec& g, const TermOrder& order);
Vec scale(const Vec& v, const Rational& c);
Vec make_monic(const Vec& v);
int max_degree(const Vec& v);
int ecart(const Vec& v);
bool is_homogeneous(const Vec& v);

Vec from_poly(const Poly& p, std::uint32_t comp, const TermOrder& order);
Vec from_vector(const std::vector<Poly>& components, const TermOrder& order);
std::vector<Poly> to_vector(const Vec& v, std::size_t nvars, std::size_t rank);
Poly to_poly(const Vec& v, std::size_t nvars, std::uint32_t comp = 0);

/// Division by `basis`. When `certificate` is set, quotients and the unit are
/// filled so that unit * f = sum quotients[i] * basis[i] + remainder, with the
/// unit a polynomial of nonzero constant term (always 1 for global orders).
struct Division {
  Vec remainder;
  std::vector<Poly> quotients;
  Poly unit;
};

/// Global orders: full reduction (tail included) when `full` is set.
/// Local orders: Mora's normal form; only the leading term is guaranteed
/// irreducible.
Division reduce(const Vec& f, const std::vector<Vec>& basis, const TermOrder& order, std::size_t nvars,
                bool certificate, bool full = true);

struct BasisStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

/// Reduced Groebner basis (global orders) or minimal monic standard basis
/// (local order). Deterministic for given input and order.
std::vector<Vec> standard_basis(const std::vector<Vec>& gens, const TermOrder& order, std::size_t nvars,
                                BasisStats* stats = nullptr);

/// S-vector of two basis elements whose leading terms share a component.
std::optional<Vec> s_vector(const Vec& f, const Vec& g, const TermOrder& order);

/// Checks that every S-vector of `basis` reduces to zero.
bool verify_standard_basis(const std::vector<Vec>& basis, const TermOrder& order, std::size_t nvars);

}  // namespace logres::engine

#endif  // LOGRES_ENGINE_HPP
