#ifndef LOGRES_IDEAL_HPP
#define LOGRES_IDEAL_HPP

#include <memory>
#include <optional>
#include <vector>

#include "logres/engine.hpp"
#include "logres/monomial_order.hpp"
#include "logres/poly.hpp"

namespace logres {

/// Element of a free module O^r, one polynomial per component.
using ModuleElement = std::vector<Poly>;

/// unit * f = sum quotients[i] * basis[i] + remainder.
struct NormalForm {
  Poly remainder;
  std::vector<Poly> quotients;
  Poly unit;
};

std::vector<Poly> standard_basis(const std::vector<Poly>& gens, const MonomialOrder& order);
NormalForm normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order,
                       bool certificate = false);

/// Checks that every S-polynomial of `basis` reduces to zero under `order`.
bool is_standard_basis(const std::vector<Poly>& basis, const MonomialOrder& order);

/// Ideal of a polynomial ring with lazily computed, shared bases. The global
/// basis uses degrevlex; the local one uses local degrevlex and decides
/// membership in the localization at the origin.
class Ideal {
 public:
  Ideal() = default;
  Ideal(std::size_t nvars, std::vector<Poly> gens);

  static Ideal unit(std::size_t nvars) { return Ideal(nvars, {Poly::constant(nvars, 1)}); }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Poly>& gens() const { return gens_; }
  bool is_zero() const;

  const std::vector<Poly>& groebner_basis() const;
  const std::vector<Poly>& local_basis() const;

  bool contains(const Poly& f) const;
  bool contains(const Ideal& other) const;
  bool equals(const Ideal& other) const;
  bool contains_local(const Poly& f) const;
  bool contains_local(const Ideal& other) const;
  bool equals_local(const Ideal& other) const;
  bool is_unit() const;
  bool is_unit_local() const;

  /// Local division certificate against local_basis().
  NormalForm reduce_local(const Poly& f, bool certificate = true) const;
  NormalForm reduce(const Poly& f, bool certificate = true) const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;
  Ideal with(const Poly& extra) const;

  std::vector<std::string> to_strings(const std::vector<std::string>& names) const;

 private:
  struct Cache;
  std::size_t nvars_ = 0;
  std::vector<Poly> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Finitely generated submodule of O^rank.
class ModuleBasis {
 public:
  ModuleBasis() = default;
  ModuleBasis(std::size_t nvars, std::size_t rank, std::vector<ModuleElement> gens);

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleElement>& gens() const { return gens_; }

  const std::vector<ModuleElement>& groebner_basis() const;
  const std::vector<ModuleElement>& local_basis() const;
  bool contains(const ModuleElement& v) const;
  bool contains_local(const ModuleElement& v) const;

 private:
  struct Cache;
  std::size_t nvars_ = 0;
  std::size_t rank_ = 0;
  std::vector<ModuleElement> gens_;
  std::shared_ptr<Cache> cache_;
};

std::vector<ModuleElement> module_standard_basis(const std::vector<ModuleElement>& gens, std::size_t rank,
                                                 const MonomialOrder& order);

/// Generators of {s in O^k : sum s_i gens[i] = 0}; each output has length
/// gens.size().
std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, std::size_t rank);
std::vector<ModuleElement> syzygies(const std::vector<Poly>& row);

/// {g : g * v in N}.
Ideal module_quotient(const ModuleBasis& module, const ModuleElement& v);
/// {g : g * J subset I}.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
Ideal saturation(const Ideal& I, const Poly& f);
Ideal intersect(const Ideal& I, const Ideal& J);
/// I intersected with the subring generated by the variables not in `drop`.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop);

/// Membership in the localization decided through the ideal quotient
/// (I : f) not contained in the maximal ideal. Independent of Mora's
/// normal form.
bool contains_local_by_quotient(const Ideal& I, const Poly& f);
bool module_contains_local_by_quotient(const ModuleBasis& module, const ModuleElement& v);

/// Minimal number of generators at the origin (Nakayama) and a minimal
/// generating subset of the input, as indices.
struct MinGenerators {
  std::size_t count = 0;
  std::vector<std::size_t> selected;
};
MinGenerators min_generators_local(const ModuleBasis& module);
MinGenerators min_generators_local(const Ideal& ideal);
/// Minimal generators among k elements given generators of their relation
/// module; only the first k entries of each relation are read.
MinGenerators min_generators_from_relations(std::size_t k, const std::vector<ModuleElement>& relations);

/// Krull dimension of the local ring at the origin; -1 when the ideal is the
/// unit ideal there.
int local_dimension(const Ideal& I);
/// Vector-space dimension of the local quotient ring, when finite.
std::optional<std::size_t> local_colength(const Ideal& I);

/// Maximal independent set of variables modulo the global Groebner basis.
std::vector<std::size_t> independent_set(const Ideal& I);
int dimension(const Ideal& I);

/// Exact polynomial division.
std::optional<Poly> exact_divide(const Poly& f, const Poly& g);
/// Monic greatest common divisor (canonical leading coefficient 1).
Poly gcd(const Poly& f, const Poly& g);
bool is_squarefree(const Poly& h);
Poly squarefree_part(const Poly& p);

/// w * f = a * g with w(0) != 0, when f lies in g * O_local.
struct LocalQuotient {
  Poly numerator;
  Poly unit;
};
std::optional<LocalQuotient> local_divide(const Poly& f, const Poly& g);

}  // namespace logres

#endif  // LOGRES_IDEAL_HPP
