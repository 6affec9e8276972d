#ifndef LOGRES_DIVISOR_HPP
#define LOGRES_DIVISOR_HPP

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logres/ideal.hpp"
#include "logres/poly.hpp"

namespace logres {

class InvalidGerm : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Reduced hypersurface germ {h = 0} at the origin.
class DivisorGerm {
 public:
  DivisorGerm() = default;
  /// Throws InvalidGerm when h is zero, h(0) != 0 or h is not squarefree.
  DivisorGerm(Ring ring, Poly h);
  static DivisorGerm parse(const std::vector<std::string>& vars, const std::string& h);

  const Ring& ring() const;
  const std::vector<std::string>& names() const { return ring().names(); }
  std::size_t nvars() const { return ring().size(); }
  const Poly& h() const;
  const std::vector<Poly>& partials() const;
  /// The ideal <h>.
  const Ideal& principal() const;
  /// The pullback <h, d_1 h, ..., d_n h> of the Jacobian ideal.
  const Ideal& jacobian_pullback() const;

  /// Generators of Der(-log D): syzygies of (d_1 h, ..., d_n h, h) projected
  /// to the first n entries. Computed once.
  const std::vector<ModuleElement>& log_derivations() const;

  /// Reduction modulo <h> by global division.
  Poly mod_h(const Poly& f) const;
  /// Membership of f in <h> at the origin.
  bool divisible_local(const Poly& f) const { return principal().contains_local(f); }

  std::string to_string(const Poly& f) const { return f.to_string(names()); }

  friend bool operator==(const DivisorGerm& a, const DivisorGerm& b) {
    return a.data_ == b.data_ || (a.ring() == b.ring() && a.h() == b.h());
  }

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

struct DivisorGerm::Data {
  Ring ring;
  Poly h;
  std::vector<Poly> partials;
  Ideal principal;
  Ideal jacobian;
  mutable std::once_flag log_once;
  mutable std::vector<ModuleElement> log_fields;
};

inline const Ring& DivisorGerm::ring() const { return data_->ring; }
inline const Poly& DivisorGerm::h() const { return data_->h; }
inline const std::vector<Poly>& DivisorGerm::partials() const { return data_->partials; }
inline const Ideal& DivisorGerm::principal() const { return data_->principal; }
inline const Ideal& DivisorGerm::jacobian_pullback() const { return data_->jacobian; }

/// delta = sum coeffs[i] d_i.
struct VectorField {
  std::vector<Poly> coeffs;

  Poly apply(const Poly& f) const;
};

bool is_logarithmic(const DivisorGerm& D, const VectorField& delta);

/// Jacobian generators d_i h reduced modulo h.
std::vector<Poly> jacobian_generators(const DivisorGerm& D);

/// Rows are logarithmic vector fields with det = unit * h.
struct SaitoMatrix {
  std::vector<std::vector<Poly>> rows;
  Poly determinant;
  Poly unit;
};

struct FreenessResult {
  bool free = false;
  std::size_t min_generators = 0;
  std::optional<SaitoMatrix> basis;
};

FreenessResult is_free(const DivisorGerm& D);

/// chi = field / unit satisfies chi(h) = h, with unit(0) != 0.
struct EulerResult {
  bool euler = false;
  VectorField field;
  Poly unit;
  /// Result of the Mora membership h in <d h>, computed independently.
  bool membership = false;
};

EulerResult is_euler_homogeneous(const DivisorGerm& D);

/// omega = (sum a_i dx_i) / (unit * h).
struct LogOneForm {
  std::vector<Poly> a;
  Poly unit;
};

/// Dual basis of logarithmic 1-forms from the adjugate of a certified Saito
/// matrix. Throws std::invalid_argument when the certificate fails.
std::vector<LogOneForm> log_forms_basis(const DivisorGerm& D, const SaitoMatrix& M);

Poly determinant(const std::vector<std::vector<Poly>>& M);
/// adj[i][j] is the (j, i) cofactor, so M * adj = det * identity.
std::vector<std::vector<Poly>> adjugate(const std::vector<std::vector<Poly>>& M);

}  // namespace logres

#endif  // LOGRES_DIVISOR_HPP
