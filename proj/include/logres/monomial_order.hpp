#ifndef LOGRES_MONOMIAL_ORDER_HPP
#define LOGRES_MONOMIAL_ORDER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "logres/poly.hpp"

namespace logres {

enum class OrderKind { lex, degrevlex, block, local_degrevlex };

/// Total multiplicative order on monomials of a ring with `nvars` variables.
///
/// Variables are ranked through a permutation: position k of the order refers
/// to variable perm[k]. Global kinds satisfy 1 <= m for every monomial m; the
/// local kind (negative degree, reverse-lexicographic tie break) satisfies
/// m <= 1 and is used for computations in the localization at the origin.
class MonomialOrder {
 public:
  static MonomialOrder lex(std::size_t nvars);
  static MonomialOrder degrevlex(std::size_t nvars);
  static MonomialOrder local_degrevlex(std::size_t nvars);
  /// Block order with degrevlex inside each block; blocks[i] consecutive
  /// positions of `perm`. Earlier blocks dominate.
  static MonomialOrder block(std::vector<std::size_t> perm, std::vector<std::size_t> blocks);
  /// Elimination order for `drop`: the dropped variables form the first block.
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& drop);

  OrderKind kind() const { return kind_; }
  std::size_t nvars() const { return perm_.size(); }
  bool is_local() const { return kind_ == OrderKind::local_degrevlex; }
  bool is_global() const { return !is_local(); }
  const std::vector<std::size_t>& permutation() const { return perm_; }
  const std::vector<std::size_t>& blocks() const { return blocks_; }

  /// >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const;

 private:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> perm, std::vector<std::size_t> blocks);
  int revlex_tail(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) const;

  OrderKind kind_;
  std::vector<std::size_t> perm_;
  std::vector<std::size_t> blocks_;
};

}  // namespace logres

#endif  // LOGRES_MONOMIAL_ORDER_HPP
