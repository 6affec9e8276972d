#include "logres/monomial_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace logres {

namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> perm, std::vector<std::size_t> blocks)
    : kind_(kind), perm_(std::move(perm)), blocks_(std::move(blocks)) {
  std::vector<std::size_t> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity(perm_.size())) throw std::invalid_argument("order: not a permutation");
  if (std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0}) != perm_.size())
    throw std::invalid_argument("order: block sizes do not cover the variables");
}

MonomialOrder MonomialOrder::lex(std::size_t nvars) { return {OrderKind::lex, identity(nvars), {nvars}}; }

MonomialOrder MonomialOrder::degrevlex(std::size_t nvars) {
  return {OrderKind::degrevlex, identity(nvars), {nvars}};
}

MonomialOrder MonomialOrder::local_degrevlex(std::size_t nvars) {
  return {OrderKind::local_degrevlex, identity(nvars), {nvars}};
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> perm, std::vector<std::size_t> blocks) {
  blocks.erase(std::remove(blocks.begin(), blocks.end(), std::size_t{0}), blocks.end());
  return {OrderKind::block, std::move(perm), std::move(blocks)};
}

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& drop) {
  std::vector<bool> dropped(nvars, false);
  for (auto v : drop) {
    if (v >= nvars) throw std::out_of_range("elimination: variable index");
    dropped[v] = true;
  }
  std::vector<std::size_t> perm;
  for (std::size_t i = 0; i < nvars; ++i)
    if (dropped[i]) perm.push_back(i);
  std::size_t first = perm.size();
  for (std::size_t i = 0; i < nvars; ++i)
    if (!dropped[i]) perm.push_back(i);
  return block(std::move(perm), {first, nvars - first});
}

int MonomialOrder::revlex_tail(const Monomial& a, const Monomial& b, std::size_t begin, std::size_t end) const {
  for (std::size_t k = end; k-- > begin;) {
    int ea = a[perm_[k]], eb = b[perm_[k]];
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::lex:
      for (std::size_t k = 0; k < perm_.size(); ++k) {
        int ea = a[perm_[k]], eb = b[perm_[k]];
        if (ea != eb) return ea > eb ? 1 : -1;
      }
      return 0;
    case OrderKind::degrevlex:
      if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
      return revlex_tail(a, b, 0, perm_.size());
    case OrderKind::local_degrevlex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? 1 : -1;
      return revlex_tail(a, b, 0, perm_.size());
    case OrderKind::block: {
      std::size_t begin = 0;
      for (auto size : blocks_) {
        std::size_t end = begin + size;
        int da = 0, db = 0;
        for (std::size_t k = begin; k < end; ++k) {
          da += a[perm_[k]];
          db += b[perm_[k]];
        }
        if (da != db) return da > db ? 1 : -1;
        int c = revlex_tail(a, b, begin, end);
        if (c != 0) return c;
        begin = end;
      }
      return 0;
    }
  }
  return 0;
}

std::string MonomialOrder::describe() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::degrevlex:
      return "degrevlex";
    case OrderKind::local_degrevlex:
      return "local-degrevlex";
    case OrderKind::block:
      return "block-degrevlex";
  }
  return "?";
}

}  // namespace logres
