#include "logres/radical.hpp"

#include <algorithm>
#include <stdexcept>

namespace logres {

namespace {

bool is_zero_ideal(const Ideal& I) {
  return std::all_of(I.gens().begin(), I.gens().end(), [](const Poly& g) { return g.is_zero(); });
}

// Product of the leading coefficients in K[U] of a Groebner basis of I under
// the block order (outer >> U). I K(U)[outer] contracted to K[x] equals
// I : s^infinity.
Poly leading_coefficient_product(const std::vector<Poly>& basis, const MonomialOrder& order,
                                 const std::vector<bool>& outer) {
  std::size_t n = order.nvars();
  Poly s = Poly::constant(n, 1);
  for (const auto& g : basis) {
    const Term* lead = nullptr;
    for (const auto& t : g.terms())
      if (!lead || order.greater(t.mono, lead->mono)) lead = &t;
    if (!lead) continue;
    std::vector<Term> coef;
    for (const auto& t : g.terms()) {
      bool same = true;
      for (std::size_t v = 0; v < n && same; ++v)
        if (outer[v] && t.mono[v] != lead->mono[v]) same = false;
      if (!same) continue;
      Monomial rest = t.mono;
      for (std::size_t v = 0; v < n; ++v)
        if (outer[v]) rest.set(v, 0);
      coef.push_back({rest, t.coef});
    }
    Poly c(n, std::move(coef));
    if (!c.is_constant()) s = s * c;
  }
  return s.is_constant() ? s : squarefree_part(s);
}

MonomialOrder block_order(const std::vector<std::vector<std::size_t>>& groups) {
  std::vector<std::size_t> perm, sizes;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    perm.insert(perm.end(), g.begin(), g.end());
    sizes.push_back(g.size());
  }
  return MonomialOrder::block(perm, sizes);
}

Ideal radical_impl(const Ideal& I, int depth) {
  std::size_t n = I.nvars();
  if (I.is_unit()) return Ideal::unit(n);
  if (is_zero_ideal(I)) return I;
  if (depth > 64) throw std::runtime_error("radical: recursion depth exceeded");

  std::vector<std::size_t> U = independent_set(I);
  std::vector<bool> outer(n, true);
  for (std::size_t u : U) outer[u] = false;
  std::vector<std::size_t> X;
  for (std::size_t v = 0; v < n; ++v)
    if (outer[v]) X.push_back(v);

  // Squarefree parts of the eliminants in K(U)[x_i].
  std::vector<Poly> gens = I.gens();
  for (std::size_t xi : X) {
    std::vector<std::size_t> rest;
    for (std::size_t v : X)
      if (v != xi) rest.push_back(v);
    auto basis = standard_basis(I.gens(), block_order({rest, {xi}, U}));
    const Poly* best = nullptr;
    for (const auto& b : basis) {
      auto sup = b.support();
      if (std::any_of(rest.begin(), rest.end(), [&](std::size_t v) { return sup[v]; })) continue;
      if (b.degree_in(xi) == 0) continue;
      if (!best || b.degree_in(xi) < best->degree_in(xi) ||
          (b.degree_in(xi) == best->degree_in(xi) && b.size() < best->size()))
        best = &b;
    }
    if (!best) throw std::logic_error("radical: missing eliminant");
    gens.push_back(squarefree_part(*best));
  }

  MonomialOrder order = block_order({X, U});
  Ideal J(n, gens);
  Poly sJ = leading_coefficient_product(standard_basis(J.gens(), order), order, outer);
  Ideal contracted = sJ.is_constant() ? J : saturation(J, sJ);

  Poly sI = leading_coefficient_product(standard_basis(I.gens(), order), order, outer);
  if (sI.is_constant()) return Ideal(n, contracted.groebner_basis());
  Ideal rest = radical_impl(I.with(sI), depth + 1);
  return Ideal(n, intersect(contracted, rest).groebner_basis());
}

template <typename Contains>
RadicalResult test_against(Ideal R, unsigned max_power, Contains contains) {
  RadicalResult out;
  out.radical_ideal = R;
  std::vector<Poly> gens = R.gens();
  std::stable_sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  for (const auto& g : gens) {
    if (contains(g)) continue;
    Poly power = g;
    for (unsigned k = 2; k <= max_power; ++k) {
      power = power * g;
      if (contains(power)) {
        out.verdict = RadicalVerdict::not_radical;
        out.witness = g;
        out.witness_power = k;
        return out;
      }
    }
    out.verdict = RadicalVerdict::undecided;
    return out;
  }
  out.verdict = RadicalVerdict::radical;
  return out;
}

}  // namespace

std::string to_string(RadicalVerdict v) {
  switch (v) {
    case RadicalVerdict::radical: return "radical";
    case RadicalVerdict::not_radical: return "not_radical";
    case RadicalVerdict::undecided: return "undecided";
  }
  return "undecided";
}

Ideal radical(const Ideal& I) { return radical_impl(I, 0); }

RadicalResult radical_test(const Ideal& I, unsigned max_power) {
  return test_against(radical(I), max_power, [&](const Poly& f) { return I.contains(f); });
}

RadicalResult radical_test_local(const Ideal& I, unsigned max_power) {
  if (I.is_unit_local()) {
    RadicalResult out;
    out.verdict = RadicalVerdict::radical;
    out.radical_ideal = Ideal::unit(I.nvars());
    return out;
  }
  return test_against(radical(I), max_power, [&](const Poly& f) { return I.contains_local(f); });
}

}  // namespace logres
