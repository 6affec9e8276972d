#include "logres/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace logres {

using engine::TermOrder;
using engine::Vec;

namespace {

std::vector<Vec> to_vecs(const std::vector<Poly>& polys, const TermOrder& order) {
  std::vector<Vec> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(engine::from_poly(p, 0, order));
  return out;
}

std::vector<Poly> to_polys(const std::vector<Vec>& vecs, std::size_t nvars) {
  std::vector<Poly> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) out.push_back(engine::to_poly(v, nvars));
  return out;
}

std::vector<Vec> to_vecs(const std::vector<ModuleElement>& elems, const TermOrder& order) {
  std::vector<Vec> out;
  out.reserve(elems.size());
  for (const auto& e : elems) out.push_back(engine::from_vector(e, order));
  return out;
}

std::vector<ModuleElement> to_elements(const std::vector<Vec>& vecs, std::size_t nvars, std::size_t rank) {
  std::vector<ModuleElement> out;
  out.reserve(vecs.size());
  for (const auto& v : vecs) out.push_back(engine::to_vector(v, nvars, rank));
  return out;
}

bool is_zero_element(const ModuleElement& e) {
  return std::all_of(e.begin(), e.end(), [](const Poly& p) { return p.is_zero(); });
}

// Lazily computed basis guarded for concurrent readers.
struct LazyBasis {
  std::once_flag once;
  std::vector<Vec> vecs;
};

}  // namespace

std::vector<Poly> standard_basis(const std::vector<Poly>& gens, const MonomialOrder& order) {
  TermOrder to(order);
  std::size_t n = order.nvars();
  return to_polys(engine::standard_basis(to_vecs(gens, to), to, n), n);
}

NormalForm normal_form(const Poly& f, const std::vector<Poly>& basis, const MonomialOrder& order,
                       bool certificate) {
  TermOrder to(order);
  std::size_t n = order.nvars();
  auto d = engine::reduce(engine::from_poly(f, 0, to), to_vecs(basis, to), to, n, certificate, true);
  return {engine::to_poly(d.remainder, n), std::move(d.quotients), std::move(d.unit)};
}

bool is_standard_basis(const std::vector<Poly>& basis, const MonomialOrder& order) {
  TermOrder to(order);
  return engine::verify_standard_basis(to_vecs(basis, to), to, order.nvars());
}

struct Ideal::Cache {
  LazyBasis global;
  LazyBasis local;
  std::once_flag global_polys_once, local_polys_once;
  std::vector<Poly> global_polys, local_polys;
};

Ideal::Ideal(std::size_t nvars, std::vector<Poly> gens) : nvars_(nvars), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.nvars() != nvars) throw std::invalid_argument("ideal generator in wrong ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_zero() const { return gens_.empty(); }

namespace {

const std::vector<Vec>& ideal_basis(LazyBasis& lazy, const std::vector<Poly>& gens, std::size_t nvars,
                                    const MonomialOrder& order) {
  std::call_once(lazy.once, [&] {
    TermOrder to(order);
    lazy.vecs = engine::standard_basis(to_vecs(gens, to), to, nvars);
  });
  return lazy.vecs;
}

}  // namespace

const std::vector<Poly>& Ideal::groebner_basis() const {
  const auto& vecs = ideal_basis(cache_->global, gens_, nvars_, MonomialOrder::degrevlex(nvars_));
  std::call_once(cache_->global_polys_once, [&] { cache_->global_polys = to_polys(vecs, nvars_); });
  return cache_->global_polys;
}

const std::vector<Poly>& Ideal::local_basis() const {
  const auto& vecs = ideal_basis(cache_->local, gens_, nvars_, MonomialOrder::local_degrevlex(nvars_));
  std::call_once(cache_->local_polys_once, [&] { cache_->local_polys = to_polys(vecs, nvars_); });
  return cache_->local_polys;
}

NormalForm Ideal::reduce(const Poly& f, bool certificate) const {
  auto order = MonomialOrder::degrevlex(nvars_);
  TermOrder to(order);
  const auto& basis = ideal_basis(cache_->global, gens_, nvars_, order);
  auto d = engine::reduce(engine::from_poly(f, 0, to), basis, to, nvars_, certificate, true);
  return {engine::to_poly(d.remainder, nvars_), std::move(d.quotients), std::move(d.unit)};
}

NormalForm Ideal::reduce_local(const Poly& f, bool certificate) const {
  auto order = MonomialOrder::local_degrevlex(nvars_);
  TermOrder to(order);
  const auto& basis = ideal_basis(cache_->local, gens_, nvars_, order);
  auto d = engine::reduce(engine::from_poly(f, 0, to), basis, to, nvars_, certificate, false);
  return {engine::to_poly(d.remainder, nvars_), std::move(d.quotients), std::move(d.unit)};
}

bool Ideal::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  return reduce(f, false).remainder.is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Poly& g) { return contains(g); });
}

bool Ideal::equals(const Ideal& other) const { return contains(other) && other.contains(*this); }

bool Ideal::contains_local(const Poly& f) const {
  if (f.is_zero()) return true;
  return reduce_local(f, false).remainder.is_zero();
}

bool Ideal::contains_local(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Poly& g) { return contains_local(g); });
}

bool Ideal::equals_local(const Ideal& other) const { return contains_local(other) && other.contains_local(*this); }

bool Ideal::is_unit() const { return contains(Poly::constant(nvars_, 1)); }

bool Ideal::is_unit_local() const {
  for (const auto& g : gens_)
    if (::logres::is_unit_local(g)) return true;
  return contains_local(Poly::constant(nvars_, 1));
}

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Poly> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(nvars_, std::move(g));
}

Ideal Ideal::operator*(const Ideal& other) const {
  std::vector<Poly> g;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) g.push_back(a * b);
  return Ideal(nvars_, std::move(g));
}

Ideal Ideal::with(const Poly& extra) const {
  std::vector<Poly> g = gens_;
  g.push_back(extra);
  return Ideal(nvars_, std::move(g));
}

std::vector<std::string> Ideal::to_strings(const std::vector<std::string>& names) const {
  std::vector<std::string> out;
  for (const auto& g : gens_) out.push_back(g.to_string(names));
  return out;
}

struct ModuleBasis::Cache {
  LazyBasis global;
  LazyBasis local;
  std::once_flag global_once, local_once;
  std::vector<ModuleElement> global_elems, local_elems;
};

ModuleBasis::ModuleBasis(std::size_t nvars, std::size_t rank, std::vector<ModuleElement> gens)
    : nvars_(nvars), rank_(rank), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.size() != rank) throw std::invalid_argument("module generator has wrong rank");
    gens_.push_back(std::move(g));
  }
}

namespace {

const std::vector<Vec>& module_basis(LazyBasis& lazy, const std::vector<ModuleElement>& gens, std::size_t nvars,
                                     const MonomialOrder& order) {
  std::call_once(lazy.once, [&] {
    TermOrder to(order);
    lazy.vecs = engine::standard_basis(to_vecs(gens, to), to, nvars);
  });
  return lazy.vecs;
}

}  // namespace

const std::vector<ModuleElement>& ModuleBasis::groebner_basis() const {
  const auto& vecs = module_basis(cache_->global, gens_, nvars_, MonomialOrder::degrevlex(nvars_));
  std::call_once(cache_->global_once, [&] { cache_->global_elems = to_elements(vecs, nvars_, rank_); });
  return cache_->global_elems;
}

const std::vector<ModuleElement>& ModuleBasis::local_basis() const {
  const auto& vecs = module_basis(cache_->local, gens_, nvars_, MonomialOrder::local_degrevlex(nvars_));
  std::call_once(cache_->local_once, [&] { cache_->local_elems = to_elements(vecs, nvars_, rank_); });
  return cache_->local_elems;
}

bool ModuleBasis::contains(const ModuleElement& v) const {
  auto order = MonomialOrder::degrevlex(nvars_);
  TermOrder to(order);
  const auto& basis = module_basis(cache_->global, gens_, nvars_, order);
  return engine::reduce(engine::from_vector(v, to), basis, to, nvars_, false, false).remainder.empty();
}

bool ModuleBasis::contains_local(const ModuleElement& v) const {
  auto order = MonomialOrder::local_degrevlex(nvars_);
  TermOrder to(order);
  const auto& basis = module_basis(cache_->local, gens_, nvars_, order);
  return engine::reduce(engine::from_vector(v, to), basis, to, nvars_, false, false).remainder.empty();
}

std::vector<ModuleElement> module_standard_basis(const std::vector<ModuleElement>& gens, std::size_t rank,
                                                 const MonomialOrder& order) {
  TermOrder to(order);
  return to_elements(engine::standard_basis(to_vecs(gens, to), to, order.nvars()), order.nvars(), rank);
}

std::vector<ModuleElement> syzygies(const std::vector<ModuleElement>& gens, std::size_t rank) {
  std::size_t k = gens.size();
  if (k == 0) return {};
  std::size_t nvars = 0;
  for (const auto& g : gens) {
    if (g.size() != rank) throw std::invalid_argument("syzygies: wrong rank");
    if (!g.empty()) nvars = g.front().nvars();
  }
  auto order = MonomialOrder::degrevlex(nvars);
  TermOrder to(order);
  // Tag each generator with its own unit vector in components rank..rank+k-1;
  // position-over-term makes the basis eliminate the first rank components.
  std::vector<Vec> lifted;
  lifted.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec v = engine::from_vector(gens[i], to);
    v.push_back({Monomial{}, static_cast<std::uint32_t>(rank + i), 1});
    engine::sort_vec(v, to);
    lifted.push_back(std::move(v));
  }
  auto basis = engine::standard_basis(lifted, to, nvars);
  std::vector<ModuleElement> out;
  for (const auto& b : basis) {
    if (b.front().comp < rank) continue;
    Vec shifted;
    for (const auto& t : b) shifted.push_back({t.mono, static_cast<std::uint32_t>(t.comp - rank), t.coef});
    out.push_back(engine::to_vector(shifted, nvars, k));
  }
  return out;
}

std::vector<ModuleElement> syzygies(const std::vector<Poly>& row) {
  std::vector<ModuleElement> gens;
  gens.reserve(row.size());
  for (const auto& p : row) gens.push_back({p});
  return syzygies(gens, 1);
}

Ideal module_quotient(const ModuleBasis& module, const ModuleElement& v) {
  std::size_t n = module.nvars();
  std::vector<ModuleElement> gens;
  gens.push_back(v);
  for (const auto& g : module.gens()) gens.push_back(g);
  auto syz = syzygies(gens, module.rank());
  std::vector<Poly> firsts;
  for (const auto& s : syz) firsts.push_back(s[0]);
  Ideal raw(n, std::move(firsts));
  return Ideal(n, raw.groebner_basis());
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  std::size_t n = I.nvars();
  if (J.is_zero()) return Ideal::unit(n);
  std::size_t m = J.gens().size();
  std::vector<ModuleElement> gens;
  for (std::size_t l = 0; l < m; ++l) {
    for (const auto& g : I.gens()) {
      ModuleElement e(m, Poly(n));
      e[l] = g;
      gens.push_back(std::move(e));
    }
  }
  return module_quotient(ModuleBasis(n, m, std::move(gens)), J.gens());
}

Ideal saturation(const Ideal& I, const Poly& f) {
  Ideal current(I.nvars(), I.groebner_basis());
  Ideal fi(I.nvars(), {f});
  while (true) {
    Ideal next = ideal_quotient(current, fi);
    if (current.contains(next)) return current;
    current = next;
  }
}

Ideal intersect(const Ideal& I, const Ideal& J) {
  std::size_t n = I.nvars();
  std::vector<ModuleElement> gens;
  for (const auto& g : I.gens()) gens.push_back({g, Poly(n)});
  for (const auto& g : J.gens()) gens.push_back({Poly(n), g});
  Poly one = Poly::constant(n, 1);
  return module_quotient(ModuleBasis(n, 2, std::move(gens)), {one, one});
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop) {
  std::size_t n = I.nvars();
  auto basis = standard_basis(I.gens(), MonomialOrder::elimination(n, drop));
  std::vector<Poly> kept;
  for (auto& b : basis) {
    auto used = b.support();
    bool free_of_drop = std::none_of(drop.begin(), drop.end(), [&](std::size_t v) { return used[v]; });
    if (free_of_drop) kept.push_back(std::move(b));
  }
  return Ideal(n, std::move(kept));
}

bool contains_local_by_quotient(const Ideal& I, const Poly& f) {
  if (f.is_zero()) return true;
  Ideal q = ideal_quotient(I, Ideal(I.nvars(), {f}));
  return std::any_of(q.gens().begin(), q.gens().end(), [](const Poly& g) { return ::logres::is_unit_local(g); });
}

bool module_contains_local_by_quotient(const ModuleBasis& module, const ModuleElement& v) {
  if (is_zero_element(v)) return true;
  Ideal q = module_quotient(module, v);
  return std::any_of(q.gens().begin(), q.gens().end(), [](const Poly& g) { return ::logres::is_unit_local(g); });
}

// Rank of the relation matrix evaluated at the origin; pivots are chosen from
// the last column backwards so earlier generators survive into the minimal set.
MinGenerators min_generators_from_relations(std::size_t k, const std::vector<ModuleElement>& syz) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& s : syz) {
    std::vector<Rational> row(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = s[j].constant_term();
      nonzero = nonzero || row[j] != 0;
    }
    if (nonzero) rows.push_back(std::move(row));
  }
  std::vector<bool> pivot(k, false);
  std::size_t r = 0;
  for (std::size_t col = k; col-- > 0;) {
    std::size_t sel = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      Rational f = rows[i][col] / rows[r][col];
      for (std::size_t j = 0; j < k; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot[col] = true;
    ++r;
  }
  MinGenerators out;
  for (std::size_t j = 0; j < k; ++j)
    if (!pivot[j]) out.selected.push_back(j);
  out.count = out.selected.size();
  return out;
}

MinGenerators min_generators_local(const ModuleBasis& module) {
  return min_generators_from_relations(module.gens().size(), syzygies(module.gens(), module.rank()));
}

MinGenerators min_generators_local(const Ideal& ideal) {
  std::vector<ModuleElement> gens;
  for (const auto& g : ideal.gens()) gens.push_back({g});
  return min_generators_local(ModuleBasis(ideal.nvars(), 1, std::move(gens)));
}

namespace {

std::vector<Monomial> local_leads(const Ideal& I) {
  std::vector<Monomial> leads;
  auto order = MonomialOrder::local_degrevlex(I.nvars());
  for (const auto& b : I.local_basis()) {
    // Leading term under the local order is the lowest-degree term with the
    // reverse-lexicographic tie break.
    const Monomial* best = nullptr;
    for (const auto& t : b.terms())
      if (!best || order.greater(t.mono, *best)) best = &t.mono;
    leads.push_back(*best);
  }
  return leads;
}

int monomial_dimension(const std::vector<Monomial>& leads, std::size_t n) {
  for (const auto& m : leads)
    if (m.is_one()) return -1;
  int best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (m[v] != 0 && !(mask >> v & 1u)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

std::vector<Monomial> global_leads(const Ideal& I) {
  std::vector<Monomial> leads;
  for (const auto& b : I.groebner_basis()) leads.push_back(b.terms().front().mono);
  return leads;
}

}  // namespace

int local_dimension(const Ideal& I) { return monomial_dimension(local_leads(I), I.nvars()); }

std::optional<std::size_t> local_colength(const Ideal& I) {
  std::size_t n = I.nvars();
  auto leads = local_leads(I);
  if (monomial_dimension(leads, n) > 0) return std::nullopt;
  for (const auto& m : leads)
    if (m.is_one()) return 0;
  std::vector<int> bound(n, 0);
  for (const auto& m : leads) {
    std::size_t nz = 0, var = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (m[v] != 0) {
        ++nz;
        var = v;
      }
    if (nz == 1 && (bound[var] == 0 || m[var] < bound[var])) bound[var] = m[var];
  }
  // Count standard monomials inside the box given by the pure powers.
  std::size_t count = 0;
  std::vector<int> e(n, 0);
  while (true) {
    Monomial m(std::span<const int>(e.data(), n));
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++count;
    std::size_t v = 0;
    while (v < n) {
      if (++e[v] < bound[v]) break;
      e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

std::vector<std::size_t> independent_set(const Ideal& I) {
  std::size_t n = I.nvars();
  auto leads = global_leads(I);
  int best = -1;
  std::size_t best_mask = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const auto& m : leads) {
      bool inside = true;
      for (std::size_t v = 0; v < n && inside; ++v)
        if (m[v] != 0 && !(mask >> v & 1u)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) {
      best = size;
      best_mask = mask;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n; ++v)
    if (best_mask >> v & 1u) out.push_back(v);
  return out;
}

int dimension(const Ideal& I) { return monomial_dimension(global_leads(I), I.nvars()); }

std::optional<Poly> exact_divide(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  auto nf = normal_form(f, {g}, MonomialOrder::degrevlex(f.nvars()), true);
  if (!nf.remainder.is_zero()) return std::nullopt;
  return nf.quotients[0];
}

Poly gcd(const Poly& f, const Poly& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  if (f.is_constant() || g.is_constant()) return Poly::constant(f.nvars(), 1);
  // The syzygies of (f, g) form the free module generated by (g/d, -f/d).
  auto syz = syzygies(std::vector<Poly>{f, g});
  for (const auto& s : syz) {
    if (s[0].is_zero()) continue;
    auto d = exact_divide(g, s[0]);
    if (d) return d->monic();
  }
  throw std::logic_error("gcd: syzygy module is not generated as expected");
}

bool is_squarefree(const Poly& h) {
  if (h.is_zero()) throw std::invalid_argument("squarefree check of zero");
  if (h.is_constant()) return true;
  Poly d = h;
  for (std::size_t i = 0; i < h.nvars() && !d.is_constant(); ++i) d = gcd(d, h.derivative(i));
  return d.is_constant();
}

Poly squarefree_part(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return p;
  Poly d = p;
  for (std::size_t i = 0; i < p.nvars() && !d.is_constant(); ++i) d = gcd(d, p.derivative(i));
  auto q = exact_divide(p, d);
  if (!q) throw std::logic_error("squarefree_part: gcd does not divide");
  return *q;
}

std::optional<LocalQuotient> local_divide(const Poly& f, const Poly& g) {
  std::size_t n = f.nvars();
  if (f.is_zero()) return LocalQuotient{Poly(n), Poly::constant(n, 1)};
  if (auto q = exact_divide(f, g)) return LocalQuotient{*q, Poly::constant(n, 1)};
  for (const auto& s : syzygies(std::vector<Poly>{f, g})) {
    // s0 f + s1 g = 0, so s0 f = (-s1) g.
    if (::logres::is_unit_local(s[0])) return LocalQuotient{-s[1], s[0]};
  }
  return std::nullopt;
}

}  // namespace logres
