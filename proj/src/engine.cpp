#include "logres/engine.hpp"

#include <algorithm>
#include <stdexcept>

namespace logres::engine {

void sort_vec(Vec& v, const TermOrder& order) {
  std::sort(v.begin(), v.end(), [&](const ModTerm& a, const ModTerm& b) { return order.compare(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  v = std::move(out);
}

Vec add(const Vec& a, const Vec& b, const TermOrder& order) {
  Vec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = order.compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      Rational s = a[i].coef + b[j].coef;
      if (s != 0) out.push_back({a[i].mono, a[i].comp, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return out;
}

Vec sub_mul(const Vec& f, const Rational& c, const Monomial& m, const Vec& g, const TermOrder& order) {
  Vec out;
  out.reserve(f.size() + g.size());
  std::size_t i = 0, j = 0;
  ModTerm shifted;
  bool have = false;
  auto load = [&]() {
    if (j < g.size()) {
      shifted.mono = g[j].mono * m;
      shifted.comp = g[j].comp;
      have = true;
    } else {
      have = false;
    }
  };
  load();
  while (i < f.size() && have) {
    int cmp = order.compare(f[i].mono, f[i].comp, shifted.mono, shifted.comp);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back({shifted.mono, shifted.comp, -c * g[j].coef});
      ++j;
      load();
    } else {
      Rational s = f[i].coef - c * g[j].coef;
      if (s != 0) out.push_back({f[i].mono, f[i].comp, std::move(s)});
      ++i;
      ++j;
      load();
    }
  }
  while (i < f.size()) out.push_back(f[i++]);
  while (have) {
    out.push_back({shifted.mono, shifted.comp, -c * g[j].coef});
    ++j;
    load();
  }
  return out;
}

Vec scale(const Vec& v, const Rational& c) {
  if (c == 0) return {};
  Vec out = v;
  for (auto& t : out) t.coef *= c;
  return out;
}

Vec make_monic(const Vec& v) {
  if (v.empty() || v.front().coef == 1) return v;
  return scale(v, 1 / v.front().coef);
}

int max_degree(const Vec& v) {
  int d = -1;
  for (const auto& t : v) d = std::max(d, t.mono.degree());
  return d;
}

int ecart(const Vec& v) { return v.empty() ? 0 : max_degree(v) - v.front().mono.degree(); }

bool is_homogeneous(const Vec& v) {
  for (const auto& t : v)
    if (t.mono.degree() != v.front().mono.degree()) return false;
  return true;
}

Vec from_poly(const Poly& p, std::uint32_t comp, const TermOrder& order) {
  Vec v;
  v.reserve(p.size());
  for (const auto& t : p.terms()) v.push_back({t.mono, comp, t.coef});
  sort_vec(v, order);
  return v;
}

Vec from_vector(const std::vector<Poly>& components, const TermOrder& order) {
  Vec v;
  for (std::uint32_t c = 0; c < components.size(); ++c)
    for (const auto& t : components[c].terms()) v.push_back({t.mono, c, t.coef});
  sort_vec(v, order);
  return v;
}

std::vector<Poly> to_vector(const Vec& v, std::size_t nvars, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.comp >= rank) throw std::out_of_range("to_vector: component out of range");
    parts[t.comp].push_back({t.mono, t.coef});
  }
  std::vector<Poly> out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(nvars, std::move(p));
  return out;
}

Poly to_poly(const Vec& v, std::size_t nvars, std::uint32_t comp) {
  std::vector<Term> terms;
  for (const auto& t : v)
    if (t.comp == comp) terms.push_back({t.mono, t.coef});
  return Poly(nvars, std::move(terms));
}

namespace {

struct Reducer {
  const Vec* vec;
  Vec owned;  // Mora: intermediate remainders appended to the reducer set
  int ecart;
  // Certificate data for intermediate reducers.
  bool original;
  std::size_t index;
  Poly unit;
  std::vector<Poly> coeffs;

  const ModTerm& lead() const { return vec ? vec->front() : owned.front(); }
  const Vec& body() const { return vec ? *vec : owned; }
};

bool lead_divides(const ModTerm& g, const ModTerm& f) { return g.comp == f.comp && g.mono.divides(f.mono); }

Division reduce_global(const Vec& f, const std::vector<Vec>& basis, const TermOrder& order, std::size_t nvars,
                       bool certificate, bool full) {
  Division result;
  result.unit = Poly::constant(nvars, 1);
  if (certificate) result.quotients.assign(basis.size(), Poly(nvars));
  Vec h = f;
  Vec rem;
  std::vector<std::vector<Term>> qterms(certificate ? basis.size() : 0);
  while (!h.empty()) {
    const ModTerm& lt = h.front();
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Vec& g = basis[i];
      if (g.empty() || !lead_divides(g.front(), lt)) continue;
      Rational c = lt.coef / g.front().coef;
      Monomial m = lt.mono.quotient_by(g.front().mono);
      if (certificate) qterms[i].push_back({m, c});
      h = sub_mul(h, c, m, g, order);
      reduced = true;
      break;
    }
    if (!reduced) {
      if (!full) break;
      rem.push_back(h.front());
      h.erase(h.begin());
    }
  }
  rem.insert(rem.end(), h.begin(), h.end());
  result.remainder = std::move(rem);
  if (certificate)
    for (std::size_t i = 0; i < basis.size(); ++i) result.quotients[i] = Poly(nvars, std::move(qterms[i]));
  return result;
}

// Mora's normal form with ecart-based reducer selection. Intermediate
// remainders join the reducer set whenever the chosen reducer has larger
// ecart; the leading monomial strictly decreases, so later uses of an
// intermediate are multiplied by a nonconstant monomial and the running
// multiplier of f stays a unit.
Division reduce_mora(const Vec& f, const std::vector<Vec>& basis, const TermOrder& order, std::size_t nvars,
                     bool certificate) {
  std::vector<Reducer> reducers;
  reducers.reserve(basis.size() + 8);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].empty()) continue;
    reducers.push_back({&basis[i], {}, ecart(basis[i]), true, i, Poly(), {}});
  }
  Division result;
  Poly unit = Poly::constant(nvars, 1);
  std::vector<Poly> coeffs(certificate ? basis.size() : 0, Poly(nvars));
  Vec h = f;
  while (!h.empty()) {
    const ModTerm& lt = h.front();
    std::size_t best = reducers.size();
    for (std::size_t k = 0; k < reducers.size(); ++k) {
      if (!lead_divides(reducers[k].lead(), lt)) continue;
      if (best == reducers.size() || reducers[k].ecart < reducers[best].ecart) best = k;
    }
    if (best == reducers.size()) break;
    int eh = ecart(h);
    if (reducers[best].ecart > eh) {
      Reducer r{nullptr, h, eh, false, 0, Poly(), {}};
      if (certificate) {
        r.unit = unit;
        r.coeffs = coeffs;
      }
      reducers.push_back(std::move(r));
    }
    const Reducer& g = reducers[best];
    Rational c = lt.coef / g.lead().coef;
    Monomial m = lt.mono.quotient_by(g.lead().mono);
    if (certificate) {
      if (g.original) {
        coeffs[g.index] += Poly::monomial(nvars, m, c);
      } else {
        unit -= g.unit.mul_monomial(m, c);
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= g.coeffs[i].mul_monomial(m, c);
      }
    }
    h = sub_mul(h, c, m, g.body(), order);
  }
  result.remainder = std::move(h);
  result.unit = std::move(unit);
  result.quotients = std::move(coeffs);
  return result;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int sugar;
};

struct Element {
  Vec vec;
  int sugar;
};

class BasisBuilder {
 public:
  BasisBuilder(const TermOrder& order, std::size_t nvars, bool mora, bool rank_one)
      : order_(order), nvars_(nvars), mora_(mora), rank_one_(rank_one) {}

  void add(Vec h, int sugar) {
    h = make_monic(h);
    std::size_t k = elems_.size();
    const ModTerm& lh = h.front();

    // Criteria of Gebauer and Moeller.
    std::vector<Pair> fresh;
    std::vector<bool> coprime;
    for (std::size_t i = 0; i < k; ++i) {
      const ModTerm& li = elems_[i].vec.front();
      if (li.comp != lh.comp) continue;
      Monomial l = li.mono.lcm(lh.mono);
      int s = std::max(elems_[i].sugar + (l.degree() - li.mono.degree()), sugar + (l.degree() - lh.mono.degree()));
      fresh.push_back({i, k, l, lh.comp, s});
      coprime.push_back(rank_one_ && li.mono.coprime(lh.mono));
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) keep[a] = false;
      }
    }
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool group_coprime = coprime[a];
      for (std::size_t b = a + 1; b < fresh.size(); ++b) {
        if (keep[b] && fresh[b].lcm == fresh[a].lcm) {
          group_coprime = group_coprime || coprime[b];
          keep[b] = false;
        }
      }
      if (group_coprime) keep[a] = false;
    }
    std::vector<Pair> survivors;
    for (auto& p : pairs_) {
      if (p.comp == lh.comp && lh.mono.divides(p.lcm)) {
        Monomial li = elems_[p.i].vec.front().mono.lcm(lh.mono);
        Monomial lj = elems_[p.j].vec.front().mono.lcm(lh.mono);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      survivors.push_back(p);
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) survivors.push_back(fresh[a]);
    pairs_ = std::move(survivors);
    elems_.push_back({std::move(h), sugar});
    views_.push_back(elems_.back().vec);
  }

  void run(BasisStats* stats) {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t a = 1; a < pairs_.size(); ++a)
        if (better(pairs_[a], pairs_[best])) best = a;
      Pair p = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (stats) ++stats->pairs_considered;
      auto s = s_vector(elems_[p.i].vec, elems_[p.j].vec, order_);
      if (!s || s->empty()) continue;
      if (stats) ++stats->pairs_reduced;
      Division d = mora_ ? reduce_mora(*s, views_, order_, nvars_, false)
                         : reduce_global(*s, views_, order_, nvars_, false, false);
      if (d.remainder.empty()) {
        if (stats) ++stats->zero_reductions;
        continue;
      }
      add(std::move(d.remainder), p.sugar);
    }
  }

  std::vector<Vec> finish(bool tail_reduce) {
    std::vector<Vec> minimal;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      const ModTerm& li = elems_[i].vec.front();
      bool redundant = false;
      for (std::size_t j = 0; j < elems_.size() && !redundant; ++j) {
        if (i == j) continue;
        const ModTerm& lj = elems_[j].vec.front();
        if (!lead_divides(lj, li)) continue;
        // Equal leads: keep the earliest.
        if (lj.mono == li.mono) {
          redundant = j < i;
        } else {
          redundant = true;
        }
      }
      if (!redundant) minimal.push_back(elems_[i].vec);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Vec& a, const Vec& b) { return order_.compare(a.front(), b.front()) > 0; });
    if (tail_reduce) {
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Vec> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
          if (j != i) others.push_back(minimal[j]);
        Vec head{minimal[i].front()};
        Vec tail(minimal[i].begin() + 1, minimal[i].end());
        Division d = reduce_global(tail, others, order_, nvars_, false, true);
        minimal[i] = make_monic(engine::add(head, d.remainder, order_));
      }
    }
    return minimal;
  }

 private:
  bool better(const Pair& a, const Pair& b) const {
    if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  const TermOrder& order_;
  std::size_t nvars_;
  bool mora_;
  bool rank_one_;
  std::vector<Element> elems_;
  std::vector<Vec> views_;
  std::vector<Pair> pairs_;
};

}  // namespace

Division reduce(const Vec& f, const std::vector<Vec>& basis, const TermOrder& order, std::size_t nvars,
                bool certificate, bool full) {
  if (order.is_local()) {
    bool homogeneous = is_homogeneous(f);
    for (const auto& g : basis) homogeneous = homogeneous && is_homogeneous(g);
    if (!homogeneous) return reduce_mora(f, basis, order, nvars, certificate);
  }
  return reduce_global(f, basis, order, nvars, certificate, full);
}

std::optional<Vec> s_vector(const Vec& f, const Vec& g, const TermOrder& order) {
  if (f.empty() || g.empty()) return std::nullopt;
  const ModTerm& lf = f.front();
  const ModTerm& lg = g.front();
  if (lf.comp != lg.comp) return std::nullopt;
  Monomial l = lf.mono.lcm(lg.mono);
  Vec left = sub_mul({}, -1 / lf.coef, l.quotient_by(lf.mono), f, order);
  return sub_mul(left, 1 / lg.coef, l.quotient_by(lg.mono), g, order);
}

std::vector<Vec> standard_basis(const std::vector<Vec>& gens, const TermOrder& order, std::size_t nvars,
                                BasisStats* stats) {
  bool homogeneous = true;
  bool rank_one = true;
  for (const auto& g : gens) {
    homogeneous = homogeneous && is_homogeneous(g);
    for (const auto& t : g) rank_one = rank_one && t.comp == 0;
  }
  // Homogeneous input never needs Mora: the local and global orders agree on
  // each degree, and classical division preserves degree.
  bool mora = order.is_local() && !homogeneous;
  BasisBuilder builder(order, nvars, mora, rank_one);
  for (const auto& g : gens) {
    if (g.empty()) continue;
    builder.add(g, max_degree(g));
  }
  builder.run(stats);
  return builder.finish(!mora);
}

bool verify_standard_basis(const std::vector<Vec>& basis, const TermOrder& order, std::size_t nvars) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto s = s_vector(basis[i], basis[j], order);
      if (!s) continue;
      if (!reduce(*s, basis, order, nvars, false, false).remainder.empty()) return false;
    }
  }
  return true;
}

}  // namespace logres::engine
