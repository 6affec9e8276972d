#include "logres/normalization.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"
#include "logres/residues.hpp"
#include "series.hpp"

namespace logres {

namespace {

using json = nlohmann::json;

struct CurveGerm {
  DivisorGerm germ;
  std::vector<std::size_t> vars;  // ambient index of curve variable k
};

CurveGerm curve_germ(const DivisorGerm& D) {
  auto cv = curve_variables(D);
  std::vector<std::size_t> map(D.nvars(), 0);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < cv.size(); ++k) {
    map[cv[k]] = k;
    names.push_back(D.names()[cv[k]]);
  }
  return {DivisorGerm(Ring(names), D.h().remap(cv.size(), map)), cv};
}

Poly embed(const Poly& p, const CurveGerm& c, std::size_t n) { return p.remap(n, c.vars); }

BranchParam restrict_to_curve(const BranchParam& b, const CurveGerm& c) {
  BranchParam out;
  for (std::size_t v : c.vars) out.coords.push_back(b.coords[v]);
  out.truncation = b.truncation;
  return out;
}

// Reduced row echelon nullspace of a rational matrix with `cols` columns.
std::vector<std::vector<Rational>> nullspace(std::vector<std::vector<Rational>> rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    std::vector<Rational> v(cols, 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][c];
    out.push_back(std::move(v));
  }
  return out;
}

// Weakly holomorphic functions of a plane curve as A / q: q is a
// nonzerodivisor in the Jacobian ideal (hence in the conductor) and A is the
// ideal of functions whose order on every branch is at least that of q.
// Monomials of degree >= max order of q lie in A, the rest is linear algebra
// on the jets.
FractionalIdeal curve_normalization(const DivisorGerm& C, const std::vector<BranchParam>& branches, int N,
                                    std::uint64_t seed) {
  auto q = find_nonzerodivisor(C, C.partials(), seed);
  if (!q) throw NormalizationError("no nonzerodivisor found in the Jacobian ideal");
  std::vector<int> vq;
  for (const auto& b : branches) {
    auto o = t_order(pullback(b, *q), N);
    if (!o) throw TruncationInsufficient("truncation " + std::to_string(N) + " too small for the conductor bound");
    vq.push_back(*o);
  }
  int V = *std::max_element(vq.begin(), vq.end());
  if (V == 0) return FractionalIdeal::unit(C);

  std::vector<Poly> monos;
  for (int d = 0; d < V; ++d)
    for (int i = d; i >= 0; --i) {
      int ex[2] = {i, d - i};
      monos.push_back(Poly::monomial(2, Monomial(ex), 1));
    }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t bi = 0; bi < branches.size(); ++bi) {
    std::vector<Poly> pb;
    for (const auto& m : monos) pb.push_back(pullback(branches[bi], m));
    for (int k = 0; k < vq[bi]; ++k) {
      std::vector<Rational> row;
      int ex[1] = {k};
      for (const auto& p : pb) row.push_back(p.coefficient(Monomial(ex)));
      rows.push_back(std::move(row));
    }
  }
  std::vector<Poly> gens;
  for (const auto& v : nullspace(rows, monos.size())) {
    Poly p(2);
    for (std::size_t k = 0; k < monos.size(); ++k)
      if (v[k] != 0) p += monos[k] * v[k];
    gens.push_back(p);
  }
  for (int i = V; i >= 0; --i) {
    int ex[2] = {i, V - i};
    gens.push_back(Poly::monomial(2, Monomial(ex), 1));
  }
  std::vector<Poly> row = gens;
  row.push_back(C.h());
  auto mg = min_generators_from_relations(gens.size(), syzygies(row));
  std::vector<Poly> selected;
  for (std::size_t i : mg.selected) selected.push_back(gens[i]);
  return FractionalIdeal(C, std::move(selected), *q);
}

int exponent_gcd(const BranchParam& b) {
  int g = 0;
  for (const auto& c : b.coords)
    if (c)
      for (const auto& t : c->terms()) g = std::gcd(g, t.mono[0]);
  return g;
}

}  // namespace

std::vector<std::size_t> curve_variables(const DivisorGerm& D) {
  auto sup = D.h().support();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < sup.size(); ++i)
    if (sup[i]) out.push_back(i);
  return out;
}

bool is_smooth(const DivisorGerm& D) {
  return std::any_of(D.partials().begin(), D.partials().end(), [](const Poly& p) { return is_unit_local(p); });
}

bool is_curve_or_suspension(const DivisorGerm& D) { return curve_variables(D).size() == 2; }

std::optional<std::size_t> milnor_number(const DivisorGerm& D) {
  return local_colength(Ideal(D.nvars(), D.partials()));
}

Poly pullback(const BranchParam& b, const Poly& f) {
  std::size_t passive = std::count(b.coords.begin(), b.coords.end(), std::nullopt);
  std::size_t m = 1 + passive;
  std::vector<Poly> images;
  std::size_t next = 1;
  const std::size_t zero = 0;
  for (const auto& c : b.coords) {
    if (c)
      images.push_back(c->remap(m, std::span<const std::size_t>(&zero, 1)));
    else
      images.push_back(Poly::variable(m, next++));
  }
  return series::eval(f, images, b.truncation);
}

std::optional<int> t_order(const Poly& p, int truncation) {
  int o = series::order(series::truncate(p, truncation));
  if (o < 0) return std::nullopt;
  return o;
}

std::vector<BranchParam> branches_from_json(const DivisorGerm& D, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("branch file: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("branch file: expected a list of branches");
  auto cv = curve_variables(D);
  std::vector<BranchParam> out;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("param") || !entry["param"].is_object())
      throw std::invalid_argument("branch file: each branch needs a \"param\" object");
    BranchParam b;
    b.coords.assign(D.nvars(), std::nullopt);
    b.truncation = entry.value("truncation", 0);
    if (b.truncation < 1) throw std::invalid_argument("branch file: truncation must be a positive integer");
    for (const auto& [name, series] : entry["param"].items()) {
      int idx = D.ring().index_of(name);
      if (idx < 0) throw std::invalid_argument("branch file: unknown variable " + name);
      if (cv.size() == 2 && std::find(cv.begin(), cv.end(), static_cast<std::size_t>(idx)) == cv.end())
        throw std::invalid_argument("branch file: " + name + " does not occur in h and is carried along unchanged");
      if (!series.is_array()) throw std::invalid_argument("branch file: series for " + name + " must be a list");
      std::vector<Term> terms;
      for (const auto& pair : series) {
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || pair[0].get<int>() < 0)
          throw std::invalid_argument("branch file: terms are [exponent, \"coefficient\"] pairs");
        Rational c = pair[1].is_string() ? parse_rational(pair[1].get<std::string>())
                     : pair[1].is_number_integer() ? Rational(pair[1].get<long>())
                                                   : throw std::invalid_argument("branch file: bad coefficient");
        int ex[1] = {pair[0].get<int>()};
        terms.push_back({Monomial(ex), c});
      }
      b.coords[idx] = Poly(1, std::move(terms));
    }
    for (std::size_t v : cv)
      if (!b.coords[v] && cv.size() == 2) throw std::invalid_argument("branch file: missing series for " + D.names()[v]);
    out.push_back(std::move(b));
  }
  return out;
}

std::string branches_to_json(const DivisorGerm& D, const std::vector<BranchParam>& branches) {
  json doc = json::array();
  for (const auto& b : branches) {
    json param = json::object();
    for (std::size_t v = 0; v < b.coords.size(); ++v) {
      if (!b.coords[v]) continue;
      json series = json::array();
      std::vector<Term> terms = b.coords[v]->terms();
      std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& c) { return a.mono[0] < c.mono[0]; });
      for (const auto& t : terms) series.push_back(json::array({t.mono[0], rational_to_string(t.coef)}));
      param[D.names()[v]] = series;
    }
    doc.push_back({{"param", param}, {"truncation", b.truncation}});
  }
  return doc.dump();
}

std::string to_string(NormalizationKind k) {
  switch (k) {
    case NormalizationKind::smooth: return "smooth";
    case NormalizationKind::curve: return "curve";
    case NormalizationKind::components: return "components";
    case NormalizationKind::parametrization: return "parametrization";
  }
  return "smooth";
}

NormalizationData normalization_smooth(const DivisorGerm& D) {
  if (!is_smooth(D)) throw NormalizationError("germ is singular at the origin");
  NormalizationData out;
  out.kind = NormalizationKind::smooth;
  out.source = "smooth";
  out.normalization = FractionalIdeal::unit(D);
  out.conductor = FractionalIdeal::unit(D);
  return out;
}

NormalizationData validate_branches(const DivisorGerm& D, std::vector<BranchParam> branches, std::uint64_t seed,
                                    const std::string& source) {
  if (branches.empty()) throw NormalizationError("no branches given");
  if (is_smooth(D)) {
    // Nothing to normalize; the branches only have to lie on D.
    for (const auto& b : branches)
      if (b.coords.size() != D.nvars() || b.truncation < 1 || !pullback(b, D.h()).is_zero())
        throw NormalizationError("branch does not lie on D");
    NormalizationData out = normalization_smooth(D);
    out.source = source;
    out.branches = std::move(branches);
    out.truncation = out.branches.front().truncation;
    return out;
  }
  if (!is_curve_or_suspension(D)) throw NormalizationError("branches require a plane curve or a suspension of one");
  CurveGerm C = curve_germ(D);
  std::size_t n = D.nvars();
  int N = branches.front().truncation;
  int total_mult = 0;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    auto& b = branches[i];
    std::string tag = "branch " + std::to_string(i + 1);
    if (b.coords.size() != n) throw NormalizationError(tag + ": wrong number of coordinates");
    if (b.truncation < 1) throw NormalizationError(tag + ": truncation must be positive");
    N = std::min(N, b.truncation);
    int mult = -1;
    for (std::size_t v = 0; v < n; ++v) {
      bool curve = std::find(C.vars.begin(), C.vars.end(), v) != C.vars.end();
      if (curve != b.coords[v].has_value())
        throw NormalizationError(tag + ": series must be given exactly for the variables of h");
      if (!curve) continue;
      b.coords[v] = series::truncate(*b.coords[v], b.truncation);
      if (b.coords[v]->nvars() != 1) throw NormalizationError(tag + ": series must be univariate");
      if (b.coords[v]->constant_term() != 0) throw NormalizationError(tag + ": does not pass through the origin");
      int o = series::order(*b.coords[v]);
      if (o > 0 && (mult < 0 || o < mult)) mult = o;
    }
    if (mult < 0) throw NormalizationError(tag + ": constant parametrization");
    if (!pullback(b, D.h()).is_zero())
      throw NormalizationError(tag + ": h does not vanish to order " + std::to_string(b.truncation));
    if (exponent_gcd(b) != 1) throw NormalizationError(tag + ": parametrization is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (branches[j].coords == b.coords) throw NormalizationError(tag + ": repeats an earlier branch");
    total_mult += mult;
  }
  if (total_mult != C.germ.h().order())
    throw NormalizationError("branch multiplicities sum to " + std::to_string(total_mult) +
                             " but h has multiplicity " + std::to_string(C.germ.h().order()) +
                             "; branches are missing or repeated");

  std::vector<BranchParam> restricted;
  for (const auto& b : branches) {
    restricted.push_back(restrict_to_curve(b, C));
    restricted.back().truncation = N;
  }
  FractionalIdeal Oc = curve_normalization(C.germ, restricted, N, seed);
  std::vector<Poly> num;
  for (const auto& p : Oc.numerators()) num.push_back(embed(p, C, n));
  NormalizationData out;
  out.kind = NormalizationKind::curve;
  out.source = source;
  out.branches = std::move(branches);
  out.truncation = N;
  out.normalization = FractionalIdeal(D, std::move(num), embed(Oc.denominator(), C, n));
  out.conductor = dual(*out.normalization, seed);
  return out;
}

std::optional<NormalizationData> normalization_from_puiseux(const DivisorGerm& D, int precision,
                                                             std::uint64_t seed) {
  if (!is_curve_or_suspension(D)) return std::nullopt;
  int N = precision;
  if (N <= 0) {
    auto mu = milnor_number(curve_germ(D).germ);
    N = 2 * static_cast<int>(mu.value_or(8)) + 8;
  }
  for (int attempt = 0; attempt < 4; ++attempt, N *= 2) {
    auto res = puiseux_rational(D, N);
    if (!res.supported) return std::nullopt;
    try {
      return validate_branches(D, std::move(res.branches), seed, "puiseux");
    } catch (const TruncationInsufficient&) {
    }
  }
  throw TruncationInsufficient("Puiseux truncation exceeded " + std::to_string(N) + " without deciding");
}

NormalizationData normalization_from_components(const DivisorGerm& D, const std::vector<Poly>& factors,
                                                std::uint64_t seed) {
  validate_factors(D, factors);
  for (const auto& f : factors) {
    bool smooth = false;
    for (std::size_t v = 0; v < D.nvars(); ++v) smooth = smooth || is_unit_local(f.derivative(v));
    if (!smooth) throw NormalizationError("factor " + D.to_string(f) + " is singular at the origin");
  }
  NormalizationData out;
  out.kind = NormalizationKind::components;
  out.source = "components";
  if (factors.size() == 1) {
    out.normalization = FractionalIdeal::unit(D);
  } else {
    std::vector<Poly> g;
    Poly s(D.nvars());
    for (const auto& f : factors) {
      g.push_back(exact_divide(D.h(), f).value());
      s += g.back();
    }
    if (!is_nonzerodivisor(D, s)) throw std::logic_error("idempotent denominator is a zero divisor");
    out.normalization = FractionalIdeal(D, std::move(g), s);
  }
  out.conductor = dual(*out.normalization, seed);
  return out;
}

NormalizationData normalization_from_parametrization(const DivisorGerm& D, Parametrization p) {
  if (p.images.size() != D.nvars()) throw NormalizationError("parametrization needs one image per variable");
  for (const auto& im : p.images) {
    if (im.nvars() != p.params.size()) throw NormalizationError("parametrization image in the wrong ring");
    if (im.constant_term() != 0) throw NormalizationError("parametrization does not map the origin to the origin");
  }
  if (!D.h().substitute(p.images).is_zero()) throw NormalizationError("parametrization does not land in D");
  NormalizationData out;
  out.kind = NormalizationKind::parametrization;
  out.source = "parametrization";
  out.parametrization = std::move(p);
  return out;
}

std::optional<bool> is_weakly_holomorphic(const NormalizationData& N, const MeroFraction& f) {
  switch (N.kind) {
    case NormalizationKind::smooth:
    case NormalizationKind::components: return N.normalization->contains(f);
    case NormalizationKind::parametrization: {
      Poly P = f.num.substitute(N.parametrization->images);
      Poly Q = f.den.substitute(N.parametrization->images);
      if (Q.is_zero()) throw std::invalid_argument("denominator vanishes on D");
      return local_divide(P, Q).has_value();
    }
    case NormalizationKind::curve: break;
  }
  bool fallback = false;
  for (const auto& b : N.branches) {
    Poly Q = pullback(b, f.den);
    auto vq = t_order(Q, b.truncation);
    if (!vq) return std::nullopt;
    // With passive variables the leading t-coefficient must be a unit.
    if (Q.coefficient(Monomial::variable(0, *vq)) == 0) {
      fallback = true;
      continue;
    }
    Poly P = pullback(b, f.num);
    for (const auto& t : P.terms())
      if (t.mono[0] < *vq) return false;
  }
  if (fallback) return N.normalization->contains(f);
  return true;
}

const FractionalIdeal& conductor(const NormalizationData& N) {
  if (!N.conductor) throw NormalizationError("conductor unavailable for " + to_string(N.kind) + " normalization data");
  return *N.conductor;
}

}  // namespace logres
