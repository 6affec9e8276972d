#include "logres/divisor.hpp"

#include <algorithm>

namespace logres {

namespace {

int max_degree_of(const ModuleElement& v) {
  int d = -1;
  for (const auto& p : v)
    if (!p.is_zero()) d = std::max(d, p.degree());
  return d;
}

}  // namespace

DivisorGerm::DivisorGerm(Ring ring, Poly h) {
  if (h.nvars() != ring.size()) throw InvalidGerm("polynomial ring mismatch");
  if (h.is_zero()) throw InvalidGerm("h is zero");
  if (h.constant_term() != 0) throw InvalidGerm("h does not vanish at the origin");
  if (!is_squarefree(h)) throw InvalidGerm("h is not squarefree");
  auto data = std::make_shared<Data>();
  data->ring = std::move(ring);
  data->h = std::move(h);
  std::size_t n = data->ring.size();
  std::vector<Poly> jac{data->h};
  for (std::size_t i = 0; i < n; ++i) {
    data->partials.push_back(data->h.derivative(i));
    jac.push_back(data->partials.back());
  }
  data->principal = Ideal(n, {data->h});
  data->jacobian = Ideal(n, std::move(jac));
  data_ = std::move(data);
}

DivisorGerm DivisorGerm::parse(const std::vector<std::string>& vars, const std::string& h) {
  Ring ring(vars);
  Poly p = logres::parse(h, ring);
  return DivisorGerm(std::move(ring), std::move(p));
}

const std::vector<ModuleElement>& DivisorGerm::log_derivations() const {
  std::call_once(data_->log_once, [this] {
    std::size_t n = nvars();
    std::vector<Poly> row = partials();
    row.push_back(h());
    for (auto& s : syzygies(row)) {
      s.resize(n);
      if (std::any_of(s.begin(), s.end(), [](const Poly& p) { return !p.is_zero(); }))
        data_->log_fields.push_back(std::move(s));
    }
  });
  return data_->log_fields;
}

Poly DivisorGerm::mod_h(const Poly& f) const { return data_->principal.reduce(f, false).remainder; }

Poly VectorField::apply(const Poly& f) const {
  Poly out(f.nvars());
  for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * f.derivative(i);
  return out;
}

bool is_logarithmic(const DivisorGerm& D, const VectorField& delta) {
  return D.principal().contains(delta.apply(D.h()));
}

std::vector<Poly> jacobian_generators(const DivisorGerm& D) {
  std::vector<Poly> out;
  for (const auto& p : D.partials()) out.push_back(D.mod_h(p));
  return out;
}

Poly determinant(const std::vector<std::vector<Poly>>& M) {
  std::size_t n = M.size();
  if (n == 0) throw std::invalid_argument("determinant of empty matrix");
  std::size_t nv = M[0][0].nvars();
  if (n == 1) return M[0][0];
  Poly det(nv);
  for (std::size_t j = 0; j < n; ++j) {
    if (M[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(M[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = M[0][j] * determinant(minor);
    det += j % 2 == 0 ? term : -term;
  }
  return det;
}

std::vector<std::vector<Poly>> adjugate(const std::vector<std::vector<Poly>>& M) {
  std::size_t n = M.size();
  std::size_t nv = M[0][0].nvars();
  std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n, Poly(nv)));
  if (n == 1) {
    adj[0][0] = Poly::constant(nv, 1);
    return adj;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<Poly>> minor;
      for (std::size_t i = 0; i < n; ++i) {
        if (i == r) continue;
        std::vector<Poly> row;
        for (std::size_t k = 0; k < n; ++k)
          if (k != c) row.push_back(M[i][k]);
        minor.push_back(std::move(row));
      }
      Poly cof = determinant(minor);
      adj[c][r] = (r + c) % 2 == 0 ? cof : -cof;
    }
  return adj;
}

FreenessResult is_free(const DivisorGerm& D) {
  std::size_t n = D.nvars();
  const auto& fields = D.log_derivations();
  FreenessResult out;
  auto mg = min_generators_local(ModuleBasis(n, n, fields));
  out.min_generators = mg.count;
  if (mg.count != n) return out;
  SaitoMatrix M;
  for (std::size_t i : mg.selected) M.rows.push_back(fields[i]);
  M.determinant = determinant(M.rows);
  // Polynomial logarithmic fields are tangent to every component, so h
  // divides the determinant in the polynomial ring.
  auto q = exact_divide(M.determinant, D.h());
  if (!q) throw std::logic_error("Saito determinant is not divisible by h");
  M.unit = *q;
  if (!is_unit_local(M.unit)) return out;
  out.free = true;
  out.basis = std::move(M);
  return out;
}

EulerResult is_euler_homogeneous(const DivisorGerm& D) {
  std::size_t n = D.nvars();
  EulerResult out;
  out.membership = Ideal(n, D.partials()).contains_local(D.h());
  std::vector<Poly> row{D.h()};
  for (const auto& p : D.partials()) row.push_back(p);
  // s_0 h + sum s_i d_i h = 0 with s_0(0) != 0 gives chi = -(s_1..s_n)/s_0.
  auto syz = syzygies(row);
  const ModuleElement* best = nullptr;
  for (const auto& s : syz) {
    if (!is_unit_local(s[0])) continue;
    if (!best || max_degree_of(s) < max_degree_of(*best)) best = &s;
  }
  if (!best) return out;
  out.euler = true;
  Rational c = (*best)[0].constant_term();
  bool constant_unit = (*best)[0].is_constant();
  for (std::size_t i = 1; i <= n; ++i) out.field.coeffs.push_back(constant_unit ? -(*best)[i] * (1 / c) : -(*best)[i]);
  out.unit = constant_unit ? Poly::constant(n, 1) : (*best)[0];
  return out;
}

std::vector<LogOneForm> log_forms_basis(const DivisorGerm& D, const SaitoMatrix& M) {
  std::size_t n = D.nvars();
  if (M.rows.size() != n) throw std::invalid_argument("Saito matrix has the wrong size");
  for (const auto& r : M.rows)
    if (!is_logarithmic(D, VectorField{r})) throw std::invalid_argument("Saito matrix row is not logarithmic");
  Poly det = determinant(M.rows);
  if (!is_unit_local(M.unit) || det != M.unit * D.h())
    throw std::invalid_argument("Saito matrix determinant is not unit * h");
  auto adj = adjugate(M.rows);
  std::vector<LogOneForm> out;
  for (std::size_t j = 0; j < n; ++j) {
    LogOneForm w;
    for (std::size_t k = 0; k < n; ++k) w.a.push_back(adj[k][j]);
    w.unit = M.unit;
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace logres
