#include <algorithm>
#include <numeric>
#include <utility>

#include "logres/normalization.hpp"
#include "series.hpp"

namespace logres {

namespace {

// Branches of g(u, v) = 0 at the origin as pairs (u(s), v(s)) of one-variable
// polynomials truncated below s^N.
struct RawBranch {
  Poly u, v;
};

Poly s_var() { return Poly::variable(1, 0); }

// v = phi(u) with g(u, phi(u)) = 0 when dg/dv(0) = c != 0; fixed point of
// phi <- phi - g(u, phi) / c, gaining one order per step.
Poly implicit_solve(const Poly& g, std::size_t solved, int N) {
  Rational c = g.coefficient(Monomial::variable(solved));
  Poly phi(1);
  std::size_t other = 1 - solved;
  for (int it = 0; it <= N + 1; ++it) {
    std::vector<Poly> images(2);
    images[other] = s_var();
    images[solved] = phi;
    Poly r = series::eval(g, images, N);
    if (r.is_zero()) break;
    phi -= r * (1 / c);
  }
  return phi;
}

bool divisible_by_var(const Poly& g, std::size_t v) {
  return std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) { return t.mono[v] > 0; });
}

Poly divide_by_var(const Poly& g, std::size_t v, int power = 1) {
  std::vector<Term> out;
  for (const auto& t : g.terms()) out.push_back({t.mono.quotient_by(Monomial::variable(v, power)), t.coef});
  return Poly(g.nvars(), std::move(out));
}

Rational rpow(const Rational& z, long e) {
  Rational base = e < 0 ? Rational(1) / z : z;
  Rational out = 1;
  for (long k = 0; k < std::labs(e); ++k) out *= base;
  return out;
}

// Divisors of |a| by trial division; empty when |a| is too large to scan.
std::vector<mpz_class> divisors(mpz_class a) {
  a = abs(a);
  std::vector<mpz_class> out;
  if (a > mpz_class("1000000000000")) return out;
  for (mpz_class d = 1; d * d <= a; ++d)
    if (a % d == 0) {
      out.push_back(d);
      if (d * d != a) out.push_back(a / d);
    }
  return out;
}

Rational eval_univariate(const std::vector<Rational>& f, const Rational& z) {
  Rational acc = 0;
  for (std::size_t k = f.size(); k-- > 0;) acc = acc * z + f[k];
  return acc;
}

// Divides f by (z - root), f(root) = 0.
std::vector<Rational> deflate(const std::vector<Rational>& f, const Rational& root) {
  std::vector<Rational> q(f.size() - 1);
  Rational carry = 0;
  for (std::size_t k = f.size(); k-- > 1;) {
    carry = carry * root + f[k];
    q[k - 1] = carry;
  }
  return q;
}

// Rational roots with multiplicities of f (f[k] is the coefficient of z^k,
// f[0] != 0). Returns false when f does not split over the rationals.
bool rational_roots(std::vector<Rational> f, std::vector<std::pair<Rational, int>>& roots) {
  mpz_class lcm_den = 1;
  for (const auto& c : f) lcm_den = lcm(lcm_den, c.get_den());
  std::vector<mpz_class> ints;
  for (const auto& c : f) ints.push_back(mpz_class(c * lcm_den));
  auto nums = divisors(ints.front());
  auto dens = divisors(ints.back());
  if (nums.empty() || dens.empty()) return false;
  std::size_t found = 0;
  for (const auto& a : nums)
    for (const auto& b : dens)
      for (int sign : {1, -1}) {
        Rational z(a * sign, b);
        z.canonicalize();
        if (std::any_of(roots.begin(), roots.end(), [&](const auto& r) { return r.first == z; })) continue;
        int mult = 0;
        while (f.size() > 1 && eval_univariate(f, z) == 0) {
          f = deflate(f, z);
          ++mult;
        }
        if (mult > 0) {
          roots.push_back({z, mult});
          found += mult;
        }
      }
  return f.size() == 1;
}

struct Edge {
  int i1, j1, i2, j2;
};

// Lower convex hull of the support between (0, b) and (a, 0).
std::vector<Edge> newton_edges(const Poly& g) {
  std::vector<std::pair<int, int>> pts;
  for (const auto& t : g.terms()) pts.push_back({t.mono[0], t.mono[1]});
  int b = -1;
  for (const auto& [i, j] : pts)
    if (i == 0 && (b < 0 || j < b)) b = j;
  int a = -1;
  for (const auto& [i, j] : pts)
    if (j == 0 && (a < 0 || i < a)) a = i;
  std::vector<Edge> edges;
  int ci = 0, cj = b;
  while (ci < a) {
    int bi = -1, bj = -1;
    for (const auto& [i, j] : pts) {
      if (i <= ci || j >= cj) continue;
      if (bi < 0) {
        bi = i, bj = j;
        continue;
      }
      // Compare slopes (j - cj)/(i - ci) < (bj - cj)/(bi - ci).
      long lhs = static_cast<long>(j - cj) * (bi - ci);
      long rhs = static_cast<long>(bj - cj) * (i - ci);
      if (lhs < rhs || (lhs == rhs && i > bi)) bi = i, bj = j;
    }
    edges.push_back({ci, cj, bi, bj});
    ci = bi, cj = bj;
  }
  return edges;
}

// x = a s + b with Euclid: returns (x, y) with q x + p y = 1.
std::pair<long, long> bezout(long q, long p) {
  long old_r = q, r = p, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long k = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - k * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - k * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - k * t);
  }
  return {old_s, old_t};
}

bool branches_of(Poly g, int N, int depth, std::vector<RawBranch>& out, std::string& reason) {
  if (depth > 64) {
    reason = "Newton-Puiseux recursion too deep";
    return false;
  }
  for (std::size_t v : {0, 1}) {
    if (!divisible_by_var(g, v)) continue;
    RawBranch b{Poly(1), Poly(1)};
    (v == 0 ? b.v : b.u) = s_var();
    out.push_back(b);
    g = divide_by_var(g, v);
    if (divisible_by_var(g, v)) {
      reason = "non-reduced curve";
      return false;
    }
  }
  if (g.is_zero() || g.constant_term() != 0) return true;
  if (g.coefficient(Monomial::variable(1)) != 0) {
    out.push_back({s_var(), implicit_solve(g, 1, N)});
    return true;
  }
  if (g.coefficient(Monomial::variable(0)) != 0) {
    out.push_back({implicit_solve(g, 0, N), s_var()});
    return true;
  }
  for (const Edge& e : newton_edges(g)) {
    int di = e.i2 - e.i1, dj = e.j1 - e.j2;
    int gg = std::gcd(di, dj);
    int q = dj / gg, p = di / gg;
    int m = q * e.i1 + p * e.j1;
    // Points (i1 + k p, j1 - k q) contribute to z^(gg - k), z = v^q / u^p.
    std::vector<Rational> F(gg + 1);
    for (int k = 0; k <= gg; ++k) {
      int ex[2] = {e.i1 + k * p, e.j1 - k * q};
      F[gg - k] = g.coefficient(Monomial(ex));
    }
    std::vector<std::pair<Rational, int>> roots;
    if (!rational_roots(F, roots)) {
      reason = "edge polynomial has irrational roots";
      return false;
    }
    auto [bq, bp] = bezout(q, p);  // q bq + p bp = 1
    for (const auto& [z, mult] : roots) {
      (void)mult;
      Rational lambda = rpow(z, -bp), mu = rpow(z, bq);
      // u = lambda t^q, v = t^p (mu + V) in Q[t, V].
      Poly t = Poly::variable(2, 0), V = Poly::variable(2, 1);
      std::vector<Poly> images{t.pow(q) * lambda, t.pow(p) * (V + Poly::constant(2, mu))};
      Poly sub = divide_by_var(g.substitute(images), 0, m);
      std::vector<RawBranch> inner;
      if (!branches_of(sub, N, depth + 1, inner, reason)) return false;
      for (const auto& b : inner) {
        Poly tu = series::truncate(series::power(b.u, q, N) * lambda, N);
        Poly tv = series::mul(series::power(b.u, p, N), b.v + Poly::constant(1, mu), N);
        out.push_back({tu, tv});
      }
    }
  }
  return true;
}

}  // namespace

PuiseuxResult puiseux_rational(const DivisorGerm& D, int truncation) {
  PuiseuxResult res;
  if (!is_curve_or_suspension(D)) {
    res.reason = "not a plane curve or a suspension of one";
    return res;
  }
  auto cv = curve_variables(D);
  std::size_t n = D.nvars();
  std::vector<std::size_t> map(n, 0);
  map[cv[0]] = 0;
  map[cv[1]] = 1;
  Poly g = D.h().remap(2, map);
  std::vector<RawBranch> raw;
  if (!branches_of(g, truncation, 0, raw, res.reason)) return res;
  for (const auto& r : raw) {
    BranchParam b;
    b.coords.assign(n, std::nullopt);
    b.coords[cv[0]] = r.u;
    b.coords[cv[1]] = r.v;
    b.truncation = truncation;
    res.branches.push_back(std::move(b));
  }
  res.supported = true;
  return res;
}

}  // namespace logres
