#include "series.hpp"

namespace logres::series {

Poly truncate(const Poly& p, int N) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t.mono[0] < N) out.push_back(t);
  return Poly(p.nvars(), std::move(out));
}

Poly mul(const Poly& a, const Poly& b, int N) {
  std::vector<Term> out;
  for (const auto& s : a.terms())
    for (const auto& t : b.terms())
      if (s.mono[0] + t.mono[0] < N) out.push_back({s.mono * t.mono, s.coef * t.coef});
  return Poly(a.nvars(), std::move(out));
}

Poly power(const Poly& a, int e, int N) {
  Poly out = truncate(Poly::constant(a.nvars(), 1), N);
  for (int k = 0; k < e; ++k) out = mul(out, a, N);
  return out;
}

Poly eval(const Poly& f, const std::vector<Poly>& images, int N) {
  std::size_t m = images.front().nvars();
  std::vector<std::vector<Poly>> powers(f.nvars());
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    powers[i].push_back(truncate(Poly::constant(m, 1), N));
    for (int k = 1; k <= f.degree_in(i); ++k) powers[i].push_back(mul(powers[i].back(), images[i], N));
  }
  Poly out(m);
  for (const auto& t : f.terms()) {
    Poly term = truncate(Poly::constant(m, t.coef), N);
    for (std::size_t i = 0; i < f.nvars() && !term.is_zero(); ++i)
      if (t.mono[i] > 0) term = mul(term, powers[i][t.mono[i]], N);
    out += term;
  }
  return out;
}

int order(const Poly& p) {
  int best = -1;
  for (const auto& t : p.terms())
    if (best < 0 || t.mono[0] < best) best = t.mono[0];
  return best;
}

}  // namespace logres::series
