#ifndef LOGRES_SRC_SERIES_HPP
#define LOGRES_SRC_SERIES_HPP

// Truncated power series in variable 0 with polynomial coefficients in the
// remaining variables.

#include <vector>

#include "logres/poly.hpp"

namespace logres::series {

Poly truncate(const Poly& p, int N);
Poly mul(const Poly& a, const Poly& b, int N);
Poly power(const Poly& a, int e, int N);
/// f(images) truncated below t^N; images all live in one ring.
Poly eval(const Poly& f, const std::vector<Poly>& images, int N);
/// Lowest degree in variable 0, or -1 for zero.
int order(const Poly& p);

}  // namespace logres::series

#endif  // LOGRES_SRC_SERIES_HPP
