#ifndef SYNGE_SRC_EOS_FORMULAS_HPP
#define SYNGE_SRC_EOS_FORMULAS_HPP

// Rational EOS expressions in (x = gamma, h = h_i). Templated so they can be evaluated
// in double or, for the large-gamma branch, as exact Laurent series in 1/gamma.

namespace synge::detail {

template <class T>
T g_formula(int i, const T& x, const T& h) {
  return x * x * (h * h - 1) + (2 * i + 1) * x * h - 4;
}

template <class T>
T ep_closed(int i, const T& x, const T& h) {
  const T x2 = x * x;
  if (i == 1) return 3 + (x2 * x * h * h * h - x2 * x * h + 4 * x2 * h * h - x2) / g_formula(1, x, h);
  return 3 + (x2 * x * h * h * h - x2 * x * h + 2 * x2 * h * h - 2 * x * h - x2) / g_formula(0, x, h);
}

template <class T>
T pepp_closed(int i, const T& x, const T& h) {
  const T g = g_formula(i, x, h);
  if (i == 1) {
    const T xh = x * h;
    const T i1 = xh * (xh + 2) - x * x - 8;
    const T i2 = h * (xh + 4) - x - 1;
    const T i3 = h * (xh + 4) - x + 1;
    return x * x * i1 * i2 * i3 / (g * g * g);
  }
  const T hm = h * h - 1;
  const T h2 = h * h;
  const T x2 = x * x;
  const T x3 = x2 * x;
  const T f = x3 * x2 * hm * hm * hm + 4 * x2 * x2 * h * hm * hm - 32 * x2 * h * hm - 24 * x * h2 +
              x3 * (-4 * h2 * h2 + 11 * h2 - 7) + 16 * h;
  return x * f / (g * g * g);
}

template <class T>
T q_formula(int i, const T& x, const T& h) {
  return h * (x * h + 2 * (i + 1)) - x;
}

template <class T>
T sigma_prime_formula(int i, const T& x, const T& h) {
  const T q = q_formula(i, x, h);
  const T s = -g_formula(i, x, h);
  const T xh = x * h;
  const T g_prime = q * (2 * xh + (2 * i + 1)) - 2 * x;
  return q * (1 - 1 / s) - (xh + 4) * g_prime / (s * s);
}

template <class T>
T pepp_sigma(int i, const T& x, const T& h) {
  return x * sigma_prime_formula(i, x, h) / g_formula(i, x, h);
}

}  // namespace synge::detail

#endif  // SYNGE_SRC_EOS_FORMULAS_HPP
