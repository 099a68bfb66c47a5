#include "ggrad/forms.hpp"

#include <algorithm>

#include "ggrad/errors.hpp"

namespace ggrad {

namespace {

Weight lambda_p(int m, int ones, int last_sign = 1) {
  Weight w(m, Rat(0));
  for (int i = 0; i < ones; ++i) w[i] = Rat(1);
  if (ones == m && last_sign < 0) w[m - 1] = Rat(-1);
  return w;
}

Weight axis(int m, int i, int sign) {  // i is 1-based
  Weight w(m, Rat(0));
  w[i - 1] = Rat(sign);
  return w;
}

void check_range(int n, int p) {
  if (n < 3) throw OutOfRangeError("forms: need n >= 3");
  if (p < 0 || p > n)
    throw OutOfRangeError("forms: need 0 <= p <= n, got p = " +
                          std::to_string(p));
}

}  // namespace

std::vector<Weight> form_rep_weights(int n, int p) {
  check_range(n, p);
  const int m = n / 2;
  if (n % 2 == 0 && p == m) return {lambda_p(m, m, +1), lambda_p(m, m, -1)};
  return {lambda_p(m, std::min(p, n - p))};
}

std::vector<FormArrow> d_arrows(int n, int p) {
  check_range(n, p);
  if (p > n - 1)
    throw OutOfRangeError("d maps Lambda^p to Lambda^{p+1}: need p <= n-1");
  const int m = n / 2;
  const bool odd = n % 2 != 0;
  if (odd) {
    if (p < m) return {{lambda_p(m, p), axis(m, p + 1, +1)}};
    if (p == m) return {{lambda_p(m, m), Weight(m, Rat(0))}};
    return {{lambda_p(m, n - p), axis(m, n - p, -1)}};
  }
  if (p == m - 1)
    return {{lambda_p(m, m - 1), axis(m, m, +1)},
            {lambda_p(m, m - 1), axis(m, m, -1)}};
  if (p == m)
    return {{lambda_p(m, m, +1), axis(m, m, -1)},
            {lambda_p(m, m, -1), axis(m, m, +1)}};
  if (p < m - 1) return {{lambda_p(m, p), axis(m, p + 1, +1)}};
  return {{lambda_p(m, n - p), axis(m, n - p, -1)}};
}

std::vector<FormArrow> delta_arrows(int n, int p) {
  check_range(n, p);
  if (p < 1)
    throw OutOfRangeError("delta maps Lambda^p to Lambda^{p-1}: need p >= 1");
  const int m = n / 2;
  const bool odd = n % 2 != 0;
  if (odd) {
    if (p <= m) return {{lambda_p(m, p), axis(m, p, -1)}};
    if (p == m + 1) return {{lambda_p(m, m), Weight(m, Rat(0))}};
    return {{lambda_p(m, n - p), axis(m, n - p + 1, +1)}};
  }
  if (p == m)
    return {{lambda_p(m, m, +1), axis(m, m, -1)},
            {lambda_p(m, m, -1), axis(m, m, +1)}};
  if (p == m + 1)
    return {{lambda_p(m, m - 1), axis(m, m, +1)},
            {lambda_p(m, m - 1), axis(m, m, -1)}};
  if (p < m) return {{lambda_p(m, p), axis(m, p, -1)}};
  return {{lambda_p(m, n - p), axis(m, n - p + 1, +1)}};
}

}  // namespace ggrad
