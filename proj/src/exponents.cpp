#include "torus/exponents.hpp"

namespace torus::exponents {

Rational epsilon_bssy(Dim n) {
  if (n.n < 3) throw domain_error("epsilon_bssy requires n >= 3");
  BigInt num = 2 * (BigInt(n.n) - 1);
  if (n.n % 2 == 1) return make_rational(num, BigInt(n.n) * (n.n + 1));
  return make_rational(num, BigInt(n.n) * n.n + 2 * n.n + 2);
}

Rational epsilon3_refined() { return Rational(85, 252); }

Rational omega(Dim n, QOrder q) {
  if (n.n < 2) throw domain_error("omega requires n >= 2");
  BigInt two_q = BigInt(1) << static_cast<unsigned>(q.q);
  return make_rational(BigInt(n.n), 2 * n.n * (two_q - 1) + 2 * two_q);
}

Rational beta_n(Dim n) {
  if (n.n < 3) throw domain_error("beta_n requires n >= 3");
  BigInt den = 21 * BigInt(n.n) * n.n - n.n - 24;
  return Rational(1, 3) + Rational(n.n, 3) * make_rational(1, den);
}

Rational beta_nq(Dim n, QOrder q) {
  if (n.n < 3) throw domain_error("beta_nq requires n >= 3");
  BigInt two_q = BigInt(1) << static_cast<unsigned>(q.q);
  BigInt den = 3 * (BigInt(n.n) * n.n - 1) * two_q - BigInt(q.q) * n.n -
               (3 * BigInt(n.n) - 2) * n.n;
  if (den == 0) throw domain_error("beta_nq denominator vanishes");
  return Rational(1, 3) + Rational(n.n, 3) * make_rational(q.q - 2, den);
}

QOrder optimal_q(Dim n, QOrder q_max) {
  if (n.n < 3) throw domain_error("optimal_q requires n >= 3");
  if (q_max.q < 4) throw domain_error("optimal_q requires q_max >= 4");
  int best = 3;
  Rational best_val = beta_nq(n, QOrder(3));
  for (int q = 4; q <= q_max.q; ++q) {
    Rational v = beta_nq(n, QOrder(q));
    if (v > best_val) {
      best_val = v;
      best = q;
    }
  }
  return QOrder(best);
}

Rational constraint_margin(Dim n, QOrder q, const Rational& beta) {
  if (n.n < 2) throw domain_error("constraint_margin requires n >= 2");
  Rational expo = Rational(q.q - 1) - Rational(2, n.n) + pow2_rational(1 - q.q);
  return Rational(1) - beta * expo;
}

Rational positivity_margin(Dim n, QOrder q) {
  if (n.n < 2) throw domain_error("positivity_margin requires n >= 2");
  return Rational(n.n + 1, 2) - Rational(q.q + 1) * omega(n, q);
}

ExponentReport report(Dim n, QOrder q) {
  ExponentReport r;
  r.n = n.n;
  r.q = q.q;
  if (n.n >= 3) {
    r.epsilon_n = epsilon_bssy(n);
    r.beta_n = beta_n(n);
    r.beta_nq = beta_nq(n, q);
    r.constraint_margin = constraint_margin(n, QOrder(3), beta_n(n));
  }
  r.omega_nq = omega(n, q);
  r.positivity_margin = positivity_margin(n, q);
  return r;
}

std::vector<ExponentReport> table(int n_min, int n_max, int q_max) {
  if (n_min < 3 || n_max < n_min || q_max < 1)
    throw domain_error("invalid table range");
  std::vector<ExponentReport> out;
  for (int n = n_min; n <= n_max; ++n)
    for (int q = 1; q <= q_max; ++q) out.push_back(report(Dim(n), QOrder(q)));
  return out;
}

}  // namespace torus::exponents
