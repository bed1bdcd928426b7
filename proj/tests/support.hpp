#pragma once

// Test-side helpers and independent oracles. Nothing here calls the library's
// series exp/log/inverse, so the oracles can disagree with it.

#include <gmpxx.h>

#include <map>
#include <random>
#include <vector>

#include "tatek/characters.hpp"
#include "tatek/series.hpp"

namespace testing {

using tatek::Cyclotomic;
using tatek::Fraction;
using tatek::Series;

inline Series q(std::int64_t num, std::int64_t den = 1) { return Series::monomial(Fraction(num, den)); }

inline Series series_of(std::initializer_list<std::pair<Fraction, long>> terms) {
  Series s;
  for (const auto &[e, c] : terms)
    s += Series::monomial(e, Cyclotomic(c));
  return s;
}

inline Cyclotomic zeta(int n, int k = 1) { return Cyclotomic::root_of_unity(n, k); }

// chi(g^k) = zeta_n^k for the generator of Z/n.
inline tatek::RepCharacter faithful_linear(const tatek::GroupPtr &zn) {
  const int n = static_cast<int>(zn->size());
  const int gen = zn->generators().at(0);
  return tatek::RepCharacter::from_function(zn, [&](int e) {
    int k = 0;
    for (int x = zn->identity(); x != e; x = zn->mul(x, gen))
      ++k;
    return zeta(n, k);
  });
}

// Integer bivariate polynomial: grid[t][q], truncated to a fixed box.
class Grid {
public:
  Grid(int t_order, int q_order, long constant = 0)
      : t_(t_order), q_(q_order), c_(static_cast<std::size_t>((t_order + 1) * (q_order + 1)), 0) {
    at(0, 0) = constant;
  }
  mpz_class &at(int t, int q) { return c_[static_cast<std::size_t>(t * (q_ + 1) + q)]; }
  const mpz_class &at(int t, int q) const { return c_[static_cast<std::size_t>(t * (q_ + 1) + q)]; }
  int t_order() const { return t_; }
  int q_order() const { return q_; }

  Grid operator*(const Grid &o) const {
    Grid r(t_, q_);
    for (int a = 0; a <= t_; ++a)
      for (int b = 0; b <= q_; ++b) {
        if (at(a, b) == 0)
          continue;
        for (int c = 0; a + c <= t_; ++c)
          for (int d = 0; b + d <= q_; ++d)
            r.at(a + c, b + d) += at(a, b) * o.at(c, d);
      }
    return r;
  }

  // (1 - t^j q^i)^{-e} by the binomial series.
  static Grid binomial_factor(int t_order, int q_order, int i, int j, long e) {
    Grid g(t_order, q_order);
    mpz_class coeff = 1;
    for (long r = 0; r * j <= t_order && r * i <= q_order; ++r) {
      g.at(static_cast<int>(r * j), static_cast<int>(r * i)) = coeff;
      // coefficient of x^{r+1} in (1 - x)^{-e} is coeff * (e + r) / (r + 1)
      coeff = coeff * (e + r) / (r + 1);
      if (coeff == 0)
        break;
    }
    return g;
  }

private:
  int t_, q_;
  std::vector<mpz_class> c_;
};

// Compares a library bivariate series with an integer grid on the grid's box.
inline bool matches(const tatek::BivariateSeries &b, const Grid &g) {
  for (int t = 0; t <= g.t_order(); ++t)
    for (int e = 0; e <= g.q_order(); ++e)
      if (!(b[t].coefficient(Fraction(e)) == Cyclotomic(tatek::Rational(g.at(t, e)))))
        return false;
  for (int t = 0; t <= g.t_order(); ++t)
    for (const auto &[e, c] : b[t].terms())
      if (e <= Fraction(g.q_order()) && !e.is_integer())
        return false;
  return true;
}

// prod_j (1 - t q^j)^{-c(j)}
inline Grid top_product_oracle(const std::map<long, long> &c, int t_order, int q_order) {
  Grid acc(t_order, q_order, 1);
  for (const auto &[j, cj] : c)
    if (j <= q_order && cj != 0)
      acc = acc * Grid::binomial_factor(t_order, q_order, static_cast<int>(j), 1, cj);
  return acc;
}

// prod_{i >= 0, j >= 1} (1 - q^i t^j)^{-c(ij)}
inline Grid borcherds_oracle(const std::map<long, long> &c, int t_order, int q_order) {
  Grid acc(t_order, q_order, 1);
  for (int j = 1; j <= t_order; ++j)
    for (int i = 0; i <= q_order; ++i) {
      const auto it = c.find(static_cast<long>(i) * j);
      if (it != c.end() && it->second != 0)
        acc = acc * Grid::binomial_factor(t_order, q_order, i, j, it->second);
    }
  return acc;
}

// j - 744 through q^order: Delta from Euler's pentagonal theorem raised to the
// 24th power, E_4 from divisor sums, and an integer long division.
inline std::vector<mpz_class> j_oracle(int order) {
  const int len = order + 2; // Delta/q through q^{order+1}
  std::vector<mpz_class> euler(static_cast<std::size_t>(len), 0);
  for (long k = -len; k <= len; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e >= 0 && e < len)
      euler[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  std::vector<mpz_class> eta24(static_cast<std::size_t>(len), 0);
  eta24[0] = 1;
  for (int r = 0; r < 24; ++r) {
    std::vector<mpz_class> next(static_cast<std::size_t>(len), 0);
    for (int a = 0; a < len; ++a)
      for (int b = 0; a + b < len; ++b)
        next[static_cast<std::size_t>(a + b)] += eta24[static_cast<std::size_t>(a)] * euler[static_cast<std::size_t>(b)];
    eta24 = next;
  }
  std::vector<mpz_class> e4(static_cast<std::size_t>(len), 0);
  e4[0] = 1;
  for (int n = 1; n < len; ++n) {
    mpz_class s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0)
        s += mpz_class(d) * d * d;
    e4[static_cast<std::size_t>(n)] = 240 * s;
  }
  std::vector<mpz_class> cube(static_cast<std::size_t>(len), 0), sq(static_cast<std::size_t>(len), 0);
  for (int a = 0; a < len; ++a)
    for (int b = 0; a + b < len; ++b)
      sq[static_cast<std::size_t>(a + b)] += e4[static_cast<std::size_t>(a)] * e4[static_cast<std::size_t>(b)];
  for (int a = 0; a < len; ++a)
    for (int b = 0; a + b < len; ++b)
      cube[static_cast<std::size_t>(a + b)] += sq[static_cast<std::size_t>(a)] * e4[static_cast<std::size_t>(b)];
  // q j = cube / eta24, eta24[0] = 1.
  std::vector<mpz_class> qj(static_cast<std::size_t>(len), 0);
  for (int n = 0; n < len; ++n) {
    mpz_class v = cube[static_cast<std::size_t>(n)];
    for (int a = 1; a <= n; ++a)
      v -= eta24[static_cast<std::size_t>(a)] * qj[static_cast<std::size_t>(n - a)];
    qj[static_cast<std::size_t>(n)] = v;
  }
  qj[1] -= 744;
  return qj; // qj[n] is the coefficient of q^{n-1}
}

} // namespace testing
