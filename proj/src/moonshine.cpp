#include "tatek/moonshine.hpp"

#include <algorithm>

#include "tatek/powerops.hpp"

namespace tatek {

bool is_mckay_thompson(const Series &f) {
  if (f.terms().empty() || f.denominator() != 1)
    return false;
  const auto &[e, c] = *f.terms().begin();
  return e == Fraction(-1) && c.is_one();
}

std::vector<mpz_class> eisenstein_e4(int order) {
  std::vector<mpz_class> e(static_cast<std::size_t>(std::max(order, 0) + 1));
  e[0] = 1;
  for (int n = 1; n <= order; ++n) {
    mpz_class s = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0)
        s += mpz_class(d) * d * d;
    e[static_cast<std::size_t>(n)] = 240 * s;
  }
  return e;
}

std::vector<mpz_class> eta24(int order) {
  std::vector<mpz_class> p(static_cast<std::size_t>(std::max(order, 0) + 1));
  p[0] = 1;
  for (int n = 1; n <= order; ++n)
    for (int rep = 0; rep < 24; ++rep)
      for (int i = order; i >= n; --i)
        p[static_cast<std::size_t>(i)] -= p[static_cast<std::size_t>(i - n)];
  return p;
}

namespace {

Series from_integers(const std::vector<mpz_class> &c, Fraction shift, Fraction trunc) {
  Series s = Series::zero_to(trunc);
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0)
      s += Series::monomial(shift + Fraction(static_cast<std::int64_t>(i)), Cyclotomic(Rational(c[i])));
  return s;
}

} // namespace

Series jseries(int order) {
  if (order < 1)
    throw std::invalid_argument("jseries: order must be at least 1");
  const int n = order + 1;
  Series e4 = from_integers(eisenstein_e4(n), Fraction(0), Fraction(n));
  Series p = from_integers(eta24(n), Fraction(0), Fraction(n));
  Series j = e4 * e4 * e4 * series_inv(p) * Series::monomial(Fraction(-1));
  return j - Series(744);
}

Series jseries_triangular(int order) {
  if (order < 1)
    throw std::invalid_argument("jseries: order must be at least 1");
  const int n = order + 1;
  const auto e4 = eisenstein_e4(n);
  const auto p = eta24(n);
  std::vector<mpz_class> cube(static_cast<std::size_t>(n + 1));
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      for (int c = 0; a + b + c <= n; ++c)
        cube[static_cast<std::size_t>(a + b + c)] +=
            e4[static_cast<std::size_t>(a)] * e4[static_cast<std::size_t>(b)] * e4[static_cast<std::size_t>(c)];
  // q j = sum J_i q^i with P * (q j) = E_4^3, P_0 = 1.
  std::vector<mpz_class> jj(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    mpz_class v = cube[static_cast<std::size_t>(i)];
    for (int k = 1; k <= i; ++k)
      v -= p[static_cast<std::size_t>(k)] * jj[static_cast<std::size_t>(i - k)];
    jj[static_cast<std::size_t>(i)] = v;
  }
  jj[1] -= 744;
  return from_integers(jj, Fraction(-1), Fraction(order));
}

std::string polynomial_to_string(const Polynomial &p) {
  std::string out;
  for (std::size_t d = p.size(); d-- > 0;) {
    if (p[d] == 0)
      continue;
    Rational c = p[d];
    const bool neg = c < 0;
    if (neg)
      c = -c;
    std::string mono = d == 0 ? "" : (d == 1 ? "w" : "w^" + std::to_string(d));
    std::string coeff = rational_to_string(c);
    std::string term = mono.empty() ? coeff : (c == 1 ? mono : coeff + "*" + mono);
    if (out.empty())
      out = neg ? "-" + term : term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

Series evaluate(const Polynomial &p, const Series &x) {
  Series acc;
  for (std::size_t d = p.size(); d-- > 0;)
    acc = acc * x + Series(Cyclotomic(p[d]));
  return acc;
}

namespace {

Polynomial poly_add(const Polynomial &a, const Polynomial &b) {
  Polynomial r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] += b[i];
  return r;
}

Polynomial poly_mul(const Polynomial &a, const Polynomial &b) {
  if (a.empty() || b.empty())
    return {};
  Polynomial r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

Polynomial poly_scale(const Polynomial &a, const Rational &c) {
  Polynomial r = a;
  for (auto &x : r)
    x *= c;
  return r;
}

} // namespace

Polynomial faber(const Series &f, int n) {
  if (n < 1)
    throw std::invalid_argument("faber: n must be positive");
  if (!is_mckay_thompson(f))
    throw std::invalid_argument("faber: input must be q^-1 + O(1) with integral exponents");
  if (f.truncation() && *f.truncation() < Fraction(n - 1))
    throw InsufficientTruncation("faber", Fraction(n - 1));
  auto coeff = [&](int e) -> Rational {
    const Cyclotomic c = f.coefficient(Fraction(e));
    if (!c.is_rational())
      throw std::invalid_argument("faber: coefficients must be rational");
    return c.rational();
  };
  // t (F(t) - w) = 1 + (a_0 - w) t + sum_{k>=1} a_k t^{k+1}
  std::vector<Polynomial> fc(static_cast<std::size_t>(n + 1));
  fc[0] = {Rational(1)};
  fc[1] = {coeff(0), Rational(-1)};
  for (int k = 2; k <= n; ++k)
    fc[static_cast<std::size_t>(k)] = {coeff(k - 1)};
  std::vector<Polynomial> g(static_cast<std::size_t>(n + 1));
  for (int m = 1; m <= n; ++m) {
    Polynomial acc = poly_scale(fc[static_cast<std::size_t>(m)], Rational(m));
    for (int k = 1; k < m; ++k)
      acc = poly_add(acc, poly_scale(poly_mul(g[static_cast<std::size_t>(k)], fc[static_cast<std::size_t>(m - k)]),
                                     Rational(-k)));
    g[static_cast<std::size_t>(m)] = poly_scale(acc, make_rational(1, m));
  }
  Polynomial phi = poly_scale(g[static_cast<std::size_t>(n)], Rational(-n));
  for (auto &c : phi)
    c.canonicalize();
  while (!phi.empty() && phi.back() == 0)
    phi.pop_back();
  return phi;
}

const Series &ClassSeries::at(int h) const {
  return values.at(static_cast<std::size_t>(group->conjugacy().class_of.at(static_cast<std::size_t>(h))));
}

ClassSeries adams(const ClassSeries &x, int a) {
  if (a < 1)
    throw std::invalid_argument("adams: a must be positive");
  ClassSeries r{x.group, {}};
  for (int rep : x.group->conjugacy().reps)
    r.values.push_back(x.at(x.group->pow(rep, a)));
  return r;
}

Series adams(const Series &x, int a) {
  if (a < 1)
    throw std::invalid_argument("adams: a must be positive");
  return x;
}

Fraction replicability_requirement(int n_max, int order) {
  Fraction req(std::max(order, 0));
  for (int n = 1; n <= n_max; ++n) {
    req = std::max(req, Fraction(static_cast<std::int64_t>(n) * order));
    req = std::max(req, Fraction(order + n - 1));
  }
  return req;
}

ReplicabilityReport replicability_check(const Series &f, int n_max, int order) {
  if (!is_mckay_thompson(f))
    throw std::invalid_argument("replicability_check: input must be q^-1 + O(1) with integral exponents");
  const Fraction req = replicability_requirement(n_max, order);
  if (f.truncation() && *f.truncation() < req)
    throw InsufficientTruncation("replicability_check", req);
  ReplicabilityReport rep;
  const Fraction t(order);
  for (int n = 1; n <= n_max; ++n) {
    Series lhs = evaluate(faber(f, n), f).truncated(t);
    Series rhs = hecke_T(f, n).scaled(Cyclotomic(n)).truncated(t);
    ReplicabilityEntry e{n, true, std::nullopt, {}, {}};
    if (auto w = first_difference(lhs, rhs)) {
      e.pass = false;
      e.witness = w;
      e.lhs_coeff = lhs.coefficient(*w).to_string();
      e.rhs_coeff = rhs.coefficient(*w).to_string();
      rep.pass = false;
    }
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

BivariateSeries borcherds_product(const CoeffMap &c, int t_order, int q_order) {
  if (t_order < 0 || q_order < 0)
    throw std::invalid_argument("borcherds_product: orders must be nonnegative");
  const auto tq = static_cast<std::size_t>(t_order + 1);
  const auto qq = static_cast<std::size_t>(q_order + 1);
  std::vector<std::vector<mpz_class>> a(tq, std::vector<mpz_class>(qq));
  a[0][0] = 1;
  auto cval = [&](long key) {
    auto it = c.find(key);
    return it == c.end() ? 0L : it->second;
  };
  for (int i = 0; i <= q_order; ++i)
    for (int j = 1; j <= t_order; ++j) {
      const long e = cval(static_cast<long>(i) * j);
      if (e == 0)
        continue;
      // (1 - X)^{-e} = sum_r b_r X^r, b_r = b_{r-1} (e + r - 1) / r
      int rmax = t_order / j;
      if (i > 0)
        rmax = std::min(rmax, q_order / i);
      std::vector<mpz_class> b(static_cast<std::size_t>(rmax + 1));
      b[0] = 1;
      for (int r = 1; r <= rmax; ++r)
        b[static_cast<std::size_t>(r)] = b[static_cast<std::size_t>(r - 1)] * (e + r - 1) / r;
      auto next = a;
      for (int tj = 0; tj <= t_order; ++tj)
        for (int qi = 0; qi <= q_order; ++qi)
          for (int r = 1; r <= rmax && r * j <= tj && r * i <= qi; ++r)
            next[static_cast<std::size_t>(tj)][static_cast<std::size_t>(qi)] +=
                b[static_cast<std::size_t>(r)] *
                a[static_cast<std::size_t>(tj - r * j)][static_cast<std::size_t>(qi - r * i)];
      a = std::move(next);
    }
  BivariateSeries out(t_order);
  for (int tj = 0; tj <= t_order; ++tj)
    out.at(tj) = from_integers(a[static_cast<std::size_t>(tj)], Fraction(0), Fraction(q_order));
  return out;
}

BivariateSeries dmvv_exp_side(const CoeffMap &c, int t_order, int q_order) {
  if (t_order < 0 || q_order < 0)
    throw std::invalid_argument("dmvv: orders must be nonnegative");
  Series f;
  const long top = static_cast<long>(t_order) * q_order;
  for (const auto &[i, v] : c)
    if (i >= 0 && i <= top && v != 0)
      f += Series::monomial(Fraction(i), Cyclotomic(v));
  const Fraction qt(q_order);
  BivariateSeries gen(t_order);
  gen.at(0) = Series();
  for (int m = 1; m <= t_order; ++m)
    gen.at(m) = hecke_T(f, m).truncated(qt);
  return series_exp(gen);
}

BivariateReport compare_bivariate(const BivariateSeries &a, const BivariateSeries &b, int t_order, Fraction q_order) {
  for (int t = 0; t <= t_order; ++t) {
    for (const auto *s : {&a[t], &b[t]})
      if (s->truncation() && *s->truncation() < q_order)
        return {false, t, s->truncation(), "t^" + std::to_string(t) + " coefficient known only through q^" +
                                              s->truncation()->to_string()};
    const Series x = a[t].truncated(q_order);
    const Series y = b[t].truncated(q_order);
    if (auto e = first_difference(x, y))
      return {false, t, e,
              "t^" + std::to_string(t) + " q^" + e->to_string() + ": " + x.coefficient(*e).to_string() + " vs " +
                  y.coefficient(*e).to_string()};
  }
  return {};
}

BivariateReport dmvv_check(const CoeffMap &c, int t_order, int q_order) {
  return compare_bivariate(dmvv_exp_side(c, t_order, q_order), borcherds_product(c, t_order, q_order), t_order,
                           Fraction(q_order));
}

BivariateReport denominator_check(int order) { return denominator_check(order, order); }

BivariateReport denominator_check(int t_order, int q_order) {
  if (t_order < 0 || q_order < 0)
    throw std::invalid_argument("denominator_check: orders must be nonnegative");
  const int tt = t_order + 1;
  const Fraction qt(q_order);
  int f_order = tt * (q_order + tt + 1);
  for (int attempt = 0; attempt < 6; ++attempt, f_order *= 2) {
    const Series f = jseries(f_order);
    BivariateSeries gen(tt);
    gen.at(0) = Series();
    for (int m = 1; m <= tt; ++m)
      gen.at(m) = -hecke_T(f, m);
    const BivariateSeries lambda = series_exp(gen);
    bool enough = true;
    for (int d = 0; d <= tt; ++d)
      if (lambda[d].truncation() && *lambda[d].truncation() < qt)
        enough = false;
    if (!enough)
      continue;
    // t F(t) - t F(q) = 1 - F(q) t + a_0 t + sum_{n>=1} a_n t^{n+1}
    BivariateSeries lhs(tt);
    lhs.at(0) = Series(1);
    lhs.at(1) = Series(f.coefficient(Fraction(0))) - f;
    for (int d = 2; d <= tt; ++d)
      lhs.at(d) = Series(f.coefficient(Fraction(d - 1)));
    BivariateReport r = compare_bivariate(lhs, lambda, tt, qt);
    if (!r.pass) {
      r.t_degree -= 1; // report in the un-shifted t-degree
      r.detail = "after multiplying by t: " + r.detail;
    }
    return r;
  }
  throw InsufficientTruncation("denominator_check: internal order did not suffice", Fraction(f_order));
}

} // namespace tatek
