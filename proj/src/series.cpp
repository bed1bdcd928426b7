#include "tatek/series.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tatek {

namespace {

std::optional<Fraction> min_opt(const std::optional<Fraction> &a, const std::optional<Fraction> &b) {
  if (!a)
    return b;
  if (!b)
    return a;
  return std::min(*a, *b);
}

// Lowest exponent that can carry a nonzero coefficient, as far as is known.
// nullopt means the series is exactly zero.
std::optional<Fraction> lower_bound(const Series &s) {
  if (!s.terms().empty())
    return s.terms().begin()->first;
  return s.truncation();
}

// Effective working order for the unary series operations.
Fraction working_order(const Series &s, const std::optional<Fraction> &order, const char *what) {
  auto t = min_opt(s.truncation(), order);
  if (!t)
    throw std::invalid_argument(std::string(what) + ": exact input needs an explicit order");
  return *t;
}

// Dense coefficients of s in the variable y = q^{1/den}, offset by `shift`
// (index k holds the coefficient of q^{shift + k/den}), for 0 <= k <= last.
std::vector<Cyclotomic> dense(const Series &s, std::int64_t den, Fraction shift, std::int64_t last) {
  std::vector<Cyclotomic> out(static_cast<std::size_t>(last + 1));
  for (const auto &[e, c] : s.terms()) {
    Fraction k = (e - shift) * Fraction(den);
    if (!k.is_integer())
      throw std::logic_error("dense: exponent off the lattice");
    if (k.num() >= 0 && k.num() <= last)
      out[static_cast<std::size_t>(k.num())] = c;
  }
  return out;
}

Series from_dense(const std::vector<Cyclotomic> &v, std::int64_t den, Fraction shift, Fraction trunc) {
  Series out = Series::zero_to(trunc);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero())
      out += Series::monomial(shift + Fraction(static_cast<std::int64_t>(k), den), v[k]).truncated(trunc);
  return out;
}

} // namespace

Series::Series(const Cyclotomic &c) {
  if (!c.is_zero())
    terms_.emplace(Fraction(0), c);
}

Series Series::monomial(Fraction exponent, const Cyclotomic &coeff) {
  Series s;
  if (!coeff.is_zero())
    s.terms_.emplace(exponent, coeff);
  return s;
}

Series Series::zero_to(Fraction order) {
  Series s;
  s.trunc_ = order;
  return s;
}

Cyclotomic Series::coefficient(Fraction e) const {
  if (trunc_ && e > *trunc_)
    throw std::out_of_range("coefficient beyond truncation: q^" + e.to_string());
  auto it = terms_.find(e);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

std::int64_t Series::denominator() const {
  std::int64_t d = 1;
  for (const auto &kv : terms_)
    d = std::lcm(d, kv.first.den());
  return d;
}

std::optional<Fraction> Series::valuation() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.begin()->first;
}

Series Series::truncated(Fraction order) const {
  Series s = *this;
  s.trunc_ = min_opt(trunc_, order);
  s.drop_above_truncation();
  return s;
}

void Series::drop_above_truncation() {
  if (!trunc_)
    return;
  terms_.erase(terms_.upper_bound(*trunc_), terms_.end());
}

void Series::insert_term(Fraction e, const Cyclotomic &c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

Series Series::operator-() const {
  Series s = *this;
  for (auto &kv : s.terms_)
    kv.second = -kv.second;
  return s;
}

Series operator+(const Series &a, const Series &b) {
  Series s = a;
  s.trunc_ = min_opt(a.trunc_, b.trunc_);
  s.drop_above_truncation();
  for (const auto &[e, c] : b.terms_) {
    if (s.trunc_ && e > *s.trunc_)
      break;
    s.insert_term(e, c);
  }
  return s;
}

Series operator-(const Series &a, const Series &b) { return a + (-b); }

Series operator*(const Series &a, const Series &b) {
  auto la = lower_bound(a);
  auto lb = lower_bound(b);
  if (!la || !lb)
    return Series();
  std::optional<Fraction> t;
  if (a.trunc_)
    t = min_opt(t, *a.trunc_ + *lb);
  if (b.trunc_)
    t = min_opt(t, *b.trunc_ + *la);
  Series s;
  s.trunc_ = t;
  for (const auto &[ea, ca] : a.terms_) {
    if (t && ea + *lb > *t)
      break;
    for (const auto &[eb, cb] : b.terms_) {
      Fraction e = ea + eb;
      if (t && e > *t)
        break;
      s.insert_term(e, ca * cb);
    }
  }
  return s;
}

Series Series::scaled(const Cyclotomic &c) const {
  if (c.is_zero()) {
    Series z;
    z.trunc_ = trunc_;
    return z;
  }
  Series s = *this;
  for (auto &kv : s.terms_)
    kv.second *= c;
  return s;
}

Series Series::scale_exponents(Fraction factor) const {
  if (factor <= Fraction(0))
    throw std::invalid_argument("scale_exponents: factor must be positive");
  Series s;
  for (const auto &[e, c] : terms_)
    s.terms_.emplace(e * factor, c);
  if (trunc_)
    s.trunc_ = *trunc_ * factor;
  return s;
}

std::string Series::to_string() const {
  std::string out;
  for (const auto &[e, c] : terms_) {
    if (!out.empty())
      out += " + ";
    std::string coeff = c.to_string();
    if (!c.is_rational())
      coeff = "(" + coeff + ")";
    if (e.is_zero())
      out += coeff;
    else
      out += coeff + "*q^(" + e.to_string() + ")";
  }
  if (trunc_) {
    if (!out.empty())
      out += " + ";
    out += "O(q^>" + trunc_->to_string() + ")";
  }
  return out.empty() ? "0" : out;
}

bool agree_to(const Series &a, const Series &b, Fraction order) {
  if (a.truncation() && *a.truncation() < order)
    return false;
  if (b.truncation() && *b.truncation() < order)
    return false;
  return a.truncated(order).terms() == b.truncated(order).terms();
}

Series series_exp(const Series &s, std::optional<Fraction> order) {
  Fraction t = working_order(s, order, "series_exp");
  auto v = s.valuation();
  if (v && *v <= Fraction(0))
    throw std::domain_error("series_exp: input must have zero constant term and positive valuation");
  if (t < Fraction(0))
    return Series::zero_to(t) + Series(1).truncated(t);
  std::int64_t den = std::lcm(s.denominator(), t.den());
  std::int64_t last = (t * Fraction(den)).floor();
  auto a = dense(s, den, Fraction(0), last);
  std::vector<Cyclotomic> f(static_cast<std::size_t>(last + 1));
  f[0] = Cyclotomic(1);
  for (std::int64_t n = 1; n <= last; ++n) {
    Cyclotomic acc;
    for (std::int64_t k = 1; k <= n; ++k)
      if (!a[k].is_zero() && !f[n - k].is_zero())
        acc += Cyclotomic(Rational(k)) * a[k] * f[n - k];
    f[n] = acc * Cyclotomic(make_rational(1, n));
  }
  return from_dense(f, den, Fraction(0), t);
}

Series series_log(const Series &s, std::optional<Fraction> order) {
  Fraction t = working_order(s, order, "series_log");
  auto v = s.valuation();
  if (!v || *v < Fraction(0) || !(s.coefficient(Fraction(0)) == Cyclotomic(1)))
    throw std::domain_error("series_log: input must have constant term 1 and no negative exponents");
  if (t < Fraction(0))
    return Series::zero_to(t);
  std::int64_t den = std::lcm(s.denominator(), t.den());
  std::int64_t last = (t * Fraction(den)).floor();
  auto f = dense(s, den, Fraction(0), last);
  std::vector<Cyclotomic> g(static_cast<std::size_t>(last + 1));
  for (std::int64_t n = 1; n <= last; ++n) {
    Cyclotomic acc = Cyclotomic(Rational(n)) * f[n];
    for (std::int64_t k = 1; k < n; ++k)
      if (!g[k].is_zero() && !f[n - k].is_zero())
        acc -= Cyclotomic(Rational(k)) * g[k] * f[n - k];
    g[n] = acc * Cyclotomic(make_rational(1, n));
  }
  return from_dense(g, den, Fraction(0), t);
}

Series series_inv(const Series &s, std::optional<Fraction> order) {
  auto v = s.valuation();
  if (!v)
    throw std::domain_error("series_inv: series has no invertible leading term");
  if (s.is_exact() && s.terms().size() == 1 && !order)
    return Series::monomial(-*v, s.terms().begin()->second.inverse());
  std::optional<Fraction> t;
  if (s.truncation())
    t = *s.truncation() - *v - *v;
  t = min_opt(t, order);
  if (!t)
    throw std::invalid_argument("series_inv: exact input needs an explicit order");
  const Cyclotomic lead_inv = s.terms().begin()->second.inverse();
  std::int64_t den = std::lcm(std::lcm(s.denominator(), t->den()), v->den());
  // Relative order: b(y) = 1 / (s / (c q^v)) is needed through q^{t + v}.
  std::int64_t last = ((*t + *v) * Fraction(den)).floor();
  if (last < 0)
    return Series::zero_to(*t);
  auto a = dense(s, den, *v, last);
  for (auto &c : a)
    c *= lead_inv;
  std::vector<Cyclotomic> b(static_cast<std::size_t>(last + 1));
  b[0] = Cyclotomic(1);
  for (std::int64_t n = 1; n <= last; ++n) {
    Cyclotomic acc;
    for (std::int64_t k = 1; k <= n; ++k)
      if (!a[k].is_zero() && !b[n - k].is_zero())
        acc -= a[k] * b[n - k];
    b[n] = acc;
  }
  for (auto &c : b)
    c *= lead_inv;
  return from_dense(b, den, -*v, *t);
}

Series hecke_substitute(const Series &s, std::int64_t big_n, std::int64_t k, std::int64_t m) {
  if (big_n < 1 || k < 1 || m < 0 || m >= k)
    throw std::invalid_argument("hecke_substitute: need N, k >= 1 and 0 <= m < k");
  const Fraction factor(big_n, k);
  Series out = s.truncation() ? Series::zero_to(*s.truncation() * factor) : Series();
  for (const auto &[e, c] : s.terms()) {
    // exp(2 pi i m e / k) with e = a/b is zeta_{k b}^{m a}.
    Cyclotomic twist = m == 0 ? Cyclotomic(1) : Cyclotomic::root_of_unity(k * e.den(), m * e.num());
    out += Series::monomial(e * factor, c * twist);
  }
  return out;
}

BivariateSeries::BivariateSeries(int t_order) : coeffs_(static_cast<std::size_t>(t_order + 1)), t_order_(t_order) {
  if (t_order < 0)
    throw std::invalid_argument("BivariateSeries: negative t order");
}

BivariateSeries::BivariateSeries(std::vector<Series> coeffs, int t_order) : coeffs_(std::move(coeffs)), t_order_(t_order) {
  if (t_order < 0)
    throw std::invalid_argument("BivariateSeries: negative t order");
  coeffs_.resize(static_cast<std::size_t>(t_order + 1));
}

BivariateSeries operator+(const BivariateSeries &a, const BivariateSeries &b) {
  int t = std::min(a.t_order_, b.t_order_);
  BivariateSeries r(t);
  for (int n = 0; n <= t; ++n)
    r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

BivariateSeries BivariateSeries::operator-() const {
  BivariateSeries r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

BivariateSeries operator-(const BivariateSeries &a, const BivariateSeries &b) { return a + (-b); }

BivariateSeries operator*(const BivariateSeries &a, const BivariateSeries &b) {
  int t = std::min(a.t_order_, b.t_order_);
  BivariateSeries r(t);
  for (int i = 0; i <= t; ++i) {
    if (a.coeffs_[i].is_exact() && a.coeffs_[i].is_zero())
      continue;
    for (int j = 0; i + j <= t; ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

BivariateSeries BivariateSeries::q_truncated(Fraction order) const {
  BivariateSeries r = *this;
  for (auto &c : r.coeffs_)
    c = c.truncated(order);
  return r;
}

std::string BivariateSeries::to_string() const {
  std::string out;
  for (int n = 0; n <= t_order_; ++n) {
    if (coeffs_[n].is_zero() && coeffs_[n].is_exact())
      continue;
    if (!out.empty())
      out += " + ";
    out += "(" + coeffs_[n].to_string() + ")*t^" + std::to_string(n);
  }
  out += (out.empty() ? "" : " + ") + std::string("O(t^") + std::to_string(t_order_ + 1) + ")";
  return out;
}

BivariateSeries series_exp(const BivariateSeries &s) {
  if (!s[0].is_zero())
    throw std::domain_error("series_exp: t^0 coefficient must vanish");
  const int t = s.t_order();
  BivariateSeries f(t);
  f.at(0) = s[0].truncation() ? Series(1).truncated(*s[0].truncation()) : Series(1);
  for (int n = 1; n <= t; ++n) {
    Series acc;
    for (int k = 1; k <= n; ++k)
      acc += s[k].scaled(Cyclotomic(k)) * f[n - k];
    f.at(n) = acc.scaled(Cyclotomic(make_rational(1, n)));
  }
  return f;
}

BivariateSeries series_log(const BivariateSeries &s) {
  if (!(s[0].terms() == Series(1).terms()))
    throw std::domain_error("series_log: t^0 coefficient must be 1");
  const int t = s.t_order();
  BivariateSeries g(t);
  if (s[0].truncation())
    g.at(0) = Series::zero_to(*s[0].truncation());
  for (int n = 1; n <= t; ++n) {
    Series acc = s[n].scaled(Cyclotomic(n));
    for (int k = 1; k < n; ++k)
      acc -= g[k].scaled(Cyclotomic(k)) * s[n - k];
    g.at(n) = acc.scaled(Cyclotomic(make_rational(1, n)));
  }
  return g;
}

BivariateSeries series_inv(const BivariateSeries &s, std::optional<Fraction> q_order) {
  if (!s[0].valuation())
    throw std::domain_error("series_inv: t^0 coefficient is not invertible");
  const int t = s.t_order();
  BivariateSeries b(t);
  b.at(0) = series_inv(s[0], q_order);
  for (int n = 1; n <= t; ++n) {
    Series acc;
    for (int k = 1; k <= n; ++k)
      acc += s[k] * b[n - k];
    b.at(n) = -(b[0] * acc);
  }
  return b;
}

} // namespace tatek
