#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tatek/cyclotomic.hpp"
#include "tatek/fraction.hpp"

namespace tatek {

/// Truncated Laurent-Puiseux series in q with cyclotomic coefficients.
///
/// Terms are stored sparsely by rational exponent. A series either is exact
/// (a finite sum, no truncation) or carries a truncation order T: every
/// coefficient with exponent <= T is known and stored (when nonzero), nothing
/// above T is. Arithmetic propagates T so that results never claim more
/// precision than their inputs support.
class Series {
public:
  using TermMap = std::map<Fraction, Cyclotomic>;

  Series() = default;
  Series(const Cyclotomic &c);
  Series(long c) : Series(Cyclotomic(c)) {}

  static Series monomial(Fraction exponent, const Cyclotomic &coeff = Cyclotomic(1));
  /// The zero series known up to `order` (i.e. O(q^{>order})).
  static Series zero_to(Fraction order);

  const TermMap &terms() const { return terms_; }
  const std::optional<Fraction> &truncation() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient at `e`; throws std::out_of_range when e exceeds the truncation.
  Cyclotomic coefficient(Fraction e) const;
  /// lcm of the exponent denominators (1 for an empty series).
  std::int64_t denominator() const;
  /// Lowest exponent carrying a nonzero coefficient.
  std::optional<Fraction> valuation() const;

  /// Drops all terms above `order` and lowers the truncation to it if needed.
  Series truncated(Fraction order) const;

  Series operator-() const;
  friend Series operator+(const Series &a, const Series &b);
  friend Series operator-(const Series &a, const Series &b);
  friend Series operator*(const Series &a, const Series &b);
  Series &operator+=(const Series &o) { return *this = *this + o; }
  Series &operator-=(const Series &o) { return *this = *this - o; }
  Series &operator*=(const Series &o) { return *this = *this * o; }

  Series scaled(const Cyclotomic &c) const;
  /// Substitutes q -> q^factor (factor > 0) on exponents and truncation.
  Series scale_exponents(Fraction factor) const;

  friend bool operator==(const Series &a, const Series &b) = default;

  std::string to_string() const;

private:
  void insert_term(Fraction e, const Cyclotomic &c);
  void drop_above_truncation();

  TermMap terms_;
  std::optional<Fraction> trunc_;
};

/// True when both series are known through `order` and agree there.
bool agree_to(const Series &a, const Series &b, Fraction order);

/// Exponential of a series with strictly positive valuation.
Series series_exp(const Series &s, std::optional<Fraction> order = std::nullopt);
/// Logarithm of a series of the form 1 + (positive valuation).
Series series_log(const Series &s, std::optional<Fraction> order = std::nullopt);
/// Laurent inverse of a nonzero series (nonzero leading coefficient).
Series series_inv(const Series &s, std::optional<Fraction> order = std::nullopt);

/// Sends c q^e to c * exp(2 pi i m e / k) * q^{e N / k}; truncation scales by N/k.
Series hecke_substitute(const Series &s, std::int64_t big_n, std::int64_t k, std::int64_t m);

/// Series in a second variable t with Series coefficients, truncated in t.
class BivariateSeries {
public:
  explicit BivariateSeries(int t_order = 0);
  BivariateSeries(std::vector<Series> coeffs, int t_order);

  int t_order() const { return t_order_; }
  const Series &operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  Series &at(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
  const std::vector<Series> &coefficients() const { return coeffs_; }

  friend BivariateSeries operator+(const BivariateSeries &a, const BivariateSeries &b);
  friend BivariateSeries operator-(const BivariateSeries &a, const BivariateSeries &b);
  friend BivariateSeries operator*(const BivariateSeries &a, const BivariateSeries &b);
  BivariateSeries operator-() const;

  /// Truncates every t-coefficient in q.
  BivariateSeries q_truncated(Fraction order) const;

  friend bool operator==(const BivariateSeries &a, const BivariateSeries &b) = default;

  std::string to_string() const;

private:
  std::vector<Series> coeffs_;
  int t_order_;
};

/// t-adic exponential; the t^0 coefficient must be zero.
BivariateSeries series_exp(const BivariateSeries &s);
/// t-adic logarithm; the t^0 coefficient must be exactly 1.
BivariateSeries series_log(const BivariateSeries &s);
/// t-adic inverse; the t^0 coefficient must be an invertible series. `q_order`
/// bounds the inverse of an exact t^0 coefficient.
BivariateSeries series_inv(const BivariateSeries &s, std::optional<Fraction> q_order = std::nullopt);

} // namespace tatek
