#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tatek/devoto.hpp"
#include "tatek/series.hpp"

namespace tatek {

class InsufficientTruncation : public std::runtime_error {
public:
  InsufficientTruncation(const std::string &what, Fraction required)
      : std::runtime_error(what + " (needs input known through q^" + required.to_string() + ")"), required_(required) {}
  Fraction required() const { return required_; }

private:
  Fraction required_;
};

/// q^-1 + O(1) series with integral exponents.
bool is_mckay_thompson(const Series &f);

/// Integer coefficients of E_4 = 1 + 240 sum sigma_3(n) q^n through q^order.
std::vector<mpz_class> eisenstein_e4(int order);
/// Integer coefficients of prod (1 - q^n)^24 through q^order.
std::vector<mpz_class> eta24(int order);

/// j - 744 through q^order, as E_4^3 / Delta - 744 with the quotient taken by
/// series inversion.
Series jseries(int order);
/// Same quotient by solving Delta * j = E_4^3 triangularly in integers.
Series jseries_triangular(int order);

/// Polynomial in w with rational coefficients, constant term first.
using Polynomial = std::vector<Rational>;
std::string polynomial_to_string(const Polynomial &p);
/// Evaluates p at a series.
Series evaluate(const Polynomial &p, const Series &x);

/// Monic Faber polynomial Phi_n of F: -n [t^n] log(t (F(t) - w)).
/// Throws InsufficientTruncation when F is not known through q^{n-1}.
Polynomial faber(const Series &f, int n);

/// Series whose coefficients are class functions on G, stored as one series
/// per conjugacy class (the series of values at that class).
struct ClassSeries {
  GroupPtr group;
  std::vector<Series> values;
  const Series &at(int h) const;
  friend bool operator==(const ClassSeries &, const ClassSeries &) = default;
};

/// Adams operation: the value at h is replaced by the value at h^a. Scalar
/// series are fixed.
ClassSeries adams(const ClassSeries &x, int a);
Series adams(const Series &x, int a);

struct ReplicabilityEntry {
  int n;
  bool pass;
  std::optional<Fraction> witness; // first differing exponent
  std::string lhs_coeff, rhs_coeff;
};
struct ReplicabilityReport {
  bool pass = true;
  std::vector<ReplicabilityEntry> entries;
};

/// Required input truncation for replicability_check(F, n_max, order).
Fraction replicability_requirement(int n_max, int order);
/// Phi_n(F) against n T_n(F) through q^order for n <= n_max.
ReplicabilityReport replicability_check(const Series &f, int n_max, int order);

using CoeffMap = std::map<long, long>;

/// prod_{i >= 0, j >= 1} (1 - q^i t^j)^{-c(ij)} through t^{t_order}, q^{q_order}.
BivariateSeries borcherds_product(const CoeffMap &c, int t_order, int q_order);

/// exp(sum_m T_m(sum_i c(i) q^i) t^m) through t^{t_order}, q^{q_order}.
BivariateSeries dmvv_exp_side(const CoeffMap &c, int t_order, int q_order);

struct BivariateReport {
  bool pass = true;
  int t_degree = 0;                // witness t-degree
  std::optional<Fraction> q_exponent; // witness q-exponent
  std::string detail;
};

BivariateReport compare_bivariate(const BivariateSeries &a, const BivariateSeries &b, int t_order, Fraction q_order);

BivariateReport dmvv_check(const CoeffMap &c, int t_order, int q_order);

/// With F = j - 744: t F(t) - t F(q) against Lambda^str_{-t}(F(q)) through
/// t^{order+1} and q^{order}, i.e. F(t) - F(q) = t^-1 Lambda_{-t}(F(q)) through
/// t^{order} and q^{order}.
BivariateReport denominator_check(int order);
BivariateReport denominator_check(int t_order, int q_order);

} // namespace tatek
