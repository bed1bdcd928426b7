#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tatek {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string &text);
std::string rational_to_string(const Rational &r);
/// num/den in lowest terms.
inline Rational make_rational(long num, long den) {
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

/// Exact element of the cyclotomic field Q(zeta_N).
///
/// Stored in the power basis 1, x, ..., x^{phi(N)-1} of Q[x]/Phi_N(x), with N
/// always the conductor of the value (the smallest order whose field contains
/// it). Together these make the representation unique, so equality is
/// comparison of the stored data. Rationals have order 1.
class Cyclotomic {
public:
  Cyclotomic() : order_(1), coeffs_(1) {}
  Cyclotomic(const Rational &r) : order_(1), coeffs_{r} { coeffs_[0].canonicalize(); }
  Cyclotomic(long r) : order_(1), coeffs_{Rational(r)} {}

  /// zeta_order^exponent, with zeta_N = exp(2 pi i / N).
  static Cyclotomic root_of_unity(std::int64_t order, std::int64_t exponent);
  /// Sum of c * zeta_order^e over the given terms; exponents taken mod order.
  static Cyclotomic from_terms(std::int64_t order,
                               const std::vector<std::pair<std::int64_t, Rational>> &terms);

  int order() const { return order_; }
  /// Power-basis coefficients, length phi(order()).
  const std::vector<Rational> &coefficients() const { return coeffs_; }
  /// Nonzero (exponent, coefficient) pairs of the canonical form.
  std::vector<std::pair<int, Rational>> terms() const;

  bool is_zero() const { return order_ == 1 && coeffs_[0] == 0; }
  bool is_one() const { return order_ == 1 && coeffs_[0] == 1; }
  bool is_rational() const { return order_ == 1; }
  /// Value as a rational; throws std::domain_error if not rational.
  const Rational &rational() const;

  /// Coefficient vector of this value in the power basis of Q(zeta_M).
  /// Requires order() | M.
  std::vector<Rational> embed(int target_order) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b);
  friend Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b);
  friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
  friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b) { return a * b.inverse(); }
  Cyclotomic &operator+=(const Cyclotomic &o) { return *this = *this + o; }
  Cyclotomic &operator-=(const Cyclotomic &o) { return *this = *this - o; }
  Cyclotomic &operator*=(const Cyclotomic &o) { return *this = *this * o; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclotomic inverse() const;
  /// Complex conjugate.
  Cyclotomic conj() const;
  /// Galois automorphism zeta -> zeta^a, for a coprime to the order.
  Cyclotomic galois(std::int64_t a) const;

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

  std::size_t hash() const;
  std::string to_string() const;

private:
  Cyclotomic(int order, std::vector<Rational> coeffs);
  void canonicalize();

  int order_;
  std::vector<Rational> coeffs_;
};

/// Euler totient.
int euler_phi(int n);
/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long> &cyclotomic_polynomial(int n);

} // namespace tatek

template <> struct std::hash<tatek::Cyclotomic> {
  std::size_t operator()(const tatek::Cyclotomic &c) const noexcept { return c.hash(); }
};
