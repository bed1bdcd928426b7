#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tatek {

/// Small exact rational used for q-exponents and truncation orders.
///
/// Exponents in this library have tiny numerators and denominators (bounded by
/// group element orders times series lengths), so a pair of 64-bit integers in
/// lowest terms is enough. Comparisons go through 128-bit products.
class Fraction {
public:
  constexpr Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0)
      throw std::domain_error("Fraction: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0)
      --q;
    return q;
  }

  Fraction operator-() const { return Fraction(-num_, den_); }

  friend Fraction operator+(const Fraction &a, const Fraction &b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    return Fraction(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), (a.den_ / g) * b.den_);
  }
  friend Fraction operator-(const Fraction &a, const Fraction &b) { return a + (-b); }
  friend Fraction operator*(const Fraction &a, const Fraction &b) {
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0)
      g1 = 1;
    if (g2 == 0)
      g2 = 1;
    return Fraction((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }
  friend Fraction operator/(const Fraction &a, const Fraction &b) {
    if (b.num_ == 0)
      throw std::domain_error("Fraction: division by zero");
    return a * Fraction(b.den_, b.num_);
  }

  Fraction &operator+=(const Fraction &o) { return *this = *this + o; }
  Fraction &operator-=(const Fraction &o) { return *this = *this - o; }
  Fraction &operator*=(const Fraction &o) { return *this = *this * o; }

  friend bool operator==(const Fraction &a, const Fraction &b) = default;
  friend std::strong_ordering operator<=>(const Fraction &a, const Fraction &b) {
    __int128 l = static_cast<__int128>(a.num_) * b.den_;
    __int128 r = static_cast<__int128>(b.num_) * a.den_;
    if (l < r)
      return std::strong_ordering::less;
    if (l > r)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const {
    if (den_ == 1)
      return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

} // namespace tatek

template <> struct std::hash<tatek::Fraction> {
  std::size_t operator()(const tatek::Fraction &f) const noexcept {
    return std::hash<std::int64_t>{}(f.num()) * 1000003u ^ std::hash<std::int64_t>{}(f.den());
  }
};
