#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tatek/group.hpp"
#include "tatek/series.hpp"

namespace tatek {

/// Class function on commuting pairs of a finite group with series values.
///
/// Values are stored per pair class (see FiniteGroup::pair_classes); the level
/// r records that the [g]-summand lives in powers of q^{1/(r |g|)}.
class DevotoElement {
public:
  explicit DevotoElement(GroupPtr group, int level = 1);

  /// The element with the same value s at every pair.
  static DevotoElement constant(GroupPtr group, const Series &s, int level = 1);
  /// Values f(g, h) sampled on pair class representatives.
  static DevotoElement from_function(GroupPtr group, const std::function<Series(int, int)> &f, int level = 1);

  const GroupPtr &group() const { return group_; }
  int level() const { return level_; }
  const std::vector<Series> &values() const { return values_; }
  const Series &value(std::size_t pair_class) const { return values_.at(pair_class); }
  void set_value(std::size_t pair_class, Series s) { values_.at(pair_class) = std::move(s); }

  /// Value at a commuting pair; throws GroupError when gh != hg.
  const Series &eval(int g, int h) const;

  DevotoElement map_values(const std::function<Series(const Series &)> &f) const;

  friend bool operator==(const DevotoElement &a, const DevotoElement &b);

private:
  GroupPtr group_;
  int level_;
  std::vector<Series> values_;
};

DevotoElement operator+(const DevotoElement &a, const DevotoElement &b);
DevotoElement operator-(const DevotoElement &a, const DevotoElement &b);

/// (res_alpha x)(h1, h2) = x(alpha(h1), alpha(h2)). Throws GroupError when alpha
/// is not a homomorphism into x's group.
DevotoElement restrict_along(const DevotoElement &x, const Homomorphism &alpha);

/// External product over G x H.
DevotoElement external_product(const DevotoElement &x, const DevotoElement &y);
/// Pointwise product over a common group.
DevotoElement internal_product(const DevotoElement &x, const DevotoElement &y);

/// Divides every exponent by k and multiplies the level by k.
DevotoElement rescale(const DevotoElement &x, int k);

/// (1/|G|) sum over all commuting pairs.
Series epsilon(const DevotoElement &x);

/// (1/|C_g|) sum over h in C_g of x(g, h).
Series trivial_part(const DevotoElement &x, int g);

/// Multiplies the coefficient at exponent e by exp(2 pi i e r).
Series rotation_twist(const Series &s, int r);

struct DevotoCheck {
  bool ok = true;
  int g = 0;
  int h = 0;
  Fraction exponent;
};

/// Checks x(g, g h) = rotation_twist(x(g, h), r) on every pair class, comparing
/// coefficients up to the common truncation.
DevotoCheck check_devoto(const DevotoElement &x);

/// True when the series agree on all coefficients both of them know.
bool agree_common(const Series &a, const Series &b);
/// First exponent at which agree_common fails.
std::optional<Fraction> first_difference(const Series &a, const Series &b);

/// Random exact element satisfying the rotation condition, built from
/// eigen-projections of small random integer class functions. Exponents run over
/// [0, max_exponent] in steps of 1/|g| at the [g]-summand.
DevotoElement random_devoto(GroupPtr group, std::mt19937_64 &rng, int max_exponent = 2, int coeff_bound = 2);

} // namespace tatek
