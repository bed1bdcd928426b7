#pragma once

#include <functional>
#include <vector>

#include "tatek/devoto.hpp"
#include "tatek/powerops.hpp"

namespace tatek {

/// Class function with cyclotomic values, one per conjugacy class.
class RepCharacter {
public:
  RepCharacter(GroupPtr group, std::vector<Cyclotomic> values);
  static RepCharacter from_function(GroupPtr group, const std::function<Cyclotomic(int)> &f);
  static RepCharacter trivial(GroupPtr group, long dim = 1);
  /// Character of the regular representation.
  static RepCharacter regular(GroupPtr group);

  const GroupPtr &group() const { return group_; }
  const std::vector<Cyclotomic> &values() const { return values_; }
  const Cyclotomic &operator()(int element) const;
  RepCharacter conj() const;

  friend RepCharacter operator+(const RepCharacter &a, const RepCharacter &b);
  friend bool operator==(const RepCharacter &a, const RepCharacter &b);

  /// chi(g^-1) = conj(chi(g)) everywhere and every eigen-multiplicity is a
  /// nonnegative integer.
  bool looks_genuine() const;

private:
  GroupPtr group_;
  std::vector<Cyclotomic> values_;
};

/// Multiplicity of zeta_l^j as an eigenvalue of g, l = |g|. Throws
/// std::domain_error when the projection is not a nonnegative integer.
long eigen_multiplicity(const RepCharacter &chi, int g, int j);

/// sum_j (j/l) d_j over the eigenvalues zeta_l^j of g.
Rational age(const RepCharacter &chi, int g);
/// Twice the above, the real-dimension convention.
Rational age_real(const RepCharacter &chi, int g);

enum class PowerKind { Lambda, Sym };

/// Coefficients of Lambda_t (or Sym_t) of chi at h, through t^{t_order}.
std::vector<Cyclotomic> lambda_sym_char(const RepCharacter &chi, int h, PowerKind kind, int t_order);

/// Coefficients of exp(sum_m p_m x^m / m) through x^order, p indexed from 1.
std::vector<Cyclotomic> power_sum_exp(const std::vector<Cyclotomic> &p, int order);

/// Character of V^n on G wr S_n: sum of chi(g_i) over fixed indices.
RepCharacter wreath_sum_character(const RepCharacter &chi, const GroupPtr &wreath_group);
RepCharacter wreath_sum_character(const RepCharacter &chi, int n, std::size_t cap = kDefaultSizeCap);

/// Multiplicity of zeta_order^exponent as an eigenvalue of (gb, sigma) on V^n,
/// computed directly, against the sum over k-cycles c of the multiplicity of
/// its k-th power for g_c on V.
struct EigenCycleReport {
  long direct;
  long via_cycles;
  bool ok() const { return direct == via_cycles; }
};
EigenCycleReport eigen_cycle_check(const RepCharacter &chi, const std::vector<int> &gb, const Perm &sigma,
                                   int zeta_order, int zeta_exponent);

/// Stringy Euler class, known through q^order.
DevotoElement euler_str(const RepCharacter &chi, Fraction order);

/// euler_str of V^n against p_str of euler_str of V, through q^order.
IdentityReport verify_hinfty(const RepCharacter &chi, int n, Fraction order);

} // namespace tatek
