#include "tatek/characters.hpp"

#include <numeric>
#include <stdexcept>

namespace tatek {

RepCharacter::RepCharacter(GroupPtr group, std::vector<Cyclotomic> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_)
    throw std::invalid_argument("RepCharacter: null group");
  if (values_.size() != group_->conjugacy().reps.size())
    throw std::invalid_argument("RepCharacter: need one value per conjugacy class");
}

RepCharacter RepCharacter::from_function(GroupPtr group, const std::function<Cyclotomic(int)> &f) {
  std::vector<Cyclotomic> v;
  for (int rep : group->conjugacy().reps)
    v.push_back(f(rep));
  return RepCharacter(std::move(group), std::move(v));
}

RepCharacter RepCharacter::trivial(GroupPtr group, long dim) {
  return from_function(std::move(group), [dim](int) { return Cyclotomic(dim); });
}

RepCharacter RepCharacter::regular(GroupPtr group) {
  const long n = static_cast<long>(group->size());
  return from_function(std::move(group), [n](int g) { return Cyclotomic(g == FiniteGroup::identity() ? n : 0L); });
}

const Cyclotomic &RepCharacter::operator()(int element) const {
  return values_[static_cast<std::size_t>(group_->conjugacy().class_of.at(static_cast<std::size_t>(element)))];
}

RepCharacter RepCharacter::conj() const {
  std::vector<Cyclotomic> v;
  for (const auto &c : values_)
    v.push_back(c.conj());
  return RepCharacter(group_, std::move(v));
}

RepCharacter operator+(const RepCharacter &a, const RepCharacter &b) {
  if (!same_group(a.group_, b.group_))
    throw GroupError("character sum over different groups");
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < a.values_.size(); ++i)
    v.push_back(a.values_[i] + b.values_[i]);
  return RepCharacter(a.group_, std::move(v));
}

bool operator==(const RepCharacter &a, const RepCharacter &b) {
  return same_group(a.group_, b.group_) && a.values_ == b.values_;
}

namespace {

// (1/l) sum_s f(g^s h) zeta_l^{-js}
Cyclotomic projection(const std::function<Cyclotomic(int)> &f, const FiniteGroup &grp, int g, int l, int j, int h) {
  Cyclotomic acc;
  int gs = grp.identity();
  for (int s = 0; s < l; ++s) {
    acc += f(grp.mul(gs, h)) * Cyclotomic::root_of_unity(l, -static_cast<std::int64_t>(j) * s);
    gs = grp.mul(gs, g);
  }
  return acc * Cyclotomic(make_rational(1, l));
}

long as_count(const Cyclotomic &c, const char *what) {
  if (!c.is_rational() || c.rational().get_den() != 1 || c.rational() < 0)
    throw std::domain_error(std::string(what) + ": multiplicity " + c.to_string() +
                            " is not a nonnegative integer (character not genuine)");
  return c.rational().get_num().get_si();
}

} // namespace

bool RepCharacter::looks_genuine() const {
  const auto &grp = *group_;
  for (int g : grp.conjugacy().reps) {
    if (!((*this)(grp.inv(g)) == (*this)(g).conj()))
      return false;
    try {
      for (int j = 0; j < grp.order(g); ++j)
        eigen_multiplicity(*this, g, j);
    } catch (const std::domain_error &) {
      return false;
    }
  }
  return true;
}

long eigen_multiplicity(const RepCharacter &chi, int g, int j) {
  const auto &grp = *chi.group();
  const int l = grp.order(g);
  if (j < 0 || j >= l)
    throw std::invalid_argument("eigen_multiplicity: need 0 <= j < |g|");
  auto f = [&](int e) { return chi(e); };
  return as_count(projection(f, grp, g, l, j, grp.identity()), "eigen_multiplicity");
}

Rational age(const RepCharacter &chi, int g) {
  const int l = chi.group()->order(g);
  Rational total = 0;
  for (int j = 1; j < l; ++j)
    total += make_rational(j, l) * eigen_multiplicity(chi, g, j);
  total.canonicalize();
  return total;
}

Rational age_real(const RepCharacter &chi, int g) {
  Rational r = 2 * age(chi, g);
  r.canonicalize();
  return r;
}

std::vector<Cyclotomic> power_sum_exp(const std::vector<Cyclotomic> &p, int order) {
  std::vector<Cyclotomic> e(static_cast<std::size_t>(order + 1));
  e[0] = Cyclotomic(1);
  for (int n = 1; n <= order; ++n) {
    Cyclotomic acc;
    for (int m = 1; m <= n && static_cast<std::size_t>(m) < p.size(); ++m)
      acc += p[static_cast<std::size_t>(m)] * e[static_cast<std::size_t>(n - m)];
    e[static_cast<std::size_t>(n)] = acc * Cyclotomic(make_rational(1, n));
  }
  return e;
}

std::vector<Cyclotomic> lambda_sym_char(const RepCharacter &chi, int h, PowerKind kind, int t_order) {
  const auto &grp = *chi.group();
  std::vector<Cyclotomic> p(static_cast<std::size_t>(t_order + 1));
  for (int m = 1; m <= t_order; ++m) {
    Cyclotomic v = chi(grp.pow(h, m));
    p[static_cast<std::size_t>(m)] = (kind == PowerKind::Lambda && m % 2 == 0) ? -v : v;
  }
  return power_sum_exp(p, t_order);
}

RepCharacter wreath_sum_character(const RepCharacter &chi, const GroupPtr &wreath_group) {
  if (wreath_group->kind() != FiniteGroup::Kind::Wreath || !wreath_group->base()->equals(*chi.group()))
    throw GroupError("wreath_sum_character: target must be a wreath product over the character's group");
  return RepCharacter::from_function(wreath_group, [&](int w) {
    const auto base = wreath_group->wreath_base(w);
    const Perm perm = wreath_group->wreath_perm(w);
    Cyclotomic acc;
    for (std::size_t i = 0; i < perm.size(); ++i)
      if (perm[i] == static_cast<int>(i))
        acc += chi(base[i]);
    return acc;
  });
}

RepCharacter wreath_sum_character(const RepCharacter &chi, int n, std::size_t cap) {
  return wreath_sum_character(chi, FiniteGroup::wreath(chi.group(), n, cap));
}

EigenCycleReport eigen_cycle_check(const RepCharacter &chi, const std::vector<int> &gb, const Perm &sigma,
                                   int zeta_order, int zeta_exponent) {
  const auto &grp = *chi.group();
  if (zeta_order < 1)
    throw std::invalid_argument("eigen_cycle_check: root order must be positive");
  const int o = wreath_element_order(grp, gb, sigma);
  // zeta^x = 1 iff zeta_order | zeta_exponent * x.
  auto power_is_one = [&](std::int64_t x) { return (static_cast<std::int64_t>(zeta_exponent) * x) % zeta_order == 0; };

  EigenCycleReport rep{0, 0};
  if (power_is_one(o)) {
    // zeta = zeta_o^j
    const std::int64_t j = static_cast<std::int64_t>(zeta_exponent) * o / zeta_order;
    Cyclotomic acc;
    std::vector<int> base = gb;
    Perm perm = sigma;
    std::vector<int> cur(gb.size(), grp.identity());
    Perm cur_perm(sigma.size());
    std::iota(cur_perm.begin(), cur_perm.end(), 0);
    for (int s = 0; s < o; ++s) {
      Cyclotomic v;
      for (std::size_t i = 0; i < cur_perm.size(); ++i)
        if (cur_perm[i] == static_cast<int>(i))
          v += chi(cur[i]);
      acc += v * Cyclotomic::root_of_unity(o, -j * s);
      // cur := (gb, sigma) * cur
      const Perm sinv = inverse(perm);
      std::vector<int> next(cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i)
        next[i] = grp.mul(base[i], cur[static_cast<std::size_t>(sinv[i])]);
      cur = std::move(next);
      cur_perm = compose(perm, cur_perm);
    }
    rep.direct = as_count(acc * Cyclotomic(make_rational(1, o)), "eigen_cycle_check");
  }

  std::vector<char> seen(sigma.size(), 0);
  for (std::size_t p = 0; p < sigma.size(); ++p) {
    if (seen[p])
      continue;
    int k = 0;
    for (std::size_t q = p; !seen[q]; q = static_cast<std::size_t>(sigma[q])) {
      seen[q] = 1;
      ++k;
    }
    WreathToken t{inverse(sigma)[p], grp.identity()};
    for (int s = 0; s < k; ++s)
      t = wreath_act(grp, gb, sigma, t);
    const int lc = grp.order(t.value);
    // zeta^k as an lc-th root of unity, if it is one.
    if ((static_cast<std::int64_t>(zeta_exponent) * k * lc) % zeta_order == 0) {
      const std::int64_t jj = (static_cast<std::int64_t>(zeta_exponent) * k * lc / zeta_order) % lc;
      rep.via_cycles += eigen_multiplicity(chi, t.value, static_cast<int>((jj + lc) % lc));
    }
  }
  return rep;
}

DevotoElement euler_str(const RepCharacter &chi, Fraction order) {
  if (!chi.looks_genuine())
    throw std::domain_error("euler_str: character is not genuine");
  const auto grp_ptr = chi.group();
  const auto &grp = *grp_ptr;
  const RepCharacter complexified = chi + chi.conj();
  auto chi_f = [&](int e) { return chi(e); };
  auto cplx_f = [&](int e) { return complexified(e); };

  // Lambda_{-x}(W)(h) = exp(-sum_m chi_W(h^m) x^m / m), degree dim W.
  auto lambda_minus = [&](const std::function<Cyclotomic(int)> &w_char, long dim, int h) {
    std::vector<Cyclotomic> p(static_cast<std::size_t>(dim + 1));
    for (long m = 1; m <= dim; ++m)
      p[static_cast<std::size_t>(m)] = -w_char(grp.pow(h, m));
    return power_sum_exp(p, static_cast<int>(dim));
  };

  return DevotoElement::from_function(grp_ptr, [&](int g, int h) {
    const int l = grp.order(g);
    auto fixed = [&](int e) { return projection(chi_f, grp, g, l, 0, e).conj(); };
    const long d0 = as_count(fixed(grp.identity()), "euler_str");
    Cyclotomic lead;
    for (const auto &c : lambda_minus(fixed, d0, h))
      lead += c;
    Series value(lead);
    for (int j = 1; Fraction(j, l) <= order; ++j) {
      auto eig = [&](int e) { return projection(cplx_f, grp, g, l, j % l, e); };
      const long d = as_count(eig(grp.identity()), "euler_str");
      const auto coeffs = lambda_minus(eig, d, h);
      Series factor;
      for (long r = 0; r <= d; ++r)
        factor += Series::monomial(Fraction(r * j, l), coeffs[static_cast<std::size_t>(r)]);
      value = (value * factor).truncated(order);
    }
    return value.truncated(order);
  });
}

IdentityReport verify_hinfty(const RepCharacter &chi, int n, Fraction order) {
  auto w = FiniteGroup::wreath(chi.group(), n);
  DevotoElement lhs = euler_str(wreath_sum_character(chi, w), order);
  DevotoElement rhs = p_str(euler_str(chi, order * Fraction(n)), w);
  for (const auto &v : rhs.values())
    if (v.truncation() && *v.truncation() < order)
      return {false, "right side known only through q^" + v.truncation()->to_string()};
  return compare_elements(lhs, rhs);
}

} // namespace tatek
