#include "tatek/devoto.hpp"

#include <numeric>
#include <stdexcept>

namespace tatek {

DevotoElement::DevotoElement(GroupPtr group, int level) : group_(std::move(group)), level_(level) {
  if (!group_)
    throw std::invalid_argument("DevotoElement: null group");
  if (level_ < 1)
    throw std::invalid_argument("DevotoElement: level must be positive");
  values_.resize(group_->pair_classes().classes.size());
}

DevotoElement DevotoElement::constant(GroupPtr group, const Series &s, int level) {
  DevotoElement x(std::move(group), level);
  for (auto &v : x.values_)
    v = s;
  return x;
}

DevotoElement DevotoElement::from_function(GroupPtr group, const std::function<Series(int, int)> &f, int level) {
  DevotoElement x(std::move(group), level);
  const auto &pcs = x.group_->pair_classes().classes;
  for (std::size_t i = 0; i < pcs.size(); ++i)
    x.values_[i] = f(pcs[i].g, pcs[i].h);
  return x;
}

const Series &DevotoElement::eval(int g, int h) const {
  return values_[static_cast<std::size_t>(group_->pair_class_of(g, h))];
}

DevotoElement DevotoElement::map_values(const std::function<Series(const Series &)> &f) const {
  DevotoElement x = *this;
  for (auto &v : x.values_)
    v = f(v);
  return x;
}

bool operator==(const DevotoElement &a, const DevotoElement &b) {
  return same_group(a.group_, b.group_) && a.level_ == b.level_ && a.values_ == b.values_;
}

namespace {

void require_same_group(const DevotoElement &a, const DevotoElement &b, const char *what) {
  if (!same_group(a.group(), b.group()))
    throw GroupError(std::string(what) + ": elements live over different groups");
}

} // namespace

DevotoElement operator+(const DevotoElement &a, const DevotoElement &b) {
  require_same_group(a, b, "sum");
  DevotoElement r(a.group(), std::lcm(a.level(), b.level()));
  for (std::size_t i = 0; i < a.values().size(); ++i)
    r.set_value(i, a.value(i) + b.value(i));
  return r;
}

DevotoElement operator-(const DevotoElement &a, const DevotoElement &b) {
  return a + b.map_values([](const Series &s) { return -s; });
}

DevotoElement restrict_along(const DevotoElement &x, const Homomorphism &alpha) {
  if (!same_group(alpha.target, x.group()))
    throw GroupError("restrict_along: homomorphism target is not the element's group");
  if (!alpha.is_homomorphism())
    throw GroupError("restrict_along: map is not a homomorphism");
  return DevotoElement::from_function(
      alpha.source, [&](int g, int h) { return x.eval(alpha(g), alpha(h)); }, x.level());
}

DevotoElement external_product(const DevotoElement &x, const DevotoElement &y) {
  auto grp = FiniteGroup::product(x.group(), y.group());
  return DevotoElement::from_function(
      grp,
      [&](int g, int h) {
        auto [g1, g2] = grp->product_split(g);
        auto [h1, h2] = grp->product_split(h);
        return x.eval(g1, h1) * y.eval(g2, h2);
      },
      std::lcm(x.level(), y.level()));
}

DevotoElement internal_product(const DevotoElement &x, const DevotoElement &y) {
  require_same_group(x, y, "internal_product");
  DevotoElement r(x.group(), std::lcm(x.level(), y.level()));
  for (std::size_t i = 0; i < x.values().size(); ++i)
    r.set_value(i, x.value(i) * y.value(i));
  return r;
}

DevotoElement rescale(const DevotoElement &x, int k) {
  if (k < 1)
    throw std::invalid_argument("rescale: k must be positive");
  DevotoElement r(x.group(), x.level() * k);
  for (std::size_t i = 0; i < x.values().size(); ++i)
    r.set_value(i, x.value(i).scale_exponents(Fraction(1, k)));
  return r;
}

Series epsilon(const DevotoElement &x) {
  const auto &pcs = x.group()->pair_classes().classes;
  Series total;
  for (std::size_t i = 0; i < pcs.size(); ++i)
    total += x.value(i).scaled(Cyclotomic(make_rational(1, pcs[i].centralizer_order)));
  return total;
}

Series trivial_part(const DevotoElement &x, int g) {
  const auto &grp = *x.group();
  const int cls = grp.conjugacy().class_of.at(static_cast<std::size_t>(g));
  const auto csize = static_cast<long>(grp.conjugacy().centralizers[static_cast<std::size_t>(cls)].size());
  const auto &pcs = grp.pair_classes().classes;
  Series total;
  for (std::size_t i = 0; i < pcs.size(); ++i)
    if (pcs[i].cls == cls)
      total += x.value(i).scaled(Cyclotomic(make_rational(pcs[i].orbit_size, csize)));
  return total;
}

Series rotation_twist(const Series &s, int r) {
  Series out = s.truncation() ? Series::zero_to(*s.truncation()) : Series();
  for (const auto &[e, c] : s.terms()) {
    const Fraction er = e * Fraction(r);
    out += Series::monomial(e, c * Cyclotomic::root_of_unity(er.den(), er.num()));
  }
  return out;
}

std::optional<Fraction> first_difference(const Series &a, const Series &b) {
  std::optional<Fraction> common;
  if (a.truncation() && b.truncation())
    common = std::min(*a.truncation(), *b.truncation());
  else if (a.truncation())
    common = a.truncation();
  else if (b.truncation())
    common = b.truncation();
  Series d = a - b;
  for (const auto &[e, c] : d.terms())
    if (!common || e <= *common)
      return e;
  return std::nullopt;
}

bool agree_common(const Series &a, const Series &b) { return !first_difference(a, b).has_value(); }

DevotoCheck check_devoto(const DevotoElement &x) {
  const auto &grp = *x.group();
  const auto &pcs = grp.pair_classes().classes;
  for (std::size_t i = 0; i < pcs.size(); ++i) {
    const int g = pcs[i].g;
    const int h = pcs[i].h;
    const Series &rotated = x.eval(g, grp.mul(g, h));
    if (auto e = first_difference(rotated, rotation_twist(x.value(i), x.level())))
      return {false, g, h, *e};
  }
  return {};
}

DevotoElement random_devoto(GroupPtr group, std::mt19937_64 &rng, int max_exponent, int coeff_bound) {
  const auto &grp = *group;
  const auto &cd = grp.conjugacy();
  const auto &pcs = grp.pair_classes().classes;
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  DevotoElement x(group);
  for (std::size_t cls = 0; cls < cd.reps.size(); ++cls) {
    const int g = cd.reps[cls];
    const int l = grp.order(g);
    std::vector<int> mine;
    for (std::size_t i = 0; i < pcs.size(); ++i)
      if (pcs[i].cls == static_cast<int>(cls))
        mine.push_back(static_cast<int>(i));
    for (int step = 0; step <= max_exponent * l; ++step) {
      const Fraction e(step, l);
      const int j = step % l;
      std::vector<int> f(pcs.size(), 0);
      for (int pc : mine)
        f[static_cast<std::size_t>(pc)] = coeff(rng);
      for (int pc : mine) {
        const int h = pcs[static_cast<std::size_t>(pc)].h;
        std::vector<std::pair<std::int64_t, Rational>> terms;
        for (int s = 0; s < l; ++s) {
          const int v = f[static_cast<std::size_t>(grp.pair_class_of(g, grp.mul(grp.pow(g, s), h)))];
          if (v != 0)
            terms.emplace_back(-static_cast<std::int64_t>(j) * s, make_rational(v, l));
        }
        const Cyclotomic c = Cyclotomic::from_terms(l, terms);
        Series v = x.value(static_cast<std::size_t>(pc)) + Series::monomial(e, c);
        x.set_value(static_cast<std::size_t>(pc), std::move(v));
      }
    }
  }
  return x;
}

} // namespace tatek
