#include "tatek/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "tatek/characters.hpp"
#include "tatek/moonshine.hpp"
#include "tatek/powerops.hpp"
#include "tatek/wreath.hpp"

namespace tatek {

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.pass; });
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{"arith", "wreath", "devoto", "powerops", "hinfty", "moonshine"};
  return names;
}

namespace {

using Rng = std::mt19937_64;

long uniform(Rng &rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

Cyclotomic random_cyclotomic(Rng &rng) {
  static const int orders[] = {1, 2, 3, 4, 5, 6, 8, 12};
  const int order = orders[uniform(rng, 0, 7)];
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (int e = 0; e < order; ++e)
    if (uniform(rng, 0, 2) != 0)
      terms.emplace_back(e, make_rational(uniform(rng, -4, 4), uniform(rng, 1, 3)));
  return Cyclotomic::from_terms(order, terms);
}

// Exponents in [lo, hi] with denominators 1, 2 or 3; truncated at hi when `cut`.
Series random_series(Rng &rng, long lo, long hi, bool cut) {
  Series s;
  for (long d : {1L, 2L, 3L})
    for (long n = lo * d; n <= hi * d; ++n)
      if (uniform(rng, 0, 3) == 0)
        s += Series::monomial(Fraction(n, d), random_cyclotomic(rng));
  return cut ? s.truncated(Fraction(hi)) : s;
}

class Collector {
public:
  explicit Collector(std::string suite) { result_.name = std::move(suite); }

  // Runs `body`; an escaping exception counts as a failure with its message.
  void check(const std::string &name, const std::function<std::string()> &body) {
    CheckResult c{name, true, ""};
    try {
      c.detail = body();
      c.pass = c.detail.empty();
    } catch (const std::exception &e) {
      c.pass = false;
      c.detail = std::string("exception: ") + e.what();
    }
    result_.checks.push_back(std::move(c));
  }

  SuiteResult take() { return std::move(result_); }

private:
  SuiteResult result_;
};

std::string report(const IdentityReport &r) { return r.ok ? "" : r.detail; }

std::string devoto_failure(const DevotoElement &x) {
  const DevotoCheck c = check_devoto(x);
  if (c.ok)
    return "";
  return "rotation condition fails at (" + std::to_string(c.g) + ", " + std::to_string(c.h) + ") exponent " +
         c.exponent.to_string();
}

std::string integral_exponents(const Series &s) {
  for (const auto &[e, c] : s.terms())
    if (!e.is_integer())
      return "fractional exponent " + e.to_string();
  return "";
}

// ---------------------------------------------------------------- arith

SuiteResult arith_suite(std::uint64_t seed) {
  Collector out("arith");
  Rng rng(seed);

  out.check("cyclotomic field axioms", [&]() -> std::string {
    for (int i = 0; i < 150; ++i) {
      const Cyclotomic a = random_cyclotomic(rng), b = random_cyclotomic(rng), c = random_cyclotomic(rng);
      if (!(a + b == b + a) || !(a * b == b * a))
        return "commutativity fails for " + a.to_string() + ", " + b.to_string();
      if (!((a + b) + c == a + (b + c)) || !((a * b) * c == a * (b * c)))
        return "associativity fails";
      if (!(a * (b + c) == a * b + a * c))
        return "distributivity fails";
      if (!a.is_zero() && !(a * a.inverse() == Cyclotomic(1)))
        return "inverse fails for " + a.to_string();
    }
    if (!(Cyclotomic::root_of_unity(6, 1) == -Cyclotomic::root_of_unity(3, 2)))
      return "E(6) is not -E(3)^2";
    return "";
  });

  out.check("series ring axioms", [&]() -> std::string {
    for (int i = 0; i < 40; ++i) {
      const Series a = random_series(rng, -1, 3, true), b = random_series(rng, 0, 3, i % 2 == 0),
                   c = random_series(rng, 0, 2, false);
      if (!(a * b == b * a) || !(a + b == b + a))
        return "commutativity fails";
      if (!((a * b) * c == a * (b * c)))
        return "associativity fails";
      if (!(a * (b + c) == a * b + a * c))
        return "distributivity fails";
    }
    return "";
  });

  out.check("hecke_substitute is a ring homomorphism", [&]() -> std::string {
    for (int i = 0; i < 30; ++i) {
      const Series a = random_series(rng, -1, 3, true), b = random_series(rng, 0, 3, false);
      const long k = uniform(rng, 1, 3), big_n = uniform(rng, 1, 3), m = uniform(rng, 0, k - 1);
      auto h = [&](const Series &s) { return hecke_substitute(s, big_n, k, m); };
      if (!(h(a + b) == h(a) + h(b)) || !(h(a * b) == h(a) * h(b)))
        return "fails at (N, k, m) = (" + std::to_string(big_n) + ", " + std::to_string(k) + ", " +
               std::to_string(m) + ")";
    }
    return "";
  });

  out.check("hecke_substitute composes", [&]() -> std::string {
    for (int i = 0; i < 30; ++i) {
      const Series a = random_series(rng, -1, 3, i % 2 == 0);
      const long n1 = uniform(rng, 1, 3), k1 = uniform(rng, 1, 3), n2 = uniform(rng, 1, 3), k2 = uniform(rng, 1, 3);
      if (!(hecke_substitute(hecke_substitute(a, n1, k1, 0), n2, k2, 0) == hecke_substitute(a, n1 * n2, k1 * k2, 0)))
        return "composition fails";
    }
    return "";
  });

  out.check("exp is additive, log inverts exp", [&]() -> std::string {
    for (int i = 0; i < 15; ++i) {
      const Series a = random_series(rng, 1, 4, true), b = random_series(rng, 1, 4, true);
      const Series a2 = a.truncated(Fraction(4)), b2 = b.truncated(Fraction(4));
      if (!agree_to(series_exp(a2 + b2), series_exp(a2) * series_exp(b2), Fraction(4)))
        return "exp(a + b) != exp(a) exp(b)";
      if (!agree_to(series_log(series_exp(a2)), a2, Fraction(4)))
        return "log(exp(a)) != a";
    }
    return "";
  });

  return out.take();
}

// ---------------------------------------------------------------- wreath

SuiteResult wreath_suite(std::uint64_t seed) {
  Collector out("wreath");
  Rng rng(seed);

  out.check("centralizer condition matches commutation on Z/2 wr S3", [&]() -> std::string {
    const auto w = FiniteGroup::wreath(FiniteGroup::cyclic(2), 3);
    const auto &z2 = *w->base();
    for (int a = 0; a < static_cast<int>(w->size()); ++a)
      for (int b = 0; b < static_cast<int>(w->size()); ++b)
        if (wreath_centralizes(z2, w->wreath_base(a), w->wreath_perm(a), w->wreath_base(b), w->wreath_perm(b)) !=
            w->commute(a, b))
          return "mismatch at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
    return "";
  });

  out.check("token action is a group action", [&]() -> std::string {
    const auto w = FiniteGroup::wreath(FiniteGroup::cyclic(3), 3);
    const auto &z3 = *w->base();
    for (int a = 0; a < static_cast<int>(w->size()); ++a)
      for (int b : w->generators())
        for (int p = 0; p < 3; ++p)
          for (int x = 0; x < 3; ++x) {
            const WreathToken t{p, x};
            const auto ab = w->mul(a, b);
            const WreathToken lhs = wreath_act(z3, w->wreath_base(ab), w->wreath_perm(ab), t);
            const WreathToken rhs = wreath_act(z3, w->wreath_base(a), w->wreath_perm(a),
                                               wreath_act(z3, w->wreath_base(b), w->wreath_perm(b), t));
            if (!(lhs == rhs))
              return "acting by a product differs from acting twice";
          }
    return "";
  });

  out.check("iota is an injective homomorphism with the cycle correspondence", [&]() -> std::string {
    for (auto [m, n] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
      const auto inner = FiniteGroup::wreath(FiniteGroup::trivial(), m);
      const auto outer = FiniteGroup::wreath(inner, n);
      std::set<Perm> images;
      for (int a = 0; a < static_cast<int>(outer->size()); ++a) {
        const Perm pa = iota_permutation(*outer, a);
        images.insert(pa);
        for (int b : outer->generators())
          if (iota_permutation(*outer, outer->mul(a, b)) != compose(pa, iota_permutation(*outer, b)))
            return "not multiplicative for m = " + std::to_string(m) + ", n = " + std::to_string(n);
        // For an n-cycle sigma, each k-cycle of the cycle product gives an nk-cycle.
        const Perm sigma = outer->wreath_perm(a);
        std::multiset<int> sigma_cycle{};
        int len = 1;
        for (int p = sigma[0]; p != 0; p = sigma[static_cast<std::size_t>(p)])
          ++len;
        if (len != n)
          continue;
        WreathToken t{0, inner->identity()};
        for (int s = 0; s < n; ++s)
          t = wreath_act(*inner, outer->wreath_base(a), sigma, t);
        const Perm prod = inner->wreath_perm(t.value);
        auto cycle_type = [](const Perm &p, int scale) {
          std::multiset<int> lens;
          std::vector<char> seen(p.size(), 0);
          for (std::size_t i = 0; i < p.size(); ++i) {
            if (seen[i])
              continue;
            int l = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
              seen[j] = 1;
              ++l;
            }
            lens.insert(l * scale);
          }
          return lens;
        };
        if (cycle_type(pa, 1) != cycle_type(prod, n))
          return "cycle correspondence fails for m = " + std::to_string(m) + ", n = " + std::to_string(n);
      }
      if (images.size() != outer->size())
        return "not injective for m = " + std::to_string(m) + ", n = " + std::to_string(n);
    }
    return "";
  });

  out.check("orbit data on diagonal inputs", [&]() -> std::string {
    for (const auto &grp : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
      const int sz = static_cast<int>(grp->size());
      for (int g = 0; g < sz; ++g)
        for (int h = 0; h < sz; ++h) {
          if (!grp->commute(g, h))
            continue;
          for (int big_n = 1; big_n <= 6; ++big_n)
            for (int k = 1; big_n * k <= 6; ++k)
              for (int m = 0; m < k; ++m) {
                auto [sigma, tau] = standard_transitive_pair(big_n, k, m);
                const std::vector<int> gb(sigma.size(), g), hb(sigma.size(), h);
                const auto data = orbit_data(*grp, gb, sigma, hb, tau);
                const OrbitDatum want{k, big_n, m, grp->pow(g, k), grp->mul(grp->pow(g, -m), grp->pow(h, big_n))};
                if (data.size() != 1 || !(data[0] == want))
                  return grp->describe() + ": wrong datum at N = " + std::to_string(big_n) +
                         ", k = " + std::to_string(k) + ", m = " + std::to_string(m);
              }
        }
    }
    return "";
  });

  out.check("orbit data is choice independent up to simultaneous conjugacy", [&]() -> std::string {
    const auto w = FiniteGroup::wreath(FiniteGroup::symmetric(3), 2);
    const auto &base = *w->base();
    const auto &pcs = w->pair_classes().classes;
    for (const auto &pc : pcs) {
      auto canon = [&](std::vector<OrbitDatum> d) {
        std::vector<std::tuple<int, int, int, int>> keys;
        for (const auto &o : d)
          keys.emplace_back(o.k, o.big_n, o.m, base.pair_class_of(o.g_c, o.u));
        std::sort(keys.begin(), keys.end());
        return keys;
      };
      const auto ref = canon(orbit_data(*w, pc.g, pc.h));
      for (int s = 0; s < 3; ++s)
        if (canon(orbit_data(*w, pc.g, pc.h, OrbitConvention{rng()})) != ref)
          return "orbit data differ under a reseeded convention";
    }
    return "";
  });

  out.check("element order of ((s, 1), (12)) is 4", [&]() -> std::string {
    const auto z2 = FiniteGroup::cyclic(2);
    return wreath_element_order(*z2, {1, 0}, {1, 0}) == 4 ? "" : "wrong order";
  });

  return out.take();
}

// ---------------------------------------------------------------- devoto

SuiteResult devoto_suite(std::uint64_t seed) {
  Collector out("devoto");
  Rng rng(seed);
  const std::vector<GroupPtr> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)};

  out.check("random elements satisfy the rotation condition", [&]() -> std::string {
    for (const auto &g : groups)
      for (int i = 0; i < 10; ++i)
        if (auto f = devoto_failure(random_devoto(g, rng)); !f.empty())
          return g->describe() + ": " + f;
    return "";
  });

  out.check("a wrongly twisted element is rejected", [&]() -> std::string {
    const auto z2 = FiniteGroup::cyclic(2);
    const auto x = DevotoElement::from_function(
        z2, [](int g, int) { return g == 0 ? Series(1) : Series::monomial(Fraction(1, 2)); });
    const auto c = check_devoto(x);
    if (c.ok || c.g != 1 || !(c.exponent == Fraction(1, 2)))
      return "expected failure at [s], exponent 1/2";
    return "";
  });

  out.check("products preserve the rotation condition", [&]() -> std::string {
    for (const auto &g : {groups[0], groups[1]})
      for (int i = 0; i < 5; ++i) {
        const auto x = random_devoto(g, rng), y = random_devoto(g, rng);
        if (auto f = devoto_failure(internal_product(x, y)); !f.empty())
          return "internal product: " + f;
        if (auto f = devoto_failure(external_product(x, y)); !f.empty())
          return "external product: " + f;
      }
    return "";
  });

  out.check("epsilon has integral exponents", [&]() -> std::string {
    for (const auto &g : groups)
      for (int i = 0; i < 20; ++i)
        if (auto f = integral_exponents(epsilon(random_devoto(g, rng))); !f.empty())
          return g->describe() + ": " + f;
    return "";
  });

  out.check("epsilon(x * 1) = epsilon(x)", [&]() -> std::string {
    const auto one = DevotoElement::constant(FiniteGroup::trivial(), Series(1));
    for (const auto &g : groups) {
      const auto x = random_devoto(g, rng);
      if (!(epsilon(external_product(x, one)) == epsilon(x)))
        return g->describe();
    }
    return "";
  });

  out.check("restriction respects products and rescaling", [&]() -> std::string {
    const auto s3 = groups[2];
    const auto z2 = groups[0];
    const int swap = s3->index_of({1, 0, 2});
    const auto alpha = Homomorphism::from_function(z2, s3, [&](int e) { return e == 0 ? 0 : swap; });
    for (int i = 0; i < 5; ++i) {
      const auto x = random_devoto(s3, rng), y = random_devoto(s3, rng);
      if (!(restrict_along(internal_product(x, y), alpha) ==
            internal_product(restrict_along(x, alpha), restrict_along(y, alpha))))
        return "restriction does not respect products";
      if (!(restrict_along(rescale(x, 2), alpha) == rescale(restrict_along(x, alpha), 2)))
        return "restriction does not commute with rescale";
    }
    return "";
  });

  out.check("evaluation is invariant under simultaneous conjugation", [&]() -> std::string {
    const auto &g = *groups[2];
    const auto x = random_devoto(groups[2], rng);
    for (int a = 0; a < 6; ++a)
      for (int p = 0; p < 6; ++p)
        for (int q = 0; q < 6; ++q)
          if (g.commute(p, q) && !(x.eval(p, q) == x.eval(g.conjugate(a, p), g.conjugate(a, q))))
            return "conjugate pairs evaluate differently";
    return "";
  });

  return out.take();
}

// ---------------------------------------------------------------- powerops

// prod_j (1 - t q^j)^{-c_j} expanded by repeated multiplication.
BivariateSeries direct_product_side(const std::map<long, long> &c, int t_order, int q_order) {
  BivariateSeries acc(t_order);
  acc.at(0) = Series(1);
  for (const auto &[j, cj] : c) {
    BivariateSeries factor(t_order);
    factor.at(0) = Series(1);
    if (t_order >= 1)
      factor.at(1) = -Series::monomial(Fraction(j));
    const BivariateSeries step = cj > 0 ? series_inv(factor) : factor;
    for (long r = 0; r < std::abs(cj); ++r)
      acc = acc * step;
  }
  return acc.q_truncated(Fraction(q_order));
}

SuiteResult powerops_suite(std::uint64_t seed) {
  Collector out("powerops");
  Rng rng(seed);
  const auto triv = FiniteGroup::trivial();
  const auto z2 = FiniteGroup::cyclic(2);

  out.check("sym brute = sym exp for n <= 5", [&]() -> std::string {
    for (const auto &g : {triv, z2})
      for (int i = 0; i < 3; ++i) {
        const auto x = random_devoto(g, rng);
        for (int n = 0; n <= 5; ++n)
          if (!(sym_str(x, n, SymMethod::Brute) == sym_str(x, n, SymMethod::Exp)))
            return g->describe() + ", n = " + std::to_string(n);
      }
    return "";
  });

  out.check("symmetric powers are Devoto valid with integral trivial parts", [&]() -> std::string {
    for (const auto &g : {z2, FiniteGroup::cyclic(3)}) {
      const auto x = random_devoto(g, rng);
      for (int n = 1; n <= 3; ++n) {
        const auto s = sym_str(x, n, SymMethod::Exp);
        if (auto f = devoto_failure(s); !f.empty())
          return f;
        for (int e = 0; e < static_cast<int>(g->size()); ++e)
          if (auto f = integral_exponents(trivial_part(s, e)); !f.empty())
            return "trivial part: " + f;
      }
    }
    return "";
  });

  out.check("block sum axiom for n + m <= 4", [&]() -> std::string {
    for (const auto &g : {triv, z2}) {
      const auto x = random_devoto(g, rng);
      for (int n = 1; n <= 3; ++n)
        for (int m = 1; n + m <= 4; ++m)
          if (auto r = report(verify_block_sum(x, n, m)); !r.empty())
            return r;
    }
    return "";
  });

  out.check("iterated axiom", [&]() -> std::string {
    for (const auto &g : {triv, z2})
      if (auto r = report(verify_iterated(random_devoto(g, rng), 2, 2)); !r.empty())
        return r;
    return report(verify_iterated(random_devoto(triv, rng), 2, 3));
  });

  out.check("product axiom", [&]() -> std::string {
    return report(verify_product_axiom(random_devoto(z2, rng), random_devoto(z2, rng), 2));
  });

  out.check("p_str is Devoto valid with bounded denominators", [&]() -> std::string {
    const auto x = random_devoto(z2, rng);
    for (int n = 2; n <= 3; ++n) {
      const auto y = p_str(x, n);
      if (auto f = devoto_failure(y); !f.empty())
        return f;
      const auto &w = *y.group();
      for (const auto &pc : w.pair_classes().classes) {
        const Series &v = y.eval(pc.g, pc.h);
        if (w.order(pc.g) % v.denominator() != 0)
          return "denominator " + std::to_string(v.denominator()) + " does not divide the element order";
      }
    }
    return "";
  });

  out.check("p_str is independent of base point choices", [&]() -> std::string {
    for (int i = 0; i < 3; ++i) {
      const auto x = random_devoto(i == 2 ? FiniteGroup::cyclic(3) : z2, rng);
      const auto ref = p_str(x, 3);
      for (int s = 0; s < 2; ++s)
        if (!(p_str(x, 3, OrbitConvention{rng()}) == ref))
          return "outputs differ under a reseeded convention";
    }
    return "";
  });

  out.check("Hecke leading term", [&]() -> std::string {
    for (int n = 1; n <= 5; ++n) {
      const Series t = hecke_T(Series::monomial(Fraction(-1)), n).scaled(Cyclotomic(n));
      for (const auto &[e, c] : t.terms())
        if (e < Fraction(0) && !(e == Fraction(-n) && c.is_one()))
          return "unexpected term at q^" + e.to_string() + " for n = " + std::to_string(n);
      if (!t.coefficient(Fraction(-n)).is_one())
        return "leading term missing for n = " + std::to_string(n);
    }
    return "";
  });

  out.check("topological product formula", [&]() -> std::string {
    for (int i = 0; i < 3; ++i) {
      std::map<long, long> c;
      Series x;
      for (long j = 0; j <= 6; ++j) {
        c[j] = uniform(rng, -2, 2);
        x += Series::monomial(Fraction(j), Cyclotomic(c[j]));
      }
      if (!(s_top_total(x.truncated(Fraction(6)), 4).q_truncated(Fraction(6)) == direct_product_side(c, 4, 6)))
        return "mismatch";
    }
    return "";
  });

  out.check("symmetric powers of constants give the partition product", [&]() -> std::string {
    for (long c = 1; c <= 3; ++c) {
      const auto total = sym_str_total(DevotoElement::constant(triv, Series(c)), 5);
      std::vector<mpz_class> want(6, 0);
      want[0] = 1;
      for (int k = 1; k <= 5; ++k)
        for (long r = 0; r < c; ++r)
          for (int d = k; d <= 5; ++d)
            want[static_cast<std::size_t>(d)] += want[static_cast<std::size_t>(d - k)];
      for (int d = 0; d <= 5; ++d)
        if (!(total[static_cast<std::size_t>(d)].value(0) == Series(Cyclotomic(Rational(want[static_cast<std::size_t>(d)])))))
          return "c = " + std::to_string(c) + ", t-degree " + std::to_string(d);
    }
    return "";
  });

  out.check("lambda inverts sym", [&]() -> std::string {
    const auto x = random_devoto(z2, rng);
    const auto s = sym_str_total(x, 4);
    const auto l = lambda_str_total(x, 4);
    for (int d = 0; d <= 4; ++d) {
      DevotoElement acc(z2);
      for (int a = 0; a <= d; ++a)
        acc = acc + internal_product(s[static_cast<std::size_t>(a)], l[static_cast<std::size_t>(d - a)]);
      const DevotoElement want = DevotoElement::constant(z2, Series(d == 0 ? 1 : 0));
      for (std::size_t i = 0; i < acc.values().size(); ++i)
        if (!agree_common(acc.value(i), want.value(i)))
          return "t-degree " + std::to_string(d);
    }
    return "";
  });

  return out.take();
}

// ---------------------------------------------------------------- hinfty

RepCharacter faithful_linear(const GroupPtr &zn) {
  const int n = static_cast<int>(zn->size());
  const int gen = zn->generators().at(0);
  return RepCharacter::from_function(zn, [&](int e) {
    int k = 0;
    for (int x = zn->identity(); x != e; x = zn->mul(x, gen))
      ++k;
    return Cyclotomic::root_of_unity(n, k);
  });
}

SuiteResult hinfty_suite(std::uint64_t seed) {
  Collector out("hinfty");
  Rng rng(seed);
  const auto z2 = FiniteGroup::cyclic(2), z3 = FiniteGroup::cyclic(3);

  out.check("Euler class H-infinity on Z/3, n = 2", [&]() -> std::string {
    return report(verify_hinfty(faithful_linear(z3), 2, Fraction(2)));
  });
  out.check("Euler class H-infinity on Z/2, n = 3", [&]() -> std::string {
    return report(verify_hinfty(faithful_linear(z2), 3, Fraction(1)));
  });

  out.check("eigenvalue lemma on random wreath elements", [&]() -> std::string {
    for (const auto &chi : {faithful_linear(z3), RepCharacter::regular(z3), faithful_linear(z2) + RepCharacter::trivial(z2)}) {
      const auto &g = *chi.group();
      for (int n = 2; n <= 3; ++n)
        for (int trial = 0; trial < 6; ++trial) {
          std::vector<int> gb;
          for (int i = 0; i < n; ++i)
            gb.push_back(static_cast<int>(uniform(rng, 0, static_cast<long>(g.size()) - 1)));
          Perm sigma(static_cast<std::size_t>(n));
          std::iota(sigma.begin(), sigma.end(), 0);
          std::shuffle(sigma.begin(), sigma.end(), rng);
          const int o = wreath_element_order(g, gb, sigma);
          for (int j = 0; j < o; ++j)
            if (auto r = eigen_cycle_check(chi, gb, sigma, o, j); !r.ok())
              return "direct " + std::to_string(r.direct) + " vs cycles " + std::to_string(r.via_cycles);
        }
    }
    return "";
  });

  out.check("Euler class is multiplicative and Devoto valid", [&]() -> std::string {
    // No trivial summand: a fixed vector would make every value vanish.
    const auto chi = faithful_linear(z3);
    const auto psi = chi.conj() + chi;
    const auto sum = euler_str(chi + psi, Fraction(2));
    if (auto f = devoto_failure(sum); !f.empty())
      return f;
    const auto prod = internal_product(euler_str(chi, Fraction(2)), euler_str(psi, Fraction(2)));
    bool nonzero = false;
    for (std::size_t i = 0; i < sum.values().size(); ++i) {
      if (!agree_common(sum.value(i), prod.value(i)))
        return "euler(chi + psi) != euler(chi) euler(psi)";
      nonzero = nonzero || !sum.value(i).is_zero();
    }
    return nonzero ? "" : "degenerate example: every value vanishes";
  });

  out.check("Lambda_{-t} Sym_t = 1 pointwise", [&]() -> std::string {
    for (const auto &chi : {faithful_linear(z3), RepCharacter::regular(z3)})
      for (int h = 0; h < 3; ++h) {
        const auto lam = lambda_sym_char(chi, h, PowerKind::Lambda, 5);
        const auto sym = lambda_sym_char(chi, h, PowerKind::Sym, 5);
        for (int d = 0; d <= 5; ++d) {
          Cyclotomic acc;
          for (int a = 0; a <= d; ++a)
            acc += (a % 2 ? -lam[static_cast<std::size_t>(a)] : lam[static_cast<std::size_t>(a)]) *
                   sym[static_cast<std::size_t>(d - a)];
          if (!(acc == Cyclotomic(d == 0 ? 1 : 0)))
            return "t-degree " + std::to_string(d);
        }
      }
    return "";
  });

  return out.take();
}

// ---------------------------------------------------------------- moonshine

SuiteResult moonshine_suite(std::uint64_t seed) {
  Collector out("moonshine");
  Rng rng(seed);

  out.check("j by inversion matches j by triangular solve", [&]() -> std::string {
    return jseries(20) == jseries_triangular(20) ? "" : "the two constructions differ";
  });

  out.check("Faber normal form for j - 744", [&]() -> std::string {
    const Series j = jseries(8);
    for (int n = 1; n <= 4; ++n) {
      const Series v = evaluate(faber(j, n), j);
      if (!v.coefficient(Fraction(-n)).is_one())
        return "leading coefficient for n = " + std::to_string(n);
      for (int e = -n + 1; e <= 0; ++e)
        if (!v.coefficient(Fraction(e)).is_zero())
          return "nonzero q^" + std::to_string(e) + " for n = " + std::to_string(n);
    }
    return "";
  });

  out.check("j - 744 is replicable for n <= 4", [&]() -> std::string {
    const auto r = replicability_check(jseries(replicability_requirement(4, 8).floor()), 4, 8);
    return r.pass ? "" : "replicability fails";
  });

  out.check("q^-1 + q^3 is not replicable", [&]() -> std::string {
    const Series f = (Series::monomial(Fraction(-1)) + Series::monomial(Fraction(3))).truncated(Fraction(12));
    const auto r = replicability_check(f, 2, 4);
    return r.pass ? "expected a failure at n = 2" : "";
  });

  out.check("DMVV product identity on random coefficients", [&]() -> std::string {
    for (int i = 0; i < 3; ++i) {
      CoeffMap c;
      for (long k = 0; k <= 6; ++k)
        c[k] = uniform(rng, -2, 2);
      if (auto r = dmvv_check(c, 4, 6); !r.pass)
        return r.detail;
    }
    return "";
  });

  out.check("denominator formula", [&]() -> std::string {
    const auto r = denominator_check(3, 3);
    return r.pass ? "" : r.detail;
  });

  return out.take();
}

} // namespace

std::vector<SuiteResult> run_suite(const std::string &name, std::uint64_t seed) {
  static const std::map<std::string, std::function<SuiteResult(std::uint64_t)>> suites{
      {"arith", arith_suite},   {"wreath", wreath_suite}, {"devoto", devoto_suite},
      {"powerops", powerops_suite}, {"hinfty", hinfty_suite}, {"moonshine", moonshine_suite}};
  std::vector<SuiteResult> results;
  if (name == "all") {
    for (const auto &s : suite_names())
      results.push_back(suites.at(s)(seed));
    return results;
  }
  const auto it = suites.find(name);
  if (it == suites.end())
    throw std::invalid_argument("unknown suite: " + name);
  results.push_back(it->second(seed));
  return results;
}

} // namespace tatek
