#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tatek/powerops.hpp"
#include "tatek/wreath.hpp"

using namespace tatek;
using testing::faithful_linear;
using testing::q;
using testing::zeta;

TEST_CASE("eigenvalue multiplicities") {
  const auto z3 = FiniteGroup::cyclic(3);
  const int g = z3->generators()[0];
  const auto triv = RepCharacter::trivial(z3);
  CHECK(eigen_multiplicity(triv, g, 0) == 1);
  CHECK(eigen_multiplicity(triv, g, 1) == 0);
  const auto reg = RepCharacter::regular(z3);
  for (int j = 0; j < 3; ++j)
    CHECK(eigen_multiplicity(reg, g, j) == 1);
  const auto chi = faithful_linear(z3);
  CHECK(eigen_multiplicity(chi, g, 1) == 1);
  CHECK(eigen_multiplicity(chi, g, 2) == 0);

  const auto fake = RepCharacter::from_function(z3, [](int e) { return Cyclotomic(e == 0 ? 1 : 2); });
  CHECK_THROWS_AS(eigen_multiplicity(fake, g, 0), std::domain_error);
  CHECK_FALSE(fake.looks_genuine());
  CHECK(reg.looks_genuine());

  // Multiplicities add up to the dimension.
  const auto s3 = FiniteGroup::symmetric(3);
  const auto perm = RepCharacter::from_function(s3, [&](int e) {
    const Perm p = s3->permutation(e);
    long fixed = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      fixed += p[i] == static_cast<int>(i);
    return Cyclotomic(fixed);
  });
  for (int e = 0; e < 6; ++e) {
    long total = 0;
    for (int j = 0; j < s3->order(e); ++j)
      total += eigen_multiplicity(perm, e, j);
    CHECK(total == 3);
  }
}

TEST_CASE("age") {
  const auto z3 = FiniteGroup::cyclic(3);
  const int g = z3->generators()[0];
  CHECK(age(RepCharacter::trivial(z3), g) == 0);
  CHECK(age(faithful_linear(z3), g) == make_rational(1, 3));
  CHECK(age(RepCharacter::regular(z3), g) == 1);
  CHECK(age_real(faithful_linear(z3), g) == make_rational(2, 3));
}

TEST_CASE("lambda and sym characters") {
  const auto z3 = FiniteGroup::cyclic(3);
  const int g = z3->generators()[0];
  const auto lam = lambda_sym_char(RepCharacter::trivial(z3), g, PowerKind::Lambda, 3);
  CHECK(lam == std::vector<Cyclotomic>{1, 1, 0, 0});
  const auto lf = lambda_sym_char(faithful_linear(z3), g, PowerKind::Lambda, 2);
  CHECK(lf == std::vector<Cyclotomic>{1, zeta(3), 0});

  const auto z2 = FiniteGroup::cyclic(2);
  const auto perm2 = RepCharacter::from_function(z2, [](int e) { return Cyclotomic(e == 0 ? 2 : 0); });
  const auto sym = lambda_sym_char(perm2, 1, PowerKind::Sym, 4);
  CHECK(sym == std::vector<Cyclotomic>{1, 0, 1, 0, 1});

  // Lambda_{-t} Sym_t = 1
  for (const auto &chi : {faithful_linear(z3), RepCharacter::regular(z3), faithful_linear(z3) + RepCharacter::trivial(z3, 2)})
    for (int h = 0; h < 3; ++h) {
      const auto l = lambda_sym_char(chi, h, PowerKind::Lambda, 6);
      const auto s = lambda_sym_char(chi, h, PowerKind::Sym, 6);
      for (int d = 0; d <= 6; ++d) {
        Cyclotomic acc;
        for (int a = 0; a <= d; ++a)
          acc += (a % 2 ? -l[static_cast<std::size_t>(a)] : l[static_cast<std::size_t>(a)]) * s[static_cast<std::size_t>(d - a)];
        CHECK(acc == Cyclotomic(d == 0 ? 1 : 0));
      }
    }
}

TEST_CASE("wreath sum character") {
  const auto z3 = FiniteGroup::cyclic(3);
  const auto chi = faithful_linear(z3);
  const auto w1 = FiniteGroup::wreath(z3, 1);
  const auto s1 = wreath_sum_character(chi, w1);
  for (int e = 0; e < 3; ++e)
    CHECK(s1(w1->wreath_make({e}, {0})) == chi(e));
  const auto w2 = FiniteGroup::wreath(z3, 2);
  const auto s2 = wreath_sum_character(chi, w2);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK(s2(w2->wreath_make({a, b}, {1, 0})).is_zero());
      CHECK(s2(w2->wreath_make({a, b}, {0, 1})) == chi(a) + chi(b));
    }
  CHECK(s2.looks_genuine());
}

TEST_CASE("eigenvalue lemma") {
  const auto triv = FiniteGroup::trivial();
  const auto one = RepCharacter::trivial(triv);
  {
    const auto r = eigen_cycle_check(one, {0, 0}, {1, 0}, 2, 1);
    CHECK(r.direct == 1);
    CHECK(r.ok());
  }
  const auto z3 = FiniteGroup::cyclic(3);
  const int g = z3->generators()[0];
  const auto chi = faithful_linear(z3);
  for (int j = 0; j < 2; ++j) {
    const auto r = eigen_cycle_check(chi, {g, z3->mul(g, g)}, {1, 0}, 2, j);
    CHECK(r.direct == 1);
    CHECK(r.ok());
  }
  {
    const auto r = eigen_cycle_check(chi, {g, g}, {0, 1}, 3, 1);
    CHECK(r.direct == 2);
    CHECK(r.ok());
  }
  std::mt19937_64 rng(29);
  const auto s3 = FiniteGroup::symmetric(3);
  const auto perm = RepCharacter::from_function(s3, [&](int e) {
    const Perm p = s3->permutation(e);
    long fixed = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      fixed += p[i] == static_cast<int>(i);
    return Cyclotomic(fixed);
  });
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 2;
    std::vector<int> gb;
    for (int i = 0; i < n; ++i)
      gb.push_back(static_cast<int>(rng() % 6));
    Perm sigma(static_cast<std::size_t>(n));
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const int o = wreath_element_order(*s3, gb, sigma);
    for (int j = 0; j < o; ++j)
      CHECK(eigen_cycle_check(perm, gb, sigma, o, j).ok());
  }
}

TEST_CASE("stringy Euler class") {
  const auto z3 = FiniteGroup::cyclic(3);
  const int g = z3->generators()[0];
  const auto zero = RepCharacter::trivial(z3, 0);
  CHECK(euler_str(zero, Fraction(2)) == DevotoElement::constant(z3, Series(1).truncated(Fraction(2))));

  CHECK(euler_str(RepCharacter::trivial(z3), Fraction(2)).eval(0, 0).is_zero());

  // [g]-summand at h = g: (1 - z q^{1/3})(1 - z^-1 q^{2/3}) times the j = 4, 5 factors.
  const auto e = euler_str(faithful_linear(z3), Fraction(2));
  const Series want = ((Series(1) - q(1, 3).scaled(zeta(3))) * (Series(1) - q(2, 3).scaled(zeta(3, 2))) *
                       (Series(1) - q(4, 3).scaled(zeta(3))) * (Series(1) - q(5, 3).scaled(zeta(3, 2))))
                          .truncated(Fraction(2));
  CHECK(e.eval(g, g) == want);
  CHECK(check_devoto(e).ok);

  const auto chi = faithful_linear(z3);
  const auto psi = chi.conj() + chi;
  const auto a = euler_str(chi + psi, Fraction(2));
  const auto b = internal_product(euler_str(chi, Fraction(2)), euler_str(psi, Fraction(2)));
  for (std::size_t i = 0; i < a.values().size(); ++i)
    CHECK(agree_common(a.value(i), b.value(i)));
}

TEST_CASE("H-infinity at the level of Euler classes") {
  const auto z3 = FiniteGroup::cyclic(3);
  const auto chi = faithful_linear(z3);
  CHECK(verify_hinfty(chi, 1, Fraction(2)).ok);
  CHECK(verify_hinfty(chi, 2, Fraction(2)).ok);
  CHECK(verify_hinfty(faithful_linear(FiniteGroup::cyclic(2)), 3, Fraction(1)).ok);
  CHECK(verify_hinfty(RepCharacter::regular(FiniteGroup::cyclic(2)), 2, Fraction(3, 2)).ok);
}
