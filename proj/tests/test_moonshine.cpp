#include <doctest.h>

#include <random>

#include "support.hpp"
#include "tatek/moonshine.hpp"
#include "tatek/powerops.hpp"

using namespace tatek;
using testing::q;

namespace {

Cyclotomic integer(const mpz_class &z) { return Cyclotomic(Rational(z)); }

} // namespace

TEST_CASE("j - 744 against the pentagonal-number oracle") {
  const int order = 20;
  const Series j = jseries(order);
  const auto oracle = testing::j_oracle(order);
  for (int n = -1; n <= order; ++n)
    CHECK(j.coefficient(Fraction(n)) == integer(oracle[static_cast<std::size_t>(n + 1)]));
  CHECK(j.coefficient(Fraction(0)).is_zero());
  CHECK(is_mckay_thompson(j));
  CHECK(jseries_triangular(order) == j);
  CHECK(*j.truncation() == Fraction(order));
}

TEST_CASE("Delta times j is E4 cubed") {
  const int order = 12;
  const auto e4 = eisenstein_e4(order + 1);
  const auto eta = eta24(order + 1);
  Series e4s, delta;
  for (int n = 0; n <= order + 1; ++n) {
    e4s += Series::monomial(Fraction(n), integer(e4[static_cast<std::size_t>(n)]));
    delta += Series::monomial(Fraction(n + 1), integer(eta[static_cast<std::size_t>(n)]));
  }
  e4s = e4s.truncated(Fraction(order + 1));
  delta = delta.truncated(Fraction(order + 2));
  const Series lhs = delta * (jseries(order) + Series(744));
  CHECK(agree_to(lhs, e4s * e4s * e4s, Fraction(order)));
}

TEST_CASE("Faber polynomials") {
  const Series j = jseries(6);
  const Rational a1 = j.coefficient(Fraction(1)).rational(), a2 = j.coefficient(Fraction(2)).rational();
  CHECK(faber(j, 1) == Polynomial{0, 1});
  CHECK(faber(j, 2) == Polynomial{-2 * a1, 0, 1});
  CHECK(faber(j, 3) == Polynomial{-3 * a2, -3 * a1, 0, 1});
  CHECK(polynomial_to_string(faber(j, 3)) == "w^3 - 590652*w - 64481280");
  CHECK_THROWS_AS(faber(jseries(1), 4), InsufficientTruncation);

  // Phi_n(F) = q^-n + O(q)
  const Series f = (q(-1) + q(1).scaled(Cyclotomic(3)) - q(2) + q(4).scaled(Cyclotomic(7))).truncated(Fraction(6));
  for (int n = 1; n <= 5; ++n) {
    const Series v = evaluate(faber(f, n), f);
    CHECK(v.coefficient(Fraction(-n)) == Cyclotomic(1));
    for (int e = -n + 1; e <= 0; ++e)
      CHECK(v.coefficient(Fraction(e)).is_zero());
  }
}

TEST_CASE("Adams operations") {
  const Series f = q(-1) + q(1);
  CHECK(adams(f, 3) == f);
  const auto z2 = FiniteGroup::cyclic(2);
  const ClassSeries x{z2, {q(-1) + q(1), q(-1) - q(1)}};
  CHECK(adams(x, 1) == x);
  const ClassSeries sq = adams(x, 2);
  CHECK(sq.at(1) == x.at(0));
  CHECK(sq.at(0) == x.at(0));
}

TEST_CASE("replicability") {
  for (int n_max = 1; n_max <= 4; ++n_max) {
    const Series f = q(-1).truncated(replicability_requirement(n_max, 6));
    CHECK(replicability_check(f, n_max, 6).pass);
  }
  const auto j_report = replicability_check(jseries(static_cast<int>(replicability_requirement(4, 8).floor())), 4, 8);
  CHECK(j_report.pass);
  CHECK(j_report.entries.size() == 4);

  // q^-1 + q is replicable: Phi_2(F) = F^2 - 2 and 2 T_2(F) both equal q^-2 + q^2.
  const Series f1 = (q(-1) + q(1)).truncated(Fraction(20));
  CHECK(replicability_check(f1, 4, 4).pass);

  // q^-1 + q^3 is not: at n = 2 the q^2 coefficients are 2 and 0.
  const auto r = replicability_check((q(-1) + q(3)).truncated(Fraction(20)), 2, 4);
  CHECK_FALSE(r.pass);
  REQUIRE(r.entries.size() == 2);
  CHECK(r.entries[0].pass);
  CHECK_FALSE(r.entries[1].pass);
  CHECK(r.entries[1].witness == Fraction(2));
  CHECK(r.entries[1].lhs_coeff == "2");
  CHECK(r.entries[1].rhs_coeff == "0");

  CHECK_THROWS_AS(replicability_check(jseries(8), 4, 8), InsufficientTruncation);
}

TEST_CASE("Borcherds products") {
  const auto one = borcherds_product({}, 3, 3);
  CHECK(one[0] == Series(1).truncated(Fraction(3)));
  CHECK(one[2].is_zero());
  const auto geo = borcherds_product({{1, 1}}, 4, 4);
  for (int n = 0; n <= 4; ++n)
    CHECK(geo[n] == q(n).truncated(Fraction(4)));
  const auto part = borcherds_product({{0, 1}}, 5, 2);
  const long partitions[] = {1, 1, 2, 3, 5, 7};
  for (int n = 0; n <= 5; ++n)
    CHECK(part[n] == Series(partitions[n]).truncated(Fraction(2)));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    CoeffMap c;
    for (long i = 0; i <= 24; ++i)
      c[i] = std::uniform_int_distribution<long>(-2, 2)(rng);
    CHECK(testing::matches(borcherds_product(c, 4, 6), testing::borcherds_oracle(c, 4, 6)));

    // log of the product is -sum c(ij) log(1 - q^i t^j)
    const auto lg = series_log(borcherds_product(c, 3, 4));
    BivariateSeries want(3);
    for (int jt = 1; jt <= 3; ++jt)
      for (int i = 0; i <= 4; ++i)
        for (int r = 1; r * jt <= 3 && r * i <= 4; ++r)
          want.at(r * jt) += q(r * i).scaled(Cyclotomic(make_rational(c[static_cast<long>(i) * jt], r)));
    for (int t = 0; t <= 3; ++t)
      CHECK(agree_to(lg[t], want[t], Fraction(4)));
  }
}

TEST_CASE("DMVV") {
  CHECK(dmvv_check({{1, 1}}, 4, 4).pass);
  CHECK(dmvv_check({}, 3, 3).pass);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 3; ++trial) {
    CoeffMap c, d, sum;
    for (long i = 0; i <= 24; ++i) {
      c[i] = std::uniform_int_distribution<long>(-2, 2)(rng);
      d[i] = std::uniform_int_distribution<long>(-2, 2)(rng);
      sum[i] = c[i] + d[i];
    }
    CHECK(dmvv_check(c, 4, 6).pass);
    CHECK(dmvv_check(sum, 3, 4).pass);
    // Both sides are exponential in c.
    const auto prod = dmvv_exp_side(c, 3, 4) * dmvv_exp_side(d, 3, 4);
    const auto direct = dmvv_exp_side(sum, 3, 4);
    for (int t = 0; t <= 3; ++t)
      CHECK(agree_to(prod[t], direct[t], Fraction(4)));
  }
}

TEST_CASE("denominator formula") {
  for (int order = 1; order <= 3; ++order)
    CHECK(denominator_check(order).pass);
  CHECK(denominator_check(3, 3).pass);
  CHECK(denominator_check(2, 5).pass);
}
