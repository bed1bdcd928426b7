// One line per acceptance criterion. Exit status is nonzero if any criterion
// fails its check or its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "support.hpp"
#include "tatek/io.hpp"
#include "tatek/moonshine.hpp"
#include "tatek/powerops.hpp"
#include "tatek/wreath.hpp"

using namespace tatek;

namespace {

constexpr std::uint64_t kSeed = 20240607;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome ok() { return {true, ""}; }
Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome from(const IdentityReport &r) { return r.ok ? ok() : fail(r.detail); }

bool integral(const Series &s) {
  for (const auto &[e, c] : s.terms())
    if (!e.is_integer())
      return false;
  return true;
}

// 1. sym brute = sym exp for n <= 5, G in {1, Z/2}, five seeded elements each.
Outcome generating_identity() {
  std::mt19937_64 rng(kSeed);
  for (const auto &g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2)})
    for (int i = 0; i < 5; ++i) {
      const auto x = random_devoto(g, rng);
      if (!check_devoto(x).ok)
        return fail("generator produced an invalid element");
      for (int n = 0; n <= 5; ++n)
        if (!(sym_str(x, n, SymMethod::Brute) == sym_str(x, n, SymMethod::Exp)))
          return fail(g->describe() + " n=" + std::to_string(n));
    }
  return ok();
}

// 2. Axioms (b), (c), (d) for the stringy power operation.
Outcome power_operation_axioms() {
  std::mt19937_64 rng(kSeed + 2);
  const auto triv = FiniteGroup::trivial();
  const auto z2 = FiniteGroup::cyclic(2);
  for (const auto &g : {triv, z2}) {
    const auto x = random_devoto(g, rng);
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; n + m <= 4; ++m)
        if (auto r = verify_block_sum(x, n, m); !r.ok)
          return fail("(b) " + r.detail);
    if (auto r = verify_iterated(x, 2, 2); !r.ok)
      return fail("(c) " + r.detail);
  }
  if (auto r = verify_iterated(random_devoto(triv, rng), 2, 3); !r.ok)
    return fail("(c) " + r.detail);
  if (auto r = verify_product_axiom(random_devoto(z2, rng), random_devoto(z2, rng), 2); !r.ok)
    return fail("(d) " + r.detail);
  return ok();
}

// 3. Euler-class H-infinity.
Outcome hinfty() {
  if (auto r = verify_hinfty(testing::faithful_linear(FiniteGroup::cyclic(3)), 2, Fraction(2)); !r.ok)
    return fail("Z/3: " + r.detail);
  if (auto r = verify_hinfty(testing::faithful_linear(FiniteGroup::cyclic(2)), 3, Fraction(1)); !r.ok)
    return fail("Z/2: " + r.detail);
  return ok();
}

// 4. orbit_data on diagonal inputs against (k, N, m, g^k, g^-m h^N). The
// commuting pair is built here: sigma is N k-cycles on consecutive blocks and
// tau steps block to block, wrapping the last block by m.
Outcome hecke_closed_form() {
  long cases = 0;
  for (const auto &grp : {FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
    const int sz = static_cast<int>(grp->size());
    auto power = [&](int g, int e) {
      int r = grp->identity();
      const int base = e < 0 ? grp->inv(g) : g;
      for (int i = 0; i < std::abs(e); ++i)
        r = grp->mul(r, base);
      return r;
    };
    for (int big_n = 1; big_n <= 6; ++big_n)
      for (int k = 1; big_n * k <= 6; ++k)
        for (int m = 0; m < k; ++m) {
          const int n = big_n * k;
          Perm sigma(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n));
          for (int p = 0; p < n; ++p) {
            const int blk = p / k, r = p % k;
            sigma[static_cast<std::size_t>(p)] = blk * k + (r + 1) % k;
            tau[static_cast<std::size_t>(p)] = blk + 1 < big_n ? p + k : (r + m) % k;
          }
          for (int g = 0; g < sz; ++g)
            for (int h = 0; h < sz; ++h) {
              if (grp->mul(g, h) != grp->mul(h, g))
                continue;
              const std::vector<int> gb(static_cast<std::size_t>(n), g), hb(static_cast<std::size_t>(n), h);
              const auto data = orbit_data(*grp, gb, sigma, hb, tau);
              const OrbitDatum want{k, big_n, m, power(g, k), grp->mul(power(g, -m), power(h, big_n))};
              ++cases;
              if (data.size() != 1 || !(data[0] == want))
                return fail(grp->describe() + " N=" + std::to_string(big_n) + " k=" + std::to_string(k) +
                            " m=" + std::to_string(m));
            }
        }
  }
  return {true, std::to_string(cases) + " cases"};
}

// 5. Integrality of epsilon and of symmetric powers.
Outcome integrality() {
  std::mt19937_64 rng(kSeed + 5);
  for (const auto &g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::symmetric(3)})
    for (int i = 0; i < 20; ++i) {
      const auto x = random_devoto(g, rng);
      if (!check_devoto(x).ok)
        return fail("generator produced an invalid element");
      if (!integral(epsilon(x)))
        return fail(g->describe() + ": epsilon has a fractional exponent");
      for (int n = 2; n <= 3; ++n) {
        const auto s = sym_str(x, n, SymMethod::Exp);
        if (!check_devoto(s).ok)
          return fail(g->describe() + ": Sym^" + std::to_string(n) + " violates the rotation condition");
        for (int e = 0; e < static_cast<int>(g->size()); ++e)
          if (!integral(trivial_part(s, e)))
            return fail(g->describe() + ": Sym^" + std::to_string(n) + " trivial part is fractional");
      }
    }
  return ok();
}

// 6. s_top_total against the product expanded in integers.
Outcome topological_product() {
  std::mt19937_64 rng(kSeed + 6);
  for (int trial = 0; trial < 5; ++trial) {
    std::map<long, long> c;
    Series x;
    for (long j = 0; j <= 6; ++j) {
      c[j] = std::uniform_int_distribution<long>(-2, 2)(rng);
      x += Series::monomial(Fraction(j), Cyclotomic(c[j]));
    }
    if (!testing::matches(s_top_total(x.truncated(Fraction(6)), 4), testing::top_product_oracle(c, 4, 6)))
      return fail("trial " + std::to_string(trial));
  }
  return ok();
}

// 7. DMVV on seeded coefficient maps; the product side is also checked
// against the integer expansion.
Outcome dmvv() {
  std::mt19937_64 rng(kSeed + 7);
  for (int trial = 0; trial < 5; ++trial) {
    CoeffMap c;
    for (long i = 0; i <= 24; ++i)
      c[i] = std::uniform_int_distribution<long>(-2, 2)(rng);
    if (auto r = dmvv_check(c, 4, 6); !r.pass)
      return fail(r.detail);
    if (!testing::matches(borcherds_product(c, 4, 6), testing::borcherds_oracle(c, 4, 6)))
      return fail("product side disagrees with the integer expansion");
  }
  return ok();
}

// 8. j coefficients: library (two constructions) against the pentagonal oracle.
Outcome moonshine_constants() {
  const int order = 20;
  const Series j = jseries(order);
  if (!(jseries_triangular(order) == j))
    return fail("inversion and triangular solve disagree");
  const auto oracle = testing::j_oracle(order);
  for (int n = -1; n <= order; ++n)
    if (!(j.coefficient(Fraction(n)) == Cyclotomic(Rational(oracle[static_cast<std::size_t>(n + 1)]))))
      return fail("q^" + std::to_string(n) + " disagrees with the oracle");
  const std::string a1 = j.coefficient(Fraction(1)).to_string(), a2 = j.coefficient(Fraction(2)).to_string(),
                    a3 = j.coefficient(Fraction(3)).to_string();
  if (a1 != "196884" || a2 != "21493760" || a3 != "864299970")
    return fail("a1..a3 = " + a1 + ", " + a2 + ", " + a3);
  return {true, "a1=" + a1 + " a2=" + a2 + " a3=" + a3};
}

// 9. Replicability and the denominator formula for j - 744.
Outcome replicability() {
  const int need = static_cast<int>(replicability_requirement(4, 8).floor());
  const auto r = replicability_check(jseries(need), 4, 8);
  if (!r.pass)
    return fail("replicability fails");
  if (auto d = denominator_check(3, 3); !d.pass)
    return fail("denominator: " + d.detail);
  return ok();
}

// 10. Sum_n Sym^n(c) t^n = prod_k (1 - t^k)^{-c} for constants c.
Outcome witten_class() {
  const auto triv = FiniteGroup::trivial();
  for (long c = 1; c <= 3; ++c) {
    testing::Grid want(5, 0, 1);
    for (int k = 1; k <= 5; ++k)
      want = want * testing::Grid::binomial_factor(5, 0, 0, k, c);
    const auto x = DevotoElement::constant(triv, Series(c));
    for (int n = 0; n <= 5; ++n) {
      const Series expected(Cyclotomic(Rational(want.at(n, 0))));
      if (!(sym_str(x, n, SymMethod::Brute).value(0) == expected) ||
          !(sym_str(x, n, SymMethod::Exp).value(0) == expected))
        return fail("c=" + std::to_string(c) + " n=" + std::to_string(n));
    }
  }
  return ok();
}

// 11. p_str is bitwise identical under reseeded base-point conventions.
Outcome choice_independence() {
  std::mt19937_64 rng(kSeed + 11);
  const std::vector<std::pair<GroupPtr, int>> cases{
      {FiniteGroup::cyclic(2), 3}, {FiniteGroup::cyclic(3), 2}, {FiniteGroup::symmetric(3), 2}};
  for (const auto &[g, n] : cases) {
    const auto x = random_devoto(g, rng);
    const auto ref = p_str(x, n);
    const std::string ref_bytes = to_json(ref).dump();
    for (std::uint64_t s = 1; s <= 4; ++s) {
      const auto other = p_str(x, n, OrbitConvention{rng() + s});
      if (!(other == ref) || to_json(other).dump() != ref_bytes)
        return fail(g->describe() + " n=" + std::to_string(n));
    }
  }
  return ok();
}

struct Criterion {
  int id;
  const char *name;
  double limit_seconds;
  std::function<Outcome()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "generating identity: sym brute = exp, n <= 5", 60, generating_identity},
      {2, "power operation axioms (b), (c), (d)", 120, power_operation_axioms},
      {3, "H-infinity for stringy Euler classes", 60, hinfty},
      {4, "Hecke closed form from orbit data", 30, hecke_closed_form},
      {5, "integrality of epsilon and Sym", 30, integrality},
      {6, "topological product formula", 10, topological_product},
      {7, "DMVV / Borcherds product identity", 30, dmvv},
      {8, "Moonshine constants from E4^3 / Delta", 5, moonshine_constants},
      {9, "replicability and denominator formula of j - 744", 60, replicability},
      {10, "symmetric powers of constants", 10, witten_class},
      {11, "choice independence of p_str", 30, choice_independence},
  };
  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.limit_seconds)
      o = fail("time limit exceeded");
    failures += !o.pass;
    std::printf("[%s] criterion %2d: %s (%.2f s, limit %.0f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, o.detail.empty() ? "" : " -- ", o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
