#include "tatek/powerops.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>

namespace tatek {

std::vector<TransitiveClass> transitive_classes(int n) {
  if (n < 1)
    throw std::invalid_argument("transitive_classes: n must be positive");
  std::vector<TransitiveClass> out;
  for (int big_n = 1; big_n <= n; ++big_n) {
    if (n % big_n != 0)
      continue;
    const int k = n / big_n;
    for (int m = 0; m < k; ++m)
      out.push_back({big_n, k, m});
  }
  return out;
}

Series p_top_eval(const FiniteGroup &g, const std::vector<Series> &x_by_class, const std::vector<int> &base,
                  const Perm &perm) {
  if (base.size() != perm.size() || !is_permutation(perm))
    throw GroupError("p_top_eval: malformed wreath element");
  const auto &cd = g.conjugacy();
  std::vector<char> seen(perm.size(), 0);
  Series out(1);
  for (std::size_t p = 0; p < perm.size(); ++p) {
    if (seen[p])
      continue;
    // Start the token at the predecessor of p so the product reads g_{i_k}...g_{i_1}.
    int len = 0;
    for (std::size_t q = p; !seen[q]; q = static_cast<std::size_t>(perm[q])) {
      seen[q] = 1;
      ++len;
    }
    const int start = inverse(perm)[p];
    WreathToken t{start, g.identity()};
    for (int s = 0; s < len; ++s)
      t = wreath_act(g, base, perm, t);
    const auto cls = static_cast<std::size_t>(cd.class_of[static_cast<std::size_t>(t.value)]);
    out *= x_by_class.at(cls).scale_exponents(Fraction(len));
  }
  return out;
}

Series p_top_eval(const Series &x, const Perm &perm) {
  static const GroupPtr one = FiniteGroup::trivial();
  return p_top_eval(*one, {x}, std::vector<int>(perm.size(), 0), perm);
}

namespace {

void partitions(int n, int max_part, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

// Number of permutations of the given cycle type.
mpz_class class_size(const std::vector<int> &parts) {
  int n = 0;
  for (int p : parts)
    n += p;
  mpz_class num = 1;
  for (int i = 2; i <= n; ++i)
    num *= i;
  mpz_class z = 1;
  std::map<int, int> mult;
  for (int p : parts) {
    z *= p;
    z *= ++mult[p];
  }
  return num / z;
}

Perm perm_of_type(const std::vector<int> &parts) {
  Perm p;
  int start = 0;
  for (int len : parts) {
    for (int i = 0; i < len; ++i)
      p.push_back(start + (i + 1) % len);
    start += len;
  }
  return p;
}

} // namespace

BivariateSeries s_top_total(const Series &x, int t_order) {
  BivariateSeries out(t_order);
  out.at(0) = Series(1);
  mpz_class fact = 1;
  for (int n = 1; n <= t_order; ++n) {
    fact *= n;
    std::vector<std::vector<int>> types;
    std::vector<int> cur;
    partitions(n, n, cur, types);
    Series acc;
    for (const auto &type : types) {
      Rational w(class_size(type), fact);
      w.canonicalize();
      acc += p_top_eval(x, perm_of_type(type)).scaled(Cyclotomic(w));
    }
    out.at(n) = acc;
  }
  return out;
}

DevotoElement p_str(const DevotoElement &x, const GroupPtr &wreath_group, const OrbitConvention &conv) {
  if (wreath_group->kind() != FiniteGroup::Kind::Wreath || !wreath_group->base()->equals(*x.group()))
    throw GroupError("p_str: target must be a wreath product over the element's group");
  if (x.level() != 1)
    throw std::invalid_argument("p_str: input must have level 1");
  const FiniteGroup &w = *wreath_group;
  return DevotoElement::from_function(wreath_group, [&](int a, int b) {
    Series v(1);
    for (const auto &d : orbit_data(w, a, b, conv))
      v *= hecke_substitute(x.eval(d.g_c, d.u), d.big_n, d.k, d.m);
    return v;
  });
}

DevotoElement p_str(const DevotoElement &x, int n, const OrbitConvention &conv, std::size_t cap) {
  return p_str(x, FiniteGroup::wreath(x.group(), n, cap), conv);
}

namespace {

Series hecke_value(const std::function<const Series &(int, int)> &x, const FiniteGroup &grp, int g, int h, int n) {
  Series acc;
  for (const auto &tc : transitive_classes(n)) {
    const int gk = grp.pow(g, tc.k);
    const int hh = grp.mul(grp.pow(g, -tc.m), grp.pow(h, tc.big_n));
    acc += hecke_substitute(x(gk, hh), tc.big_n, tc.k, tc.m);
  }
  return acc.scaled(Cyclotomic(make_rational(1, n)));
}

} // namespace

DevotoElement hecke_T(const DevotoElement &x, int n) {
  if (x.level() != 1)
    throw std::invalid_argument("hecke_T: input must have level 1");
  const FiniteGroup &grp = *x.group();
  auto lookup = [&](int g, int h) -> const Series & { return x.eval(g, h); };
  return DevotoElement::from_function(x.group(), [&](int g, int h) { return hecke_value(lookup, grp, g, h, n); });
}

Series hecke_T(const Series &x, int n) {
  static const GroupPtr one = FiniteGroup::trivial();
  auto lookup = [&](int, int) -> const Series & { return x; };
  return hecke_value(lookup, *one, 0, 0, n);
}

namespace {

OrbitSignature signature_of(const Perm &sigma, const Perm &tau) {
  const std::size_t n = sigma.size();
  std::vector<char> seen(n, 0);
  OrbitSignature sig;
  for (std::size_t p = 0; p < n; ++p) {
    if (seen[p])
      continue;
    std::vector<int> pts{static_cast<int>(p)};
    seen[p] = 1;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (int q : {sigma[static_cast<std::size_t>(pts[i])], tau[static_cast<std::size_t>(pts[i])]})
        if (!seen[static_cast<std::size_t>(q)]) {
          seen[static_cast<std::size_t>(q)] = 1;
          pts.push_back(q);
        }
    int k = 1;
    for (int q = sigma[p]; q != static_cast<int>(p); q = sigma[static_cast<std::size_t>(q)])
      ++k;
    const int big_n = static_cast<int>(pts.size()) / k;
    int target = static_cast<int>(p);
    for (int s = 0; s < big_n; ++s)
      target = tau[static_cast<std::size_t>(target)];
    int m = 0;
    for (int q = static_cast<int>(p); q != target; q = sigma[static_cast<std::size_t>(q)])
      ++m;
    sig.push_back({big_n, k, m});
  }
  std::sort(sig.begin(), sig.end());
  return sig;
}

} // namespace

const std::map<OrbitSignature, std::int64_t> &commuting_pair_signatures(int n) {
  static std::mutex mutex;
  static std::map<int, std::map<OrbitSignature, std::int64_t>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  std::vector<Perm> perms;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<OrbitSignature, std::int64_t> tally;
  for (const auto &s : perms)
    for (const auto &t : perms)
      if (compose(s, t) == compose(t, s))
        ++tally[signature_of(s, t)];
  return cache.emplace(n, std::move(tally)).first->second;
}

DevotoElement sym_str(const DevotoElement &x, int n, SymMethod method) {
  if (n < 0)
    throw std::invalid_argument("sym_str: n must be nonnegative");
  if (x.level() != 1)
    throw std::invalid_argument("sym_str: input must have level 1");
  if (n == 0)
    return DevotoElement::constant(x.group(), Series(1));
  if (method == SymMethod::Exp)
    return sym_str_total(x, n)[static_cast<std::size_t>(n)];
  const FiniteGroup &grp = *x.group();
  const auto &sigs = commuting_pair_signatures(n);
  mpz_class fact = 1;
  for (int i = 2; i <= n; ++i)
    fact *= i;
  return DevotoElement::from_function(x.group(), [&](int g, int h) {
    std::map<TransitiveClass, Series> factor;
    Series acc;
    for (const auto &[sig, count] : sigs) {
      Series term(1);
      for (const auto &tc : sig) {
        auto it = factor.find(tc);
        if (it == factor.end()) {
          const int gk = grp.pow(g, tc.k);
          const int hh = grp.mul(grp.pow(g, -tc.m), grp.pow(h, tc.big_n));
          it = factor.emplace(tc, hecke_substitute(x.eval(gk, hh), tc.big_n, tc.k, tc.m)).first;
        }
        term *= it->second;
      }
      Rational w(mpz_class(count), fact);
      w.canonicalize();
      acc += term.scaled(Cyclotomic(w));
    }
    return acc;
  });
}

namespace {

// Per pair class, the t-series sum_{m>=1} T_m(x) t^m.
std::vector<BivariateSeries> hecke_generating(const DevotoElement &x, int t_order) {
  std::vector<DevotoElement> hecke;
  for (int m = 1; m <= t_order; ++m)
    hecke.push_back(hecke_T(x, m));
  std::vector<BivariateSeries> out;
  for (std::size_t pc = 0; pc < x.values().size(); ++pc) {
    BivariateSeries b(t_order);
    for (int m = 1; m <= t_order; ++m)
      b.at(m) = hecke[static_cast<std::size_t>(m - 1)].value(pc);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<DevotoElement> unpack(const DevotoElement &like, const std::vector<BivariateSeries> &per_class, int t_order) {
  std::vector<DevotoElement> out;
  for (int n = 0; n <= t_order; ++n) {
    DevotoElement e(like.group());
    for (std::size_t pc = 0; pc < per_class.size(); ++pc)
      e.set_value(pc, per_class[pc][n]);
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace

std::vector<DevotoElement> sym_str_total(const DevotoElement &x, int t_order) {
  if (x.level() != 1)
    throw std::invalid_argument("sym_str_total: input must have level 1");
  auto gen = hecke_generating(x, t_order);
  for (auto &b : gen)
    b = series_exp(b);
  return unpack(x, gen, t_order);
}

std::vector<DevotoElement> lambda_str_total(const DevotoElement &x, int t_order) {
  auto sym = sym_str_total(x, t_order);
  std::vector<BivariateSeries> per_class;
  for (std::size_t pc = 0; pc < x.values().size(); ++pc) {
    BivariateSeries b(t_order);
    for (int n = 0; n <= t_order; ++n)
      b.at(n) = sym[static_cast<std::size_t>(n)].value(pc);
    per_class.push_back(series_inv(b));
  }
  return unpack(x, per_class, t_order);
}

IdentityReport compare_elements(const DevotoElement &a, const DevotoElement &b) {
  if (!same_group(a.group(), b.group()))
    return {false, "elements live over different groups"};
  const auto &pcs = a.group()->pair_classes().classes;
  for (std::size_t i = 0; i < pcs.size(); ++i)
    if (auto e = first_difference(a.value(i), b.value(i)))
      return {false, "pair class " + std::to_string(i) + " (g=" + std::to_string(pcs[i].g) +
                         ", h=" + std::to_string(pcs[i].h) + ") differs at q^" + e->to_string() + ": " +
                         a.value(i).to_string() + " vs " + b.value(i).to_string()};
  return {};
}

IdentityReport verify_iterated(const DevotoElement &x, int n, int m) {
  auto inner = FiniteGroup::wreath(x.group(), m);
  auto outer = FiniteGroup::wreath(inner, n);
  auto big = FiniteGroup::wreath(x.group(), n * m);
  DevotoElement lhs = p_str(p_str(x, inner), outer);
  DevotoElement rhs = restrict_along(p_str(x, big), iota(outer, big));
  return compare_elements(lhs, rhs);
}

IdentityReport verify_block_sum(const DevotoElement &x, int n, int m) {
  auto wn = FiniteGroup::wreath(x.group(), n);
  auto wm = FiniteGroup::wreath(x.group(), m);
  auto big = FiniteGroup::wreath(x.group(), n + m);
  DevotoElement lhs = restrict_along(p_str(x, big), block_sum(wn, wm, big));
  DevotoElement rhs = external_product(p_str(x, wn), p_str(x, wm));
  return compare_elements(lhs, rhs);
}

IdentityReport verify_product_axiom(const DevotoElement &x, const DevotoElement &y, int n) {
  DevotoElement xy = external_product(x, y);
  auto source = FiniteGroup::wreath(xy.group(), n);
  DevotoElement lhs = p_str(xy, source);
  DevotoElement ext = external_product(p_str(x, n), p_str(y, n));
  DevotoElement rhs = restrict_along(ext, split_product_wreath(source, ext.group()));
  return compare_elements(lhs, rhs);
}

} // namespace tatek
