#include "tatek/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace tatek {

namespace {

void check_shape(const FiniteGroup &g, const std::vector<int> &base, const Perm &perm) {
  if (base.size() != perm.size() || !is_permutation(perm))
    throw GroupError("malformed wreath element");
  for (int x : base)
    if (x < 0 || static_cast<std::size_t>(x) >= g.size())
      throw GroupError("wreath base entry out of range");
}

// (g, s)^-1 . (i, x) = (s^-1(i), g_i^-1 x)
WreathToken wreath_act_inverse(const FiniteGroup &g, const std::vector<int> &base, const Perm &sinv, WreathToken t) {
  return {sinv[static_cast<std::size_t>(t.point)], g.mul(g.inv(base[static_cast<std::size_t>(t.point)]), t.value)};
}

} // namespace

WreathToken wreath_act(const FiniteGroup &g, const std::vector<int> &base, const Perm &perm, WreathToken t) {
  const int target = perm[static_cast<std::size_t>(t.point)];
  return {target, g.mul(base[static_cast<std::size_t>(target)], t.value)};
}

bool wreath_centralizes(const FiniteGroup &g, const std::vector<int> &gb, const Perm &sigma,
                        const std::vector<int> &hb, const Perm &tau) {
  check_shape(g, gb, sigma);
  check_shape(g, hb, tau);
  if (compose(sigma, tau) != compose(tau, sigma))
    return false;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const auto ti = static_cast<std::size_t>(tau[i]);
    const auto si = static_cast<std::size_t>(sigma[i]);
    const auto sti = static_cast<std::size_t>(sigma[ti]);
    const auto tsi = static_cast<std::size_t>(tau[si]);
    if (g.mul(gb[sti], hb[ti]) != g.mul(hb[tsi], gb[si]))
      return false;
  }
  return true;
}

std::vector<OrbitDatum> orbit_data(const FiniteGroup &g, const std::vector<int> &gb, const Perm &sigma,
                                   const std::vector<int> &hb, const Perm &tau, const OrbitConvention &conv) {
  if (!wreath_centralizes(g, gb, sigma, hb, tau))
    throw GroupError("orbit_data: the pair does not commute");
  const int n = static_cast<int>(sigma.size());
  const Perm sinv = inverse(sigma);
  std::mt19937_64 rng(conv.seed.value_or(0));

  std::vector<int> orbit_of(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> orbits;
  for (int p = 0; p < n; ++p) {
    if (orbit_of[static_cast<std::size_t>(p)] >= 0)
      continue;
    const int id = static_cast<int>(orbits.size());
    std::vector<int> pts{p};
    orbit_of[static_cast<std::size_t>(p)] = id;
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (int q : {sigma[static_cast<std::size_t>(pts[i])], tau[static_cast<std::size_t>(pts[i])]})
        if (orbit_of[static_cast<std::size_t>(q)] < 0) {
          orbit_of[static_cast<std::size_t>(q)] = id;
          pts.push_back(q);
        }
    orbits.push_back(std::move(pts));
  }
  if (conv.seed)
    std::shuffle(orbits.begin(), orbits.end(), rng);

  std::vector<OrbitDatum> out;
  for (const auto &pts : orbits) {
    // Token base point: the last point of the base cycle, so that the cycle
    // product reads g_{i_k} ... g_{i_1} with i_1 the cycle start.
    int start = *std::min_element(pts.begin(), pts.end());
    if (conv.seed)
      start = pts[std::uniform_int_distribution<std::size_t>(0, pts.size() - 1)(rng)];
    const int b = sinv[static_cast<std::size_t>(start)];

    int k = 1;
    for (int p = sigma[static_cast<std::size_t>(b)]; p != b; p = sigma[static_cast<std::size_t>(p)])
      ++k;
    const int big_n = static_cast<int>(pts.size()) / k;

    WreathToken t{b, g.identity()};
    for (int s = 0; s < k; ++s)
      t = wreath_act(g, gb, sigma, t);
    const int g_c = t.value;

    t = {b, g.identity()};
    for (int s = 0; s < big_n; ++s)
      t = wreath_act(g, hb, tau, t);
    int m = 0;
    for (int p = b; p != t.point; p = sigma[static_cast<std::size_t>(p)]) {
      ++m;
      if (m >= k)
        throw GroupError("orbit_data: tau^N leaves the base cycle");
    }
    for (int s = 0; s < m; ++s)
      t = wreath_act_inverse(g, gb, sinv, t);
    if (t.point != b)
      throw GroupError("orbit_data: traversal did not return to the base point");
    const int u = t.value;
    if (!g.commute(g_c, u))
      throw GroupError("orbit_data: return multiplier does not commute with the cycle product");
    out.push_back({k, big_n, m, g_c, u});
  }
  return out;
}

std::vector<OrbitDatum> orbit_data(const FiniteGroup &wreath, int a, int b, const OrbitConvention &conv) {
  return orbit_data(*wreath.base(), wreath.wreath_base(a), wreath.wreath_perm(a), wreath.wreath_base(b),
                    wreath.wreath_perm(b), conv);
}

int wreath_element_order(const FiniteGroup &g, const std::vector<int> &gb, const Perm &sigma) {
  check_shape(g, gb, sigma);
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::int64_t order = 1;
  for (int p = 0; p < n; ++p) {
    if (seen[static_cast<std::size_t>(p)])
      continue;
    int k = 0;
    for (int q = p; !seen[static_cast<std::size_t>(q)]; q = sigma[static_cast<std::size_t>(q)]) {
      seen[static_cast<std::size_t>(q)] = 1;
      ++k;
    }
    WreathToken t{p, g.identity()};
    for (int s = 0; s < k; ++s)
      t = wreath_act(g, gb, sigma, t);
    order = std::lcm(order, static_cast<std::int64_t>(k) * g.order(t.value));
  }
  return static_cast<int>(order);
}

std::pair<Perm, Perm> standard_transitive_pair(int big_n, int k, int m) {
  if (big_n < 1 || k < 1 || m < 0 || m >= k)
    throw GroupError("standard_transitive_pair: need N, k >= 1 and 0 <= m < k");
  const int n = big_n * k;
  Perm sigma(static_cast<std::size_t>(n)), tau(static_cast<std::size_t>(n));
  for (int blk = 0; blk < big_n; ++blk)
    for (int r = 0; r < k; ++r) {
      const int p = blk * k + r;
      sigma[static_cast<std::size_t>(p)] = blk * k + (r + 1) % k;
      tau[static_cast<std::size_t>(p)] = blk + 1 < big_n ? p + k : (r + m) % k;
    }
  return {sigma, tau};
}

Perm iota_permutation(const FiniteGroup &outer, int w) {
  if (outer.kind() != FiniteGroup::Kind::Wreath || outer.base()->kind() != FiniteGroup::Kind::Wreath)
    throw GroupError("iota: source must be (G wr S_m) wr S_n");
  const FiniteGroup &inner = *outer.base();
  const int n = outer.degree();
  const int m = inner.degree();
  const auto blocks = outer.wreath_base(w);
  const Perm sigma = outer.wreath_perm(w);
  Perm out(static_cast<std::size_t>(n * m));
  for (int i = 0; i < n; ++i) {
    const int si = sigma[static_cast<std::size_t>(i)];
    const Perm pi = inner.wreath_perm(blocks[static_cast<std::size_t>(si)]);
    for (int j = 0; j < m; ++j)
      out[static_cast<std::size_t>(i + j * n)] = si + pi[static_cast<std::size_t>(j)] * n;
  }
  return out;
}

Homomorphism iota(const GroupPtr &outer, GroupPtr target) {
  if (outer->kind() != FiniteGroup::Kind::Wreath || outer->base()->kind() != FiniteGroup::Kind::Wreath)
    throw GroupError("iota: source must be (G wr S_m) wr S_n");
  const FiniteGroup &inner = *outer->base();
  const int n = outer->degree();
  const int m = inner.degree();
  if (!target)
    target = FiniteGroup::wreath(inner.base(), n * m);
  if (target->kind() != FiniteGroup::Kind::Wreath || target->degree() != n * m ||
      !target->base()->equals(*inner.base()))
    throw GroupError("iota: target must be G wr S_{mn}");
  return Homomorphism::from_function(outer, target, [&](int w) {
    const auto blocks = outer->wreath_base(w);
    std::vector<int> base(static_cast<std::size_t>(n * m));
    for (int a = 0; a < n; ++a) {
      const auto f = inner.wreath_base(blocks[static_cast<std::size_t>(a)]);
      for (int b = 0; b < m; ++b)
        base[static_cast<std::size_t>(a + b * n)] = f[static_cast<std::size_t>(b)];
    }
    return target->wreath_make(base, iota_permutation(*outer, w));
  });
}

Homomorphism block_sum(const GroupPtr &left, const GroupPtr &right, GroupPtr target) {
  if (left->kind() != FiniteGroup::Kind::Wreath || right->kind() != FiniteGroup::Kind::Wreath ||
      !left->base()->equals(*right->base()))
    throw GroupError("block_sum: need G wr S_n and G wr S_m over the same G");
  const int n = left->degree();
  const int m = right->degree();
  auto source = FiniteGroup::product(left, right);
  if (!target)
    target = FiniteGroup::wreath(left->base(), n + m);
  return Homomorphism::from_function(source, target, [&](int e) {
    auto [a, b] = source->product_split(e);
    auto base = left->wreath_base(a);
    auto rb = right->wreath_base(b);
    base.insert(base.end(), rb.begin(), rb.end());
    Perm p = left->wreath_perm(a);
    for (int x : right->wreath_perm(b))
      p.push_back(x + n);
    return target->wreath_make(base, p);
  });
}

Homomorphism split_product_wreath(const GroupPtr &source, GroupPtr target) {
  if (source->kind() != FiniteGroup::Kind::Wreath || source->base()->kind() != FiniteGroup::Kind::Product)
    throw GroupError("split_product_wreath: source must be (G x H) wr S_n");
  const FiniteGroup &gh = *source->base();
  const int n = source->degree();
  if (!target)
    target = FiniteGroup::product(FiniteGroup::wreath(gh.left(), n), FiniteGroup::wreath(gh.right(), n));
  const FiniteGroup &wl = *target->left();
  const FiniteGroup &wr = *target->right();
  return Homomorphism::from_function(source, target, [&](int e) {
    const auto base = source->wreath_base(e);
    const Perm p = source->wreath_perm(e);
    std::vector<int> lb, rb;
    for (int x : base) {
      auto [l, r] = gh.product_split(x);
      lb.push_back(l);
      rb.push_back(r);
    }
    return target->product_make(wl.wreath_make(lb, p), wr.wreath_make(rb, p));
  });
}

} // namespace tatek
