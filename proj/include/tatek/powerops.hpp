#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "tatek/devoto.hpp"
#include "tatek/wreath.hpp"

namespace tatek {

/// Transitive commuting pair type in S_n: N blocks of k-cycles, wrap offset m.
struct TransitiveClass {
  int big_n;
  int k;
  int m;
  friend auto operator<=>(const TransitiveClass &, const TransitiveClass &) = default;
};

/// All (N, k, m) with N k = n and 0 <= m < k, in lexicographic order.
std::vector<TransitiveClass> transitive_classes(int n);

/// Product over cycles c of the permutation part of x([g_c]) with exponents
/// multiplied by the cycle length. `x` gives a series per conjugacy class of G.
Series p_top_eval(const FiniteGroup &g, const std::vector<Series> &x_by_class, const std::vector<int> &base,
                  const Perm &perm);
/// Scalar case (trivial G): product over cycles of x(q^{len}).
Series p_top_eval(const Series &x, const Perm &perm);

/// sum_n t^n (1/n!) sum_{tau in S_n} p_top_eval(x, (e; tau)).
BivariateSeries s_top_total(const Series &x, int t_order);

/// Stringy power operation: x over G to an element over G wr S_n.
DevotoElement p_str(const DevotoElement &x, int n, const OrbitConvention &conv = {},
                    std::size_t cap = kDefaultSizeCap);
/// Same, into a caller-supplied G wr S_n.
DevotoElement p_str(const DevotoElement &x, const GroupPtr &wreath_group, const OrbitConvention &conv = {});

/// Hecke operator T_n.
DevotoElement hecke_T(const DevotoElement &x, int n);
/// T_n on a scalar series (trivial group).
Series hecke_T(const Series &x, int n);

/// Tally of commuting pairs (sigma, tau) of S_n by the multiset of orbit types.
using OrbitSignature = std::vector<TransitiveClass>;
const std::map<OrbitSignature, std::int64_t> &commuting_pair_signatures(int n);

enum class SymMethod { Brute, Exp };

/// Stringy symmetric power Sym^n.
DevotoElement sym_str(const DevotoElement &x, int n, SymMethod method);
/// Sym^0 .. Sym^{t_order} via the exponential generating identity.
std::vector<DevotoElement> sym_str_total(const DevotoElement &x, int t_order);
/// Coefficients of the t-adic inverse of sum_n Sym^n t^n, indexed by t-degree.
std::vector<DevotoElement> lambda_str_total(const DevotoElement &x, int t_order);

struct IdentityReport {
  bool ok = true;
  std::string detail;
};

/// res_iota p_str(x, n m) against p_str(p_str(x, m), n) on (G wr S_m) wr S_n.
IdentityReport verify_iterated(const DevotoElement &x, int n, int m);
/// res p_str(x, n + m) along the block sum against p_str(x, n) x p_str(x, m).
IdentityReport verify_block_sum(const DevotoElement &x, int n, int m);
/// p_str(x x y, n) against the restriction of p_str(x, n) x p_str(y, n).
IdentityReport verify_product_axiom(const DevotoElement &x, const DevotoElement &y, int n);

/// Compares two elements over the same group pair class by pair class.
IdentityReport compare_elements(const DevotoElement &a, const DevotoElement &b);

} // namespace tatek
