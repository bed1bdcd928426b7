#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tatek/group.hpp"

namespace tatek {

/// Combinatorial data of one <sigma, tau>-orbit of a commuting pair in G wr S_n.
struct OrbitDatum {
  int k;     // cycle length of sigma on the orbit
  int big_n; // number of sigma-cycles in the orbit
  int m;     // total shift: tau^N = sigma^m on the orbit, 0 <= m < k
  int g_c;   // cycle product g_{i_k} ... g_{i_1} at the base cycle
  int u;     // return multiplier, commutes with g_c
  friend bool operator==(const OrbitDatum &, const OrbitDatum &) = default;
};

/// Base-point convention for orbit_data. The canonical convention takes the
/// cycle through the minimal point of each orbit, listed from that point, and
/// emits orbits by increasing minimal point. A seed picks base points and the
/// output order pseudo-randomly instead.
struct OrbitConvention {
  std::optional<std::uint64_t> seed;
};

/// Point of {0..n-1} x G acted on from the left by G wr S_n:
/// (g, s) . (i, x) = (s(i), g_{s(i)} x).
struct WreathToken {
  int point;
  int value;
  friend bool operator==(const WreathToken &, const WreathToken &) = default;
};

WreathToken wreath_act(const FiniteGroup &g, const std::vector<int> &base, const Perm &perm, WreathToken t);

/// Membership test for the centralizer of (g, sigma) in G wr S_n, in the form
/// tau sigma = sigma tau and g_{sigma(tau(i))} h_{tau(i)} = h_{tau(sigma(i))} g_{sigma(i)}.
bool wreath_centralizes(const FiniteGroup &g, const std::vector<int> &gb, const Perm &sigma,
                        const std::vector<int> &hb, const Perm &tau);

/// Orbit data of a commuting pair (gb, sigma), (hb, tau) of G wr S_n, one datum
/// per <sigma, tau>-orbit on {0..n-1}. Throws GroupError if the pair does not commute.
std::vector<OrbitDatum> orbit_data(const FiniteGroup &g, const std::vector<int> &gb, const Perm &sigma,
                                   const std::vector<int> &hb, const Perm &tau, const OrbitConvention &conv = {});

/// Same, for two elements of a wreath-kind group.
std::vector<OrbitDatum> orbit_data(const FiniteGroup &wreath, int a, int b, const OrbitConvention &conv = {});

/// Element order of (gb, sigma).
int wreath_element_order(const FiniteGroup &g, const std::vector<int> &gb, const Perm &sigma);

/// Blocks {0..k-1}, {k..2k-1}, ... cycled by sigma; tau moves block b to block
/// b + 1 and wraps the last block onto the first with offset m.
std::pair<Perm, Perm> standard_transitive_pair(int big_n, int k, int m);

/// The embedding (G wr S_m) wr S_n -> G wr S_{mn} sending point (i, j) to
/// i + j n (0-based). `outer` must be a wreath of a wreath; `target` may be
/// supplied to reuse an existing G wr S_{mn}.
Homomorphism iota(const GroupPtr &outer, GroupPtr target = nullptr);

/// Permutation part of iota on S_m wr S_n (or any (G wr S_m) wr S_n).
Perm iota_permutation(const FiniteGroup &outer, int w);

/// (G wr S_n) x (G wr S_m) -> G wr S_{n+m}, placing the blocks side by side.
Homomorphism block_sum(const GroupPtr &left, const GroupPtr &right, GroupPtr target = nullptr);

/// (G x H) wr S_n -> (G wr S_n) x (H wr S_n).
Homomorphism split_product_wreath(const GroupPtr &source, GroupPtr target = nullptr);

} // namespace tatek
