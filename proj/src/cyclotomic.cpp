#include "tatek/cyclotomic.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace tatek {

Rational parse_rational(const std::string &text) {
  if (text.empty())
    throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: " + text);
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational &r) { return r.get_str(); }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      result -= result / p;
    }
  }
  if (n > 1)
    result -= result / n;
  return result;
}

namespace {

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    ps.push_back(n);
  return ps;
}

// Everything about Q(zeta_N) that is reused across operations.
struct OrderData {
  int n = 1;
  int phi = 1;
  std::vector<long> poly;                // Phi_N, constant first, monic of degree phi
  std::vector<std::vector<long>> powers; // x^e mod Phi_N for 0 <= e < N
};

// Data for testing membership of Q(zeta_N) elements in Q(zeta_{N/p}), p || N.
struct DescentData {
  std::vector<std::vector<long>> embed; // phi(N) x phi(M): column i is zeta_M^i
  std::vector<int> pivot_rows;          // phi(M) rows of embed forming an invertible block
  std::vector<std::vector<Rational>> inv_block;
};

std::mutex cache_mutex;
std::unordered_map<int, std::unique_ptr<OrderData>> order_cache;
std::unordered_map<long, std::unique_ptr<DescentData>> descent_cache;

std::vector<long> compute_cyclotomic_poly(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0)
      continue;
    const std::vector<long> &div = cyclotomic_polynomial(d);
    int dd = static_cast<int>(div.size()) - 1;
    int dn = static_cast<int>(num.size()) - 1;
    std::vector<long> quot(dn - dd + 1, 0);
    for (int i = dn; i >= dd; --i) {
      long c = num[i];
      quot[i - dd] = c;
      if (c != 0)
        for (int j = 0; j <= dd; ++j)
          num[i - dd + j] -= c * div[j];
    }
    num = std::move(quot);
  }
  return num;
}

const OrderData &order_data(int n);

std::unique_ptr<OrderData> build_order_data(int n) {
  auto d = std::make_unique<OrderData>();
  d->n = n;
  d->phi = euler_phi(n);
  d->poly = cyclotomic_polynomial(n);
  d->powers.assign(n, std::vector<long>(d->phi, 0));
  std::vector<long> cur(d->phi, 0);
  cur[0] = 1;
  for (int e = 0; e < n; ++e) {
    d->powers[e] = cur;
    // multiply by x and reduce the x^phi term
    long top = cur[d->phi - 1];
    for (int i = d->phi - 1; i > 0; --i)
      cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < d->phi; ++i)
        cur[i] -= top * d->poly[i];
  }
  return d;
}

const OrderData &order_data_locked(int n) {
  auto it = order_cache.find(n);
  if (it != order_cache.end())
    return *it->second;
  auto data = build_order_data(n);
  const OrderData &ref = *data;
  order_cache.emplace(n, std::move(data));
  return ref;
}

const OrderData &order_data(int n) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  return order_data_locked(n);
}

// Gauss-Jordan inverse of a square rational matrix; throws if singular.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0)
      ++piv;
    if (piv == n)
      throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational s = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= s;
      inv[col][j] *= s;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0)
        continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::unique_ptr<DescentData> build_descent(int n, int p) {
  const OrderData &big = order_data_locked(n);
  const int m = n / p;
  const int phim = euler_phi(m);
  auto d = std::make_unique<DescentData>();
  d->embed.assign(big.phi, std::vector<long>(phim, 0));
  for (int i = 0; i < phim; ++i) {
    const auto &col = big.powers[(static_cast<long>(i) * p) % n];
    for (int r = 0; r < big.phi; ++r)
      d->embed[r][i] = col[r];
  }
  // Greedy choice of independent rows via incremental elimination.
  std::vector<std::vector<Rational>> basis; // reduced copies of chosen rows
  std::vector<int> basis_pivot;
  for (int r = 0; r < big.phi && static_cast<int>(d->pivot_rows.size()) < phim; ++r) {
    std::vector<Rational> row(phim);
    for (int j = 0; j < phim; ++j)
      row[j] = d->embed[r][j];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      int pc = basis_pivot[b];
      if (row[pc] != 0) {
        Rational f = row[pc] / basis[b][pc];
        for (int j = 0; j < phim; ++j)
          row[j] -= f * basis[b][j];
      }
    }
    int pc = -1;
    for (int j = 0; j < phim; ++j)
      if (row[j] != 0) {
        pc = j;
        break;
      }
    if (pc < 0)
      continue;
    basis.push_back(std::move(row));
    basis_pivot.push_back(pc);
    d->pivot_rows.push_back(r);
  }
  if (static_cast<int>(d->pivot_rows.size()) != phim)
    throw std::logic_error("cyclotomic descent: embedding not injective");
  std::vector<std::vector<Rational>> block(phim, std::vector<Rational>(phim));
  for (int i = 0; i < phim; ++i)
    for (int j = 0; j < phim; ++j)
      block[i][j] = d->embed[d->pivot_rows[i]][j];
  d->inv_block = invert(std::move(block));
  return d;
}

const DescentData &descent_data(int n, int p) {
  std::lock_guard<std::mutex> lock(cache_mutex);
  long key = static_cast<long>(n) * 1000003L + p;
  auto it = descent_cache.find(key);
  if (it != descent_cache.end())
    return *it->second;
  auto data = build_descent(n, p);
  const DescentData &ref = *data;
  descent_cache.emplace(key, std::move(data));
  return ref;
}

// Accumulates c * x^e (e taken mod n) into a power-basis vector.
void add_monomial(std::vector<Rational> &acc, const OrderData &d, std::int64_t e, const Rational &c) {
  std::int64_t r = e % d.n;
  if (r < 0)
    r += d.n;
  const auto &pw = d.powers[static_cast<std::size_t>(r)];
  for (int i = 0; i < d.phi; ++i)
    if (pw[i] != 0)
      acc[i] += c * pw[i];
}

} // namespace

const std::vector<long> &cyclotomic_polynomial(int n) {
  static std::mutex poly_mutex;
  static std::unordered_map<int, std::vector<long>> polys;
  {
    std::lock_guard<std::mutex> lock(poly_mutex);
    auto it = polys.find(n);
    if (it != polys.end())
      return it->second;
  }
  std::vector<long> p;
  if (n == 1)
    p = {-1, 1};
  else
    p = compute_cyclotomic_poly(n);
  std::lock_guard<std::mutex> lock(poly_mutex);
  return polys.emplace(n, std::move(p)).first->second;
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t order, std::int64_t exponent) {
  if (order < 1)
    throw std::invalid_argument("root_of_unity: order must be positive");
  return from_terms(order, {{exponent, Rational(1)}});
}

Cyclotomic Cyclotomic::from_terms(std::int64_t order,
                                  const std::vector<std::pair<std::int64_t, Rational>> &terms) {
  if (order < 1)
    throw std::invalid_argument("cyclotomic order must be positive");
  const OrderData &d = order_data(static_cast<int>(order));
  std::vector<Rational> acc(d.phi);
  for (const auto &[e, c] : terms)
    add_monomial(acc, d, e, c);
  return Cyclotomic(static_cast<int>(order), std::move(acc));
}

void Cyclotomic::canonicalize() {
  bool only_constant = true;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) {
      only_constant = false;
      break;
    }
  if (only_constant) {
    coeffs_.resize(1);
    order_ = 1;
    return;
  }
  bool progressed = true;
  while (progressed && order_ > 1) {
    progressed = false;
    for (int p : prime_factors(order_)) {
      const int m = order_ / p;
      if (m % p == 0) {
        // Q(zeta_m) sits inside as the span of x^{p i}.
        bool ok = true;
        for (std::size_t i = 0; i < coeffs_.size() && ok; ++i)
          if (coeffs_[i] != 0 && i % p != 0)
            ok = false;
        if (!ok)
          continue;
        std::vector<Rational> next(euler_phi(m));
        for (std::size_t i = 0; i < coeffs_.size(); i += p)
          next[i / p] = coeffs_[i];
        coeffs_ = std::move(next);
        order_ = m;
        progressed = true;
        break;
      }
      const DescentData &dd = descent_data(order_, p);
      const std::size_t phim = dd.pivot_rows.size();
      std::vector<Rational> c(phim);
      for (std::size_t i = 0; i < phim; ++i)
        for (std::size_t j = 0; j < phim; ++j)
          if (dd.inv_block[i][j] != 0)
            c[i] += dd.inv_block[i][j] * coeffs_[dd.pivot_rows[j]];
      bool ok = true;
      for (std::size_t r = 0; r < coeffs_.size() && ok; ++r) {
        Rational v;
        for (std::size_t i = 0; i < phim; ++i)
          if (dd.embed[r][i] != 0)
            v += c[i] * dd.embed[r][i];
        if (v != coeffs_[r])
          ok = false;
      }
      if (!ok)
        continue;
      coeffs_ = std::move(c);
      order_ = m;
      progressed = true;
      break;
    }
  }
  if (order_ == 1)
    coeffs_.resize(1);
}

std::vector<std::pair<int, Rational>> Cyclotomic::terms() const {
  std::vector<std::pair<int, Rational>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out.emplace_back(static_cast<int>(i), coeffs_[i]);
  return out;
}

const Rational &Cyclotomic::rational() const {
  if (order_ != 1)
    throw std::domain_error("cyclotomic value is not rational: " + to_string());
  return coeffs_[0];
}

std::vector<Rational> Cyclotomic::embed(int target_order) const {
  if (target_order % order_ != 0)
    throw std::invalid_argument("embed: order does not divide target");
  const OrderData &d = order_data(target_order);
  const std::int64_t step = target_order / order_;
  std::vector<Rational> acc(d.phi);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      add_monomial(acc, d, static_cast<std::int64_t>(i) * step, coeffs_[i]);
  return acc;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

Cyclotomic operator+(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.order_ == 1 && b.order_ == 1)
    return Cyclotomic(Rational(a.coeffs_[0] + b.coeffs_[0]));
  if (a.order_ == b.order_) {
    std::vector<Rational> s(a.coeffs_.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      s[i] = a.coeffs_[i] + b.coeffs_[i];
    return Cyclotomic(a.order_, std::move(s));
  }
  int l = std::lcm(a.order_, b.order_);
  std::vector<Rational> s = a.embed(l);
  std::vector<Rational> t = b.embed(l);
  for (std::size_t i = 0; i < s.size(); ++i)
    s[i] += t[i];
  return Cyclotomic(l, std::move(s));
}

Cyclotomic operator-(const Cyclotomic &a, const Cyclotomic &b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.order_ == 1) {
    if (a.coeffs_[0] == 0)
      return Cyclotomic();
    Cyclotomic r = b;
    for (auto &c : r.coeffs_)
      c *= a.coeffs_[0];
    return r;
  }
  if (b.order_ == 1)
    return b * a;
  int l = std::lcm(a.order_, b.order_);
  const OrderData &d = order_data(l);
  std::vector<Rational> x = a.order_ == l ? a.coeffs_ : a.embed(l);
  std::vector<Rational> y = b.order_ == l ? b.coeffs_ : b.embed(l);
  std::vector<Rational> raw(2 * d.phi - 1);
  for (int i = 0; i < d.phi; ++i) {
    if (x[i] == 0)
      continue;
    for (int j = 0; j < d.phi; ++j)
      if (y[j] != 0)
        raw[i + j] += x[i] * y[j];
  }
  for (int i = 2 * d.phi - 2; i >= d.phi; --i) {
    if (raw[i] == 0)
      continue;
    Rational c = raw[i];
    for (int j = 0; j < d.phi; ++j)
      if (d.poly[j] != 0)
        raw[i - d.phi + j] -= c * d.poly[j];
  }
  raw.resize(d.phi);
  return Cyclotomic(l, std::move(raw));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero cyclotomic");
  if (order_ == 1)
    return Cyclotomic(Rational(1 / coeffs_[0]));
  const OrderData &d = order_data(order_);
  // Column j of the multiplication matrix is x^j * this.
  std::vector<std::vector<Rational>> mat(d.phi, std::vector<Rational>(d.phi));
  for (int j = 0; j < d.phi; ++j) {
    std::vector<Rational> col(d.phi);
    for (int i = 0; i < d.phi; ++i)
      if (coeffs_[i] != 0)
        add_monomial(col, d, i + j, coeffs_[i]);
    for (int i = 0; i < d.phi; ++i)
      mat[i][j] = col[i];
  }
  auto inv = invert(std::move(mat));
  std::vector<Rational> y(d.phi);
  for (int i = 0; i < d.phi; ++i)
    y[i] = inv[i][0];
  return Cyclotomic(order_, std::move(y));
}

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  if (order_ == 1)
    return *this;
  if (std::gcd(static_cast<std::int64_t>(order_), a < 0 ? -a : a) != 1)
    throw std::invalid_argument("galois: exponent not coprime to order");
  const OrderData &d = order_data(order_);
  std::vector<Rational> acc(d.phi);
  for (int i = 0; i < d.phi; ++i)
    if (coeffs_[i] != 0)
      add_monomial(acc, d, static_cast<std::int64_t>(i) * a, coeffs_[i]);
  return Cyclotomic(order_, std::move(acc));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<int>{}(order_);
  for (const auto &c : coeffs_) {
    std::size_t v = mpz_get_ui(c.get_num_mpz_t()) * 31u + mpz_get_ui(c.get_den_mpz_t());
    if (mpz_sgn(c.get_num_mpz_t()) < 0)
      v = ~v;
    h = h * 1000003u ^ v;
  }
  return h;
}

std::string Cyclotomic::to_string() const {
  if (order_ == 1)
    return coeffs_[0].get_str();
  std::string out;
  for (const auto &[e, c] : terms()) {
    std::string piece;
    if (e == 0)
      piece = c.get_str();
    else {
      const std::string mono = "E(" + std::to_string(order_) + ")^" + std::to_string(e);
      piece = c == 1 ? mono : c == -1 ? "-" + mono : c.get_str() + "*" + mono;
    }
    if (out.empty())
      out = piece;
    else if (piece[0] == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out.empty() ? "0" : out;
}

} // namespace tatek
