#include "tatek/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace tatek {

namespace {

constexpr std::size_t kTableLimit = 1024;

std::size_t checked_mul(std::size_t a, std::size_t b, std::size_t cap, const std::string &what) {
  if (a != 0 && b > cap / a)
    throw GroupError(what + ": size exceeds cap " + std::to_string(cap));
  std::size_t r = a * b;
  if (r > cap)
    throw GroupError(what + ": size " + std::to_string(r) + " exceeds cap " + std::to_string(cap));
  return r;
}

} // namespace

Perm compose(const Perm &a, const Perm &b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

Perm inverse(const Perm &a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Perm &p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)])
      return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

GroupPtr FiniteGroup::from_generators(int degree, const std::vector<Perm> &generators, std::size_t cap,
                                      std::string name) {
  if (degree < 0)
    throw GroupError("negative degree");
  for (const auto &g : generators)
    if (static_cast<int>(g.size()) != degree || !is_permutation(g))
      throw GroupError("malformed permutation generator");
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->kind_ = Kind::Permutation;
  grp->degree_ = degree;
  grp->name_ = std::move(name);
  Perm id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<Encoding> seen;
  std::deque<Encoding> queue;
  auto to_enc = [](const Perm &p) { return Encoding(p.begin(), p.end()); };
  seen.insert(to_enc(id));
  queue.push_back(to_enc(id));
  while (!queue.empty()) {
    Perm x(queue.front().begin(), queue.front().end());
    queue.pop_front();
    for (const auto &g : generators) {
      Encoding y = to_enc(compose(g, x));
      if (seen.insert(y).second) {
        if (seen.size() > cap)
          throw GroupError("generated group exceeds size cap " + std::to_string(cap));
        queue.push_back(std::move(y));
      }
    }
  }
  grp->elements_.assign(seen.begin(), seen.end());
  for (const auto &g : generators) {
    int i = grp->index_of(to_enc(g));
    if (i != 0 && std::find(grp->generators_.begin(), grp->generators_.end(), i) == grp->generators_.end())
      grp->generators_.push_back(i);
  }
  grp->finish(cap);
  return grp;
}

GroupPtr FiniteGroup::symmetric(int n, std::size_t cap) {
  if (n < 0)
    throw GroupError("negative degree");
  std::size_t total = 1;
  for (int i = 2; i <= n; ++i)
    total = checked_mul(total, static_cast<std::size_t>(i), cap, "symmetric group");
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->kind_ = Kind::Permutation;
  grp->degree_ = n;
  grp->name_ = "S" + std::to_string(n);
  Encoding p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  grp->elements_.reserve(total);
  do
    grp->elements_.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  if (n >= 2) {
    Encoding t = grp->elements_[0];
    std::swap(t[0], t[1]);
    grp->generators_.push_back(grp->index_of(t));
  }
  if (n >= 3) {
    Encoding c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      c[static_cast<std::size_t>(i)] = (i + 1) % n;
    grp->generators_.push_back(grp->index_of(c));
  }
  grp->finish(cap);
  return grp;
}

GroupPtr FiniteGroup::cyclic(int n) {
  if (n < 1)
    throw GroupError("cyclic group order must be positive");
  Perm c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    c[static_cast<std::size_t>(i)] = (i + 1) % n;
  std::vector<Perm> gens;
  if (n > 1)
    gens.push_back(c);
  return from_generators(n, gens, kDefaultSizeCap, "Z/" + std::to_string(n));
}

GroupPtr FiniteGroup::trivial() { return from_generators(1, {}, kDefaultSizeCap, "1"); }

GroupPtr FiniteGroup::wreath(GroupPtr base, int n, std::size_t cap) {
  if (!base)
    throw GroupError("wreath: null base group");
  if (n < 1)
    throw GroupError("wreath: n must be positive");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i)
    total = checked_mul(total, base->size(), cap, "wreath product");
  for (int i = 2; i <= n; ++i)
    total = checked_mul(total, static_cast<std::size_t>(i), cap, "wreath product");
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->kind_ = Kind::Wreath;
  grp->degree_ = n;
  grp->left_ = base;
  grp->name_ = "(" + base->describe() + ") wr S" + std::to_string(n);
  std::vector<Perm> perms;
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do
    perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  grp->elements_.reserve(total);
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  const int b = static_cast<int>(base->size());
  while (true) {
    for (const auto &q : perms) {
      Encoding e(tuple.begin(), tuple.end());
      e.insert(e.end(), q.begin(), q.end());
      grp->elements_.push_back(std::move(e));
    }
    int pos = n - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == b - 1)
      tuple[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0)
      break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  // Base generators in slot 0, plus generators of S_n.
  Perm id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  std::vector<int> zeros(static_cast<std::size_t>(n), 0);
  for (int s : base->generators()) {
    auto bt = zeros;
    bt[0] = s;
    grp->generators_.push_back(grp->wreath_make(bt, id));
  }
  if (n >= 2) {
    Perm t = id;
    std::swap(t[0], t[1]);
    grp->generators_.push_back(grp->wreath_make(zeros, t));
  }
  if (n >= 3) {
    Perm c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      c[static_cast<std::size_t>(i)] = (i + 1) % n;
    grp->generators_.push_back(grp->wreath_make(zeros, c));
  }
  grp->finish(cap);
  return grp;
}

GroupPtr FiniteGroup::product(GroupPtr left, GroupPtr right, std::size_t cap) {
  if (!left || !right)
    throw GroupError("product: null factor");
  checked_mul(left->size(), right->size(), cap, "direct product");
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->kind_ = Kind::Product;
  grp->left_ = left;
  grp->right_ = right;
  grp->name_ = "(" + left->describe() + ") x (" + right->describe() + ")";
  for (std::size_t i = 0; i < left->size(); ++i)
    for (std::size_t j = 0; j < right->size(); ++j)
      grp->elements_.push_back({static_cast<std::int32_t>(i), static_cast<std::int32_t>(j)});
  for (int s : left->generators())
    grp->generators_.push_back(grp->product_make(s, 0));
  for (int s : right->generators())
    grp->generators_.push_back(grp->product_make(0, s));
  grp->finish(cap);
  return grp;
}

void FiniteGroup::finish(std::size_t cap) {
  if (elements_.size() > cap)
    throw GroupError("group exceeds size cap " + std::to_string(cap));
  const int n = static_cast<int>(elements_.size());
  if (static_cast<std::size_t>(n) <= kTableLimit) {
    table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = mul_raw(a, b);
  }
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    if (inverse_[static_cast<std::size_t>(a)] >= 0)
      continue;
    Encoding e;
    switch (kind_) {
    case Kind::Permutation: {
      Perm p(elements_[static_cast<std::size_t>(a)].begin(), elements_[static_cast<std::size_t>(a)].end());
      Perm q = tatek::inverse(p);
      e.assign(q.begin(), q.end());
      break;
    }
    case Kind::Wreath: {
      // (g, s)^-1 = (g', s^-1) with g'_j = g_{s(j)}^-1
      auto g = wreath_base(a);
      auto s = wreath_perm(a);
      std::vector<int> gi(g.size());
      for (std::size_t j = 0; j < g.size(); ++j)
        gi[j] = left_->inv(g[static_cast<std::size_t>(s[j])]);
      auto si = tatek::inverse(s);
      e.assign(gi.begin(), gi.end());
      e.insert(e.end(), si.begin(), si.end());
      break;
    }
    case Kind::Product: {
      auto [l, r] = product_split(a);
      e = {left_->inv(l), right_->inv(r)};
      break;
    }
    }
    int b = index_of(e);
    if (b < 0)
      throw GroupError("element set not closed under inversion");
    inverse_[static_cast<std::size_t>(a)] = b;
    inverse_[static_cast<std::size_t>(b)] = a;
  }
}

int FiniteGroup::index_of(const Encoding &e) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e)
    return -1;
  return static_cast<int>(it - elements_.begin());
}

int FiniteGroup::mul_raw(int a, int b) const {
  const Encoding &x = encoding(a);
  const Encoding &y = encoding(b);
  Encoding z(x.size());
  switch (kind_) {
  case Kind::Permutation:
    for (std::size_t i = 0; i < y.size(); ++i)
      z[i] = x[static_cast<std::size_t>(y[i])];
    break;
  case Kind::Wreath: {
    // (g, s)(h, t) = (g_i h_{s^-1(i)}, s t)
    const std::size_t n = static_cast<std::size_t>(degree_);
    Perm sinv(n);
    for (std::size_t i = 0; i < n; ++i)
      sinv[static_cast<std::size_t>(x[n + i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = left_->mul(x[i], y[static_cast<std::size_t>(sinv[i])]);
      z[n + i] = x[n + static_cast<std::size_t>(y[n + i])];
    }
    break;
  }
  case Kind::Product:
    z[0] = left_->mul(x[0], y[0]);
    z[1] = right_->mul(x[1], y[1]);
    break;
  }
  int r = index_of(z);
  if (r < 0)
    throw GroupError("element set not closed under multiplication");
  return r;
}

int FiniteGroup::mul(int a, int b) const {
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  return mul_raw(a, b);
}

int FiniteGroup::pow(int a, std::int64_t k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  int result = identity();
  int base = a;
  while (k > 0) {
    if (k & 1)
      result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int FiniteGroup::order(int a) const {
  int k = 1;
  for (int x = a; x != identity(); x = mul(x, a))
    ++k;
  return k;
}

Perm FiniteGroup::permutation(int e) const {
  if (kind_ != Kind::Permutation)
    throw GroupError("permutation(): not a permutation group");
  return Perm(encoding(e).begin(), encoding(e).end());
}

std::vector<int> FiniteGroup::wreath_base(int e) const {
  if (kind_ != Kind::Wreath)
    throw GroupError("wreath_base(): not a wreath product");
  const auto &x = encoding(e);
  return std::vector<int>(x.begin(), x.begin() + degree_);
}

Perm FiniteGroup::wreath_perm(int e) const {
  if (kind_ != Kind::Wreath)
    throw GroupError("wreath_perm(): not a wreath product");
  const auto &x = encoding(e);
  return Perm(x.begin() + degree_, x.end());
}

int FiniteGroup::wreath_make(const std::vector<int> &base, const Perm &perm) const {
  if (kind_ != Kind::Wreath)
    throw GroupError("wreath_make(): not a wreath product");
  if (static_cast<int>(base.size()) != degree_ || static_cast<int>(perm.size()) != degree_ || !is_permutation(perm))
    throw GroupError("malformed wreath element");
  Encoding e(base.begin(), base.end());
  e.insert(e.end(), perm.begin(), perm.end());
  int i = index_of(e);
  if (i < 0)
    throw GroupError("malformed wreath element");
  return i;
}

std::pair<int, int> FiniteGroup::product_split(int e) const {
  if (kind_ != Kind::Product)
    throw GroupError("product_split(): not a direct product");
  return {encoding(e)[0], encoding(e)[1]};
}

int FiniteGroup::product_make(int a, int b) const {
  if (kind_ != Kind::Product)
    throw GroupError("product_make(): not a direct product");
  return static_cast<int>(static_cast<std::size_t>(a) * right_->size() + static_cast<std::size_t>(b));
}

void FiniteGroup::compute_conjugacy() const {
  const int n = static_cast<int>(size());
  conj_.class_of.assign(static_cast<std::size_t>(n), -1);
  conj_.witness.assign(static_cast<std::size_t>(n), -1);
  for (int x0 = 0; x0 < n; ++x0) {
    if (conj_.class_of[static_cast<std::size_t>(x0)] >= 0)
      continue;
    const int cls = static_cast<int>(conj_.reps.size());
    conj_.reps.push_back(x0);
    conj_.class_of[static_cast<std::size_t>(x0)] = cls;
    conj_.witness[static_cast<std::size_t>(x0)] = identity();
    std::deque<int> queue{x0};
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int s : generators_) {
        int y = conjugate(s, x);
        if (conj_.class_of[static_cast<std::size_t>(y)] < 0) {
          conj_.class_of[static_cast<std::size_t>(y)] = cls;
          conj_.witness[static_cast<std::size_t>(y)] = mul(s, conj_.witness[static_cast<std::size_t>(x)]);
          queue.push_back(y);
        }
      }
    }
    std::vector<int> cent;
    for (int a = 0; a < n; ++a)
      if (commute(a, x0))
        cent.push_back(a);
    conj_.centralizers.push_back(std::move(cent));
  }
}

const ConjugacyData &FiniteGroup::conjugacy() const {
  std::call_once(conj_once_, [this] { compute_conjugacy(); });
  return conj_;
}

void FiniteGroup::compute_pair_classes() const {
  const auto &cd = conjugacy();
  const std::size_t n = size();
  pairs_.lookup.assign(cd.reps.size(), {});
  for (std::size_t cls = 0; cls < cd.reps.size(); ++cls) {
    const int g = cd.reps[cls];
    const auto &cent = cd.centralizers[cls];
    // Greedy generating set of the centralizer.
    std::vector<char> in_sub(n, 0);
    std::vector<int> sub{identity()};
    in_sub[static_cast<std::size_t>(identity())] = 1;
    std::vector<int> gens;
    for (int x : cent) {
      if (in_sub[static_cast<std::size_t>(x)])
        continue;
      gens.push_back(x);
      std::fill(in_sub.begin(), in_sub.end(), 0);
      sub.assign(1, identity());
      in_sub[static_cast<std::size_t>(identity())] = 1;
      for (std::size_t i = 0; i < sub.size(); ++i)
        for (int s : gens) {
          int y = mul(sub[i], s);
          if (!in_sub[static_cast<std::size_t>(y)]) {
            in_sub[static_cast<std::size_t>(y)] = 1;
            sub.push_back(y);
          }
        }
    }
    auto &look = pairs_.lookup[cls];
    look.assign(n, -1);
    std::vector<char> member(n, 0);
    for (int x : cent)
      member[static_cast<std::size_t>(x)] = 1;
    for (int h0 : cent) {
      if (look[static_cast<std::size_t>(h0)] >= 0)
        continue;
      const int pc = static_cast<int>(pairs_.classes.size());
      look[static_cast<std::size_t>(h0)] = pc;
      std::vector<int> orbit{h0};
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (int s : gens) {
          int y = conjugate(s, orbit[i]);
          if (look[static_cast<std::size_t>(y)] < 0) {
            look[static_cast<std::size_t>(y)] = pc;
            orbit.push_back(y);
          }
        }
      const auto osize = static_cast<std::int64_t>(orbit.size());
      pairs_.classes.push_back({g, h0, static_cast<int>(cls), osize, static_cast<std::int64_t>(cent.size()) / osize});
    }
  }
}

const PairClassData &FiniteGroup::pair_classes() const {
  std::call_once(pair_once_, [this] { compute_pair_classes(); });
  return pairs_;
}

int FiniteGroup::pair_class_of(int g, int h) const {
  const auto &cd = conjugacy();
  const auto &pd = pair_classes();
  const int cls = cd.class_of[static_cast<std::size_t>(g)];
  const int a = cd.witness[static_cast<std::size_t>(g)];
  const int h1 = mul(mul(inv(a), h), a);
  const int pc = pd.lookup[static_cast<std::size_t>(cls)][static_cast<std::size_t>(h1)];
  if (pc < 0)
    throw GroupError("pair does not commute");
  return pc;
}

bool FiniteGroup::equals(const FiniteGroup &other) const {
  if (this == &other)
    return true;
  if (kind_ != other.kind_ || degree_ != other.degree_ || size() != other.size())
    return false;
  switch (kind_) {
  case Kind::Permutation:
    return elements_ == other.elements_;
  case Kind::Wreath:
    return left_->equals(*other.left_);
  case Kind::Product:
    return left_->equals(*other.left_) && right_->equals(*other.right_);
  }
  return false;
}

bool same_group(const GroupPtr &a, const GroupPtr &b) { return a && b && a->equals(*b); }

std::string FiniteGroup::describe() const {
  if (!name_.empty())
    return name_;
  return "permutation group of degree " + std::to_string(degree_) + " and order " + std::to_string(size());
}

Homomorphism Homomorphism::from_function(GroupPtr source, GroupPtr target, const std::function<int(int)> &f) {
  Homomorphism h{source, target, {}};
  h.image.resize(source->size());
  for (std::size_t i = 0; i < source->size(); ++i) {
    int v = f(static_cast<int>(i));
    if (v < 0 || static_cast<std::size_t>(v) >= target->size())
      throw GroupError("homomorphism image out of range");
    h.image[i] = v;
  }
  return h;
}

Homomorphism Homomorphism::identity(GroupPtr g) {
  return from_function(g, g, [](int e) { return e; });
}

bool Homomorphism::is_homomorphism() const {
  if (!source || !target || image.size() != source->size())
    return false;
  if ((*this)(FiniteGroup::identity()) != FiniteGroup::identity())
    return false;
  for (int s : source->generators())
    for (std::size_t x = 0; x < source->size(); ++x) {
      int sx = source->mul(s, static_cast<int>(x));
      if ((*this)(sx) != target->mul((*this)(s), (*this)(static_cast<int>(x))))
        return false;
    }
  return true;
}

} // namespace tatek
