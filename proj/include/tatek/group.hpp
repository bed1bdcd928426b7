#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace tatek {

/// Permutation of {0,...,n-1} as its image list.
using Perm = std::vector<int>;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultSizeCap = 20000;

class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ConjugacyData {
  std::vector<int> class_of;      // element -> class index
  std::vector<int> reps;          // class -> representative (minimal index in the class)
  std::vector<int> witness;       // element x -> a with a * rep * a^-1 = x
  std::vector<std::vector<int>> centralizers; // class -> sorted centralizer of rep
};

/// A commuting pair (g, h) up to simultaneous conjugation.
struct PairClass {
  int g;                          // conjugacy class representative
  int h;                          // minimal element of its C_g-conjugacy class
  int cls;                        // conjugacy class index of g
  std::int64_t orbit_size;        // size of the C_g-class of h
  std::int64_t centralizer_order; // |C_G(g, h)|
};

struct PairClassData {
  std::vector<PairClass> classes;
  // class index -> (element -> pair class index, or -1 outside C_rep)
  std::vector<std::vector<int>> lookup;
};

/// Finite group with a fully enumerated, lexicographically sorted element list.
///
/// Elements are addressed by index; index 0 is the identity. Three kinds exist:
/// permutation groups (encoding = 0-based image list), wreath products G wr S_n
/// (encoding = base indices followed by the permutation) and direct products
/// (encoding = pair of indices).
class FiniteGroup {
public:
  enum class Kind { Permutation, Wreath, Product };
  using Encoding = std::vector<std::int32_t>;

  static GroupPtr from_generators(int degree, const std::vector<Perm> &generators,
                                  std::size_t cap = kDefaultSizeCap, std::string name = {});
  static GroupPtr symmetric(int n, std::size_t cap = kDefaultSizeCap);
  static GroupPtr cyclic(int n);
  static GroupPtr trivial();
  static GroupPtr wreath(GroupPtr base, int n, std::size_t cap = kDefaultSizeCap);
  static GroupPtr product(GroupPtr left, GroupPtr right, std::size_t cap = kDefaultSizeCap);

  Kind kind() const { return kind_; }
  const std::string &name() const { return name_; }
  /// Permutation degree, or n for a wreath product; 0 for a product.
  int degree() const { return degree_; }
  const GroupPtr &base() const { return left_; }
  const GroupPtr &left() const { return left_; }
  const GroupPtr &right() const { return right_; }

  std::size_t size() const { return elements_.size(); }
  const Encoding &encoding(int i) const { return elements_[static_cast<std::size_t>(i)]; }
  /// Index of an encoding, or -1 when it is not an element.
  int index_of(const Encoding &e) const;
  static constexpr int identity() { return 0; }
  const std::vector<int> &generators() const { return generators_; }

  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int pow(int a, std::int64_t k) const;
  int order(int a) const;
  /// a x a^-1
  int conjugate(int a, int x) const { return mul(mul(a, x), inv(a)); }
  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

  /// Permutation of a Permutation-kind element.
  Perm permutation(int e) const;
  /// Wreath-kind accessors and constructor.
  std::vector<int> wreath_base(int e) const;
  Perm wreath_perm(int e) const;
  int wreath_make(const std::vector<int> &base, const Perm &perm) const;
  /// Product-kind accessors and constructor.
  std::pair<int, int> product_split(int e) const;
  int product_make(int a, int b) const;

  const ConjugacyData &conjugacy() const;
  const PairClassData &pair_classes() const;
  /// Pair class of a commuting pair; throws GroupError if g and h do not commute.
  int pair_class_of(int g, int h) const;

  /// Structural equality: same kind, same factors and same element list.
  bool equals(const FiniteGroup &other) const;

  std::string describe() const;

private:
  FiniteGroup() = default;
  void finish(std::size_t cap);
  int mul_raw(int a, int b) const;
  void compute_conjugacy() const;
  void compute_pair_classes() const;

  Kind kind_ = Kind::Permutation;
  std::string name_;
  int degree_ = 0;
  GroupPtr left_, right_;
  std::vector<Encoding> elements_;
  std::vector<int> generators_;
  std::vector<int> inverse_;
  std::vector<int> table_; // Cayley table when small

  mutable std::once_flag conj_once_, pair_once_;
  mutable ConjugacyData conj_;
  mutable PairClassData pairs_;
};

bool same_group(const GroupPtr &a, const GroupPtr &b);

Perm compose(const Perm &a, const Perm &b); // (a b)(i) = a(b(i))
Perm inverse(const Perm &a);
bool is_permutation(const Perm &p);

/// Group homomorphism given by the image of every source element.
struct Homomorphism {
  GroupPtr source;
  GroupPtr target;
  std::vector<int> image;

  static Homomorphism from_function(GroupPtr source, GroupPtr target, const std::function<int(int)> &f);
  static Homomorphism identity(GroupPtr g);
  /// True iff image(s x) = image(s) image(x) for every generator s and element x.
  bool is_homomorphism() const;
  int operator()(int e) const { return image[static_cast<std::size_t>(e)]; }
};

} // namespace tatek
