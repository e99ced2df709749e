#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dwt/config.hpp"
#include "dwt/errors.hpp"

namespace dwt {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A conjugacy class: representative is the minimal element index of the
/// class, members are sorted ascending.
struct ConjugacyClass {
  int representative = 0;
  std::vector<int> members;
};

/// A finite group presented by its full multiplication table. Element
/// indices run 0..order-1 and the identity is index 0. Instances are
/// immutable after construction and safe to share across threads.
///
/// Construction validates the axioms: two-sided unit at index 0, two-sided
/// inverses, and (for order <= 256) exhaustive associativity. Conjugacy
/// classes are computed eagerly.
class FiniteGroup {
public:
  FiniteGroup(std::string name, int order, std::vector<std::uint16_t> mult,
              const EngineConfig& cfg = EngineConfig{})
      : name_(std::move(name)), order_(order), mult_(std::move(mult)) {
    if (order_ <= 0) throw UsageError("group order must be positive: " + name_);
    if (order_ > cfg.max_group_order)
      throw ResourceError("group order " + std::to_string(order_) +
                          " exceeds configured maximum " +
                          std::to_string(cfg.max_group_order));
    if (mult_.size() != static_cast<std::size_t>(order_) * order_)
      throw UsageError("multiplication table has wrong size for " + name_);
    validate();
    build_classes();
  }

  static constexpr int identity = 0;

  const std::string& name() const { return name_; }
  int order() const { return order_; }

  int mul(int a, int b) const { return mult_[static_cast<std::size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inv_[a]; }

  int power(int a, long long k) const {
    int base = a;
    if (k < 0) {
      base = inverse(a);
      k = -k;
    }
    int acc = identity;
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      base = mul(base, base);
      k >>= 1;
    }
    return acc;
  }

  int element_order(int a) const {
    int acc = a, n = 1;
    while (acc != identity) {
      acc = mul(acc, a);
      ++n;
    }
    return n;
  }

  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }

  bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

  bool is_abelian() const { return abelian_; }

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int x) const { return class_of_[x]; }

  std::vector<int> centralizer_members(int x) const {
    std::vector<int> m;
    for (int h = 0; h < order_; ++h)
      if (commute(h, x)) m.push_back(h);
    return m;
  }

private:
  void validate() {
    for (auto v : mult_)
      if (v >= order_) throw UsageError("multiplication table entry out of range in " + name_);
    // index 0 must be the two-sided unit
    for (int x = 0; x < order_; ++x)
      if (mul(identity, x) != x || mul(x, identity) != x)
        throw UsageError("element 0 is not a two-sided identity in " + name_);
    inv_.assign(order_, 0);
    for (int a = 0; a < order_; ++a) {
      int found = -1;
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == identity && mul(b, a) == identity) {
          found = b;
          break;
        }
      if (found < 0) throw UsageError("element without two-sided inverse in " + name_);
      inv_[a] = static_cast<std::uint16_t>(found);
    }
    // rows and columns must be permutations
    std::vector<char> seen(order_);
    for (int a = 0; a < order_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < order_; ++b) seen[mul(a, b)] = 1;
      for (char s : seen)
        if (!s) throw UsageError("multiplication table row is not a permutation in " + name_);
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < order_; ++b) seen[mul(b, a)] = 1;
      for (char s : seen)
        if (!s) throw UsageError("multiplication table column is not a permutation in " + name_);
    }
    if (order_ <= 256) {
      for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
          for (int c = 0; c < order_; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw UsageError("multiplication table is not associative in " + name_);
    }
    abelian_ = true;
    for (int a = 0; a < order_ && abelian_; ++a)
      for (int b = a + 1; b < order_; ++b)
        if (mul(a, b) != mul(b, a)) {
          abelian_ = false;
          break;
        }
  }

  void build_classes() {
    class_of_.assign(order_, -1);
    int total = 0;
    for (int x = 0; x < order_; ++x) {
      if (class_of_[x] >= 0) continue;
      ConjugacyClass cl;
      cl.representative = x;
      int idx = static_cast<int>(classes_.size());
      for (int g = 0; g < order_; ++g) {
        int y = conjugate(g, x);
        if (class_of_[y] < 0) {
          class_of_[y] = idx;
          cl.members.push_back(y);
        }
      }
      std::sort(cl.members.begin(), cl.members.end());
      total += static_cast<int>(cl.members.size());
      classes_.push_back(std::move(cl));
    }
    if (total != order_) throw NumericalError("class equation violated in " + name_);
    // |class| * |centralizer| = |G| for each representative
    for (const auto& cl : classes_) {
      int cz = 0;
      for (int h = 0; h < order_; ++h)
        if (commute(h, cl.representative)) ++cz;
      if (static_cast<int>(cl.members.size()) * cz != order_)
        throw NumericalError("orbit-stabilizer mismatch in " + name_);
    }
  }

  std::string name_;
  int order_;
  std::vector<std::uint16_t> mult_;
  std::vector<std::uint16_t> inv_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
  bool abelian_ = false;
};

/// A subgroup given by its sorted member list, with the induced group
/// structure reindexed onto 0..|H|-1 (identity stays at local index 0).
class Subgroup {
public:
  Subgroup(GroupPtr parent, std::vector<int> members, const EngineConfig& cfg = EngineConfig{})
      : parent_(std::move(parent)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    const FiniteGroup& g = *parent_;
    if (members_.empty() || members_[0] != FiniteGroup::identity)
      throw UsageError("subgroup must contain the identity");
    local_of_.assign(g.order(), -1);
    for (int i = 0; i < size(); ++i) {
      if (members_[i] < 0 || members_[i] >= g.order())
        throw UsageError("subgroup member out of range");
      local_of_[members_[i]] = i;
    }
    std::vector<std::uint16_t> table(static_cast<std::size_t>(size()) * size());
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) {
        int p = g.mul(members_[i], members_[j]);
        int l = local_of_[p];
        if (l < 0) throw UsageError("subgroup is not closed under multiplication");
        table[static_cast<std::size_t>(i) * size() + j] = static_cast<std::uint16_t>(l);
      }
    for (int i = 0; i < size(); ++i)
      if (local_of_[g.inverse(members_[i])] < 0)
        throw UsageError("subgroup is not closed under inverse");
    local_ = std::make_shared<FiniteGroup>(parent_->name() + "-sub" + std::to_string(size()),
                                           size(), std::move(table), cfg);
  }

  const FiniteGroup& parent_group() const { return *parent_; }
  GroupPtr parent_ptr() const { return parent_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }

  const FiniteGroup& as_group() const { return *local_; }
  GroupPtr as_group_ptr() const { return local_; }

  /// Local index of a parent element, or -1 if not a member.
  int local_index(int parent_elem) const { return local_of_[parent_elem]; }
  int parent_element(int local) const { return members_[local]; }

private:
  GroupPtr parent_;
  std::vector<int> members_;
  std::vector<int> local_of_;
  GroupPtr local_;
};

inline std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
  return g.classes();
}

/// Centralizer {h : hx = xh} as a Subgroup.
inline Subgroup centralizer(GroupPtr g, int x, const EngineConfig& cfg = EngineConfig{}) {
  if (x < 0 || x >= g->order()) throw UsageError("centralizer: element index out of range");
  return Subgroup(g, g->centralizer_members(x), cfg);
}

/// Componentwise product with lexicographic pair ordering:
/// (a, b) -> a*|B| + b, so the identity pair lands at index 0.
inline GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b,
                               const EngineConfig& cfg = EngineConfig{}) {
  long long n = static_cast<long long>(a->order()) * b->order();
  if (n > cfg.max_group_order)
    throw ResourceError("direct product order " + std::to_string(n) +
                        " exceeds configured maximum " + std::to_string(cfg.max_group_order));
  int na = a->order(), nb = b->order(), no = static_cast<int>(n);
  std::vector<std::uint16_t> table(static_cast<std::size_t>(no) * no);
  for (int x = 0; x < no; ++x) {
    int xa = x / nb, xb = x % nb;
    for (int y = 0; y < no; ++y) {
      int ya = y / nb, yb = y % nb;
      table[static_cast<std::size_t>(x) * no + y] =
          static_cast<std::uint16_t>(a->mul(xa, ya) * nb + b->mul(xb, yb));
    }
  }
  return std::make_shared<FiniteGroup>(a->name() + "x" + b->name(), no, std::move(table), cfg);
}

namespace detail {

inline GroupPtr cyclic_group(int n, const EngineConfig& cfg) {
  std::vector<std::uint16_t> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<std::size_t>(a) * n + b] = static_cast<std::uint16_t>((a + b) % n);
  return std::make_shared<FiniteGroup>("C" + std::to_string(n), n, std::move(table), cfg);
}

// Dihedral group of order 2n: indices 0..n-1 are rotations r^i, indices
// n..2n-1 are reflections r^(i-n)*s, with s r s = r^-1.
inline GroupPtr dihedral_group(int n, const EngineConfig& cfg) {
  int o = 2 * n;
  auto idx = [n](bool refl, int rot) { return (refl ? n : 0) + ((rot % n) + n) % n; };
  std::vector<std::uint16_t> table(static_cast<std::size_t>(o) * o);
  for (int x = 0; x < o; ++x) {
    bool xr = x >= n;
    int xa = xr ? x - n : x;
    for (int y = 0; y < o; ++y) {
      bool yr = y >= n;
      int ya = yr ? y - n : y;
      int prod;
      if (!xr && !yr) prod = idx(false, xa + ya);
      else if (!xr && yr) prod = idx(true, xa + ya);
      else if (xr && !yr) prod = idx(true, xa - ya);
      else prod = idx(false, xa - ya);
      table[static_cast<std::size_t>(x) * o + y] = static_cast<std::uint16_t>(prod);
    }
  }
  return std::make_shared<FiniteGroup>("D" + std::to_string(n), o, std::move(table), cfg);
}

// Symmetric group on n letters; elements are the permutations of 0..n-1 in
// lexicographic order, composed as (s*t)(i) = s(t(i)).
inline GroupPtr symmetric_group(int n, const EngineConfig& cfg) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int o = static_cast<int>(perms.size());
  auto rank = [n](const std::vector<int>& q) {
    // Lehmer code
    long long r = 0;
    for (int i = 0; i < n; ++i) {
      int smaller = 0;
      for (int j = i + 1; j < n; ++j)
        if (q[j] < q[i]) ++smaller;
      long long f = 1;
      for (int k = 2; k <= n - 1 - i; ++k) f *= k;
      r += smaller * f;
    }
    return static_cast<int>(r);
  };
  std::vector<std::uint16_t> table(static_cast<std::size_t>(o) * o);
  std::vector<int> comp(n);
  for (int a = 0; a < o; ++a)
    for (int b = 0; b < o; ++b) {
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      table[static_cast<std::size_t>(a) * o + b] = static_cast<std::uint16_t>(rank(comp));
    }
  return std::make_shared<FiniteGroup>("S" + std::to_string(n), o, std::move(table), cfg);
}

// Quaternion group, elements ordered 1, -1, i, -i, j, -j, k, -k.
inline GroupPtr quaternion_group(const EngineConfig& cfg) {
  // (sign, axis) with axis 0=1, 1=i, 2=j, 3=k; index = 2*axis + (sign<0)
  auto idx = [](int sign, int axis) { return 2 * axis + (sign < 0 ? 1 : 0); };
  // axis multiplication: table[a][b] = (sign, axis) of a*b
  static const int axis_mul[4][4][2] = {
      {{+1, 0}, {+1, 1}, {+1, 2}, {+1, 3}},
      {{+1, 1}, {-1, 0}, {+1, 3}, {-1, 2}},
      {{+1, 2}, {-1, 3}, {-1, 0}, {+1, 1}},
      {{+1, 3}, {+1, 2}, {-1, 1}, {-1, 0}},
  };
  std::vector<std::uint16_t> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sx = (x % 2) ? -1 : 1, ax = x / 2;
      int sy = (y % 2) ? -1 : 1, ay = y / 2;
      int s = sx * sy * axis_mul[ax][ay][0];
      int az = axis_mul[ax][ay][1];
      table[static_cast<std::size_t>(x) * 8 + y] = static_cast<std::uint16_t>(idx(s, az));
    }
  return std::make_shared<FiniteGroup>("Q8", 8, std::move(table), cfg);
}

inline GroupPtr named_atom(const std::string& spec, const EngineConfig& cfg) {
  if (spec == "Q8") return quaternion_group(cfg);
  if (spec.size() < 2) throw UsageError("malformed group spec: '" + spec + "'");
  char fam = spec[0];
  for (std::size_t i = 1; i < spec.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(spec[i])))
      throw UsageError("malformed group spec: '" + spec + "'");
  int n = std::atoi(spec.c_str() + 1);
  switch (fam) {
    case 'C':
      if (n < 1) throw UsageError("malformed group spec: '" + spec + "' (need n >= 1)");
      return cyclic_group(n, cfg);
    case 'D':
      if (n < 1) throw UsageError("malformed group spec: '" + spec + "' (need n >= 1)");
      return dihedral_group(n, cfg);
    case 'S':
      if (n < 1) throw UsageError("malformed group spec: '" + spec + "' (need n >= 1)");
      if (n > 5)
        throw ScopeError("symmetric groups are supported only up to S5 (got " + spec + ")");
      return symmetric_group(n, cfg);
    default:
      throw UsageError("malformed group spec: '" + spec + "'");
  }
}

}  // namespace detail

/// Builds a group from a spec string matching
///   C<n> | D<n> | S<n<=5> | Q8 | <spec>x<spec>
/// Products associate to the left with lexicographic pair ordering.
inline GroupPtr build_named_group(const std::string& spec,
                                  const EngineConfig& cfg = EngineConfig{}) {
  if (spec.empty()) throw UsageError("empty group spec");
  std::vector<std::string> parts;
  std::string cur;
  for (char c : spec) {
    if (c == 'x') {
      if (cur.empty()) throw UsageError("malformed group spec: '" + spec + "'");
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (cur.empty()) throw UsageError("malformed group spec: '" + spec + "'");
  parts.push_back(cur);
  GroupPtr g = detail::named_atom(parts[0], cfg);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, detail::named_atom(parts[i], cfg), cfg);
  return g;
}

}  // namespace dwt
