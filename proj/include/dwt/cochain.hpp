#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "dwt/config.hpp"
#include "dwt/errors.hpp"
#include "dwt/group.hpp"
#include "dwt/phase.hpp"

namespace dwt {

/// A normalized U(1)-valued cochain on G^d, d in {1,2,3}, with exact
/// root-of-unity values. The value is the unit phase whenever any argument
/// is the identity. The constant-unit cochain is kept sparse so untwisted
/// theories never materialize a G^3 table.
class Cochain {
public:
  /// Unit cochain of the given degree.
  Cochain(GroupPtr group, int degree)
      : group_(std::move(group)), degree_(check_degree(degree)), unit_(true) {}

  /// Explicit value table, row-major over G^d with the last argument
  /// fastest. Values are renormalized to a common phase order.
  Cochain(GroupPtr group, int degree, std::vector<Phase> values,
          const EngineConfig& cfg = EngineConfig{})
      : group_(std::move(group)), degree_(check_degree(degree)), values_(std::move(values)) {
    const int n = group_->order();
    if (n > cfg.max_cocycle_order)
      throw ResourceError("explicit cochain tables are capped at group order " +
                          std::to_string(cfg.max_cocycle_order));
    std::size_t expect = 1;
    for (int i = 0; i < degree_; ++i) expect *= static_cast<std::size_t>(n);
    if (values_.size() != expect) throw UsageError("cochain value table has wrong size");
    unit_ = true;
    for (const Phase& p : values_)
      if (!p.is_one()) {
        unit_ = false;
        break;
      }
    if (unit_) {
      values_.clear();
      values_.shrink_to_fit();
      return;
    }
    validate_normalized();
  }

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int degree() const { return degree_; }
  bool is_unit() const { return unit_; }

  Phase at(int a) const { return unit_ ? Phase::one() : values_[a]; }
  Phase at(int a, int b) const {
    return unit_ ? Phase::one() : values_[static_cast<std::size_t>(a) * group_->order() + b];
  }
  Phase at(int a, int b, int c) const {
    if (unit_) return Phase::one();
    std::size_t n = group_->order();
    return values_[(static_cast<std::size_t>(a) * n + b) * n + c];
  }

  /// Least common multiple of the phase orders (1 for the unit cochain).
  std::int64_t phase_order() const {
    std::int64_t l = 1;
    for (const Phase& p : values_) l = std::lcm(l, p.order());
    return l;
  }

  bool operator==(const Cochain& o) const {
    if (degree_ != o.degree_ || group_->order() != o.group_->order()) return false;
    if (unit_ && o.unit_) return true;
    std::size_t total = 1;
    for (int i = 0; i < degree_; ++i) total *= group_->order();
    for (std::size_t i = 0; i < total; ++i) {
      Phase a = unit_ ? Phase::one() : values_[i];
      Phase b = o.unit_ ? Phase::one() : o.values_[i];
      if (a != b) return false;
    }
    return true;
  }

  /// Pointwise product (degrees must match).
  Cochain operator*(const Cochain& o) const {
    if (degree_ != o.degree_ || group_->order() != o.group_->order())
      throw UsageError("cochain product needs matching degree and group");
    if (unit_) return o;
    if (o.unit_) return *this;
    std::vector<Phase> out(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) out[i] = values_[i] * o.values_[i];
    return Cochain(group_, degree_, std::move(out));
  }

private:
  static int check_degree(int d) {
    if (d < 1 || d > 3) throw UsageError("cochain degree must be 1, 2 or 3");
    return d;
  }

  void validate_normalized() const {
    const int n = group_->order();
    const int e = FiniteGroup::identity;
    auto require_unit = [&](Phase p) {
      if (!p.is_one())
        throw UsageError("cochain is not normalized: value at an identity argument is not 1");
    };
    if (degree_ == 1) {
      require_unit(at(e));
    } else if (degree_ == 2) {
      for (int a = 0; a < n; ++a) {
        require_unit(at(e, a));
        require_unit(at(a, e));
      }
    } else {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          require_unit(at(e, a, b));
          require_unit(at(a, e, b));
          require_unit(at(a, b, e));
        }
    }
  }

  GroupPtr group_;
  int degree_;
  bool unit_;
  std::vector<Phase> values_;
};

/// Result of an exhaustive cocycle check; `violating` holds the first
/// failing (d+1)-tuple when ok is false.
struct CocycleCheck {
  bool ok = true;
  std::vector<int> violating;
};

/// Bar-complex coboundary with alternating multiplicative signs; the output
/// of degree d+1 is normalized whenever the input is.
inline Cochain coboundary(const Cochain& c, const EngineConfig& cfg = EngineConfig{}) {
  const FiniteGroup& g = c.group();
  const int n = g.order();
  if (c.degree() == 3) throw UsageError("coboundary is defined here for degrees 1 and 2");
  if (c.is_unit()) return Cochain(c.group_ptr(), c.degree() + 1);
  if (c.degree() == 1) {
    std::vector<Phase> out(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        out[static_cast<std::size_t>(a) * n + b] =
            c.at(b) * c.at(g.mul(a, b)).inverse() * c.at(a);
    return Cochain(c.group_ptr(), 2, std::move(out), cfg);
  }
  std::vector<Phase> out(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        out[(static_cast<std::size_t>(a) * n + b) * n + d] = c.at(b, d) *
                                                             c.at(g.mul(a, b), d).inverse() *
                                                             c.at(a, g.mul(b, d)) *
                                                             c.at(a, b).inverse();
  return Cochain(c.group_ptr(), 3, std::move(out), cfg);
}

/// Exhaustively checks the degree-(d+1) cocycle identity with exact phase
/// arithmetic; no tolerance is involved.
inline CocycleCheck is_cocycle(const Cochain& c) {
  if (c.is_unit()) return {};
  const FiniteGroup& g = c.group();
  const int n = g.order();
  if (c.degree() == 1) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (!(c.at(b) * c.at(g.mul(a, b)).inverse() * c.at(a)).is_one())
          return {false, {a, b}};
    return {};
  }
  if (c.degree() == 2) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
          Phase p = c.at(b, d) * c.at(g.mul(a, b), d).inverse() * c.at(a, g.mul(b, d)) *
                    c.at(a, b).inverse();
          if (!p.is_one()) return {false, {a, b, d}};
        }
    return {};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int e = 0; e < n; ++e) {
          Phase p = c.at(b, d, e) * c.at(g.mul(a, b), d, e).inverse() *
                    c.at(a, g.mul(b, d), e) * c.at(a, b, g.mul(d, e)).inverse() *
                    c.at(a, b, d);
          if (!p.is_one()) return {false, {a, b, d, e}};
        }
  return {};
}

/// The standard degree-3 representative on a cyclic group realized on an
/// arbitrary cyclic multiplication table: residues are taken with respect
/// to the smallest generator, and
///   omega(a,b,c) = exp(2 pi i * p * a * floor((b+c)/n) / n).
inline Cochain cyclic_cocycle_on(const GroupPtr& group, std::int64_t p,
                                 const EngineConfig& cfg = EngineConfig{}) {
  const FiniteGroup& g = *group;
  const int n = g.order();
  if (p % n == 0) return Cochain(group, 3);
  int gen = -1;
  for (int x = 1; x < n; ++x)
    if (g.element_order(x) == n) {
      gen = x;
      break;
    }
  if (gen < 0)
    throw UsageError("cyclic:<p> cocycles require a cyclic group, got " + g.name());
  std::vector<std::int64_t> residue(n);
  int acc = FiniteGroup::identity;
  for (int k = 0; k < n; ++k) {
    residue[acc] = k;
    acc = g.mul(acc, gen);
  }
  std::vector<Phase> values(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        std::int64_t carry = (residue[b] + residue[c]) / n;
        values[(static_cast<std::size_t>(a) * n + b) * n + c] =
            Phase(p * residue[a] * carry, n);
      }
  return Cochain(group, 3, std::move(values), cfg);
}

/// Spec form: builds C_n internally and evaluates on residues directly.
inline Cochain standard_cyclic_cocycle(int n, std::int64_t p,
                                       const EngineConfig& cfg = EngineConfig{}) {
  if (n < 1) throw UsageError("standard cyclic cocycle needs n >= 1");
  if (p < 0 || p >= n) throw UsageError("standard cyclic cocycle needs 0 <= p < n");
  return cyclic_cocycle_on(detail::cyclic_group(n, cfg), p, cfg);
}

/// Pullback along a verified homomorphism h : G -> H given as an element
/// map (image index per element of G).
inline Cochain pullback_cocycle(const GroupPtr& domain, const std::vector<int>& hom,
                                const Cochain& c, const EngineConfig& cfg = EngineConfig{}) {
  const FiniteGroup& g = *domain;
  const FiniteGroup& h = c.group();
  if (static_cast<int>(hom.size()) != g.order())
    throw UsageError("homomorphism map has wrong length");
  for (int x : hom)
    if (x < 0 || x >= h.order()) throw UsageError("homomorphism image out of range");
  if (hom[FiniteGroup::identity] != FiniteGroup::identity)
    throw UsageError("map does not preserve the identity, not a homomorphism");
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (hom[g.mul(x, y)] != h.mul(hom[x], hom[y]))
        throw UsageError("map is not a homomorphism");
  if (c.is_unit()) return Cochain(domain, c.degree());
  const int n = g.order();
  if (c.degree() == 1) {
    std::vector<Phase> out(n);
    for (int a = 0; a < n; ++a) out[a] = c.at(hom[a]);
    return Cochain(domain, 1, std::move(out), cfg);
  }
  if (c.degree() == 2) {
    std::vector<Phase> out(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        out[static_cast<std::size_t>(a) * n + b] = c.at(hom[a], hom[b]);
    return Cochain(domain, 2, std::move(out), cfg);
  }
  std::vector<Phase> out(static_cast<std::size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        out[(static_cast<std::size_t>(a) * n + b) * n + d] = c.at(hom[a], hom[b], hom[d]);
  return Cochain(domain, 3, std::move(out), cfg);
}

/// Seed-deterministic normalized cochain with values uniform in the N-th
/// roots of unity. Fuel for gauge-invariance tests.
inline Cochain random_cochain(const GroupPtr& group, int degree, std::int64_t n_roots,
                              std::uint64_t seed, const EngineConfig& cfg = EngineConfig{}) {
  if (degree < 1 || degree > 2) throw UsageError("random cochains have degree 1 or 2");
  if (n_roots < 1) throw UsageError("random cochain needs a positive root order");
  const FiniteGroup& g = *group;
  const int n = g.order();
  std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4fULL);
  auto draw = [&]() -> std::int64_t {
    const std::uint64_t m = static_cast<std::uint64_t>(n_roots);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    std::uint64_t v;
    do {
      v = rng();
    } while (v >= limit);
    return static_cast<std::int64_t>(v % m);
  };
  if (degree == 1) {
    std::vector<Phase> out(n);
    for (int a = 0; a < n; ++a)
      out[a] = (a == FiniteGroup::identity) ? Phase::one() : Phase(draw(), n_roots);
    return Cochain(group, 1, std::move(out), cfg);
  }
  std::vector<Phase> out(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[static_cast<std::size_t>(a) * n + b] =
          (a == FiniteGroup::identity || b == FiniteGroup::identity) ? Phase::one()
                                                                     : Phase(draw(), n_roots);
  return Cochain(group, 2, std::move(out), cfg);
}

/// Transgression of a 3-cocycle to a 2-cocycle on the centralizer of a base
/// element. The 2-cocycle identity is verified exhaustively at
/// construction; a failure signals a convention bug and is never accepted.
struct TransgressedCocycle {
  int base_element = 0;
  std::shared_ptr<const Subgroup> centralizer;
  std::vector<Phase> values;  // |H| x |H| on local indices

  Phase at(int h_local, int k_local) const {
    return values[static_cast<std::size_t>(h_local) * centralizer->size() + k_local];
  }

  bool is_unit() const {
    for (const Phase& p : values)
      if (!p.is_one()) return false;
    return true;
  }

  /// lcm of the value orders; 1 means the ordinary (untwisted) case.
  std::int64_t phase_order() const {
    std::int64_t l = 1;
    for (const Phase& p : values) l = std::lcm(l, p.order());
    return l;
  }
};

/// theta_x(h,k) = omega(x,h,k) * omega(h,k,(hk)^-1 x (hk)) / omega(h, h^-1 x h, k)
/// for h, k in the centralizer of x.
inline TransgressedCocycle transgress(const Cochain& omega, int x,
                                      const EngineConfig& cfg = EngineConfig{}) {
  if (omega.degree() != 3) throw UsageError("transgression takes a 3-cochain");
  GroupPtr gp = omega.group_ptr();
  const FiniteGroup& g = *gp;
  if (x < 0 || x >= g.order()) throw UsageError("transgression base element out of range");
  TransgressedCocycle t;
  t.base_element = x;
  t.centralizer = std::make_shared<Subgroup>(gp, g.centralizer_members(x), cfg);
  const Subgroup& cz = *t.centralizer;
  const int m = cz.size();
  t.values.assign(static_cast<std::size_t>(m) * m, Phase::one());
  if (!omega.is_unit()) {
    for (int hi = 0; hi < m; ++hi) {
      int h = cz.parent_element(hi);
      for (int ki = 0; ki < m; ++ki) {
        int k = cz.parent_element(ki);
        int hk = g.mul(h, k);
        Phase p = omega.at(x, h, k) * omega.at(h, k, g.conjugate(g.inverse(hk), x)) *
                  omega.at(h, g.conjugate(g.inverse(h), x), k).inverse();
        t.values[static_cast<std::size_t>(hi) * m + ki] = p;
      }
    }
  }
  // exhaustive 2-cocycle identity on the centralizer
  const FiniteGroup& lg = cz.as_group();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        Phase lhs = t.at(a, b) * t.at(lg.mul(a, b), c);
        Phase rhs = t.at(a, lg.mul(b, c)) * t.at(b, c);
        if (lhs != rhs)
          throw NumericalError("transgressed cochain violates the 2-cocycle identity");
      }
  return t;
}

}  // namespace dwt
