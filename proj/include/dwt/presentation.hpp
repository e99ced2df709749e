#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dwt/config.hpp"
#include "dwt/errors.hpp"
#include "dwt/group.hpp"
#include "dwt/parallel.hpp"

namespace dwt {

/// A finite presentation: relator letters are signed 1-based generator
/// indices, +(i+1) for generator i and -(i+1) for its inverse.
struct GroupPresentation {
  int num_generators = 0;
  std::vector<std::vector<int>> relators;

  GroupPresentation(int k, std::vector<std::vector<int>> rels)
      : num_generators(k), relators(std::move(rels)) {
    if (k < 0) throw UsageError("presentation needs a nonnegative generator count");
    for (const auto& r : relators)
      for (int letter : r) {
        int g = letter > 0 ? letter - 1 : -letter - 1;
        if (letter == 0 || g >= k)
          throw UsageError("relator letter references an invalid generator");
      }
  }

  static GroupPresentation trivial() { return GroupPresentation(0, {}); }

  /// <a | a^p>
  static GroupPresentation cyclic(int p) {
    std::vector<int> w(static_cast<std::size_t>(p), 1);
    return GroupPresentation(1, {w});
  }

  /// Z^r: pairwise commutators.
  static GroupPresentation free_abelian(int r) {
    std::vector<std::vector<int>> rels;
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        rels.push_back({i + 1, j + 1, -(i + 1), -(j + 1)});
    return GroupPresentation(r, std::move(rels));
  }

  /// pi_1 of the closed oriented genus-g surface: 2g generators, one
  /// product-of-commutators relator.
  static GroupPresentation surface_group(int genus) {
    std::vector<int> rel;
    for (int i = 0; i < genus; ++i) {
      int a = 2 * i + 1, b = 2 * i + 2;
      rel.insert(rel.end(), {a, b, -a, -b});
    }
    std::vector<std::vector<int>> rels;
    if (genus > 0) rels.push_back(std::move(rel));
    return GroupPresentation(2 * genus, std::move(rels));
  }

  /// pi_1(Sigma_g x S^1): surface generators plus a central generator.
  static GroupPresentation surface_times_circle(int genus) {
    GroupPresentation s = surface_group(genus);
    int c = 2 * genus + 1;
    std::vector<std::vector<int>> rels = s.relators;
    for (int i = 1; i <= 2 * genus; ++i) rels.push_back({i, c, -i, -c});
    return GroupPresentation(2 * genus + 1, std::move(rels));
  }
};

namespace detail {

inline int eval_word(const FiniteGroup& g, const std::vector<int>& word,
                     const std::vector<int>& images) {
  int acc = FiniteGroup::identity;
  for (int letter : word) {
    int x = images[letter > 0 ? letter - 1 : -letter - 1];
    acc = g.mul(acc, letter > 0 ? x : g.inverse(x));
  }
  return acc;
}

// Counts assignment tuples drawn from per-generator candidate domains that
// kill every relator. The tuple space is indexed mixed-radix and split
// across workers; totals are exact.
inline std::uint64_t count_homs_over_domains(const GroupPresentation& p, const FiniteGroup& g,
                                             const std::vector<const std::vector<int>*>& domains,
                                             const EngineConfig& cfg) {
  int k = p.num_generators;
  std::uint64_t total_tuples = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t d = domains[i]->size();
    if (d == 0) return 0;
    if (total_tuples > cfg.hom_budget / d + 1)
      throw ResourceError("homomorphism enumeration exceeds the configured work budget");
    total_tuples *= d;
  }
  if (total_tuples > cfg.hom_budget)
    throw ResourceError("homomorphism enumeration exceeds the configured work budget");
  if (k == 0) {
    for (const auto& r : p.relators)
      if (!r.empty()) throw UsageError("relator on zero generators must be empty");
    return 1;
  }
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::vector<int> images(k);
    std::uint64_t n = 0;
    for (std::uint64_t t = begin; t < end; ++t) {
      std::uint64_t rest = t;
      for (int i = 0; i < k; ++i) {
        const auto& dom = *domains[i];
        images[i] = dom[rest % dom.size()];
        rest /= dom.size();
      }
      bool ok = true;
      for (const auto& r : p.relators)
        if (eval_word(g, r, images) != FiniteGroup::identity) {
          ok = false;
          break;
        }
      if (ok) ++n;
    }
    return n;
  };
  return parallel_count(total_tuples, cfg.threads, chunk);
}

}  // namespace detail

/// Exact number of homomorphisms from the presented group into g.
inline std::uint64_t count_homomorphisms(const GroupPresentation& p, const FiniteGroup& g,
                                         const EngineConfig& cfg = EngineConfig{}) {
  std::vector<int> everything(g.order());
  for (int i = 0; i < g.order(); ++i) everything[i] = i;
  std::vector<const std::vector<int>*> domains(p.num_generators, &everything);
  return detail::count_homs_over_domains(p, g, domains, cfg);
}

/// Number of conjugation orbits on the homomorphism set, via Burnside's
/// lemma: (1/|G|) sum_h #fixed(h), where a tuple is fixed by h exactly when
/// every image lies in the centralizer of h.
inline std::uint64_t orbit_count_homomorphisms(const GroupPresentation& p, const FiniteGroup& g,
                                               const EngineConfig& cfg = EngineConfig{}) {
  std::uint64_t burnside = 0;
  std::uint64_t plain_count = 0;
  for (int h = 0; h < g.order(); ++h) {
    std::vector<int> cz = g.centralizer_members(h);
    std::vector<const std::vector<int>*> domains(p.num_generators, &cz);
    std::uint64_t fixed = detail::count_homs_over_domains(p, g, domains, cfg);
    if (h == FiniteGroup::identity) plain_count = fixed;
    burnside += fixed;
  }
  if (burnside % g.order() != 0)
    throw NumericalError("Burnside sum not divisible by the group order");
  std::uint64_t orbits = burnside / g.order();
  if (orbits * g.order() < plain_count)
    throw NumericalError("orbit count inconsistent with homomorphism count");
  return orbits;
}

}  // namespace dwt
