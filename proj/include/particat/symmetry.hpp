#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "category.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "partition.hpp"
#include "structure.hpp"

namespace particat {

namespace detail {

inline void require_member(const CategorySpec& C, const Partition& p, const char* where) {
  if (!C.contains(p))
    throw PreconditionError(std::string(where) + ": " + p.text() + " is not in " + C.name());
}

inline void require_degree(std::size_t t, const Limits& limits) {
  if (t > limits.max_symmetric_degree)
    throw BoundsError("symmetric group degree " + std::to_string(t) + " exceeds cap " +
                      std::to_string(limits.max_symmetric_degree));
}

}  // namespace detail

// Full search over S_t, no noncrossing shortcut.
inline std::vector<Permutation> sym_group_search(const CategorySpec& C, const Partition& p,
                                                 const Limits& limits = default_limits()) {
  require_projective(p, "sym_group");
  detail::require_member(C, p, "sym_group");
  const std::size_t t = through_count(p);
  if (t == 0) throw PreconditionError("sym_group: t(p) = 0");
  detail::require_degree(t, limits);
  std::vector<Permutation> out;
  for (const auto& sigma : all_permutations(t))
    if (C.contains(p_sigma(p, sigma))) out.push_back(sigma);
  return out;
}

inline std::vector<Permutation> sym_group(const CategorySpec& C, const Partition& p,
                                          const Limits& limits = default_limits()) {
  if (!C.noncrossing()) return sym_group_search(C, p, limits);
  require_projective(p, "sym_group");
  detail::require_member(C, p, "sym_group");
  const std::size_t t = through_count(p);
  if (t == 0) throw PreconditionError("sym_group: t(p) = 0");
  return {Permutation::identity(t)};
}

inline bool is_group(const std::vector<Permutation>& g) {
  if (g.empty()) return false;
  auto has = [&](const Permutation& x) { return std::find(g.begin(), g.end(), x) != g.end(); };
  if (!has(Permutation::identity(g.front().size()))) return false;
  for (const auto& a : g) {
    if (!has(a.inverse())) return false;
    for (const auto& b : g)
      if (!has(a * b)) return false;
  }
  return true;
}

inline bool equivalent_search(const CategorySpec& C, const Partition& p, const Partition& q,
                              bool identity_only, const Limits& limits = default_limits()) {
  require_projective(p, "equivalent");
  require_projective(q, "equivalent");
  detail::require_member(C, p, "equivalent");
  detail::require_member(C, q, "equivalent");
  const std::size_t t = through_count(p);
  if (t != through_count(q)) return false;
  if (identity_only) return C.contains(r_sigma_between(p, q, Permutation::identity(t)));
  detail::require_degree(t, limits);
  for (const auto& sigma : all_permutations(t))
    if (C.contains(r_sigma_between(p, q, sigma))) return true;
  return false;
}

inline bool equivalent(const CategorySpec& C, const Partition& p, const Partition& q,
                       const Limits& limits = default_limits()) {
  return equivalent_search(C, p, q, C.noncrossing(), limits);
}

struct EquivalenceClass {
  Partition representative;  // lexicographically minimal serialization
  std::vector<Partition> members;
};

inline std::vector<EquivalenceClass> equivalence_classes(const CategorySpec& C, std::size_t k,
                                                         const Limits& limits = default_limits()) {
  std::vector<EquivalenceClass> classes;
  for (const auto& p : projectives(C, k, limits)) {
    auto it = std::find_if(classes.begin(), classes.end(), [&](const EquivalenceClass& c) {
      return equivalent(C, c.representative, p, limits);
    });
    if (it == classes.end()) classes.push_back({p, {p}});
    else it->members.push_back(p);
  }
  return classes;
}

}  // namespace particat
