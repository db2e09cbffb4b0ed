#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "category.hpp"
#include "fusion.hpp"
#include "matrix_model.hpp"
#include "partition.hpp"
#include "structure.hpp"

namespace particat {

template <class Rng>
Partition random_partition(Rng& rng, std::size_t k, std::size_t l) {
  const std::size_t n = k + l;
  std::vector<int> b(n);
  if (n == 0) return Partition{};
  std::uniform_int_distribution<int> blocks(1, static_cast<int>(n));
  std::uniform_int_distribution<int> pick(0, blocks(rng) - 1);
  for (auto& x : b) x = pick(rng);
  return Partition(k, l, b);
}

// Every partition with k + l = n.
inline std::vector<Partition> all_partitions(std::size_t k, std::size_t l) {
  std::vector<Partition> out;
  for_each_set_partition(k + l, [&](const std::vector<int>& a, std::size_t) { out.emplace_back(k, l, a); });
  return out;
}

inline CheckReport functor_suite(std::size_t max_points, unsigned N, std::size_t random_pairs = 200,
                                 unsigned seed = 1) {
  CheckReport r;
  for (std::size_t n = 0; n <= max_points; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& p : all_partitions(k, n - k)) {
        const auto rk = rank(t_map(p, N).matrix);
        r.expect(static_cast<std::int64_t>(rk) == ipow(N, through_count(p)), "rank T_p = N^t for " + p.text());
      }
  std::mt19937 rng(seed);
  const std::size_t row = std::max<std::size_t>(1, max_points / 2);
  std::uniform_int_distribution<std::size_t> arity(0, row);
  for (std::size_t i = 0; i < random_pairs; ++i) {
    const std::size_t k = arity(rng), m = arity(rng), l = arity(rng);
    const Partition q = random_partition(rng, k, m);
    const Partition p = random_partition(rng, m, l);
    r.merge(check_functor(p, q, N));
    const Partition x = random_partition(rng, l, arity(rng));
    const auto a = compose(x, p), b = compose(a.partition, q);
    const auto c = compose(p, q), d = compose(x, c.partition);
    r.expect(b.partition == d.partition, "associativity");
    r.expect(c.removed_loops + d.removed_loops == a.removed_loops + b.removed_loops, "removed-loop identity");
  }
  return r;
}

inline CheckReport structure_suite(std::size_t max_points) {
  CheckReport r;
  for (std::size_t n = 0; n <= max_points; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& p : all_partitions(k, n - k)) {
        const auto d = through_block_decomposition(p);
        r.expect(recompose(d) == p, "recomposition of " + p.text());
        r.expect(is_building(d.upper_building) && is_building(d.lower_building) &&
                     is_through_partition(d.middle),
                 "decomposition parts of " + p.text());
        const auto sp = stats(p), sq = stats(d.lower_building), ss = stats(d.upper_building);
        r.expect(sp.beta == sq.beta + ss.beta && sp.b + sp.t == sq.b + ss.b, "block counts of " + p.text());
      }
  for (std::size_t k = 0; 2 * k <= max_points; ++k) {
    const auto proj = all_projectives(k);
    const std::size_t m = proj.size();
    std::vector<std::vector<bool>> dom(m, std::vector<bool>(m));
    for (std::size_t a = 0; a < m; ++a) {
      const auto& p = proj[a];
      r.expect(is_projective(p), "projective " + p.text());
      r.expect(stats(p).beta == 2 * compose(p, p).removed_loops, "beta = 2 rl(p,p) for " + p.text());
      r.expect(dominates(Partition::identity(k), p), "identity is maximal");
      for (std::size_t b = 0; b < m; ++b) dom[a][b] = dominates(p, proj[b]);
    }
    for (std::size_t a = 0; a < m; ++a) {
      r.expect(dom[a][a], "reflexive");
      for (std::size_t b = 0; b < m; ++b) {
        if (a != b && dom[a][b] && dom[b][a]) r.expect(false, "antisymmetric");
        if (dom[a][b] && a != b)
          r.expect(through_count(proj[b]) < through_count(proj[a]), "strict domination lowers t");
        if (!dom[a][b]) continue;
        for (std::size_t c = 0; c < m; ++c)
          if (dom[b][c] && !dom[a][c]) r.expect(false, "transitive");
      }
    }
  }
  for (std::size_t total = 0; 2 * total <= max_points; ++total)
    for (std::size_t a = 0; a <= total; ++a) {
      std::map<Partition, std::string> seen;
      bool injective = true;
      for (const auto& p : all_projectives(a))
        for (const auto& q : all_projectives(total - a))
          for (const auto& h : enumerate_mixing(through_count(p), through_count(q))) {
            const Partition m = mix(p, q, h);
            r.expect(is_projective(m) && dominates(tensor(p, q), m), "mix dominated by p⊗q");
            if (!seen.emplace(m, p.text() + "|" + q.text() + "|" + h.h.text()).second) injective = false;
          }
      r.expect(injective, "mix injective at (" + std::to_string(a) + "," + std::to_string(total - a) + ")");
    }
  return r;
}

inline CheckReport category_suite(std::size_t max_points) {
  CheckReport r;
  const std::vector<std::pair<BuiltinCategory, std::vector<Partition>>> cases = {
      {BuiltinCategory::NC2, {}},
      {BuiltinCategory::NCEVEN, {Partition(2, 2, {0, 0, 0, 0})}},
      {BuiltinCategory::NCB, {Partition(1, 0, {0})}},
      {BuiltinCategory::NC, {Partition(1, 0, {0}), Partition(2, 2, {0, 0, 0, 0})}},
  };
  for (const auto& [id, gens] : cases) {
    const auto builtin = CategorySpec::builtin(id);
    const auto gen = CategorySpec::generated(gens, max_points);
    for (std::size_t n = 0; n <= max_points; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        r.expect(enumerate(builtin, k, n - k) == enumerate(gen, k, n - k),
                 "closure equals " + builtin_name(id) + " at (" + std::to_string(k) + "," +
                     std::to_string(n - k) + ")");
  }
  const auto ucol = CategorySpec::builtin(BuiltinCategory::UCOL);
  const auto ugen = CategorySpec::generated({Partition::identity(std::vector<Color>{Color::white})}, max_points);
  for (std::size_t n = 0; n <= max_points; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      r.expect(enumerate(ucol, k, n - k) == enumerate(ugen, k, n - k),
               "closure equals ucol at (" + std::to_string(k) + "," + std::to_string(n - k) + ")");
  return r;
}

inline CheckReport fusion_suite(std::size_t max_label) {
  CheckReport r;
  auto words = [](const std::string& alphabet, std::size_t max_len) {
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < out.size(); ++i)
      if (out[i].size() < max_len)
        for (char c : alphabet) out.push_back(out[i] + c);
    return out;
  };
  auto sorted = [](std::vector<FusionLabel> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto check = [&](BuiltinCategory id, const std::vector<FusionLabel>& labels) {
    const auto C = CategorySpec::builtin(id);
    const auto kind = *label_kind(C);
    for (const auto& a : labels)
      for (const auto& b : labels)
        r.expect(sorted(labelled_fusion(kind, a, b)) == sorted(partition_level_fusion(C, a, b)),
                 builtin_name(id) + ": " + to_string(a) + " x " + to_string(b));
  };
  std::vector<FusionLabel> nats;
  for (std::size_t n = 0; n <= max_label; ++n) nats.push_back(Nat{n});
  for (auto id : {BuiltinCategory::NC, BuiltinCategory::NC2, BuiltinCategory::NCB}) check(id, nats);
  std::vector<FusionLabel> z2, alt;
  for (auto& w : words("01", std::min<std::size_t>(max_label, 2))) z2.push_back(Z2Word{w});
  for (auto& w : words("wb", std::min<std::size_t>(max_label, 2))) alt.push_back(AltWord{w});
  check(BuiltinCategory::NCEVEN, z2);
  check(BuiltinCategory::UCOL, alt);
  return r;
}

}  // namespace particat
