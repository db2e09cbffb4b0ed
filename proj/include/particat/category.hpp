#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "limits.hpp"
#include "partition.hpp"
#include "structure.hpp"

namespace particat {

// Restricted growth strings: f(labels, block_count) for every set partition of n points.
template <class F>
void for_each_set_partition(std::size_t n, F&& f) {
  std::vector<int> a(n, 0);
  if (n == 0) {
    f(a, std::size_t{0});
    return;
  }
  std::vector<int> maxv(n, 0);
  while (true) {
    f(a, static_cast<std::size_t>(maxv[n - 1] + 1));
    std::size_t i = n - 1;
    while (i > 0 && a[i] == maxv[i - 1] + 1) --i;
    if (i == 0) return;
    ++a[i];
    maxv[i] = std::max(maxv[i - 1], a[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxv[j] = maxv[i];
    }
  }
}

inline std::vector<Color> color_word(std::size_t n, unsigned long mask) {
  std::vector<Color> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? Color::black : Color::white;
  return c;
}

// One-line forms: partitions in P(0, n) obtained by rotating the upper row down.
inline Partition to_line(Partition p) {
  while (p.upper_count() > 0) p = rotate(p, Corner::upper_left_down);
  return p;
}

inline Partition from_line(Partition x, std::size_t k) {
  if (x.upper_count() != 0 || k > x.lower_count()) throw ArityError("from_line: bad arity");
  for (std::size_t i = 0; i < k; ++i) x = rotate(x, Corner::lower_left_up);
  return x;
}

namespace detail {

inline Partition line_shift(const Partition& x) {
  const std::size_t n = x.lower_count();
  if (n < 2) return x;
  std::vector<int> b(n);
  std::vector<Color> c(x.colored() ? n : 0);
  for (std::size_t j = 0; j < n; ++j) {
    b[j] = x.block((j + 1) % n);
    if (x.colored()) c[j] = x.color((j + 1) % n);
  }
  if (x.colored()) return Partition(0, n, b, c);
  return Partition(0, n, b);
}

// Glue adjacent points i, i+1 to a cap; nullopt if colors forbid it.
inline std::optional<Partition> line_contract(const Partition& x, std::size_t i) {
  if (x.colored() && x.color(i) == x.color(i + 1)) return std::nullopt;
  const int from = x.block(i + 1), to = x.block(i);
  std::vector<int> b;
  std::vector<Color> c;
  for (std::size_t j = 0; j < x.lower_count(); ++j) {
    if (j == i || j == i + 1) continue;
    const int id = x.block(j);
    b.push_back(id == from ? to : id);
    if (x.colored()) c.push_back(x.color(j));
  }
  if (x.colored()) return Partition(0, b.size(), b, c);
  return Partition(0, b.size(), b);
}

// Composition on one-line forms: the last m points of x meet the first m of y, nested.
inline std::optional<Partition> line_glue(const Partition& x, const Partition& y, std::size_t m) {
  const std::size_t a = x.lower_count(), b = y.lower_count();
  if (m > a || m > b) return std::nullopt;
  UnionFind uf(a + b);
  std::vector<std::size_t> first(x.block_count() + y.block_count(), SIZE_MAX);
  for (std::size_t i = 0; i < a; ++i) {
    auto& f = first[x.block(i)];
    if (f == SIZE_MAX) f = i;
    uf.unite(f, i);
  }
  for (std::size_t j = 0; j < b; ++j) {
    auto& f = first[x.block_count() + y.block(j)];
    if (f == SIZE_MAX) f = a + j;
    uf.unite(f, a + j);
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (x.colored() && x.color(a - 1 - i) == y.color(i)) return std::nullopt;
    uf.unite(a - 1 - i, a + i);
  }
  std::vector<int> blocks;
  std::vector<Color> colors;
  for (std::size_t i = 0; i + m < a; ++i) {
    blocks.push_back(static_cast<int>(uf.find(i)));
    if (x.colored()) colors.push_back(x.color(i));
  }
  for (std::size_t j = m; j < b; ++j) {
    blocks.push_back(static_cast<int>(uf.find(a + j)));
    if (x.colored()) colors.push_back(y.color(j));
  }
  if (x.colored()) return Partition(0, blocks.size(), blocks, colors);
  return Partition(0, blocks.size(), blocks);
}

}  // namespace detail

// Bounded closure under tensor, composition, rotation and involution, on one-line forms.
// Composition is applied as nested gluing against rotated generators.
// Intermediate results are kept up to working_points; answers are given up to max_points.
class Closure {
 public:
  Closure(const std::vector<Partition>& generators, std::size_t max_points,
          std::size_t working_points, bool colored)
      : max_points_(max_points), working_(std::max(working_points, max_points)), colored_(colored) {
    levels_.resize(working_ + 1);
    by_size_.resize(working_ + 1);
    add(to_line(colored ? Partition::identity(std::vector<Color>{Color::white}) : Partition::identity(1)));
    for (const auto& g : generators) {
      if (g.colored() != colored) throw ColorError("closure: generators mix colored and uncolored");
      if (g.point_count() > working_)
        throw BoundsError("closure: generator " + g.text() + " exceeds the point bound");
      add(to_line(g));
    }
    for (std::size_t n = 0; n <= working_; ++n)
      for (const auto& x : levels_[n]) glue_with_.push_back(x);
    while (!queue_.empty()) {
      const Partition x = queue_.front();
      queue_.pop_front();
      const std::size_t n = x.lower_count();
      for (std::size_t m = 0; n + m <= working_; ++m) {
        for (std::size_t idx = 0; idx < by_size_[m].size(); ++idx) {
          const Partition y = by_size_[m][idx];
          add(tensor(x, y));
          add(tensor(y, x));
        }
      }
      for (std::size_t i = 0; i + 1 < n; ++i)
        if (auto r = detail::line_contract(x, i)) add(*r);
      for (const auto& g : glue_with_)
        for (std::size_t m = 1; m <= std::min(n, g.lower_count()); ++m) {
          if (n + g.lower_count() - 2 * m > working_) continue;
          if (auto r = detail::line_glue(x, g, m)) add(*r);
          if (auto r = detail::line_glue(g, x, m)) add(*r);
        }
    }
    for (std::size_t n = 0; n <= max_points_; ++n)
      for (const auto& x : levels_[n])
        if (!is_noncrossing(x)) noncrossing_ = false;
  }

  std::size_t max_points() const { return max_points_; }
  bool colored() const { return colored_; }
  bool noncrossing() const { return noncrossing_; }

  std::optional<bool> contains(const Partition& p) const {
    if (p.point_count() > max_points_) return std::nullopt;
    if (p.colored() != colored_) return false;
    return levels_[p.point_count()].count(to_line(p)) > 0;
  }

  const std::set<Partition>& lines(std::size_t n) const { return levels_.at(n); }

  // All members with k+l <= max_points as (k,l) partitions.
  std::vector<Partition> members() const {
    std::vector<Partition> out;
    for (std::size_t n = 0; n <= max_points_; ++n)
      for (const auto& x : levels_[n])
        for (std::size_t k = 0; k <= n; ++k) out.push_back(from_line(x, k));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  void add(const Partition& x) {
    if (x.lower_count() > working_) return;
    auto& level = levels_[x.lower_count()];
    std::vector<Partition> pending{x};
    while (!pending.empty()) {
      Partition y = pending.back();
      pending.pop_back();
      if (!level.insert(y).second) continue;
      by_size_[y.lower_count()].push_back(y);
      queue_.push_back(y);
      pending.push_back(detail::line_shift(y));
      pending.push_back(to_line(involution(y)));
    }
  }

  std::size_t max_points_;
  std::size_t working_;
  bool colored_;
  bool noncrossing_ = true;
  std::vector<std::set<Partition>> levels_;
  std::vector<std::vector<Partition>> by_size_;
  std::deque<Partition> queue_;
  std::vector<Partition> glue_with_;
};

enum class BuiltinCategory { P, P2, NC, NC2, NCB, NCEVEN, UCOL };

inline std::string builtin_name(BuiltinCategory id) {
  switch (id) {
    case BuiltinCategory::P: return "p";
    case BuiltinCategory::P2: return "p2";
    case BuiltinCategory::NC: return "nc";
    case BuiltinCategory::NC2: return "nc2";
    case BuiltinCategory::NCB: return "ncb";
    case BuiltinCategory::NCEVEN: return "nceven";
    case BuiltinCategory::UCOL: return "ucol";
  }
  return "?";
}

inline std::optional<BuiltinCategory> builtin_from_name(const std::string& name) {
  for (auto id : {BuiltinCategory::P, BuiltinCategory::P2, BuiltinCategory::NC, BuiltinCategory::NC2,
                  BuiltinCategory::NCB, BuiltinCategory::NCEVEN, BuiltinCategory::UCOL})
    if (builtin_name(id) == name) return id;
  return std::nullopt;
}

enum class Membership { no, yes, unknown };

inline bool ucol_predicate(const Partition& p) {
  if (!is_pair(p) || !is_noncrossing(p)) return false;
  std::vector<std::size_t> first(p.block_count(), SIZE_MAX);
  for (std::size_t x = 0; x < p.point_count(); ++x) {
    auto& f = first[p.block(x)];
    if (f == SIZE_MAX) {
      f = x;
      continue;
    }
    const bool through = f < p.upper_count() && x >= p.upper_count();
    const bool same = p.color(f) == p.color(x);
    if (through != same) return false;
  }
  return true;
}

class CategorySpec {
 public:
  static CategorySpec builtin(BuiltinCategory id) {
    CategorySpec c;
    c.builtin_ = id;
    return c;
  }

  // working_points defaults to max_points + 2 so one contraction can land on max_points.
  static CategorySpec generated(const std::vector<Partition>& generators, std::size_t max_points,
                                const Limits& limits = default_limits(),
                                std::optional<std::size_t> working_points = std::nullopt) {
    const std::size_t work = working_points.value_or(max_points + 2);
    if (max_points > limits.max_closure_points || work > limits.max_closure_points + 2)
      throw BoundsError("closure bound " + std::to_string(max_points) + " exceeds cap " +
                        std::to_string(limits.max_closure_points));
    const bool colored = !generators.empty() && generators.front().colored();
    CategorySpec c;
    c.generators_ = generators;
    c.closure_ = std::make_shared<const Closure>(generators, max_points, work, colored);
    return c;
  }

  std::optional<BuiltinCategory> builtin_id() const { return builtin_; }
  const std::vector<Partition>& generators() const { return generators_; }
  const Closure* closure() const { return closure_.get(); }

  std::string name() const {
    if (builtin_) return builtin_name(*builtin_);
    std::string s = "gen{";
    for (std::size_t i = 0; i < generators_.size(); ++i) s += (i ? "," : "") + generators_[i].text();
    return s + "}/" + std::to_string(closure_->max_points());
  }

  bool colored() const { return builtin_ ? *builtin_ == BuiltinCategory::UCOL : closure_->colored(); }

  bool noncrossing() const {
    if (!builtin_) return closure_->noncrossing();
    return *builtin_ != BuiltinCategory::P && *builtin_ != BuiltinCategory::P2;
  }

  std::size_t max_points() const { return builtin_ ? SIZE_MAX : closure_->max_points(); }

  Membership membership(const Partition& p) const {
    if (p.colored() != colored())
      throw ColorError("category " + name() + (colored() ? " needs colored" : " needs uncolored") +
                       " partitions, got " + p.text());
    if (!builtin_) {
      const auto r = closure_->contains(p);
      if (!r) return Membership::unknown;
      return *r ? Membership::yes : Membership::no;
    }
    bool in = false;
    switch (*builtin_) {
      case BuiltinCategory::P: in = true; break;
      case BuiltinCategory::P2: in = is_pair(p); break;
      case BuiltinCategory::NC: in = is_noncrossing(p); break;
      case BuiltinCategory::NC2: in = is_pair(p) && is_noncrossing(p); break;
      case BuiltinCategory::NCB: in = blocks_at_most_two(p) && is_noncrossing(p); break;
      case BuiltinCategory::NCEVEN: in = all_blocks_even(p) && is_noncrossing(p); break;
      case BuiltinCategory::UCOL: in = ucol_predicate(p); break;
    }
    return in ? Membership::yes : Membership::no;
  }

  bool contains(const Partition& p) const {
    const auto m = membership(p);
    if (m == Membership::unknown)
      throw UndecidableError("membership of " + p.text() + " in " + name() +
                             " is beyond the closure bound");
    return m == Membership::yes;
  }

 private:
  std::optional<BuiltinCategory> builtin_;
  std::vector<Partition> generators_;
  std::shared_ptr<const Closure> closure_;
};

inline std::vector<Partition> closure(const std::vector<Partition>& generators, std::size_t max_points,
                                      const Limits& limits = default_limits()) {
  return CategorySpec::generated(generators, max_points, limits).closure()->members();
}

inline std::vector<Partition> enumerate(const CategorySpec& C, std::size_t k, std::size_t l,
                                        const Limits& limits = default_limits()) {
  const std::size_t n = k + l;
  if (n > limits.max_enumeration_points)
    throw BoundsError("enumerate: k+l = " + std::to_string(n) + " exceeds cap " +
                      std::to_string(limits.max_enumeration_points));
  std::vector<Partition> out;
  if (const Closure* cl = C.closure()) {
    if (n > cl->max_points())
      throw UndecidableError("enumerate: k+l beyond the closure bound of " + C.name());
    for (const auto& x : cl->lines(n)) out.push_back(from_line(x, k));
  } else {
    const bool ucol = C.builtin_id() == BuiltinCategory::UCOL;
    for_each_set_partition(n, [&](const std::vector<int>& a, std::size_t) {
      Partition p(k, l, a);
      if (!ucol) {
        if (C.contains(p)) out.push_back(std::move(p));
        return;
      }
      if (!is_pair(p) || !is_noncrossing(p)) return;
      for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        Partition c = with_colors(p, color_word(n, mask));
        if (C.contains(c)) out.push_back(std::move(c));
      }
    });
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Projective p = s*s for every building partition s with k upper points.
inline std::vector<Partition> all_projectives(std::size_t k) {
  std::vector<Partition> out;
  for_each_set_partition(k, [&](const std::vector<int>& a, std::size_t blocks) {
    for (unsigned long mask = 0; mask < (1ul << blocks); ++mask) {
      std::vector<int> b = a;
      std::size_t t = 0;
      for (std::size_t id = 0; id < blocks; ++id)
        if ((mask >> id) & 1) {
          b.push_back(static_cast<int>(id));
          ++t;
        }
      const Partition s(k, t, b);
      out.push_back(projective_from(s));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Partition> projectives(const CategorySpec& C, std::size_t k,
                                          const Limits& limits = default_limits()) {
  if (k > limits.max_projective_arity)
    throw BoundsError("projectives: k = " + std::to_string(k) + " exceeds cap " +
                      std::to_string(limits.max_projective_arity));
  if (2 * k > C.max_points())
    throw UndecidableError("projectives: 2k beyond the closure bound of " + C.name());
  std::vector<Partition> out;
  const bool ucol = C.builtin_id() == BuiltinCategory::UCOL;
  for (const auto& p : all_projectives(k)) {
    if (!C.colored()) {
      if (C.contains(p)) out.push_back(p);
      continue;
    }
    if (ucol && (!is_pair(p) || !is_noncrossing(p))) continue;
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      const auto half = color_word(k, mask);
      std::vector<Color> w = half;
      w.insert(w.end(), half.begin(), half.end());
      Partition c = with_colors(p, w);
      if (C.contains(c)) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace particat
