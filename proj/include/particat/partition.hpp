#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace particat {

enum class Color : std::uint8_t { white, black };

inline Color flip(Color c) { return c == Color::white ? Color::black : Color::white; }
inline char color_char(Color c) { return c == Color::white ? 'w' : 'b'; }

inline constexpr std::size_t max_blocks = 52;

inline char block_letter(std::size_t id) {
  return id < 26 ? static_cast<char>('a' + id) : static_cast<char>('A' + (id - 26));
}

namespace detail {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::uint8_t> rank_;
};

}  // namespace detail

// A partition of k upper points 0..k-1 and l lower points k..k+l-1.
// Block ids are canonical: numbered by first appearance, upper row then lower row.
class Partition {
 public:
  Partition() { rebuild_key(); }

  Partition(std::size_t upper, std::size_t lower, const std::vector<int>& block_of_point,
            std::optional<std::vector<Color>> colors = std::nullopt)
      : upper_(upper), lower_(lower) {
    if (block_of_point.size() != upper + lower)
      throw ArityError("block vector length does not match point count");
    if (colors && colors->size() != upper + lower)
      throw ColorError("color vector length does not match point count");
    blocks_.resize(block_of_point.size());
    std::vector<std::pair<int, std::uint8_t>> seen;
    for (std::size_t i = 0; i < block_of_point.size(); ++i) {
      auto it = std::find_if(seen.begin(), seen.end(),
                             [&](const auto& e) { return e.first == block_of_point[i]; });
      if (it == seen.end()) {
        if (seen.size() >= max_blocks) throw BoundsError("more than 52 blocks");
        seen.emplace_back(block_of_point[i], static_cast<std::uint8_t>(seen.size()));
        blocks_[i] = seen.back().second;
      } else {
        blocks_[i] = it->second;
      }
    }
    block_count_ = seen.size();
    if (colors) {
      colored_ = true;
      colors_ = std::move(*colors);
    }
    rebuild_key();
  }

  static Partition identity(std::size_t n) {
    std::vector<int> b(2 * n);
    for (std::size_t i = 0; i < n; ++i) b[i] = b[n + i] = static_cast<int>(i);
    return Partition(n, n, b);
  }

  // Identity strands carrying the given colors on both rows.
  static Partition identity(const std::vector<Color>& word) {
    const std::size_t n = word.size();
    std::vector<int> b(2 * n);
    std::vector<Color> c(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = b[n + i] = static_cast<int>(i);
      c[i] = c[n + i] = word[i];
    }
    return Partition(n, n, b, c);
  }

  std::size_t upper_count() const { return upper_; }
  std::size_t lower_count() const { return lower_; }
  std::size_t point_count() const { return upper_ + lower_; }
  std::size_t block_count() const { return block_count_; }
  int block(std::size_t point) const { return blocks_[point]; }
  int upper_block(std::size_t i) const { return blocks_[i]; }
  int lower_block(std::size_t j) const { return blocks_[upper_ + j]; }
  std::vector<int> blocks() const { return {blocks_.begin(), blocks_.end()}; }

  bool colored() const { return colored_; }
  Color color(std::size_t point) const { return colors_[point]; }
  const std::vector<Color>& colors() const { return colors_; }
  std::optional<std::vector<Color>> color_vector() const {
    if (!colored_) return std::nullopt;
    return colors_;
  }

  // Canonical serialization, e.g. "aab:abbb" or "ab@wb:ba@bw".
  const std::string& text() const { return key_; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.key_ <=> b.key_;
  }

 private:
  void rebuild_key() {
    key_.clear();
    auto row = [&](std::size_t from, std::size_t to) {
      for (std::size_t i = from; i < to; ++i) key_.push_back(block_letter(blocks_[i]));
      if (colored_) {
        key_.push_back('@');
        for (std::size_t i = from; i < to; ++i) key_.push_back(color_char(colors_[i]));
      }
    };
    row(0, upper_);
    key_.push_back(':');
    row(upper_, upper_ + lower_);
  }

  std::size_t upper_ = 0;
  std::size_t lower_ = 0;
  std::vector<std::uint8_t> blocks_;
  std::size_t block_count_ = 0;
  bool colored_ = false;
  std::vector<Color> colors_;
  std::string key_;
};

struct PartitionStats {
  std::size_t b = 0;
  std::size_t t = 0;
  std::size_t beta = 0;
  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

struct CompositionResult {
  Partition partition;
  std::size_t removed_loops = 0;
};

inline Partition canonicalize(const Partition& p) { return p; }

inline std::vector<bool> through_flags(const Partition& p) {
  std::vector<bool> up(p.block_count(), false), down(p.block_count(), false);
  for (std::size_t i = 0; i < p.upper_count(); ++i) up[p.upper_block(i)] = true;
  for (std::size_t j = 0; j < p.lower_count(); ++j) down[p.lower_block(j)] = true;
  std::vector<bool> through(p.block_count());
  for (std::size_t b = 0; b < p.block_count(); ++b) through[b] = up[b] && down[b];
  return through;
}

inline std::vector<std::size_t> block_sizes(const Partition& p) {
  std::vector<std::size_t> sizes(p.block_count(), 0);
  for (std::size_t i = 0; i < p.point_count(); ++i) ++sizes[p.block(i)];
  return sizes;
}

inline PartitionStats stats(const Partition& p) {
  PartitionStats s;
  s.b = p.block_count();
  for (bool f : through_flags(p)) s.t += f ? 1 : 0;
  s.beta = s.b - s.t;
  return s;
}

inline std::size_t through_count(const Partition& p) { return stats(p).t; }

inline Partition tensor(const Partition& p, const Partition& q) {
  if (p.colored() != q.colored()) throw ColorError("tensor of colored and uncolored partitions");
  const std::size_t k = p.upper_count() + q.upper_count();
  const std::size_t l = p.lower_count() + q.lower_count();
  const int off = static_cast<int>(p.block_count());
  std::vector<int> b;
  std::vector<Color> c;
  b.reserve(k + l);
  auto put = [&](const Partition& x, std::size_t point, int shift) {
    b.push_back(x.block(point) + shift);
    if (x.colored()) c.push_back(x.color(point));
  };
  for (std::size_t i = 0; i < p.upper_count(); ++i) put(p, i, 0);
  for (std::size_t i = 0; i < q.upper_count(); ++i) put(q, i, off);
  for (std::size_t j = 0; j < p.lower_count(); ++j) put(p, p.upper_count() + j, 0);
  for (std::size_t j = 0; j < q.lower_count(); ++j) put(q, q.upper_count() + j, off);
  if (p.colored()) return Partition(k, l, b, c);
  return Partition(k, l, b);
}

inline Partition tensor_power(const Partition& p, std::size_t n) {
  Partition r = p.colored() ? Partition::identity(std::vector<Color>{}) : Partition{};
  for (std::size_t i = 0; i < n; ++i) r = tensor(r, p);
  return r;
}

// bottom∘top: top is stacked above bottom, top's lower row glued to bottom's upper row.
inline CompositionResult compose(const Partition& bottom, const Partition& top) {
  if (top.lower_count() != bottom.upper_count())
    throw ArityError("compose: top lower count " + std::to_string(top.lower_count()) +
                     " != bottom upper count " + std::to_string(bottom.upper_count()));
  if (top.colored() != bottom.colored())
    throw ColorError("compose of colored and uncolored partitions");
  const std::size_t k = top.upper_count();
  const std::size_t m = top.lower_count();
  const std::size_t l = bottom.lower_count();
  if (top.colored()) {
    for (std::size_t i = 0; i < m; ++i)
      if (top.color(k + i) != bottom.color(i))
        throw ColorError("compose: colors of the glued rows differ");
  }
  // nodes: [0,k) top upper, [k,k+m) middle, [k+m,k+m+l) bottom lower
  detail::UnionFind uf(k + m + l);
  std::vector<std::size_t> first(top.block_count(), SIZE_MAX);
  for (std::size_t x = 0; x < k + m; ++x) {
    auto& f = first[top.block(x)];
    if (f == SIZE_MAX) f = x;
    else uf.unite(f, x);
  }
  first.assign(bottom.block_count(), SIZE_MAX);
  for (std::size_t x = 0; x < m + l; ++x) {
    const std::size_t node = k + x;
    auto& f = first[bottom.block(x)];
    if (f == SIZE_MAX) f = node;
    else uf.unite(f, node);
  }
  std::vector<bool> outer(k + m + l, false);
  for (std::size_t x = 0; x < k; ++x) outer[uf.find(x)] = true;
  for (std::size_t x = k + m; x < k + m + l; ++x) outer[uf.find(x)] = true;
  std::size_t loops = 0;
  std::vector<bool> counted(k + m + l, false);
  for (std::size_t x = k; x < k + m; ++x) {
    const std::size_t r = uf.find(x);
    if (!outer[r] && !counted[r]) {
      counted[r] = true;
      ++loops;
    }
  }
  std::vector<int> b;
  std::vector<Color> c;
  b.reserve(k + l);
  for (std::size_t x = 0; x < k; ++x) {
    b.push_back(static_cast<int>(uf.find(x)));
    if (top.colored()) c.push_back(top.color(x));
  }
  for (std::size_t x = 0; x < l; ++x) {
    b.push_back(static_cast<int>(uf.find(k + m + x)));
    if (top.colored()) c.push_back(bottom.color(m + x));
  }
  if (top.colored()) return {Partition(k, l, b, c), loops};
  return {Partition(k, l, b), loops};
}

inline Partition involution(const Partition& p) {
  std::vector<int> b;
  std::vector<Color> c;
  for (std::size_t j = 0; j < p.lower_count(); ++j) {
    b.push_back(p.lower_block(j));
    if (p.colored()) c.push_back(p.color(p.upper_count() + j));
  }
  for (std::size_t i = 0; i < p.upper_count(); ++i) {
    b.push_back(p.upper_block(i));
    if (p.colored()) c.push_back(p.color(i));
  }
  if (p.colored()) return Partition(p.lower_count(), p.upper_count(), b, c);
  return Partition(p.lower_count(), p.upper_count(), b);
}

enum class Corner { upper_left_down, lower_left_up, upper_right_down, lower_right_up };

inline Corner inverse(Corner c) {
  switch (c) {
    case Corner::upper_left_down: return Corner::lower_left_up;
    case Corner::lower_left_up: return Corner::upper_left_down;
    case Corner::upper_right_down: return Corner::lower_right_up;
    case Corner::lower_right_up: return Corner::upper_right_down;
  }
  return c;
}

inline Partition rotate(const Partition& p, Corner corner) {
  std::vector<std::size_t> up(p.upper_count()), down(p.lower_count());
  std::iota(up.begin(), up.end(), std::size_t{0});
  std::iota(down.begin(), down.end(), p.upper_count());
  std::size_t moved = 0;
  switch (corner) {
    case Corner::upper_left_down:
      if (up.empty()) throw ArityError("rotate: empty upper row");
      moved = up.front();
      up.erase(up.begin());
      down.insert(down.begin(), moved);
      break;
    case Corner::lower_left_up:
      if (down.empty()) throw ArityError("rotate: empty lower row");
      moved = down.front();
      down.erase(down.begin());
      up.insert(up.begin(), moved);
      break;
    case Corner::upper_right_down:
      if (up.empty()) throw ArityError("rotate: empty upper row");
      moved = up.back();
      up.pop_back();
      down.push_back(moved);
      break;
    case Corner::lower_right_up:
      if (down.empty()) throw ArityError("rotate: empty lower row");
      moved = down.back();
      down.pop_back();
      up.push_back(moved);
      break;
  }
  std::vector<int> b;
  std::vector<Color> c;
  for (auto list : {&up, &down}) {
    for (std::size_t x : *list) {
      b.push_back(p.block(x));
      if (p.colored()) c.push_back(x == moved ? flip(p.color(x)) : p.color(x));
    }
  }
  if (p.colored()) return Partition(up.size(), down.size(), b, c);
  return Partition(up.size(), down.size(), b);
}

inline Partition conjugate_colors(const Partition& p) {
  if (!p.colored()) throw ColorError("conjugate_colors: uncolored partition");
  std::vector<Color> c = p.colors();
  for (auto& x : c) x = flip(x);
  return Partition(p.upper_count(), p.lower_count(), p.blocks(), c);
}

// Left-right reflection of both rows.
inline Partition mirror(const Partition& p) {
  const std::size_t k = p.upper_count(), l = p.lower_count();
  std::vector<int> b(k + l);
  std::vector<Color> c(p.colored() ? k + l : 0);
  for (std::size_t i = 0; i < k; ++i) {
    b[i] = p.block(k - 1 - i);
    if (p.colored()) c[i] = p.color(k - 1 - i);
  }
  for (std::size_t j = 0; j < l; ++j) {
    b[k + j] = p.block(k + l - 1 - j);
    if (p.colored()) c[k + j] = p.color(k + l - 1 - j);
  }
  if (p.colored()) return Partition(k, l, b, c);
  return Partition(k, l, b);
}

// Partition of the contragredient representation: mirror, then flip colors.
inline Partition contragredient(const Partition& p) {
  const Partition m = mirror(p);
  return m.colored() ? conjugate_colors(m) : m;
}

// Same block structure with the given colors (or none).
inline Partition with_colors(const Partition& p, std::optional<std::vector<Color>> colors) {
  return Partition(p.upper_count(), p.lower_count(), p.blocks(), std::move(colors));
}

inline Partition uncolor(const Partition& p) { return with_colors(p, std::nullopt); }

// Boundary points in cyclic order: upper left to right, lower right to left.
inline std::vector<int> cyclic_blocks(const Partition& p) {
  std::vector<int> seq;
  seq.reserve(p.point_count());
  for (std::size_t i = 0; i < p.upper_count(); ++i) seq.push_back(p.upper_block(i));
  for (std::size_t j = p.lower_count(); j-- > 0;) seq.push_back(p.lower_block(j));
  return seq;
}

inline bool is_noncrossing(const Partition& p) {
  const auto seq = cyclic_blocks(p);
  std::vector<std::size_t> remaining(p.block_count(), 0);
  for (int b : seq) ++remaining[b];
  std::vector<bool> opened(p.block_count(), false);
  std::vector<int> stack;
  for (int b : seq) {
    if (opened[b]) {
      if (stack.empty() || stack.back() != b) return false;
    } else {
      opened[b] = true;
      stack.push_back(b);
    }
    if (--remaining[b] == 0) stack.pop_back();
  }
  return true;
}

inline bool is_pair(const Partition& p) {
  const auto s = block_sizes(p);
  return std::all_of(s.begin(), s.end(), [](std::size_t x) { return x == 2; });
}

inline bool all_blocks_even(const Partition& p) {
  const auto s = block_sizes(p);
  return std::all_of(s.begin(), s.end(), [](std::size_t x) { return x % 2 == 0; });
}

inline bool blocks_at_most_two(const Partition& p) {
  const auto s = block_sizes(p);
  return std::all_of(s.begin(), s.end(), [](std::size_t x) { return x <= 2; });
}

inline bool is_symmetric(const Partition& p) { return involution(p) == p; }

inline bool is_idempotent(const Partition& p) {
  if (p.upper_count() != p.lower_count())
    throw ArityError("is_idempotent: upper and lower counts differ");
  if (p.colored()) {
    for (std::size_t i = 0; i < p.upper_count(); ++i)
      if (p.color(i) != p.color(p.upper_count() + i)) return false;
  }
  return compose(p, p).partition == p;
}

inline bool is_projective(const Partition& p) { return is_symmetric(p) && is_idempotent(p); }

}  // namespace particat

template <>
struct std::hash<particat::Partition> {
  std::size_t operator()(const particat::Partition& p) const noexcept {
    return std::hash<std::string>{}(p.text());
  }
};
