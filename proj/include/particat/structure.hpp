#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace particat {

// Bijection of {0..m-1}, stored as its one-line images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || hit[x]) throw PreconditionError("not a permutation");
      hit[x] = true;
    }
  }
  static Permutation identity(std::size_t m) {
    std::vector<std::size_t> v(m);
    std::iota(v.begin(), v.end(), std::size_t{0});
    return Permutation(std::move(v));
  }

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }
  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw ArityError("permutation sizes differ");
    std::vector<std::size_t> v(a.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a(b(i));
    return Permutation(std::move(v));
  }
  Permutation inverse() const {
    std::vector<std::size_t> v(size());
    for (std::size_t i = 0; i < size(); ++i) v[images_[i]] = i;
    return Permutation(std::move(v));
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> images_;
};

inline std::vector<Permutation> all_permutations(std::size_t m) {
  std::vector<std::size_t> v(m);
  std::iota(v.begin(), v.end(), std::size_t{0});
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Upper point i joined to lower point sigma(i).
inline Partition to_through_partition(const Permutation& sigma, bool colored = false) {
  const std::size_t m = sigma.size();
  std::vector<int> b(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    b[i] = static_cast<int>(i);
    b[m + sigma(i)] = static_cast<int>(i);
  }
  if (colored) return Partition(m, m, b, std::vector<Color>(2 * m, Color::white));
  return Partition(m, m, b);
}

struct ThroughBlockDecomposition {
  Partition lower_building;  // q
  Partition middle;          // r
  Partition upper_building;  // s
};

namespace detail {

// Through-block ids ordered by their first point in the given row.
inline std::vector<int> through_order(const Partition& p, bool upper_row) {
  const auto through = through_flags(p);
  std::vector<int> order;
  std::vector<bool> seen(p.block_count(), false);
  const std::size_t n = upper_row ? p.upper_count() : p.lower_count();
  for (std::size_t i = 0; i < n; ++i) {
    const int b = upper_row ? p.upper_block(i) : p.lower_block(i);
    if (through[b] && !seen[b]) {
      seen[b] = true;
      order.push_back(b);
    }
  }
  return order;
}

inline Partition building_from_row(const Partition& p, bool upper_row, const std::vector<int>& order) {
  const std::size_t n = upper_row ? p.upper_count() : p.lower_count();
  const std::size_t offset = upper_row ? 0 : p.upper_count();
  std::vector<int> b;
  std::vector<Color> c;
  for (std::size_t i = 0; i < n; ++i) {
    b.push_back(p.block(offset + i));
    if (p.colored()) c.push_back(p.color(offset + i));
  }
  for (int id : order) {
    b.push_back(id);
    if (p.colored()) c.push_back(Color::white);
  }
  if (p.colored()) return Partition(n, order.size(), b, c);
  return Partition(n, order.size(), b);
}

}  // namespace detail

inline Partition upper_building(const Partition& p) {
  return detail::building_from_row(p, true, detail::through_order(p, true));
}

inline Partition lower_building(const Partition& p) {
  return detail::building_from_row(p, false, detail::through_order(p, false));
}

inline ThroughBlockDecomposition through_block_decomposition(const Partition& p) {
  const auto up = detail::through_order(p, true);
  const auto down = detail::through_order(p, false);
  std::vector<std::size_t> sigma(up.size());
  for (std::size_t j = 0; j < up.size(); ++j)
    sigma[j] = static_cast<std::size_t>(std::find(down.begin(), down.end(), up[j]) - down.begin());
  return {detail::building_from_row(p, false, down),
          to_through_partition(Permutation(sigma), p.colored()),
          detail::building_from_row(p, true, up)};
}

inline Partition recompose(const ThroughBlockDecomposition& d) {
  return compose(involution(d.lower_building), compose(d.middle, d.upper_building).partition)
      .partition;
}

inline bool is_building(const Partition& p) {
  const auto through = through_flags(p);
  std::vector<bool> used(p.block_count(), false);
  int last_min_up = -1;
  for (std::size_t j = 0; j < p.lower_count(); ++j) {
    const int b = p.lower_block(j);
    if (!through[b] || used[b]) return false;
    used[b] = true;
    int min_up = 0;
    while (p.upper_block(static_cast<std::size_t>(min_up)) != b) ++min_up;
    if (min_up <= last_min_up) return false;
    last_min_up = min_up;
  }
  return true;
}

inline bool is_through_partition(const Partition& p) {
  return is_pair(p) && stats(p).t == p.block_count() && p.upper_count() == p.lower_count();
}

inline Partition projective_from(const Partition& q) {
  return compose(involution(q), q).partition;
}

inline void require_projective(const Partition& p, const char* where) {
  if (p.upper_count() != p.lower_count() || !is_projective(p))
    throw PreconditionError(std::string(where) + ": partition " + p.text() + " is not projective");
}

// q ⪯ p  iff  pq = q
inline bool dominates(const Partition& p, const Partition& q) {
  require_projective(p, "dominates");
  require_projective(q, "dominates");
  if (p.upper_count() != q.upper_count()) throw ArityError("dominates: arities differ");
  if (p.colored() && p.colors() != q.colors()) return false;
  return compose(p, q).partition == q;
}

inline bool strictly_dominates(const Partition& p, const Partition& q) {
  return p != q && dominates(p, q);
}

inline Partition p_sigma(const Partition& p, const Permutation& sigma) {
  require_projective(p, "p_sigma");
  const Partition s = upper_building(p);
  if (sigma.size() != s.lower_count()) throw ArityError("p_sigma: permutation size != t(p)");
  const Partition r = to_through_partition(sigma, p.colored());
  return compose(involution(s), compose(r, s).partition).partition;
}

// Candidate partition q_u* r_sigma p_u joining the upper parts of p and q.
inline Partition r_sigma_between(const Partition& p, const Partition& q, const Permutation& sigma) {
  const Partition pu = upper_building(p);
  const Partition qu = upper_building(q);
  if (pu.lower_count() != sigma.size() || qu.lower_count() != sigma.size())
    throw ArityError("r_sigma_between: through-block counts differ");
  const Partition r = to_through_partition(sigma, p.colored());
  return compose(involution(qu), compose(r, pu).partition).partition;
}

struct MixingPartition {
  std::size_t left = 0;
  std::size_t right = 0;
  Partition h;
  friend bool operator==(const MixingPartition&, const MixingPartition&) = default;
};

// pairs (left index, right index); quad marks a four-block, otherwise cap and cup.
struct MixingPair {
  std::size_t left;
  std::size_t right;
  bool quad;
};

inline MixingPartition mixing_from_pairs(std::size_t k, std::size_t l,
                                         const std::vector<MixingPair>& pairs) {
  const std::size_t n = k + l;
  std::vector<int> b(2 * n, -1);
  int next = 0;
  for (const auto& pr : pairs) {
    if (pr.left >= k || pr.right >= l) throw ArityError("mixing pair out of range");
    const std::size_t a = pr.left, c = k + pr.right;
    if (b[a] != -1 || b[c] != -1) throw PreconditionError("mixing index used twice");
    if (pr.quad) {
      b[a] = b[c] = b[n + a] = b[n + c] = next++;
    } else {
      b[a] = b[c] = next++;
      b[n + a] = b[n + c] = next++;
    }
  }
  for (std::size_t x = 0; x < n; ++x)
    if (b[x] == -1) b[x] = b[n + x] = next++;
  return {k, l, Partition(n, n, b)};
}

inline std::vector<MixingPartition> enumerate_mixing(std::size_t k, std::size_t l) {
  std::vector<MixingPartition> out;
  std::vector<MixingPair> pairs;
  std::vector<bool> used(l, false);
  auto rec = [&](auto&& self, std::size_t a) -> void {
    if (a == k) {
      out.push_back(mixing_from_pairs(k, l, pairs));
      return;
    }
    self(self, a + 1);
    for (std::size_t c = 0; c < l; ++c) {
      if (used[c]) continue;
      used[c] = true;
      for (bool quad : {false, true}) {
        pairs.push_back({a, c, quad});
        self(self, a + 1);
        pairs.pop_back();
      }
      used[c] = false;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.h < y.h; });
  return out;
}

// Padded h□^a (quad = false) or h⧈^a (quad = true, outermost pair joined).
inline MixingPartition nested_mixing(std::size_t k, std::size_t l, std::size_t a, bool quad) {
  if (a > std::min(k, l) || (quad && a == 0)) throw PreconditionError("nested_mixing: a out of range");
  std::vector<MixingPair> pairs;
  for (std::size_t j = 0; j < a; ++j) pairs.push_back({k - 1 - j, j, quad && j + 1 == a});
  return mixing_from_pairs(k, l, pairs);
}

inline Partition mix(const Partition& p, const Partition& q, const MixingPartition& h) {
  require_projective(p, "mix");
  require_projective(q, "mix");
  const Partition top = tensor(upper_building(p), upper_building(q));
  if (h.left + h.right != top.lower_count() || h.left != upper_building(p).lower_count())
    throw ArityError("mix: mixing partition arity does not match (t(p), t(q))");
  const Partition hh = p.colored()
      ? with_colors(h.h, std::vector<Color>(h.h.point_count(), Color::white))
      : h.h;
  return compose(involution(top), compose(hh, top).partition).partition;
}

inline Partition square(const Partition& p, const Partition& q, std::size_t a) {
  const std::size_t tp = through_count(p), tq = through_count(q);
  if (a > std::min(tp, tq)) throw PreconditionError("square: a out of range");
  return mix(p, q, nested_mixing(tp, tq, a, false));
}

inline Partition boxvert(const Partition& p, const Partition& q, std::size_t a) {
  const std::size_t tp = through_count(p), tq = through_count(q);
  if (a == 0 || a > std::min(tp, tq)) throw PreconditionError("boxvert: a out of range");
  return mix(p, q, nested_mixing(tp, tq, a, true));
}

// Letters '0' (through-block size divisible by 4) and '1', by minimal upper point.
inline std::string word_h(const Partition& p) {
  require_projective(p, "word_h");
  if (!all_blocks_even(p)) throw PreconditionError("word_h: odd block in " + p.text());
  const auto sizes = block_sizes(p);
  std::string w;
  for (int b : detail::through_order(p, true)) w.push_back(sizes[b] % 4 == 0 ? '0' : '1');
  return w;
}

// Upper colors of the through-pairs, left to right, as a word over {w, b}.
inline std::string word_u(const Partition& p) {
  if (!p.colored()) throw ColorError("word_u: uncolored partition");
  require_projective(p, "word_u");
  if (!is_pair(p)) throw PreconditionError("word_u: not a pair partition: " + p.text());
  const auto through = through_flags(p);
  std::string w;
  for (std::size_t i = 0; i < p.upper_count(); ++i)
    if (through[p.upper_block(i)]) w.push_back(color_char(p.color(i)));
  return w;
}

}  // namespace particat
