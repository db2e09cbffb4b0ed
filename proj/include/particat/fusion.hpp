#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "category.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "partition.hpp"
#include "structure.hpp"
#include "symmetry.hpp"

namespace particat {

// ---- labels ---------------------------------------------------------------

enum class LabelKind { S, O, B, H, U, Class };

inline std::optional<LabelKind> label_kind(const CategorySpec& C) {
  const auto id = C.builtin_id();
  if (!id) return std::nullopt;
  switch (*id) {
    case BuiltinCategory::NC: return LabelKind::S;
    case BuiltinCategory::NC2: return LabelKind::O;
    case BuiltinCategory::NCB: return LabelKind::B;
    case BuiltinCategory::NCEVEN: return LabelKind::H;
    case BuiltinCategory::UCOL: return LabelKind::U;
    default: return std::nullopt;
  }
}

struct Nat {
  std::size_t n = 0;
  friend auto operator<=>(const Nat&, const Nat&) = default;
};
struct Z2Word {
  std::string w;  // over {'0','1'}
  friend auto operator<=>(const Z2Word&, const Z2Word&) = default;
};
struct AltWord {
  std::string w;  // over {'w','b'}: white and black generator
  friend auto operator<=>(const AltWord&, const AltWord&) = default;
};
struct ClassLabel {
  Partition representative;
  friend auto operator<=>(const ClassLabel&, const ClassLabel&) = default;
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
};

using FusionLabel = std::variant<Nat, Z2Word, AltWord, ClassLabel>;

// "2w1b" for wwb; "" for the empty word.
inline std::string run_length(const std::string& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out += std::to_string(j - i) + w[i];
    i = j;
  }
  return out;
}

inline std::string parse_run_length(const std::string& text) {
  if (text == "e" || text == "0") return "";
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = i;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == text.size() || (text[j] != 'w' && text[j] != 'b'))
      throw ParseError("bad alternating word '" + text + "'", j);
    const std::size_t count = j == i ? 1 : std::stoul(text.substr(i, j - i));
    out.append(count, text[j]);
    i = j + 1;
  }
  return out;
}

inline std::string to_string(const FusionLabel& label) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Nat>) return std::to_string(x.n);
        else if constexpr (std::is_same_v<T, Z2Word>) return x.w;
        else if constexpr (std::is_same_v<T, AltWord>) return run_length(x.w);
        else return x.representative.text();
      },
      label);
}

inline FusionLabel parse_label(LabelKind kind, const std::string& text) {
  switch (kind) {
    case LabelKind::S:
    case LabelKind::O:
    case LabelKind::B: {
      if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw ParseError("expected a natural number label, got '" + text + "'", 0);
      return Nat{std::stoul(text)};
    }
    case LabelKind::H: {
      const std::string w = text == "e" ? "" : text;
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != '0' && w[i] != '1') throw ParseError("expected a word over {0,1}", i);
      return Z2Word{w};
    }
    case LabelKind::U: return AltWord{parse_run_length(text)};
    case LabelKind::Class: break;
  }
  throw ParseError("class labels are partitions", 0);
}

inline Partition canonical_representative(LabelKind kind, const FusionLabel& label) {
  switch (kind) {
    case LabelKind::S:
    case LabelKind::B: {
      const auto n = std::get<Nat>(label).n;
      return n == 0 ? Partition(1, 1, {0, 1}) : Partition::identity(n);
    }
    case LabelKind::O: return Partition::identity(std::get<Nat>(label).n);
    case LabelKind::H: {
      Partition p;
      for (char c : std::get<Z2Word>(label).w)
        p = tensor(p, c == '1' ? Partition::identity(1) : Partition(2, 2, {0, 0, 0, 0}));
      return p;
    }
    case LabelKind::U: {
      std::vector<Color> word;
      for (char c : std::get<AltWord>(label).w) word.push_back(c == 'w' ? Color::white : Color::black);
      return Partition::identity(word);
    }
    case LabelKind::Class: return std::get<ClassLabel>(label).representative;
  }
  return {};
}

inline FusionLabel label_of(LabelKind kind, const Partition& p) {
  switch (kind) {
    case LabelKind::S:
    case LabelKind::O:
    case LabelKind::B: return Nat{through_count(p)};
    case LabelKind::H: return Z2Word{word_h(p)};
    case LabelKind::U: return AltWord{word_u(p)};
    case LabelKind::Class: break;
  }
  return ClassLabel{p};
}

// ---- free fusion semiring ---------------------------------------------------

struct FreeFusionSemiring {
  std::string letters;
  std::map<char, char> involution;
  std::map<std::pair<char, char>, char> fusion;  // absent entry: a*b = ∅

  std::string bar(const std::string& z) const {
    std::string out(z.rbegin(), z.rend());
    for (auto& c : out) c = involution.at(c);
    return out;
  }

  std::optional<std::string> star(const std::string& a, const std::string& b) const {
    if (a.empty() || b.empty()) return std::nullopt;
    auto it = fusion.find({a.back(), b.front()});
    if (it == fusion.end()) return std::nullopt;
    return a.substr(0, a.size() - 1) + it->second + b.substr(1);
  }
};

// ℤ₂ letters with the group inverse (identity) and addition.
inline FreeFusionSemiring z2_semiring() {
  return {"01", {{'0', '0'}, {'1', '1'}},
          {{{'0', '0'}, '0'}, {{'0', '1'}, '1'}, {{'1', '0'}, '1'}, {{'1', '1'}, '0'}}};
}

// Two mutually conjugate letters without fusion.
inline FreeFusionSemiring alternating_semiring() { return {"wb", {{'w', 'b'}, {'b', 'w'}}, {}}; }

// w ⊗ w' = Σ_{w = az, w' = z̄b} ab + a∗b, terms in order of increasing |z|.
inline std::vector<std::string> semiring_tensor(const FreeFusionSemiring& S, const std::string& w,
                                                const std::string& v) {
  for (const auto* word : {&w, &v})
    for (char c : *word)
      if (S.letters.find(c) == std::string::npos)
        throw PreconditionError(std::string("letter '") + c + "' not in the semiring");
  std::vector<std::string> out;
  for (std::size_t len = 0; len <= std::min(w.size(), v.size()); ++len) {
    const std::string a = w.substr(0, w.size() - len), z = w.substr(w.size() - len);
    if (v.compare(0, len, S.bar(z)) != 0) continue;
    const std::string b = v.substr(len);
    out.push_back(a + b);
    if (auto s = S.star(a, b)) out.push_back(*s);
  }
  return out;
}

inline std::vector<FusionLabel> labelled_fusion(LabelKind kind, const FusionLabel& a, const FusionLabel& b) {
  std::vector<FusionLabel> out;
  switch (kind) {
    case LabelKind::S:
    case LabelKind::O:
    case LabelKind::B: {
      const auto k = std::get<Nat>(a).n, l = std::get<Nat>(b).n;
      const std::size_t step = kind == LabelKind::S ? 1 : 2;
      for (std::size_t n = (k > l ? k - l : l - k); n <= k + l; n += step) out.push_back(Nat{n});
      return out;
    }
    case LabelKind::H:
      for (auto& w : semiring_tensor(z2_semiring(), std::get<Z2Word>(a).w, std::get<Z2Word>(b).w))
        out.push_back(Z2Word{w});
      return out;
    case LabelKind::U:
      for (auto& w : semiring_tensor(alternating_semiring(), std::get<AltWord>(a).w, std::get<AltWord>(b).w))
        out.push_back(AltWord{w});
      return out;
    case LabelKind::Class: break;
  }
  throw PreconditionError("labelled_fusion needs a free builtin category");
}

// ---- partition-level fusion -------------------------------------------------

struct FusionEntry {
  Partition partition;
  std::size_t t = 0;
  MixingPartition h;
  bool quad = false;  // h has a four-block (boxvert-type)
};

struct FusionResult {
  std::vector<FusionEntry> entries;  // sorted by partition
  std::vector<Partition> partitions() const {
    std::vector<Partition> out;
    for (const auto& e : entries) out.push_back(e.partition);
    return out;
  }
};

inline bool has_quad(const MixingPartition& h) {
  const auto sizes = block_sizes(h.h);
  return std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 4; });
}

inline FusionResult fusion_candidates(const Partition& p, const Partition& q) {
  require_projective(p, "fusion_candidates");
  require_projective(q, "fusion_candidates");
  FusionResult r;
  for (const auto& h : enumerate_mixing(through_count(p), through_count(q))) {
    Partition m = mix(p, q, h);
    r.entries.push_back({m, through_count(m), h, has_quad(h)});
  }
  std::sort(r.entries.begin(), r.entries.end(),
            [](const auto& x, const auto& y) { return x.partition < y.partition; });
  return r;
}

inline FusionResult fusion(const CategorySpec& C, const Partition& p, const Partition& q) {
  detail::require_member(C, p, "fusion");
  detail::require_member(C, q, "fusion");
  FusionResult all = fusion_candidates(p, q), r;
  for (auto& e : all.entries)
    if (C.contains(e.partition)) r.entries.push_back(std::move(e));
  return r;
}

// Labels of X_C(p, q) for canonical representatives of a and b.
inline std::vector<FusionLabel> partition_level_fusion(const CategorySpec& C, const FusionLabel& a,
                                                       const FusionLabel& b) {
  const auto kind = label_kind(C);
  if (!kind) throw PreconditionError("partition_level_fusion needs a labelled builtin category");
  const auto r = fusion(C, canonical_representative(*kind, a), canonical_representative(*kind, b));
  std::vector<FusionLabel> out;
  for (const auto& e : r.entries) out.push_back(label_of(*kind, e.partition));
  return out;
}

struct DecomposedClass {
  Partition representative;
  std::size_t t = 0;
  FusionLabel label;
  std::size_t size = 0;
};

inline std::vector<DecomposedClass> decompose_power(const CategorySpec& C, std::size_t k,
                                                    const Limits& limits = default_limits()) {
  const auto kind = label_kind(C);
  std::vector<DecomposedClass> out;
  for (const auto& cls : equivalence_classes(C, k, limits)) {
    const auto& p = cls.representative;
    out.push_back({p, through_count(p), kind ? label_of(*kind, p) : FusionLabel{ClassLabel{p}},
                   cls.members.size()});
  }
  return out;
}

// ---- freeness probe ---------------------------------------------------------

// The points of block b of p, as a one-block partition in the same rows.
inline Partition block_partition(const Partition& p, int b) {
  std::size_t k = 0, l = 0;
  std::vector<Color> c;
  for (std::size_t x = 0; x < p.point_count(); ++x) {
    if (p.block(x) != b) continue;
    (x < p.upper_count() ? k : l) += 1;
    if (p.colored()) c.push_back(p.color(x));
  }
  std::vector<int> blocks(k + l, 0);
  if (p.colored()) return Partition(k, l, blocks, c);
  return Partition(k, l, blocks);
}

struct FreenessReport {
  bool block_stable = true;
  std::vector<Partition> letters;                        // S(C) representatives
  std::vector<std::size_t> involution;                   // index of the conjugate letter
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> fusion;  // letter fusion via ⧈¹
  bool labels_injective = true;
  std::size_t classes_checked = 0;
};

inline FreenessReport freeness_probe(const CategorySpec& C, std::size_t max_k = 3,
                                     const Limits& limits = default_limits()) {
  if (!C.noncrossing()) throw PreconditionError("freeness_probe: category is not noncrossing");
  FreenessReport r;
  for (std::size_t n = 0; n <= 2 * max_k; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& p : enumerate(C, k, n - k, limits))
        for (std::size_t b = 0; b < p.block_count(); ++b)
          if (!C.contains(block_partition(p, static_cast<int>(b)))) r.block_stable = false;

  auto letter_index = [&](const Partition& single) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < r.letters.size(); ++i)
      if (equivalent(C, r.letters[i], single, limits)) return i;
    return std::nullopt;
  };
  for (std::size_t k = 1; k <= max_k; ++k)
    for (const auto& p : projectives(C, k, limits))
      if (p.block_count() == 1 && !letter_index(p)) r.letters.push_back(p);

  for (const auto& x : r.letters) {
    const auto j = letter_index(contragredient(x));
    r.involution.push_back(j.value_or(SIZE_MAX));
  }
  for (std::size_t i = 0; i < r.letters.size(); ++i)
    for (std::size_t j = 0; j < r.letters.size(); ++j) {
      const Partition m = boxvert(r.letters[i], r.letters[j], 1);
      if (m.point_count() <= C.max_points() && C.contains(m))
        if (auto idx = letter_index(m)) r.fusion[{i, j}] = *idx;
    }

  for (std::size_t k = 0; k <= max_k; ++k) {
    std::map<std::vector<std::size_t>, Partition> seen;
    for (const auto& cls : equivalence_classes(C, k, limits)) {
      ++r.classes_checked;
      std::optional<std::vector<std::size_t>> word;
      for (const auto& m : cls.members) {
        std::vector<std::size_t> w;
        for (int b : detail::through_order(m, true)) {
          const auto idx = letter_index(block_partition(m, b));
          w.push_back(idx.value_or(SIZE_MAX));
        }
        if (word && *word != w) r.labels_injective = false;
        word = w;
      }
      if (!word) continue;
      if (!seen.emplace(*word, cls.representative).second) r.labels_injective = false;
    }
  }
  return r;
}

}  // namespace particat
