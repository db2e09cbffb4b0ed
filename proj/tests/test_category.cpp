#include <random>

#include <gtest/gtest.h>

#include <particat/particat.hpp>

using namespace particat;

namespace {

const std::vector<BuiltinCategory> uncolored = {BuiltinCategory::P,   BuiltinCategory::P2,
                                                BuiltinCategory::NC,  BuiltinCategory::NC2,
                                                BuiltinCategory::NCB, BuiltinCategory::NCEVEN};

std::size_t binom(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t catalan(std::size_t m) { return binom(2 * m, m) / (m + 1); }

// Closed-form sizes of C(k,l), depending only on n = k + l.
std::size_t expected_size(BuiltinCategory id, std::size_t n) {
  static const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
  static const std::size_t motzkin[] = {1, 1, 2, 4, 9, 21, 51, 127, 323};
  switch (id) {
    case BuiltinCategory::P: return bell[n];
    case BuiltinCategory::P2: {
      if (n % 2) return 0;
      std::size_t r = 1;
      for (std::size_t i = n; i > 1; i -= 2) r *= i - 1;
      return r;
    }
    case BuiltinCategory::NC: return catalan(n);
    case BuiltinCategory::NC2: return n % 2 ? 0 : catalan(n / 2);
    case BuiltinCategory::NCB: return motzkin[n];
    case BuiltinCategory::NCEVEN: return n % 2 ? 0 : binom(3 * n / 2, n / 2) / (n + 1);
    case BuiltinCategory::UCOL: return n % 2 ? 0 : catalan(n / 2) << (n / 2);
  }
  return 0;
}

// A pair in one row joins opposite colors, a through-pair joins equal colors.
bool colors_balanced(const Partition& p) {
  for (std::size_t x = 0; x < p.point_count(); ++x)
    for (std::size_t y = x + 1; y < p.point_count(); ++y) {
      if (p.block(x) != p.block(y)) continue;
      const bool same_row = (x < p.upper_count()) == (y < p.upper_count());
      if (same_row == (p.color(x) == p.color(y))) return false;
    }
  return true;
}

}  // namespace

TEST(Builtin, SizesMatchClosedForms) {
  for (auto id : uncolored)
    for (std::size_t n = 0; n <= 8; ++n)
      for (std::size_t k = 0; k <= n; k += 2)
        EXPECT_EQ(enumerate(CategorySpec::builtin(id), k, n - k).size(), expected_size(id, n))
            << builtin_name(id) << " " << k << "," << n - k;
}

TEST(Builtin, UcolSizesAndColorRule) {
  const auto U = CategorySpec::builtin(BuiltinCategory::UCOL);
  for (std::size_t n = 0; n <= 8; ++n)
    for (std::size_t k = 0; k <= n; ++k) {
      const auto members = enumerate(U, k, n - k);
      EXPECT_EQ(members.size(), expected_size(BuiltinCategory::UCOL, n));
      for (const auto& p : members) {
        EXPECT_TRUE(is_pair(p));
        EXPECT_TRUE(is_noncrossing(p));
        EXPECT_TRUE(colors_balanced(p)) << p.text();
      }
    }
}

TEST(Builtin, NamesRoundTrip) {
  for (auto id : uncolored) EXPECT_EQ(builtin_from_name(builtin_name(id)), id);
  EXPECT_EQ(builtin_from_name(builtin_name(BuiltinCategory::UCOL)), BuiltinCategory::UCOL);
  EXPECT_FALSE(builtin_from_name("nope"));
}

TEST(Builtin, ColorMismatch) {
  EXPECT_THROW(CategorySpec::builtin(BuiltinCategory::UCOL).contains(Partition::identity(1)), ColorError);
  EXPECT_THROW(CategorySpec::builtin(BuiltinCategory::NC).contains(Partition::identity(std::vector<Color>{Color::white})),
               ColorError);
}

TEST(Builtin, ClosedUnderOperations) {
  std::mt19937 rng(41);
  for (auto id : {BuiltinCategory::NC, BuiltinCategory::NC2, BuiltinCategory::NCB, BuiltinCategory::NCEVEN,
                  BuiltinCategory::P2, BuiltinCategory::UCOL}) {
    const auto C = CategorySpec::builtin(id);
    std::vector<std::vector<std::vector<Partition>>> m(4, std::vector<std::vector<Partition>>(4));
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t l = 0; l < 4; ++l) m[k][l] = enumerate(C, k, l);
    auto pick = [&](std::size_t k, std::size_t l) -> const Partition* {
      if (m[k][l].empty()) return nullptr;
      return &m[k][l][rng() % m[k][l].size()];
    };
    for (int i = 0; i < 300; ++i) {
      const std::size_t a = rng() % 4, b = rng() % 4, c = rng() % 4;
      const Partition* q = pick(a, b);
      if (!q) continue;
      EXPECT_TRUE(C.contains(involution(*q)));
      if (a > 0) EXPECT_TRUE(C.contains(rotate(*q, Corner::upper_left_down)));
      if (b > 0) EXPECT_TRUE(C.contains(rotate(*q, Corner::lower_right_up)));
      if (const Partition* r = pick(c, rng() % 4)) EXPECT_TRUE(C.contains(tensor(*q, *r)));
      const Partition* p = pick(b, c);
      if (!p) continue;
      bool glue = true;
      if (C.colored())
        for (std::size_t j = 0; j < b; ++j) glue = glue && q->color(a + j) == p->color(j);
      if (glue) EXPECT_TRUE(C.contains(compose(*p, *q).partition)) << p->text() << " o " << q->text();
    }
  }
}

TEST(Line, RoundTrip) {
  std::mt19937 rng(43);
  for (int i = 0; i < 300; ++i) {
    const Partition p = random_partition(rng, rng() % 4, rng() % 4);
    const Partition x = to_line(p);
    EXPECT_EQ(x.upper_count(), 0u);
    EXPECT_EQ(from_line(x, p.upper_count()), p);
  }
  EXPECT_THROW(from_line(Partition::identity(1), 0), ArityError);
}

TEST(Closure, GeneratedMatchesBuiltin) {
  const auto r = category_suite(6);
  EXPECT_TRUE(r.passed()) << r.failures.front();
  EXPECT_GT(r.checks, 0u);
}

TEST(Closure, CrossingGeneratesAllPairings) {
  const auto C = CategorySpec::generated({parse_partition("ab:ba")}, 6);
  const auto P2 = CategorySpec::builtin(BuiltinCategory::P2);
  EXPECT_FALSE(C.noncrossing());
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(enumerate(C, k, n - k), enumerate(P2, k, n - k));
}

TEST(Closure, AllPartitionsFromThreeGenerators) {
  const auto C = CategorySpec::generated(
      {parse_partition("ab:ba"), parse_partition("a:"), parse_partition("aa:aa")}, 5);
  for (std::size_t n = 0; n <= 5; ++n)
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(enumerate(C, k, n - k), all_partitions(k, n - k));
}

TEST(Closure, HalfLiberated) {
  const auto C = CategorySpec::generated({parse_partition("abc:cba")}, 6);
  EXPECT_TRUE(C.contains(parse_partition("abc:cba")));
  EXPECT_FALSE(C.contains(parse_partition("ab:ba")));
  EXPECT_FALSE(C.noncrossing());
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& p : enumerate(C, k, n - k)) EXPECT_TRUE(is_pair(p));
}

TEST(Closure, MembersMatchEnumeration) {
  const auto C = CategorySpec::generated({parse_partition("aa:aa")}, 4);
  std::vector<Partition> all;
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& p : enumerate(C, k, n - k)) all.push_back(p);
  std::sort(all.begin(), all.end());
  EXPECT_EQ(closure({parse_partition("aa:aa")}, 4), all);
}

TEST(Closure, BeyondBoundIsUndecidable) {
  const auto C = CategorySpec::generated({parse_partition("aa:aa")}, 4);
  EXPECT_EQ(C.membership(parse_partition("aaa:aaa")), Membership::unknown);
  EXPECT_THROW(C.contains(parse_partition("aaa:aaa")), UndecidableError);
  EXPECT_THROW(enumerate(C, 3, 3), UndecidableError);
  EXPECT_THROW(projectives(C, 3), UndecidableError);
}

TEST(Closure, BoundsCap) {
  EXPECT_THROW(CategorySpec::generated({}, 11), BoundsError);
  Limits small;
  small.max_closure_points = 4;
  EXPECT_THROW(CategorySpec::generated({}, 5, small), BoundsError);
  EXPECT_THROW(CategorySpec::generated({parse_partition("abcd:abcd")}, 4, small, 4), BoundsError);
}

TEST(Closure, RejectsMixedColoring) {
  EXPECT_THROW(CategorySpec::generated({parse_partition("a@w:a@w"), parse_partition("a:a")}, 4), ColorError);
}

TEST(Enumerate, BoundsCap) {
  EXPECT_THROW(enumerate(CategorySpec::builtin(BuiltinCategory::NC), 6, 5), BoundsError);
  EXPECT_THROW(projectives(CategorySpec::builtin(BuiltinCategory::NC), 9), BoundsError);
}

TEST(Enumerate, SortedAndUnique) {
  const auto v = enumerate(CategorySpec::builtin(BuiltinCategory::NC), 3, 3);
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
  EXPECT_EQ(std::adjacent_find(v.begin(), v.end()), v.end());
}

TEST(Projectives, UcolDoublesColorWord) {
  const auto U = CategorySpec::builtin(BuiltinCategory::UCOL);
  for (std::size_t k = 0; k <= 3; ++k)
    for (const auto& p : projectives(U, k)) {
      EXPECT_TRUE(is_projective(p));
      for (std::size_t i = 0; i < k; ++i) EXPECT_EQ(p.color(i), p.color(k + i));
    }
  EXPECT_EQ(projectives(U, 1).size(), 2u);
}
