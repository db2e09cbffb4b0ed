#include <gtest/gtest.h>

#include <particat/particat.hpp>

#include "oracles.hpp"

using namespace particat;

namespace {

const CategorySpec NC = CategorySpec::builtin(BuiltinCategory::NC);
const CategorySpec NC2 = CategorySpec::builtin(BuiltinCategory::NC2);
const CategorySpec NCB = CategorySpec::builtin(BuiltinCategory::NCB);
const CategorySpec H = CategorySpec::builtin(BuiltinCategory::NCEVEN);
const CategorySpec U = CategorySpec::builtin(BuiltinCategory::UCOL);

std::vector<std::string> sorted_strings(const std::vector<FusionLabel>& labels) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(to_string(l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Labels, Kinds) {
  EXPECT_EQ(label_kind(NC), LabelKind::S);
  EXPECT_EQ(label_kind(NC2), LabelKind::O);
  EXPECT_EQ(label_kind(NCB), LabelKind::B);
  EXPECT_EQ(label_kind(H), LabelKind::H);
  EXPECT_EQ(label_kind(U), LabelKind::U);
  EXPECT_FALSE(label_kind(CategorySpec::builtin(BuiltinCategory::P)));
}

TEST(Labels, RunLength) {
  EXPECT_EQ(run_length("wwb"), "2w1b");
  EXPECT_EQ(run_length(""), "");
  EXPECT_EQ(parse_run_length("2w1b"), "wwb");
  EXPECT_EQ(parse_run_length("wb"), "wb");
  EXPECT_EQ(parse_run_length("e"), "");
  EXPECT_THROW(parse_run_length("2x"), ParseError);
  EXPECT_THROW(parse_run_length("3"), ParseError);
}

TEST(Labels, ParseAndPrint) {
  EXPECT_EQ(std::get<Nat>(parse_label(LabelKind::S, "3")).n, 3u);
  EXPECT_THROW(parse_label(LabelKind::S, "-1"), ParseError);
  EXPECT_EQ(std::get<Z2Word>(parse_label(LabelKind::H, "01")).w, "01");
  EXPECT_THROW(parse_label(LabelKind::H, "012"), ParseError);
  EXPECT_EQ(to_string(parse_label(LabelKind::U, "1w2b")), "1w2b");
}

TEST(Labels, CanonicalRepresentativesCarryTheirLabel) {
  for (auto C : {NC, NC2, NCB}) {
    const auto kind = *label_kind(C);
    for (std::size_t n = 0; n <= 4; ++n) {
      const Partition p = canonical_representative(kind, Nat{n});
      EXPECT_TRUE(C.contains(p));
      EXPECT_TRUE(is_projective(p));
      EXPECT_EQ(std::get<Nat>(label_of(kind, p)).n, n);
    }
  }
  for (std::string w : {"", "0", "1", "01", "110"}) {
    const Partition p = canonical_representative(LabelKind::H, Z2Word{w});
    EXPECT_TRUE(H.contains(p));
    EXPECT_EQ(std::get<Z2Word>(label_of(LabelKind::H, p)).w, w);
  }
  for (std::string w : {"", "w", "b", "wbb"}) {
    const Partition p = canonical_representative(LabelKind::U, AltWord{w});
    EXPECT_TRUE(U.contains(p));
    EXPECT_EQ(std::get<AltWord>(label_of(LabelKind::U, p)).w, w);
  }
}

TEST(Semiring, Z2Examples) {
  const auto S = z2_semiring();
  EXPECT_EQ(sorted(semiring_tensor(S, "0", "0")), sorted({"00", "0", ""}));
  EXPECT_EQ(sorted(semiring_tensor(S, "1", "1")), sorted({"11", "0", ""}));
  EXPECT_EQ(sorted(semiring_tensor(S, "0", "1")), sorted({"01", "1"}));
  EXPECT_EQ(semiring_tensor(S, "", "01"), std::vector<std::string>{"01"});
  EXPECT_THROW(semiring_tensor(S, "2", "1"), PreconditionError);
}

TEST(Semiring, AlternatingExamples) {
  const auto S = alternating_semiring();
  EXPECT_EQ(sorted(semiring_tensor(S, "w", "b")), sorted({"wb", ""}));
  EXPECT_EQ(semiring_tensor(S, "w", "w"), std::vector<std::string>{"ww"});
  EXPECT_EQ(sorted(semiring_tensor(S, "wb", "wb")), sorted({"wbwb", "wb", ""}));
  EXPECT_EQ(S.bar("wwb"), "wbb");
}

TEST(Semiring, EmptyWordIsUnit) {
  for (const auto& S : {z2_semiring(), alternating_semiring()})
    for (std::string w : {std::string(), std::string(1, S.letters[0]), std::string(2, S.letters[1])}) {
      EXPECT_EQ(semiring_tensor(S, "", w), std::vector<std::string>{w});
      EXPECT_EQ(semiring_tensor(S, w, ""), std::vector<std::string>{w});
    }
}

TEST(LabelledFusion, ClosedForms) {
  std::vector<std::string> nc;
  for (auto& l : labelled_fusion(LabelKind::S, Nat{2}, Nat{3})) nc.push_back(to_string(l));
  EXPECT_EQ(nc, (std::vector<std::string>{"1", "2", "3", "4", "5"}));
  std::vector<std::string> o;
  for (auto& l : labelled_fusion(LabelKind::O, Nat{2}, Nat{3})) o.push_back(to_string(l));
  EXPECT_EQ(o, (std::vector<std::string>{"1", "3", "5"}));
  EXPECT_EQ(labelled_fusion(LabelKind::B, Nat{0}, Nat{0}).size(), 1u);
  EXPECT_THROW(labelled_fusion(LabelKind::Class, Nat{0}, Nat{0}), PreconditionError);
}

TEST(PartitionFusion, AgreesWithLabels) {
  const auto r = fusion_suite(3);
  EXPECT_TRUE(r.passed()) << r.failures.front();
  EXPECT_GT(r.checks, 100u);
}

TEST(PartitionFusion, ExampleInNoncrossing) {
  EXPECT_EQ(sorted_strings(partition_level_fusion(NC, Nat{1}, Nat{1})), sorted({"0", "1", "2"}));
  EXPECT_EQ(sorted_strings(partition_level_fusion(H, Z2Word{"0"}, Z2Word{"0"})), sorted({"00", "0", ""}));
  EXPECT_EQ(sorted_strings(partition_level_fusion(U, AltWord{"w"}, AltWord{"b"})), sorted({"1w1b", ""}));
}

TEST(PartitionFusion, MatchesDefinitionOracle) {
  for (const auto& C : {NC, NC2, NCB, H})
    for (std::size_t a = 0; a <= 2; ++a)
      for (std::size_t b = 0; b <= 2; ++b)
        for (const auto& p : projectives(C, a))
          for (const auto& q : projectives(C, b))
            EXPECT_EQ(fusion(C, p, q).partitions(), oracle::fusion_set(C, p, q)) << p.text() << " x " << q.text();
}

TEST(PartitionFusion, ColoredMatchesDefinitionOracle) {
  for (std::size_t a = 0; a <= 2; ++a)
    for (std::size_t b = 0; b <= 2; ++b)
      for (const auto& p : projectives(U, a))
        for (const auto& q : projectives(U, b))
          EXPECT_EQ(fusion(U, p, q).partitions(), oracle::fusion_set(U, p, q)) << p.text() << " x " << q.text();
}

TEST(PartitionFusion, PairCategoryNeverUsesQuads) {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t b = 0; b <= 3; ++b)
      for (const auto& p : projectives(NC2, a))
        for (const auto& q : projectives(NC2, b))
          for (const auto& e : fusion(NC2, p, q).entries) {
            EXPECT_FALSE(e.quad);
            EXPECT_TRUE(dominates(tensor(p, q), e.partition));
          }
}

TEST(PartitionFusion, RejectsNonMembers) {
  EXPECT_THROW(fusion(NC2, parse_partition("aa:aa"), Partition::identity(1)), PreconditionError);
  EXPECT_THROW(fusion_candidates(parse_partition("ab:ba"), Partition::identity(1)), PreconditionError);
}

TEST(Decompose, NoncrossingSquare) {
  const auto classes = decompose_power(NC, 2);
  ASSERT_EQ(classes.size(), 3u);
  const std::size_t size[] = {2, 3, 1};
  for (const auto& c : classes) {
    EXPECT_EQ(c.size, size[c.t]);
    EXPECT_EQ(std::get<Nat>(c.label).n, c.t);
  }
}

TEST(Decompose, UnlabelledCategoryUsesRepresentatives) {
  const auto classes = decompose_power(CategorySpec::builtin(BuiltinCategory::P), 2);
  ASSERT_EQ(classes.size(), 3u);
  for (const auto& c : classes) EXPECT_EQ(std::get<ClassLabel>(c.label).representative, c.representative);
}

TEST(Freeness, EvenPartitionsGiveZ2) {
  const auto r = freeness_probe(H, 3);
  EXPECT_TRUE(r.block_stable);
  EXPECT_TRUE(r.labels_injective);
  ASSERT_EQ(r.letters.size(), 2u);
  EXPECT_EQ(r.letters[0], Partition::identity(1));
  EXPECT_EQ(r.letters[1], parse_partition("aa:aa"));
  EXPECT_EQ(r.involution, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.fusion.at({0, 0}), 1u);
  EXPECT_EQ(r.fusion.at({0, 1}), 0u);
  EXPECT_EQ(r.fusion.at({1, 0}), 0u);
  EXPECT_EQ(r.fusion.at({1, 1}), 1u);
}

TEST(Freeness, ColoredGivesTwoConjugateLetters) {
  const auto r = freeness_probe(U, 3);
  EXPECT_TRUE(r.block_stable);
  EXPECT_TRUE(r.labels_injective);
  ASSERT_EQ(r.letters.size(), 2u);
  EXPECT_EQ(r.involution, (std::vector<std::size_t>{1, 0}));
  EXPECT_TRUE(r.fusion.empty());
}

TEST(Freeness, NoncrossingHasOneLetter) {
  const auto r = freeness_probe(NC, 3);
  EXPECT_TRUE(r.block_stable);
  ASSERT_EQ(r.letters.size(), 1u);
  EXPECT_EQ(r.fusion.at({0, 0}), 0u);
}

TEST(Freeness, NeedsNoncrossing) {
  EXPECT_THROW(freeness_probe(CategorySpec::builtin(BuiltinCategory::P2), 2), PreconditionError);
}
