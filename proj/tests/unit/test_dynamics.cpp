#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "netdyn/dynamics.hpp"
#include "netdyn/error.hpp"
#include "netdyn/fixture.hpp"
#include "netdyn/generators.hpp"

using namespace netdyn;

namespace {

using Ev = MutationEvent;

const CaseStudyStep& step(const std::vector<CaseStudyStep>& steps, std::string_view name) {
  return *std::find_if(steps.begin(), steps.end(), [&](const CaseStudyStep& s) { return s.name == name; });
}

const ReplayOutcome& outcome(const std::vector<ReplayOutcome>& all, std::string_view name) {
  return *std::find_if(all.begin(), all.end(), [&](const ReplayOutcome& o) { return o.step == name; });
}

}  // namespace

TEST(Apply, RemoveNodeCascades) {
  const Graph g = fixture_g();
  const Graph h = apply(g, Ev::remove_node(1, "V3"));
  EXPECT_EQ(h.node_count(), 9u);
  EXPECT_EQ(h.edge_count(), 9u);
  EXPECT_EQ(g.node_count(), 10u);
}

TEST(Apply, StrictRejectsExistingEdge) {
  try {
    apply(fixture_g(), Ev::add_link(4, "V5", "V9"));
    FAIL();
  } catch (const MutationError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("add_link V5-V9"), std::string::npos);
    EXPECT_NE(msg.find("already exists"), std::string::npos);
  }
}

TEST(Apply, Preconditions) {
  const Graph g = fixture_g();
  EXPECT_THROW(apply(g, Ev::add_node(1, "V1")), MutationError);
  EXPECT_THROW(apply(g, Ev::remove_node(1, "V11")), MutationError);
  EXPECT_THROW(apply(g, Ev::add_link(1, "V1", "V11")), MutationError);
  EXPECT_THROW(apply(g, Ev::remove_link(1, "V1", "V2")), MutationError);
}

TEST(Apply, AddFreshNode) {
  const Graph h = apply(fixture_g(), Ev::add_node(1, "V11"));
  EXPECT_EQ(h.node_count(), 11u);
  EXPECT_EQ(h.edge_count(), 12u);
}

TEST(Apply, LenientRecordsWarning) {
  std::vector<std::string> warnings;
  const Graph g = fixture_g();
  const Graph h = apply(g, Ev::add_link(2, "V5", "V9"), ApplyMode::lenient, warnings);
  EXPECT_EQ(h, g);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("ignored"), std::string::npos);
}

TEST(Apply, UndirectedLinkEitherOrientation) {
  const Graph h = apply(fixture_g(), Ev::remove_link(1, "V9", "V1"));
  EXPECT_FALSE(h.has_edge("V1", "V9"));
}

TEST(Apply, DirectedLinkRespectsOrientation) {
  const Graph g = Graph::build(true, {"a", "b"}, {{"a", "b"}});
  EXPECT_THROW(apply(g, Ev::remove_link(1, "b", "a")), MutationError);
  EXPECT_EQ(apply(g, Ev::add_link(1, "b", "a")).edge_count(), 2u);
}

TEST(Apply, SignedGraphAddsPositiveLink) {
  const Graph g = Graph::build(false, {"a", "b", "c"}, {{"a", "b", -1}});
  const Graph h = apply(g, Ev::add_link(1, "b", "c"));
  ASSERT_TRUE(h.is_signed());
  EXPECT_EQ(h.sign(*h.edge_index(1, 2)), 1);
  EXPECT_EQ(h.sign(*h.edge_index(0, 1)), -1);
}

TEST(Apply, PayloadMustMatchKind) {
  Ev bad = Ev::add_node(1, "V11");
  bad.kind = EventKind::add_link;
  EXPECT_THROW(apply(fixture_g(), bad), MutationError);
}

TEST(ApplyLog, EmptyLogIsIdentity) {
  const History h = apply_log(fixture_g(), {});
  EXPECT_EQ(h.final(), fixture_g());
  EXPECT_EQ(h.size(), 0u);
}

TEST(ApplyLog, SnapshotsBySequence) {
  const std::vector<Ev> log{Ev::add_node(10, "V11"), Ev::add_link(20, "V11", "V1"), Ev::remove_node(30, "V9")};
  const History h = apply_log(fixture_g(), log);
  EXPECT_EQ(h.at(10).node_count(), 11u);
  EXPECT_EQ(h.at(20).edge_count(), 13u);
  EXPECT_EQ(h.at(30).edge_count(), 7u);
  EXPECT_EQ(h.initial(), fixture_g());
  EXPECT_THROW(h.at(15), std::out_of_range);
}

TEST(ApplyLog, SequenceMustIncrease) {
  const std::vector<Ev> log{Ev::add_node(2, "V11"), Ev::add_node(2, "V12")};
  EXPECT_THROW(apply_log(fixture_g(), log), MutationError);
}

TEST(ApplyLog, LenientCollectsWarnings) {
  const std::vector<Ev> log{Ev::add_link(1, "V5", "V9"), Ev::remove_link(2, "V5", "V6"), Ev::add_node(3, "V11")};
  const History h = apply_log(fixture_g(), log, ApplyMode::lenient);
  EXPECT_EQ(h.warnings().size(), 2u);
  EXPECT_EQ(h.final().node_count(), 11u);
  EXPECT_EQ(h.final().edge_count(), 12u);
}

TEST(Properties, InputSnapshotUnchanged) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = generate_er(8, 0.3, seed);
    const auto before = g.digest();
    for (const NodeLabel& v : g.nodes()) (void)apply(g, Ev::remove_node(1, v));
    ASSERT_EQ(g.digest(), before);
  }
}

TEST(Properties, RemoveNodeDropsItsDegree) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const Graph g = generate_er(9, 0.35, seed);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const Graph h = apply(g, Ev::remove_node(1, g.label(i)));
      ASSERT_EQ(h.edge_count(), g.edge_count() - g.degree(i));
    }
  }
}

TEST(Properties, RemoveThenRestoreRoundTrips) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Graph g = generate_er(8, 0.4, seed);
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      const NodeLabel v = g.label(i);
      std::vector<Ev> log{Ev::remove_node(1, v), Ev::add_node(2, v)};
      std::uint64_t seq = 3;
      for (std::size_t j : g.neighbors(i)) log.push_back(Ev::add_link(seq++, v, g.label(j)));
      ASSERT_EQ(apply_log(g, log).final().digest(), g.digest());
    }
  }
}

TEST(Models, TableOfSixteen) {
  const auto models = dynamics_models();
  ASSERT_EQ(models.size(), 16u);
  EXPECT_EQ(dynamics_model(1).code(), "N");
  EXPECT_EQ(dynamics_model(2).code(), "+N");
  EXPECT_EQ(dynamics_model(4).code(), "+-N");
  EXPECT_EQ(dynamics_model(7).code(), "+-L");
  EXPECT_EQ(dynamics_model(10).code(), "+N +-L");
  EXPECT_EQ(dynamics_model(11).code(), "-N +L");
  EXPECT_EQ(dynamics_model(16).code(), "+-N +-L");
  std::set<std::pair<Change, Change>> seen;
  for (const DynamicsModel& m : models) seen.insert({m.nodes, m.links});
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_THROW(dynamics_model(17), std::out_of_range);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify_log({}).id, 1);
  const std::vector<Ev> add{Ev::add_node(1, "x")};
  EXPECT_EQ(classify_log(add).id, 2);
  const std::vector<Ev> mixed{Ev::remove_node(1, "x"), Ev::add_link(2, "a", "b")};
  EXPECT_EQ(classify_log(mixed).id, 11);
  const std::vector<Ev> ten{Ev::add_node(1, "x"), Ev::add_link(2, "a", "b"), Ev::remove_link(3, "a", "c")};
  EXPECT_EQ(classify_log(ten).id, 10);
}

TEST(Classify, ConcatenationUsesUnionOfKinds) {
  const std::vector<Ev> all{Ev::add_node(1, "a"), Ev::remove_node(2, "b"), Ev::add_link(3, "a", "c"),
                            Ev::remove_link(4, "a", "d")};
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      std::vector<Ev> la, lb, both;
      for (unsigned k = 0; k < 4; ++k) {
        if (a >> k & 1u) la.push_back(all[k]), both.push_back(all[k]);
        if (b >> k & 1u) lb.push_back(all[k]), both.push_back(all[k]);
      }
      const DynamicsModel ma = classify_log(la), mb = classify_log(lb), mab = classify_log(both);
      auto merge = [](Change x, Change y) {
        const bool add = x == Change::add || x == Change::both || y == Change::add || y == Change::both;
        const bool rem = x == Change::remove || x == Change::both || y == Change::remove || y == Change::both;
        return add && rem ? Change::both : add ? Change::add : rem ? Change::remove : Change::none;
      };
      ASSERT_EQ(mab.nodes, merge(ma.nodes, mb.nodes));
      ASSERT_EQ(mab.links, merge(ma.links, mb.links));
    }
  }
}

TEST(CaseStudy, LogsClassifyAsTheirModels) {
  const auto steps = case_study_steps();
  ASSERT_EQ(steps.size(), 15u);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    EXPECT_EQ(steps[i].name, "G" + std::to_string(i));
    EXPECT_EQ(steps[i].model_id, static_cast<int>(i) + 2);
    EXPECT_EQ(classify_log(steps[i].log).id, steps[i].model_id) << steps[i].name;
  }
}

TEST(CaseStudy, G14AndG8Counts) {
  const auto steps = case_study_steps();
  const Graph g14 = apply_log(fixture_g(), step(steps, "G14").log).final();
  EXPECT_EQ(g14.node_count(), 11u);
  EXPECT_EQ(g14.edge_count(), 9u);
  const Graph g8 = apply_log(fixture_g(), step(steps, "G8").log).final();
  EXPECT_EQ(g8.node_count(), 12u);
  EXPECT_EQ(g8.edge_count(), 13u);
}

TEST(CaseStudy, ReplayOutcomes) {
  const auto all = replay_case_study();
  ASSERT_EQ(all.size(), 15u);
  struct Expect {
    const char* step;
    std::size_t n, m, components;
    std::vector<std::string> errata;
  };
  const std::vector<Expect> expected{
      {"G0", 12, 12, 3, {"E1"}}, {"G1", 8, 9, 1, {}},     {"G2", 10, 9, 3, {}},     {"G3", 10, 14, 1, {"E2"}},
      {"G4", 10, 9, 2, {}},      {"G5", 10, 12, 1, {"E3"}}, {"G6", 12, 15, 1, {"E4"}}, {"G7", 11, 10, 4, {"E5"}},
      {"G8", 12, 13, 1, {}},     {"G9", 9, 14, 1, {}},    {"G10", 8, 9, 1, {"E6"}}, {"G11", 8, 12, 1, {"E7"}},
      {"G12", 10, 13, 1, {"E8"}}, {"G13", 9, 10, 2, {}},  {"G14", 11, 9, 2, {}},
  };
  for (const Expect& e : expected) {
    const ReplayOutcome& o = outcome(all, e.step);
    EXPECT_EQ(o.nodes, e.n) << e.step;
    EXPECT_EQ(o.edges, e.m) << e.step;
    EXPECT_EQ(o.components, e.components) << e.step;
    EXPECT_EQ(o.errata, e.errata) << e.step;
  }
}

TEST(CaseStudy, ExactlyTheLedgerIsFlagged) {
  std::set<std::string> flagged;
  for (const ReplayOutcome& o : replay_case_study()) flagged.insert(o.errata.begin(), o.errata.end());
  std::set<std::string> ledger;
  for (const ErrataEntry& e : case_study_errata()) ledger.insert(e.id);
  EXPECT_EQ(flagged, ledger);
  EXPECT_EQ(ledger, (std::set<std::string>{"E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"}));
}

TEST(CaseStudy, CountErrataAgreeWithReplay) {
  const auto all = replay_case_study();
  for (const ErrataEntry& e : case_study_errata()) {
    if (!e.count_mismatch) continue;
    const ReplayOutcome& o = outcome(all, e.step);
    EXPECT_EQ(e.engine_value, "m=" + std::to_string(o.edges)) << e.id;
    EXPECT_NE(e.claimed, e.engine_value);
  }
}

TEST(CaseStudy, SubstitutedEventsFailStrictlyAsNarrated) {
  const Graph g = fixture_g();
  EXPECT_THROW(apply(g, Ev::add_link(1, "V5", "V9")), MutationError);
  EXPECT_THROW(apply(g, Ev::remove_link(1, "V5", "V6")), MutationError);
}

TEST(CaseStudy, ReplayIsDeterministic) { EXPECT_EQ(replay_case_study(), replay_case_study()); }
