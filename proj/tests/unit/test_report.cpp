#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <sstream>

#include "netdyn/error.hpp"
#include "netdyn/fixture.hpp"
#include "netdyn/report.hpp"

using namespace netdyn;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(cell);
  return out;
}

}  // namespace

TEST(FormatScore, Rounding) {
  EXPECT_EQ(format_score(20.5), "20.500");
  EXPECT_EQ(format_score(1.0 / 3.0), "0.333");
  EXPECT_EQ(format_score(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_score(-0.0), "0.000");
  EXPECT_EQ(format_score(-1e-9), "0.000");
}

TEST(Render, AlignedAndDelimited) {
  const Table t{{"node", "score"}, {{"V1", "1.000"}, {"V10", "12.500"}}};
  EXPECT_EQ(render(t, TableFormat::delimited), "node,score\nV1,1.000\nV10,12.500\n");
  EXPECT_EQ(render(t, TableFormat::aligned), "node   score\nV1     1.000\nV10   12.500\n");
  EXPECT_EQ(write_report(t), render(t, TableFormat::delimited));
  EXPECT_EQ(parse_table_format("table"), TableFormat::aligned);
  EXPECT_EQ(parse_table_format("delimited"), TableFormat::delimited);
  EXPECT_FALSE(parse_table_format("csv"));
}

TEST(CentralityTable, FixtureAllMeasures) {
  const auto reports = all_centralities(fixture_g());
  ASSERT_EQ(reports.size(), 12u);
  const auto rows = lines(write_report(centrality_table(reports)));
  ASSERT_EQ(rows.size(), 11u);
  for (const std::string& r : rows) EXPECT_EQ(cells(r).size(), 13u) << r;
  EXPECT_EQ(cells(rows[0])[0], "node");
  EXPECT_EQ(cells(rows[1])[0], "V1");
  EXPECT_EQ(cells(rows[10])[0], "V10");
}

TEST(CentralityTable, SingleMeasure) {
  const std::vector reports{degree_centrality(Graph::build(false, {"V1"}, {}))};
  const auto rows = lines(write_report(centrality_table(reports)));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1], "V1,0.000");
}

TEST(CentralityTable, PercentColumnSumsToHundred) {
  const auto reports = all_centralities(fixture_g());
  const auto rows = lines(write_report(centrality_table(reports)));
  const auto header = cells(rows[0]);
  const auto col = static_cast<std::size_t>(std::find(header.begin(), header.end(), "eigenvector.percent") - header.begin());
  ASSERT_LT(col, header.size());
  double sum = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) sum += std::stod(cells(rows[i])[col]);
  EXPECT_NEAR(sum, 100.0, 0.01);
}

TEST(CentralityTable, InfinityFormatted) {
  const Graph g = Graph::build(true, {"a", "b"}, {{"a", "b"}});
  const std::vector reports{eccentricity_centrality(g, Convention::raw)};
  EXPECT_EQ(write_report(centrality_table(reports)), "node,eccentricity.raw\na,1.000\nb,inf\n");
}

TEST(CentralityTable, MismatchedNodeSetsRejected) {
  const std::vector reports{degree_centrality(fixture_g()),
                            degree_centrality(Graph::build(false, {"V1", "V2"}, {{"V1", "V2"}}))};
  EXPECT_THROW(centrality_table(reports), DomainError);
}

TEST(ReplayTable, CaseStudy) {
  const auto outcomes = replay_case_study();
  const auto rows = lines(write_report(replay_table(outcomes)));
  ASSERT_EQ(rows.size(), 16u);
  EXPECT_EQ(rows[0], "step,model,code,nodes,edges,components,errata");
  EXPECT_EQ(rows[1], "G0,2,+N,12,12,3,E1");
  EXPECT_EQ(rows[2], "G1,3,-N,8,9,1,-");
}

TEST(NodeSets, Rendering) {
  const std::vector<std::vector<NodeLabel>> sets{{NodeLabel("a"), NodeLabel("b")}, {NodeLabel("c")}};
  EXPECT_EQ(node_set_lines(sets), "a b\nc\n");
  EXPECT_EQ(write_report(node_set_table(sets)), "set,size,members\n1,2,a b\n2,1,c\n");
}

TEST(CountTable, Rendering) {
  const std::map<NodeLabel, std::size_t> counts{{NodeLabel("V10"), 3}, {NodeLabel("V2"), 1}};
  EXPECT_EQ(write_report(count_table("core", counts)), "node,core\nV2,1\nV10,3\n");
}
