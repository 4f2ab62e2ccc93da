#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace fullerene {
namespace {

using testing::isomers_of;

constexpr int kMaxDegree = 24;

const std::vector<IsomerNewton>& c60_hexagon_table() {
  static const auto table = newton_table(isomers_of(60), GraphKind::hexagon, kMaxDegree);
  return table;
}

const BigInt& value(int isomer, int k) { return c60_hexagon_table()[isomer - 1].values[k]; }

TEST(ClusterSchema, Parsing) {
  const auto single = parse_cluster_schema("single:4");
  EXPECT_EQ(single.kind, ClusterSchema::Kind::single);
  EXPECT_EQ(single.degrees(), std::vector<int>({4}));
  EXPECT_EQ(parse_cluster_schema("pair:6,8").degrees(), std::vector<int>({6, 8}));
  EXPECT_EQ(parse_cluster_schema("hierarchical:8").degrees(), std::vector<int>({2, 4, 6, 8}));
  EXPECT_EQ(parse_cluster_schema("pair:6,8").to_string(), "pair(6,8)");
  for (const char* bad : {"single", "single:x", "pair:4", "triple:2", "hierarchical:"}) {
    EXPECT_THROW(parse_cluster_schema(bad), InputError) << bad;
  }
}

TEST(Clusterize, C60HexagonCounts) {
  const std::vector<std::size_t> clusters{18, 218, 1233, 1784, 1807, 1812};
  const std::vector<std::size_t> singletons{5, 47, 845, 1757, 1802, 1812};
  std::size_t previous = 0;
  for (int i = 0; i < 6; ++i) {
    const int k = 2 * (i + 1);
    const auto c = clusterize(60, GraphKind::hexagon, c60_hexagon_table(), ClusterSchema::single(k));
    EXPECT_EQ(c.cluster_count(), clusters[i]) << "k=" << k;
    EXPECT_EQ(c.singleton_count(), singletons[i]) << "k=" << k;
    EXPECT_EQ(c.complete(), k == 12);
    EXPECT_GE(c.cluster_count(), previous);
    previous = c.cluster_count();
    std::size_t members = 0;
    for (const auto& [key, list] : c.clusters) {
      members += list.size();
      EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
    }
    EXPECT_EQ(members, 1812u);
  }
}

TEST(Clusterize, SingletonsAtDegreeTwo) {
  const auto c = clusterize(60, GraphKind::hexagon, c60_hexagon_table(), ClusterSchema::single(2));
  std::map<int, BigInt> singles;
  for (const auto& [key, list] : c.clusters) {
    if (list.size() == 1) singles.emplace(list[0], key[0]);
  }
  const std::map<int, BigInt> expected{{1, 100}, {2, 92}, {3, 96}, {1809, 64}, {1812, 60}};
  EXPECT_EQ(singles, expected);
}

TEST(Clusterize, Preconditions) {
  const auto& table = c60_hexagon_table();
  EXPECT_THROW(clusterize(60, GraphKind::hexagon, {}, ClusterSchema::single(2)), InputError);
  EXPECT_THROW(clusterize(60, GraphKind::hexagon, table, ClusterSchema::single(3)), OddDegreeRejected);
  EXPECT_THROW(clusterize(60, GraphKind::hexagon, table, ClusterSchema::pair(2, 5)), OddDegreeRejected);
  EXPECT_NO_THROW(clusterize(60, GraphKind::hexagon, table, ClusterSchema::single(3), true));
  EXPECT_THROW(clusterize(60, GraphKind::hexagon, table, ClusterSchema::pair(8, 6)), InputError);
  EXPECT_THROW(clusterize(60, GraphKind::hexagon, table, ClusterSchema::single(26)), InputError);
  EXPECT_THROW(clusterize(60, GraphKind::hexagon, table, ClusterSchema::hierarchical(0)), InputError);
}

TEST(Clusterize, SingleIsomer) {
  const std::span<const IsomerNewton> one(c60_hexagon_table().data(), 1);
  for (const auto& schema : {ClusterSchema::single(2), ClusterSchema::pair(2, 4), ClusterSchema::hierarchical(10)}) {
    const auto c = clusterize(60, GraphKind::hexagon, one, schema);
    EXPECT_EQ(c.cluster_count(), 1u);
    EXPECT_TRUE(c.complete());
  }
  const auto k = k_star(60, GraphKind::hexagon, one, 20);
  EXPECT_EQ(k.k_single, 2);
  EXPECT_EQ(k.k_hierarchical, 2);
}

TEST(Clusterize, OddDegreesDoNotSeparateC28) {
  const auto& c28 = isomers_of(28);
  const auto table = newton_table(c28, GraphKind::hexagon, 4);
  EXPECT_EQ(table[0].values[1], table[1].values[1]);
  EXPECT_EQ(table[0].values[3], table[1].values[3]);
  EXPECT_NE(table[0].values[2], table[1].values[2]);
  EXPECT_NE(table[0].values[4], table[1].values[4]);
  EXPECT_EQ(clusterize(28, GraphKind::hexagon, table, ClusterSchema::single(3), true).cluster_count(), 1u);
  EXPECT_EQ(clusterize(28, GraphKind::hexagon, table, ClusterSchema::single(2)).cluster_count(), 2u);
}

TEST(KStar, C60Hexagon) {
  const auto report = k_star(60, GraphKind::hexagon, c60_hexagon_table(), 20);
  EXPECT_EQ(report.k_single, 12);
  EXPECT_EQ(report.k_pair, 8);
  const std::vector<std::pair<int, int>> tuples{{6, 8}, {4, 10}, {6, 10}, {8, 10}};
  EXPECT_EQ(report.pair_tuples, tuples);

  // Independent search for the shortest injective prefix (N2, N4, ...).
  int shortest = 0;
  for (int k = 2; k <= kMaxDegree && shortest == 0; k += 2) {
    std::set<std::vector<BigInt>> keys;
    for (const auto& row : c60_hexagon_table()) {
      std::vector<BigInt> key;
      for (int j = 2; j <= k; j += 2) key.push_back(row.values[j]);
      keys.insert(key);
    }
    if (keys.size() == 1812) shortest = k;
  }
  EXPECT_EQ(report.k_hierarchical, shortest);
  EXPECT_LE(report.k_hierarchical, report.k_single);
}

TEST(KStar, CospectralSetHasNoFiniteDegree) {
  const auto& c44 = isomers_of(44);
  const auto table = newton_table(c44, GraphKind::full, 24);
  try {
    k_star(44, GraphKind::full, table, 24);
    FAIL() << "expected NoCompleteClusterization";
  } catch (const NoCompleteClusterization& e) {
    EXPECT_EQ(e.evidence(), std::make_pair(37, 38));
  }
  EXPECT_THROW(k_star(44, GraphKind::full, table, 30), InputError);
}

TEST(Properties, SeparationAcrossDegrees) {
  // Pairs separated at degree k but merged again at a larger even degree.
  // This happens only below k = 10; from there on separation persists.
  const std::map<std::pair<int, int>, long> expected{{{2, 4}, 26}, {{2, 6}, 1}, {{4, 6}, 627}, {{4, 8}, 22},
                                                     {{4, 10}, 5}, {{6, 8}, 29}, {{6, 10}, 5}, {{8, 10}, 5}};
  const auto& table = c60_hexagon_table();
  std::map<std::pair<int, int>, long> found;
  for (int later = 4; later <= kMaxDegree; later += 2) {
    std::map<BigInt, std::vector<int>> merged;
    for (const auto& row : table) merged[row.values[later]].push_back(row.index);
    for (int k = 2; k < later; k += 2) {
      long count = 0;
      for (const auto& [v, members] : merged) {
        for (std::size_t a = 0; a < members.size(); ++a) {
          for (std::size_t b = a + 1; b < members.size(); ++b) count += value(members[a], k) != value(members[b], k);
        }
      }
      if (count) found[{k, later}] = count;
    }
  }
  EXPECT_EQ(found, expected);

  // One witness checked by explicit walk enumeration.
  const auto& c60 = isomers_of(60);
  const auto g552 = induced_subgraph(c60[551].dual, GraphKind::hexagon).adjacency_lists();
  const auto g1784 = induced_subgraph(c60[1783].dual, GraphKind::hexagon).adjacency_lists();
  EXPECT_EQ(oracle::closed_walks(g552, 2), 76);
  EXPECT_EQ(oracle::closed_walks(g1784, 2), 72);
  EXPECT_EQ(oracle::closed_walks(g552, 4), 600);
  EXPECT_EQ(oracle::closed_walks(g1784, 4), 600);
}

TEST(Properties, CompleteFromDegreeTwelve) {
  for (int k = 12; k <= kMaxDegree; k += 2) {
    EXPECT_TRUE(clusterize(60, GraphKind::hexagon, c60_hexagon_table(), ClusterSchema::single(k)).complete())
        << "k=" << k;
  }
}

TEST(Properties, ExtremalSandwich) {
  const std::set<int> extremal{1, 2, 3, 1809, 1812};
  for (int k = 2; k <= kMaxDegree; k += 2) {
    for (int i = 1; i <= 1812; ++i) {
      if (extremal.count(i)) continue;
      ASSERT_LT(value(1809, k), value(i, k)) << "isomer " << i << " k=" << k;
      ASSERT_LT(value(i, k), value(2, k)) << "isomer " << i << " k=" << k;
    }
  }
}

TEST(Properties, FixedExtremalOrder) {
  for (int k = 2; k <= kMaxDegree; k += 2) {
    EXPECT_LT(value(1812, k), value(1809, k)) << "k=" << k;
    EXPECT_LT(value(1809, k), value(2, k)) << "k=" << k;
    EXPECT_LT(value(2, k), value(3, k)) << "k=" << k;
    EXPECT_LT(value(3, k), value(1, k)) << "k=" << k;
  }
}

TEST(Census, SmallN) {
  const std::vector<GraphKind> kinds{GraphKind::full, GraphKind::pentagon, GraphKind::hexagon};
  for (int n = 20; n < 32; n += 2) {
    if (!is_feasible(n)) continue;
    const auto census = cospectral_census(n, isomers_of(n), kinds);
    EXPECT_EQ(census.isomer_count, static_cast<int>(isomers_of(n).size()));
    for (const auto& row : census.rows) {
      EXPECT_EQ(row.shared_spectra(), 0) << n;
      EXPECT_EQ(row.isomers_involved(), 0) << n;
      EXPECT_EQ(row.cospectral_pairs(), 0) << n;
    }
  }
  EXPECT_THROW(cospectral_census(25, kinds), InfeasibleN);
}

TEST(Census, C40AndC44) {
  const std::vector<GraphKind> kinds{GraphKind::full, GraphKind::pentagon, GraphKind::hexagon};
  const auto c40 = cospectral_census(40, isomers_of(40), kinds);
  EXPECT_EQ(c40.rows[0].shared_spectra(), 0);
  EXPECT_EQ(c40.rows[1].shared_spectra(), 3);
  EXPECT_EQ(c40.rows[2].shared_spectra(), 1);
  ASSERT_EQ(c40.rows[2].groups.size(), 1u);
  EXPECT_EQ(c40.rows[2].groups[0].isomers, std::vector<int>({21, 25}));
  EXPECT_TRUE(c40.rows[2].groups[0].all_isomorphic());

  const auto c44 = cospectral_census(44, isomers_of(44), kinds);
  const auto& full = c44.rows[0];
  ASSERT_EQ(full.shared_spectra(), 1);
  EXPECT_EQ(full.cospectral_pairs(), 1);
  EXPECT_EQ(full.isomers_involved(), 2);
  EXPECT_EQ(full.groups[0].isomers, std::vector<int>({37, 38}));
  EXPECT_EQ(full.groups[0].isomorphism_classes, 2);
}

TEST(Census, GroupsAgreeWithPairwiseCospectrality) {
  const auto& c36 = isomers_of(36);
  const auto row = cospectral_groups(c36, GraphKind::pentagon);
  std::set<std::pair<int, int>> from_groups;
  for (const auto& g : row.groups) {
    for (std::size_t a = 0; a < g.isomers.size(); ++a) {
      for (std::size_t b = a + 1; b < g.isomers.size(); ++b) from_groups.emplace(g.isomers[a], g.isomers[b]);
    }
  }
  std::set<std::pair<int, int>> pairwise;
  for (std::size_t a = 0; a < c36.size(); ++a) {
    const AdjacencyMatrix ma(induced_subgraph(c36[a].dual, GraphKind::pentagon));
    for (std::size_t b = a + 1; b < c36.size(); ++b) {
      if (cospectral(ma, AdjacencyMatrix(induced_subgraph(c36[b].dual, GraphKind::pentagon))))
        pairwise.emplace(c36[a].index, c36[b].index);
    }
  }
  EXPECT_EQ(from_groups, pairwise);
  EXPECT_EQ(static_cast<long>(pairwise.size()), row.cospectral_pairs());
}

TEST(Census, ThreadIndependent) {
  const auto& c40 = isomers_of(40);
  const auto one = cospectral_groups(c40, GraphKind::pentagon, 1);
  const auto three = cospectral_groups(c40, GraphKind::pentagon, 3);
  ASSERT_EQ(one.groups.size(), three.groups.size());
  for (std::size_t i = 0; i < one.groups.size(); ++i) EXPECT_EQ(one.groups[i].isomers, three.groups[i].isomers);
}

}  // namespace
}  // namespace fullerene
