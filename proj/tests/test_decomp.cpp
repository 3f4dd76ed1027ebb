#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "declass/decomp.hpp"
#include "declass/oracle.hpp"
#include "declass/partition.hpp"

using namespace declass;

namespace {

DecompDatum datum(std::initializer_list<std::pair<int, std::vector<int>>> blocks) {
  std::vector<GLBlock> bs;
  for (const auto& [size, parts] : blocks) bs.push_back({size, Partition(parts)});
  return DecompDatum(std::move(bs));
}

}  // namespace

TEST_CASE("datum canonical form and printing") {
  const DecompDatum d = datum({{1, {1}}, {2, {1, 1}}});
  CHECK(d.n() == 3);
  CHECK(d.str() == "(2,1.1)(1,1)");
  CHECK(d == datum({{2, {1, 1}}, {1, {1}}}));
  CHECK_THROWS_AS((void)datum({{2, {1}}}), std::invalid_argument);  // |nil| != size
}

TEST_CASE("class counts for small n") {
  const int expected[] = {1, 1, 3, 6, 14, 27, 58};
  for (int n = 1; n <= 6; ++n) CHECK(enumerate_classes(n).size() == static_cast<std::size_t>(expected[n]));
}

TEST_CASE("gl_2 census") {
  const auto infos = classes_with_sheets(2);
  REQUIRE(infos.size() == 3);
  // ordered by dimension ascending
  CHECK(infos[0].datum == datum({{2, {1, 1}}}));
  CHECK(infos[0].dim == 1);
  CHECK(infos[0].level == 4);
  CHECK(infos[1].datum == datum({{2, {2}}}));
  CHECK(infos[1].dim == 3);
  CHECK(infos[1].level == 2);
  CHECK(infos[2].datum == datum({{1, {1}}, {1, {1}}}));
  CHECK(infos[2].dim == 4);
  CHECK(infos[2].level == 2);
  // the three classes form a chain in the closure order
  CHECK(closure_leq(infos[0].datum, infos[1].datum));
  CHECK(closure_leq(infos[1].datum, infos[2].datum));
  CHECK(closure_leq(infos[0].datum, infos[2].datum));
  CHECK_FALSE(closure_leq(infos[2].datum, infos[1].datum));
}

TEST_CASE("gl_3 census dimensions and levels") {
  const auto infos = classes_with_sheets(3);
  REQUIRE(infos.size() == 6);
  std::vector<int> dims, levels;
  for (const auto& c : infos) {
    dims.push_back(c.dim);
    levels.push_back(c.level);
  }
  CHECK(dims == std::vector<int>{1, 5, 6, 7, 8, 9});
  std::multiset<int> level_set(levels.begin(), levels.end());
  CHECK(level_set == std::multiset<int>{3, 3, 3, 5, 5, 9});
}

TEST_CASE("closure order examples") {
  CHECK(closure_leq(datum({{2, {2}}}), datum({{1, {1}}, {1, {1}}})));
  CHECK_FALSE(closure_leq(datum({{1, {1}}, {1, {1}}}), datum({{2, {2}}})));
  CHECK(closure_leq(datum({{2, {1, 1}}}), datum({{2, {2}}})));
  const DecompDatum d = datum({{2, {2}}, {1, {1}}});
  CHECK(closure_leq(d, d));
}

TEST_CASE("closure order is antisymmetric") {
  for (int n = 1; n <= 5; ++n) {
    const auto classes = enumerate_classes(n);
    for (const auto& a : classes)
      for (const auto& b : classes)
        if (closure_leq(a, b) && closure_leq(b, a)) CHECK(a == b);
  }
}

TEST_CASE("hasse diagrams") {
  const HasseDiagram h1 = hasse(1);
  CHECK(h1.nodes.size() == 1);
  CHECK(h1.covers.empty());

  const HasseDiagram h2 = hasse(2);
  REQUIRE(h2.nodes.size() == 3);
  REQUIRE(h2.covers.size() == 2);  // a chain, transitively reduced
  CHECK(h2.covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  const HasseDiagram h3 = hasse(3);
  // the central class is isolated: no cover reaches down from it
  int center = -1;
  for (std::size_t i = 0; i < h3.nodes.size(); ++i)
    if (h3.nodes[i].level == 9) center = static_cast<int>(i);
  REQUIRE(center >= 0);
  for (const auto& [lo, hi] : h3.covers) CHECK(hi != center);
  // covers only go strictly up in dimension
  for (const auto& [lo, hi] : h3.covers) CHECK(h3.nodes[lo].dim < h3.nodes[hi].dim);
}

TEST_CASE("cover relations match the closure order") {
  for (int n = 2; n <= 5; ++n) {
    const HasseDiagram h = hasse(n);
    std::set<std::pair<int, int>> covers(h.covers.begin(), h.covers.end());
    for (std::size_t a = 0; a < h.nodes.size(); ++a)
      for (std::size_t b = 0; b < h.nodes.size(); ++b) {
        if (a == b) continue;
        const bool leq = closure_leq(h.nodes[a].datum, h.nodes[b].datum);
        if (!leq) {
          CHECK(covers.count({static_cast<int>(a), static_cast<int>(b)}) == 0);
          continue;
        }
        // covered exactly when nothing fits strictly between
        bool has_middle = false;
        for (std::size_t c = 0; c < h.nodes.size() && !has_middle; ++c) {
          if (c == a || c == b) continue;
          if (closure_leq(h.nodes[a].datum, h.nodes[c].datum) &&
              closure_leq(h.nodes[c].datum, h.nodes[b].datum))
            has_middle = true;
        }
        CHECK(covers.count({static_cast<int>(a), static_cast<int>(b)}) == (has_middle ? 0u : 1u));
      }
  }
}

TEST_CASE("sheets of gl_2 and gl_3") {
  const auto s2 = sheets(2);
  REQUIRE(s2.size() == 2);
  CHECK(s2[0].level == 2);
  CHECK(s2[1].level == 4);
  // level 2 holds the regular sheet: dense class is the two-block datum
  const auto& dense2 = s2[0].classes;
  int dense_count = 0;
  for (const auto& c : dense2)
    if (c.sheet_dense) {
      ++dense_count;
      CHECK(c.datum == datum({{1, {1}}, {1, {1}}}));
      REQUIRE(c.sheet_nil.has_value());
      CHECK(*c.sheet_nil == Partition({2}));
    }
  CHECK(dense_count == 1);
  CHECK(s2[1].classes.size() == 1);
  CHECK(s2[1].classes[0].isolated);

  const auto s3 = sheets(3);
  REQUIRE(s3.size() == 3);
  CHECK(s3[0].level == 3);
  CHECK(s3[1].level == 5);
  CHECK(s3[2].level == 9);
  std::vector<Partition> nils;
  for (const auto& level : s3)
    for (const auto& c : level.classes)
      if (c.sheet_dense) nils.push_back(*c.sheet_nil);
  CHECK(nils == std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
}

TEST_CASE("sheet count equals the partition count and nilpotents are distinct") {
  for (int n = 1; n <= 6; ++n) {
    const auto levels = sheets(n);
    std::size_t dense = 0;
    std::set<Partition> nils;
    for (const auto& level : levels)
      for (const auto& c : level.classes)
        if (c.sheet_dense) {
          ++dense;
          REQUIRE(c.sheet_nil.has_value());
          nils.insert(*c.sheet_nil);
        }
    CHECK(dense == partitions_of(n).size());
    CHECK(nils.size() == dense);  // sheet -> nilpotent orbit is a bijection
  }
}

TEST_CASE("the centre is alone in its level and isolated") {
  for (int n = 1; n <= 6; ++n) {
    const auto levels = sheets(n);
    REQUIRE(!levels.empty());
    const auto& top = levels.back();
    CHECK(top.level == n * n);
    REQUIRE(top.classes.size() == 1);
    CHECK(top.classes[0].isolated);
    CHECK(top.classes[0].sheet_dense);
    CHECK(top.classes[0].datum == DecompDatum(std::vector<GLBlock>{{n, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))}}));
  }
}

TEST_CASE("sheet nilpotent of a datum") {
  CHECK(sheet_nilpotent(datum({{1, {1}}, {1, {1}}})) == Partition({2}));
  CHECK(sheet_nilpotent(datum({{2, {2}}, {1, {1}}})) == Partition({3}));
  CHECK(sheet_nilpotent(datum({{2, {1, 1}}, {1, {1}}})) == Partition({2, 1}));
  CHECK(sheet_nilpotent(datum({{3, {1, 1, 1}}})) == Partition({1, 1, 1}));
}

TEST_CASE("dimension and level formulas") {
  CHECK(class_dim(datum({{1, {1}}, {1, {1}}})) == 4);
  CHECK(class_dim(datum({{2, {2}}})) == 3);
  CHECK(class_dim(datum({{2, {1, 1}}})) == 1);
  CHECK(level_of(datum({{1, {1}}, {1, {1}}})) == 2);
  CHECK(level_of(datum({{2, {2}}})) == 2);
  CHECK(level_of(datum({{2, {1, 1}}})) == 4);
  CHECK(level_of(datum({{2, {1, 1}}, {1, {1}}})) == 5);
  // unique class of maximal dimension n^2: n singleton blocks
  for (int n = 1; n <= 6; ++n) {
    const auto infos = classes_with_sheets(n);
    CHECK(infos.back().dim == n * n);
    for (std::size_t i = 0; i + 1 < infos.size(); ++i) CHECK(infos[i].dim < n * n);
  }
}

TEST_CASE("levi shape splits the dimension") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& d : enumerate_classes(n)) {
      const LeviShape shape = levi_shape_of(d);
      CHECK(shape.dim_levi + 2 * shape.dim_unipotent_radical == n * n);
      CHECK(shape.dim_center == static_cast<int>(d.blocks().size()));
      int sq = 0;
      for (int b : shape.block_sizes) sq += b * b;
      CHECK(sq == shape.dim_levi);
    }
}

TEST_CASE("pgl transport shifts dimensions and keeps the poset") {
  for (int n = 2; n <= 6; ++n) {
    const HasseDiagram gl = hasse(n);
    const HasseDiagram pgl = pgl_transport(gl);
    CHECK(pgl.group == "pgl");
    CHECK(pgl.covers == gl.covers);
    REQUIRE(pgl.nodes.size() == gl.nodes.size());
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      CHECK(pgl.nodes[i].dim == gl.nodes[i].dim - 1);
      CHECK(pgl.nodes[i].datum == gl.nodes[i].datum);
      CHECK(pgl.nodes[i].level == gl.nodes[i].level);
    }
  }
}

TEST_CASE("induce_orbit groups by tag") {
  using Tagged = std::vector<std::pair<std::string, Partition>>;
  const Tagged in = {{"a", Partition({1, 1})}, {"b", Partition({1})}};
  const auto distinct = induce_orbit(in);
  REQUIRE(distinct.size() == 2);
  CHECK(distinct[0].first == "a");
  CHECK(distinct[0].second == Partition({1, 1}));
  CHECK(distinct[1].second == Partition({1}));

  const Tagged merge = {{"a", Partition({1, 1})}, {"a", Partition({1})}};
  const auto merged = induce_orbit(merge);
  REQUIRE(merged.size() == 1);
  CHECK(merged[0].second == Partition({2, 1}));
}

TEST_CASE("engine closure order agrees with the matrix oracle") {
  for (int n = 1; n <= 3; ++n) {
    const auto classes = enumerate_classes(n);
    for (const auto& lo : classes)
      for (const auto& hi : classes)
        CHECK(closure_leq(lo, hi) == class_closure_member_oracle(lo, hi, 17));
  }
}
