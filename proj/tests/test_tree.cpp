#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "deutsch/closed_forms.hpp"
#include "deutsch/tree.hpp"
#include "deutsch/verify.hpp"

using namespace deutsch;

namespace {

constexpr auto S = EdgeMark::Single;
constexpr auto D = EdgeMark::Double;

ValidatedPath vp(const char* text) { return require_valid(parse_path(text)); }

}  // namespace

TEST_CASE("composition_to_marks") {
  CHECK(composition_to_marks({2, 1}) == MarkSequence{S, D, D});
  CHECK(composition_to_marks({1, 2}) == MarkSequence{D, S, D});
  CHECK(composition_to_marks({4}) == MarkSequence{S, S, S, D});
  CHECK(composition_to_marks({}).empty());
}

TEST_CASE("marks_to_composition") {
  CHECK(marks_to_composition({D, D}) == Composition{1, 1});
  CHECK(marks_to_composition({S, D, D}) == Composition{2, 1});
  CHECK_THROWS_AS(marks_to_composition({S, S}), DanglingSingles);
  CHECK_THROWS_AS(marks_to_composition({D, S}), DanglingSingles);

  for (std::uint32_t total = 1; total <= 8; ++total) {
    for_each_composition(total, [](const Composition& c) {
      const auto marks = composition_to_marks(c);
      REQUIRE(marks.size() == std::accumulate(c.begin(), c.end(), 0u));
      REQUIRE(static_cast<std::size_t>(std::count(marks.begin(), marks.end(), D)) == c.size());
      REQUIRE(marks_to_composition(marks) == c);
    });
  }
}

TEST_CASE("path_to_tree on the length-5 figures") {
  const auto t1 = path_to_tree(vp("U D1 U U D2"));
  CHECK(t1.backbone == MarkSequence{S, D});
  CHECK(t1.bundles == std::vector<std::vector<MarkSequence>>{{{D}}, {}});

  const auto t3 = path_to_tree(vp("U U D2 U D1"));
  CHECK(t3.backbone == MarkSequence{D});
  CHECK(t3.bundles == std::vector<std::vector<MarkSequence>>{{{S, D}}});

  const auto t5 = path_to_tree(vp("U U U D1 D2"));
  CHECK(t5.backbone == MarkSequence{D, S, D});
  CHECK(t5.bundles == std::vector<std::vector<MarkSequence>>{{}, {}, {}});

  for (const auto& f : length5_figures()) {
    CHECK(tree_to_json(path_to_tree(vp(f.path))) == f.tree_json);
  }

  CHECK_THROWS_AS(path_to_tree(vp("U U D1 U D2 U D1")), NotNonDecreasing);
}

TEST_CASE("tree_to_path") {
  MarkedTree t2{{S, D}, {{}, {{D}}}};
  CHECK(render_path(tree_to_path(t2)) == "U U D1 U D2");
  MarkedTree t4{{S, D, D}, {{}, {}, {}}};
  CHECK(render_path(tree_to_path(t4)) == "U U U D2 D1");
  CHECK(tree_to_path(MarkedTree{}).empty());

  MarkedTree bad{{S}, {{}}};
  CHECK_THROWS_AS(tree_to_path(bad), InvalidTree);
}

TEST_CASE("tree_statistics") {
  CHECK(tree_statistics(path_to_tree(vp("U U U U D4"))) == TreeStats{4, 1, 5});
  CHECK(tree_statistics(path_to_tree(vp("U D1 U U D2"))) == TreeStats{3, 2, 5});

  // The 30-step unit-down path with backbone height 4.
  const auto big = vp(
      "U U U D1 D1 D1 U U D1 U D1 U U U U D1 D1 D1 D1 U U U U D1 D1 U D1 D1 D1 D1");
  REQUIRE(big.length() == 30);
  const auto t = path_to_tree(big);
  CHECK(t.backbone.size() == 4);
  REQUIRE(t.bundles.size() == 4);
  const auto sizes = [](const std::vector<MarkSequence>& b) {
    std::vector<std::size_t> s;
    for (const auto& m : b) s.push_back(m.size());
    return s;
  };
  CHECK(sizes(t.bundles[0]) == std::vector<std::size_t>{3});
  CHECK(sizes(t.bundles[1]) == std::vector<std::size_t>{1, 1, 4});
  CHECK(sizes(t.bundles[2]).empty());
  CHECK(sizes(t.bundles[3]) == std::vector<std::size_t>{2});
  CHECK(tree_statistics(t) == TreeStats{15, 15, 30});
}

TEST_CASE("validate_tree reports each violation with its location") {
  const auto e1 = validate_tree(MarkedTree{{S}, {{}}});
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].kind == TreeError::Kind::BackboneEndsWithSingle);
  CHECK(e1[0].mark_index == 0);

  const auto e2 = validate_tree(MarkedTree{{D}, {{{}}}});
  REQUIRE(e2.size() == 1);
  CHECK(e2[0].kind == TreeError::Kind::EmptyHangingPath);
  CHECK(e2[0].node == 0);
  CHECK(e2[0].path_index == 0);

  const auto e3 = validate_tree(MarkedTree{{D, D}, {{}, {{D}, {D, S}}}});
  REQUIRE(e3.size() == 1);
  CHECK(e3[0].kind == TreeError::Kind::HangingPathEndsWithSingle);
  CHECK(e3[0].node == 1);
  CHECK(e3[0].path_index == 1);
  CHECK(e3[0].mark_index == 1);

  const auto e4 = validate_tree(MarkedTree{{S}, {}});
  CHECK(e4.size() == 2);

  CHECK(validate_tree(MarkedTree{{D}, {{{S, D}}}}).empty());
}

TEST_CASE("tree JSON") {
  const MarkedTree t{{D}, {{{S, D}}}};
  CHECK(tree_to_json(t) == R"({"backbone":["d"],"bundles":[[["s","d"]]]})");
  CHECK(tree_from_json(tree_to_json(t)) == t);
  CHECK(tree_to_json(MarkedTree{}) == R"({"backbone":[],"bundles":[]})");
  CHECK(tree_from_json(R"({"backbone": [], "bundles": []})") == MarkedTree{});
  CHECK_THROWS_AS(tree_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_json(R"({"backbone":["x"],"bundles":[[]]})"), std::invalid_argument);
  CHECK_THROWS_AS(tree_from_json(R"({"backbone":["d"]})"), std::invalid_argument);
}

TEST_CASE("bijection properties for all paths up to length 12") {
  for (std::size_t n = 0; n <= 12; ++n) {
    for_each_nondecreasing_filter(n, [&](const ValidatedPath& p) {
      const auto t = path_to_tree(p);
      REQUIRE(validate_tree(t).empty());
      REQUIRE(tree_to_path(t) == p);
      const auto s = tree_statistics(t);
      const auto ps = path_stats(p);
      REQUIRE(s.weight == n);
      REQUIRE(s.edge_count == ps.up_count);
      REQUIRE(s.double_count == ps.downstep_count);
      if (ps.up_count == ps.downstep_count) {
        // Dyck specialization: every edge is doubled.
        REQUIRE(s.double_count == s.edge_count);
        REQUIRE(s.weight == 2 * s.edge_count);
      }
    });
  }
}

TEST_CASE("trees enumerated from marks match the path count") {
  for (std::size_t n = 0; n <= 12; ++n) {
    std::size_t count = 0;
    std::set<ValidatedPath> images;
    for_each_tree(n, [&](const MarkedTree& t) {
      ++count;
      REQUIRE(validate_tree(t).empty());
      REQUIRE(tree_statistics(t).weight == n);
      const auto p = tree_to_path(t);
      REQUIRE(is_nondecreasing(p));
      REQUIRE(path_to_tree(p) == t);
      images.insert(p);
    });
    CHECK(images.size() == count);
    CHECK(BigInt(count) == count_nondecreasing_closed(n));
  }
}

TEST_CASE("outline rendering") {
  const auto text = render_outline(path_to_tree(vp("U D1 U U D2")));
  CHECK(text.find("hang d") != std::string::npos);
  CHECK(text.rfind("root", 0) == 0);
}
