#include <doctest.h>

#include <set>

#include "bkmatch/graph.hpp"

using namespace bkmatch;

namespace {

const char* kMinimal = R"({"s":["s1"],"t":["t1"],"edges":[["s1","t1"]]})";

}  // namespace

TEST_CASE("parse_graph minimal instance") {
  const BipartiteGraph g = parse_graph(kMinimal);
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(0).weight == 1);
  CHECK(g.vertex_name(0) == "s1");
  CHECK(g.side(1) == Side::T);
}

TEST_CASE("parse_graph rejects same-side and unknown endpoints") {
  CHECK_THROWS_WITH_AS(
      parse_graph(R"({"s":["s1","s2"],"t":["t1"],"edges":[["s1","s2"]]})"),
      "malformed edge", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_graph(R"({"s":["s1"],"t":["t1"],"edges":[["t1","s1"]]})"),
      "malformed edge", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      parse_graph(R"({"s":["s1"],"t":["t1"],"edges":[["s1","x"]]})"),
      "malformed edge", std::invalid_argument);
}

TEST_CASE("parse_graph reads rational weights") {
  const BipartiteGraph g =
      parse_graph(R"({"s":["s1"],"t":["t1"],"edges":[["s1","t1","3/2"]]})");
  CHECK(g.edge(0).weight == Rat(3, 2));
}

TEST_CASE("parse_graph rejects duplicates and bad weights") {
  CHECK_THROWS_WITH_AS(
      parse_graph(
          R"({"s":["s1"],"t":["t1"],"edges":[["s1","t1"],["s1","t1"]]})"),
      "duplicate edge", std::invalid_argument);
  for (const char* w : {"0", "-1/2", "abc", "1/0"}) {
    CHECK_THROWS_WITH_AS(
        parse_graph(std::string(R"({"s":["s1"],"t":["t1"],"edges":[["s1","t1",")") +
                    w + R"("]]})"),
        "invalid weight", std::invalid_argument);
  }
  CHECK_THROWS_AS(parse_graph("not json"), std::invalid_argument);
}

TEST_CASE("serialize then parse is the identity") {
  Rng rng(42);
  for (int i = 0; i < 20; ++i) {
    BipartiteGraph g = random_graph(3, 3, Rat(1, 2), rng.next());
    // Perturb weights to exercise the weight round trip.
    BipartiteGraph h({"a", "b", "c"}, {"x", "y", "z"});
    for (const Edge& e : g.edges()) {
      h.add_edge_ids(e.s, e.t, Rat(static_cast<long>(1 + rng.below(5)),
                                   static_cast<long>(1 + rng.below(5))));
    }
    const BipartiteGraph back = parse_graph(serialize_graph(h));
    REQUIRE(back.edge_count() == h.edge_count());
    CHECK(back.vertex_count() == h.vertex_count());
    for (int r = 0; r < h.edge_count(); ++r) {
      CHECK(back.edge(r).s == h.edge(r).s);
      CHECK(back.edge(r).t == h.edge(r).t);
      CHECK(back.edge(r).weight == h.edge(r).weight);
    }
  }
}

TEST_CASE("enumerate_graphs yields 2^(s*t) distinct graphs") {
  CHECK(enumerate_graphs(1, 1).size() == 2);
  CHECK(enumerate_graphs(2, 1).size() == 4);
  const auto all = enumerate_graphs(2, 2);
  CHECK(all.size() == 16);
  std::set<std::string> distinct;
  for (const BipartiteGraph& g : all) distinct.insert(serialize_graph(g));
  CHECK(distinct.size() == 16);
  CHECK_THROWS_WITH_AS(enumerate_graphs(5, 4), "sweep too large",
                       std::invalid_argument);
}

TEST_CASE("random_graph determinism and extremes") {
  CHECK(random_graph(2, 2, Rat(0), 5).edge_count() == 0);
  CHECK(random_graph(2, 2, Rat(1), 5).edge_count() == 4);
  const BipartiteGraph a = random_graph(2, 2, Rat(1, 2), 7);
  const BipartiteGraph b = random_graph(2, 2, Rat(1, 2), 7);
  CHECK(serialize_graph(a) == serialize_graph(b));
}

TEST_CASE("vertex set algebra") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const Mask a = rng.subset(12);
    const Mask b = rng.subset(12);
    CHECK((a ^ a) == 0);
    CHECK(((a ^ b) ^ b) == a);
    CHECK(project_mask(expand_mask(a & low_bits(popcount(b)), b), b) ==
          (a & low_bits(popcount(b))));
  }
}
