#include <doctest.h>

#include "bkmatch/distribution.hpp"

using namespace bkmatch;

namespace {

BipartiteGraph k11(Rat w = Rat(1)) {
  BipartiteGraph g({"s1"}, {"t1"});
  g.add_edge_ids(0, 1, w);
  return g;
}

BipartiteGraph path2(Rat w0 = Rat(1), Rat w1 = Rat(1)) {
  BipartiteGraph g({"s1", "s2"}, {"t1"});
  g.add_edge_ids(0, 2, w0);
  g.add_edge_ids(1, 2, w1);
  return g;
}

BipartiteGraph k22() {
  BipartiteGraph g({"s1", "s2"}, {"t1", "t2"});
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g.add_edge_ids(i, 2 + j);
  }
  return g;
}

const Rat* probability(const BoundaryDistribution& d, Mask m) {
  return d.find(m);
}

void check_sums_to_one(const BoundaryDistribution& d) {
  Rat total(0);
  for (const auto& [mask, p] : d.pmf) {
    CHECK(p > 0);
    total += p;
  }
  CHECK(total == 1);
}

}  // namespace

TEST_CASE("uniform boundary distribution") {
  const BipartiteGraph edgeless({"s1", "s2"}, {"t1"});
  const BoundaryDistribution point = boundary_distribution(edgeless);
  REQUIRE(point.pmf.size() == 1);
  CHECK(point.pmf[0].first == edgeless.s_mask());
  CHECK(point.pmf[0].second == 1);

  const BoundaryDistribution half = boundary_distribution(k11());
  REQUIRE(half.pmf.size() == 2);
  CHECK(*probability(half, 0b01) == Rat(1, 2));  // {s1}
  CHECK(*probability(half, 0b10) == Rat(1, 2));  // {t1}

  const BoundaryDistribution thirds = boundary_distribution(path2());
  REQUIRE(thirds.pmf.size() == 3);
  CHECK(*probability(thirds, 0b011) == Rat(1, 3));  // {s1,s2}
  CHECK(*probability(thirds, 0b110) == Rat(1, 3));  // {s2,t1}
  CHECK(*probability(thirds, 0b101) == Rat(1, 3));  // {s1,t1}
}

TEST_CASE("weighted boundary distribution") {
  // Unit weights reduce to the uniform law.
  const BoundaryDistribution u = boundary_distribution(path2());
  const BoundaryDistribution w = weighted_boundary_distribution(path2());
  CHECK(u.pmf == w.pmf);

  const BoundaryDistribution k = weighted_boundary_distribution(k11(Rat(3)));
  CHECK(*probability(k, 0b10) == Rat(3, 4));
  CHECK(*probability(k, 0b01) == Rat(1, 4));

  const BoundaryDistribution p =
      weighted_boundary_distribution(path2(Rat(2), Rat(1)));
  CHECK(*probability(p, 0b110) == Rat(1, 2));
  CHECK(*probability(p, 0b101) == Rat(1, 4));
  CHECK(*probability(p, 0b011) == Rat(1, 4));
}

TEST_CASE("scaled distribution") {
  CHECK(scaled_distribution(path2(), Rat(1)).pmf ==
        boundary_distribution(path2()).pmf);
  CHECK(*probability(scaled_distribution(k11(), Rat(3)), 0b10) == Rat(3, 4));
  // Mass of the empty matching vanishes as 1/(2t+1).
  const BoundaryDistribution big = scaled_distribution(path2(), Rat(1000));
  CHECK(*probability(big, 0b011) == Rat(1, 2001));
  CHECK_THROWS_WITH_AS(scaled_distribution(path2(), Rat(0)), "invalid scale",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(scaled_distribution(path2(), Rat(-2)), "invalid scale",
                       std::invalid_argument);
}

TEST_CASE("conditioned distribution") {
  // Empty conditions keep the weighted law (and the full ground).
  const BipartiteGraph g = path2(Rat(2), Rat(1));
  CHECK(conditioned_distribution(g, 0, 0).pmf ==
        weighted_boundary_distribution(g).pmf);

  // Conditioning on t1 in the boundary drops the empty matching and projects
  // t1 away; remaining ground is {s1,s2}.
  const BoundaryDistribution c = conditioned_distribution(path2(), 0b100, 0);
  REQUIRE(c.ground.labels == std::vector<std::string>{"s1", "s2"});
  CHECK(*probability(c, 0b01) == Rat(1, 2));  // {s1}, from boundary {s1,t1}
  CHECK(*probability(c, 0b10) == Rat(1, 2));  // {s2}

  // Forcing s1 in and t1 out leaves only the empty matching; V' is empty.
  const BoundaryDistribution point =
      conditioned_distribution(k11(), 0b01, 0b10);
  CHECK(point.ground.size() == 0);
  REQUIRE(point.pmf.size() == 1);
  CHECK(point.pmf[0] == std::pair<Mask, Rat>(0, Rat(1)));

  CHECK_THROWS_WITH_AS(conditioned_distribution(k11(), 0b01, 0b01),
                       "invalid condition", std::invalid_argument);
  CHECK_THROWS_WITH_AS(conditioned_distribution(k11(), 0b11, 0),
                       "empty conditioned space", std::invalid_argument);
}

TEST_CASE("maximum matching distribution") {
  const BipartiteGraph edgeless({"s1"}, {"t1"});
  CHECK(max_matching_distribution(edgeless).pmf[0].first == 0b01);

  const BoundaryDistribution p = max_matching_distribution(path2());
  REQUIRE(p.pmf.size() == 2);
  CHECK(*probability(p, 0b110) == Rat(1, 2));
  CHECK(*probability(p, 0b101) == Rat(1, 2));

  // Both perfect matchings of K(2,2) cover everything: point mass on T.
  const BoundaryDistribution q = max_matching_distribution(k22());
  REQUIRE(q.pmf.size() == 1);
  CHECK(q.pmf[0].first == 0b1100);
  CHECK(q.pmf[0].second == 1);
}

TEST_CASE("event probability") {
  const BipartiteGraph g = path2();
  const BoundaryDistribution d = boundary_distribution(g);
  const GroundSet ground = graph_ground(g);
  std::vector<Mask> everything;
  for (Mask m = 0; m <= ground.full(); ++m) everything.push_back(m);
  CHECK(event_probability(d, Event(ground, everything)) == 1);
  CHECK(event_probability(d, Event(ground, {})) == 0);
  CHECK(event_probability(d, upward_closure(ground, {0b100})) == Rat(2, 3));
  CHECK_THROWS_WITH_AS(
      event_probability(d, Event(GroundSet({"x"}), {0})), "ground mismatch",
      std::invalid_argument);
}

TEST_CASE("total variation") {
  const BoundaryDistribution d = boundary_distribution(path2());
  CHECK(total_variation(d, d) == 0);

  BoundaryDistribution a, b;
  a.ground = b.ground = GroundSet({"x", "y"});
  a.pmf = {{0b01, Rat(1)}};
  b.pmf = {{0b10, Rat(1)}};
  CHECK(total_variation(a, b) == 1);

  CHECK(total_variation(scaled_distribution(path2(), Rat(10)),
                        max_matching_distribution(path2())) == Rat(1, 21));
}

TEST_CASE("TV to the maximum law shrinks as the scale grows") {
  // On the two-edge path the distance is exactly 1/(2t+1).
  const BipartiteGraph g = path2();
  const BoundaryDistribution max_law = max_matching_distribution(g);
  Rat previous(1);
  for (long t : {1L, 10L, 100L, 1000L}) {
    const Rat now = total_variation(scaled_distribution(g, Rat(t)), max_law);
    CHECK(now == Rat(1, 2 * t + 1));
    CHECK(now < previous);
    previous = now;
  }
}

TEST_CASE("distributions are exact probability vectors") {
  Rng rng(23);
  for (int i = 0; i < 25; ++i) {
    const BipartiteGraph g = random_graph(3, 3, Rat(1, 2), rng.next());
    check_sums_to_one(boundary_distribution(g));
    check_sums_to_one(weighted_boundary_distribution(g));
    check_sums_to_one(scaled_distribution(g, Rat(7, 3)));
    check_sums_to_one(max_matching_distribution(g));
    for (const auto& [mask, p] : boundary_distribution(g).pmf) {
      CHECK(popcount(mask) == g.s_count());
    }
  }
}
