#include "doctest.h"

#include <algorithm>
#include <stdexcept>

#include "agc/detail/sorted.hpp"
#include "agc/dsim.hpp"
#include "agc/liveness.hpp"
#include "agc/random_graph.hpp"
#include "agc/workloads.hpp"

using namespace agc;

namespace {

bool subset(const std::vector<ActorId>& small, const std::vector<ActorId>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Root on one node, a blocked two-cycle split across the others.
struct CycleFixture {
  ActorGraph g;
  PartitionedGraph pg;
  CycleFixture() {
    g.add_root(0);
    g.add_actor(1);
    g.add_actor(2);
    g.add_reference(1, 2);
    g.add_reference(2, 1);
    pg = partition_by_placement(g, {{0, 0}, {1, 0}, {2, 1}});
  }
};

}  // namespace

TEST_CASE("partitions cover the graph exactly") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ActorGraph g = random_graph(seed, 1 + seed % 30, 0.1, 0.3, 1 + seed % 2);
    for (Policy policy : {Policy::locality, Policy::round_robin_bfs}) {
      for (std::uint32_t nodes : {1u, 2u, 4u, 7u}) {
        CAPTURE(seed);
        CAPTURE(policy_name(policy));
        CAPTURE(nodes);
        const PartitionedGraph pg = partition(g, nodes, policy);

        std::vector<ActorId> placed;
        for (const auto& [a, node] : pg.placement) {
          placed.push_back(a);
          CHECK(node_of(pg, a) == node);
        }
        CHECK(placed == g.actors);

        std::vector<ActorId> from_parts;
        std::vector<ActorEdge> edges = pg.cross_edges;
        std::uint32_t prev_id = 0;
        bool first = true;
        for (const auto& [id, sub] : pg.partitions) {
          if (!first) CHECK(id > prev_id);
          prev_id = id;
          first = false;
          REQUIRE_FALSE(sub.actors.empty());
          CHECK(validate(sub).empty());
          from_parts.insert(from_parts.end(), sub.actors.begin(), sub.actors.end());
          edges.insert(edges.end(), sub.references.begin(), sub.references.end());
          for (ActorId a : sub.actors) {
            CHECK(sub.is_root(a) == g.is_root(a));
            if (!g.is_root(a)) CHECK(sub.is_unblocked(a) == g.is_unblocked(a));
          }
        }
        std::sort(from_parts.begin(), from_parts.end());
        CHECK(from_parts == g.actors);
        std::sort(edges.begin(), edges.end());
        CHECK(edges == g.references);

        CHECK(reassemble(pg) == g);
      }
    }
  }
}

TEST_CASE("one node means one partition and no cross references") {
  const ActorGraph g = random_graph(11, 25, 0.15, 0.4, 2);
  for (Policy policy : {Policy::locality, Policy::round_robin_bfs}) {
    const PartitionedGraph pg = partition(g, 1, policy);
    REQUIRE(pg.partitions.size() == 1);
    CHECK(pg.cross_edges.empty());
    CHECK(pg.partitions.front().second == g);
    CHECK(pg.warnings.empty());
  }
}

TEST_CASE("contiguous placement cuts fewer references than scattering") {
  const ActorGraph topo = trace_topology(gen_fib_trace(7, 1));
  const std::size_t local = partition(topo, 4, Policy::locality).cross_edges.size();
  const std::size_t scattered = partition(topo, 4, Policy::round_robin_bfs).cross_edges.size();
  CHECK(local < scattered);
}

TEST_CASE("more nodes than actors shrinks to one actor per partition") {
  const ActorGraph topo = trace_topology(gen_matmul_trace(4, false));
  const PartitionedGraph pg = partition(topo, 8, Policy::locality);
  CHECK(pg.partitions.size() == 3);
  REQUIRE(pg.warnings.size() == 1);
  CHECK(pg.warnings.front() == "requested 8 nodes for 3 actors; using 3 partitions");

  const PartitionedGraph empty = partition(ActorGraph{}, 2, Policy::round_robin_bfs);
  CHECK(empty.partitions.empty());
  REQUIRE(empty.warnings.size() == 1);
  CHECK(empty.warnings.front() == "requested 2 nodes for 0 actors; using 0 partitions");
}

TEST_CASE("node_of rejects unplaced actors") {
  const ActorGraph g = random_graph(3, 10, 0.1, 0.3, 1);
  const PartitionedGraph pg = partition(g, 2, Policy::locality);
  CHECK_THROWS_AS(node_of(pg, 999), std::out_of_range);
}

TEST_CASE("fixed placement carries unused entries and rejects gaps") {
  ActorGraph g;
  g.add_root(1);
  g.add_actor(2);
  g.add_reference(1, 2);

  const PartitionedGraph pg = partition_by_placement(g, {{1, 0}, {2, 1}, {99, 1}});
  CHECK(pg.partitions.size() == 2);
  CHECK(node_of(pg, 99) == 1);  // placed, just not present yet
  CHECK(pg.cross_edges == std::vector<ActorEdge>{{1, 2}});

  ActorGraph bigger = g;
  bigger.add_actor(3);
  CHECK_THROWS_AS(partition_by_placement(bigger, {{1, 0}, {2, 1}}), std::out_of_range);
}

TEST_CASE("remote references pin local actors: kept here, stand-ins there") {
  ActorGraph g;
  g.add_root(0);
  g.add_actor(1);
  g.add_actor(2);
  g.add_reference(0, 1);
  const PartitionedGraph pg = partition_by_placement(g, {{0, 0}, {1, 1}, {2, 1}});

  const ActorGraph held_view = local_view(pg, 1);
  CHECK(held_view.is_root(1));  // a remote holder may message it
  CHECK_FALSE(held_view.has_actor(0));

  const ActorGraph holder_view = local_view(pg, 0);
  CHECK(holder_view.has_actor(1));  // stand-in for the remote target
  CHECK(holder_view.is_root(1));
  CHECK(holder_view.has_reference(0, 1));

  for (Method m : {Method::direct, Method::indirect, Method::dual_node}) {
    const CollectResult local = local_collect(pg, 1, m, Strategy::two_scan);
    CHECK(local.liveness.live == std::vector<ActorId>{1});
    CHECK(local.liveness.garbage == std::vector<ActorId>{2});
  }
  CHECK_THROWS_AS(local_view(pg, 5), std::out_of_range);
  CHECK_THROWS_AS(local_collect(pg, 5, Method::direct, Strategy::two_scan), std::out_of_range);
}

TEST_CASE("a blocked cycle across nodes survives local collection, not global") {
  const CycleFixture f;
  for (Method m : {Method::direct, Method::indirect, Method::dual_node}) {
    CAPTURE(method_name(m));
    CHECK(local_collect(f.pg, 0, m, Strategy::one_scan).liveness.garbage.empty());
    CHECK(local_collect(f.pg, 1, m, Strategy::one_scan).liveness.garbage.empty());

    const CollectResult global = global_collect(f.pg, m, Strategy::one_scan);
    CHECK(global.liveness.garbage == std::vector<ActorId>{1, 2});
    CHECK(global.liveness.live == std::vector<ActorId>{0});
  }
}

TEST_CASE("local collection never claims more than the global one") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const ActorGraph g = random_graph(seed, 4 + seed % 24, 0.12, 0.35, 1 + seed % 2);
    const LivenessResult oracle = live_fixpoint(g);
    for (Policy policy : {Policy::locality, Policy::round_robin_bfs}) {
      for (std::uint32_t nodes : {2u, 3u, 5u}) {
        const PartitionedGraph pg = partition(g, nodes, policy);
        for (Method m : {Method::direct, Method::indirect, Method::dual_node}) {
          CAPTURE(seed);
          CAPTURE(policy_name(policy));
          CAPTURE(nodes);
          CAPTURE(method_name(m));
          const CollectResult global = global_collect(pg, m, Strategy::one_scan);
          const CollectResult whole = collect(g, m, Strategy::one_scan);
          CHECK(global.liveness.live == whole.liveness.live);
          CHECK(global.liveness.garbage == whole.liveness.garbage);
          if (m != Method::dual_node) CHECK(global.liveness.garbage == oracle.garbage);

          for (const auto& [node, sub] : pg.partitions) {
            (void)sub;
            const CollectResult local = local_collect(pg, node, m, Strategy::one_scan);
            CHECK(subset(local.liveness.garbage, global.liveness.garbage));
          }
        }
      }
    }
  }
}

TEST_CASE("policy and mode names round-trip") {
  for (Policy p : {Policy::locality, Policy::round_robin_bfs})
    CHECK(policy_from_name(policy_name(p)) == p);
  CHECK(policy_from_name("bfs") == Policy::round_robin_bfs);
  CHECK_FALSE(policy_from_name("random").has_value());

  for (GcMode m : {GcMode::nogc, GcMode::gdp, GcMode::lgc, GcMode::cdgc})
    CHECK(mode_from_name(mode_name(m)) == m);
  CHECK_FALSE(mode_from_name("full").has_value());
}

TEST_CASE("simulated mechanisms rank as expected on a spawn tree") {
  const MutationTrace trace = gen_fib_trace(8, 1);  // 67 actors
  const DsimReport rep = run_modes(trace, 2, Policy::locality, 5, 20);

  CHECK(rep.actor_total == 67);
  CHECK(rep.warnings.empty());
  CHECK(rep.all_ok);
  REQUIRE(rep.runs.size() == 4);
  const ModeRun& nogc = rep.runs[0];
  const ModeRun& gdp = rep.runs[1];
  const ModeRun& lgc = rep.runs[2];
  const ModeRun& cdgc = rep.runs[3];
  CHECK(nogc.mode == GcMode::nogc);
  CHECK(gdp.mode == GcMode::gdp);
  CHECK(lgc.mode == GcMode::lgc);
  CHECK(cdgc.mode == GcMode::cdgc);

  // baseline: everything survives, the garbage just sits there
  CHECK(nogc.collected == 0);
  CHECK(nogc.gc_ops == 0);
  CHECK(nogc.local_cycles == 0);
  CHECK(nogc.surviving == 67);
  CHECK(nogc.residual_garbage == 66);
  CHECK(nogc.overhead.num == nogc.overhead.den);

  // detection-only: sees exactly what the collecting run sees, removes nothing
  CHECK(gdp.collected == 0);
  CHECK(gdp.detected == lgc.detected);
  CHECK(gdp.local_cycles == lgc.local_cycles);
  CHECK(gdp.detection_matched);
  CHECK(gdp.surviving == 67);

  CHECK(lgc.collected == 66);
  CHECK(lgc.surviving == 1);
  CHECK(lgc.residual_garbage == 0);
  CHECK(lgc.global_cycles == 0);

  CHECK(cdgc.collected == 66);
  CHECK(cdgc.surviving == 1);
  CHECK(cdgc.residual_garbage == 0);
  CHECK(cdgc.global_cycles > 0);
  CHECK(cdgc.residual_garbage <= lgc.residual_garbage);

  for (const ModeRun& r : rep.runs) {
    CHECK(r.subsumption_held);
    CHECK(r.event_ops == nogc.event_ops);
    CHECK(r.overhead.num >= r.overhead.den);
  }
  CHECK(lgc.overhead.num > lgc.overhead.den);
  CHECK(cdgc.gc_ops >= lgc.gc_ops);
}

TEST_CASE("mechanism comparison holds across node counts, policies, methods") {
  const MutationTrace trace = gen_fib_trace(7, 1);  // 41 actors
  for (std::uint32_t nodes : {2u, 4u}) {
    for (Policy policy : {Policy::locality, Policy::round_robin_bfs}) {
      for (Method m : {Method::direct, Method::dual_node}) {
        CAPTURE(nodes);
        CAPTURE(policy_name(policy));
        CAPTURE(method_name(m));
        const DsimReport rep = run_modes(trace, nodes, policy, 3, 9, m, Strategy::one_scan);
        CHECK(rep.all_ok);
        REQUIRE(rep.runs.size() == 4);
        CHECK(rep.runs[3].residual_garbage == 0);
        CHECK(rep.runs[3].surviving == 1);
        CHECK(rep.runs[1].collected == 0);
        CHECK(rep.runs[2].collected + rep.runs[2].surviving == 41);
      }
    }
  }
}

TEST_CASE("simulator surfaces placement warnings") {
  const DsimReport rep = run_modes(gen_matmul_trace(4, false), 8, Policy::locality, 2, 4);
  REQUIRE_FALSE(rep.warnings.empty());
  CHECK(rep.all_ok);
  CHECK(rep.runs[3].residual_garbage == 0);
}
