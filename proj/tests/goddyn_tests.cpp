#include <catch2/catch.hpp>

#include "cdcw/corpus.hpp"
#include "cdcw/goddyn.hpp"

using namespace cdcw;

TEST_CASE("verify_cover") {
  MultiGraph tri = named_graphs::cycle_graph(3);
  CycleBody c = cycle_body_from_edges(tri, {1, 2, 3});
  CoverCertificate ok = verify_cover(tri, {c, c}, c);
  CHECK(ok.pass);
  CHECK(ok.contains_required);
  for (auto& [e, k] : ok.multiplicity) CHECK(k == 2);

  // missing an edge: verdict fail with offenders listed
  MultiGraph theta = named_graphs::theta();
  CycleBody ab = cycle_body_from_edges(theta, {1, 2});
  CycleBody ac = cycle_body_from_edges(theta, {1, 3});
  CoverCertificate bad = verify_cover(theta, {ab, ac}, std::nullopt);
  CHECK_FALSE(bad.pass);
  CHECK(bad.offending == std::vector<EdgeId>{2, 3});  // edge 1 is in both

  // K4's four triangles double cover it
  MultiGraph k4 = named_graphs::complete_graph(4);
  std::vector<CycleBody> triangles;
  for (const CycleBody& cb : enumerate_cycles(k4))
    if (cb.edges.size() == 3) triangles.push_back(cb);
  REQUIRE(triangles.size() == 4);
  CHECK(verify_cover(k4, triangles, std::nullopt).pass);

  // members must be cycle bodies
  CycleBody junk = cycle_body_from_edges(k4, {1, 2});
  CHECK_THROWS_AS(verify_cover(k4, {junk}, std::nullopt), Error);
}

TEST_CASE("find_companion_cycle") {
  MultiGraph theta = named_graphs::theta();
  auto cycles = enumerate_cycles(theta);
  CycleBody ab = cycle_body_from_edges(theta, {1, 2});
  auto c0 = find_companion_cycle(theta, cycles, ab, {1});
  REQUIRE(c0.has_value());
  CHECK(c0->edges == std::vector<EdgeId>{1, 3});

  MultiGraph k4 = named_graphs::complete_graph(4);
  auto kc = enumerate_cycles(k4);
  CycleBody t123 = cycle_body_from_edges(k4, {1, 2, 4});
  auto comp = find_companion_cycle(k4, kc, t123, {1});
  REQUIRE(comp.has_value());
  CHECK(comp->edges == std::vector<EdgeId>{1, 3, 5});  // the triangle 124

  MultiGraph sdt = named_graphs::subdivided_theta();
  auto sc = enumerate_cycles(sdt);
  CycleBody c12 = cycle_body_from_edges(sdt, {1, 2, 3, 4});
  auto scomp = find_companion_cycle(sdt, sc, c12, {1, 2});
  REQUIRE(scomp.has_value());
  CHECK(scomp->edges == std::vector<EdgeId>{1, 2, 5, 6});

  // no cycle of K4 meets a 4-cycle in exactly one edge
  CycleBody square = cycle_body_from_edges(k4, {1, 3, 4, 6});
  CHECK_FALSE(find_companion_cycle(k4, kc, square, {1}).has_value());
}

TEST_CASE("goddyn on the triangle: the leaf cycle appears twice") {
  MultiGraph tri = named_graphs::cycle_graph(3);
  CycleBody c = cycle_body_from_edges(tri, {1, 2, 3});
  GeneratorCertificate cert = goddyn_construct(tri, c);
  REQUIRE(cert.success);
  REQUIRE(cert.units.size() == 1);
  CHECK(cert.units[0].members == std::vector<CycleBody>{c});
  CHECK(cert.units[0].targets == std::vector<CycleBody>{c});
  CoverCertificate cover = assemble_cover(tri, cert);
  CHECK(cover.pass);
  CHECK(cover.cycles.size() == 2);
  CHECK(telescoping_check(cert, cert.witness));
}

TEST_CASE("goddyn on theta reproduces the three two-cycles") {
  MultiGraph theta = named_graphs::theta();
  CycleBody ab = cycle_body_from_edges(theta, {1, 2});
  GeneratorCertificate cert = goddyn_construct(theta, ab);
  REQUIRE(cert.success);
  REQUIRE(cert.units.size() == 1);
  REQUIRE(cert.units[0].members.size() == 2);
  CHECK(cert.units[0].members[0].edges == std::vector<EdgeId>{1, 2});
  CHECK(cert.units[0].members[1].edges == std::vector<EdgeId>{1, 3});
  CHECK(cert.units[0].targets[1].edges == std::vector<EdgeId>{2, 3});
  CoverCertificate cover = assemble_cover(theta, cert);
  CHECK(cover.pass);
  CHECK(cover.cycles.size() == 3);
  CHECK(telescoping_check(cert, cert.witness));
}

TEST_CASE("goddyn on K4 with a prescribed triangle") {
  MultiGraph k4 = named_graphs::complete_graph(4);
  CycleBody t123 = cycle_body_from_edges(k4, {1, 2, 4});
  GeneratorCertificate cert = goddyn_construct(k4, t123);
  REQUIRE(cert.success);
  CHECK(cert.member_count_matches_cdim);
  CHECK(telescoping_check(cert, cert.witness));
  CoverCertificate cover = assemble_cover(k4, cert);
  CHECK(cover.pass);
  CHECK(cover.contains_required);
  CHECK(cover.cycles.size() == 4);  // cdim + 1 indexed members
}

TEST_CASE("goddyn failure certificates name the violated step") {
  // K4 with a prescribed 4-cycle: no companion meets it in one edge, so the
  // construction must fail with a part-10 certificate, never a silent pass.
  MultiGraph k4 = named_graphs::complete_graph(4);
  CycleBody square = cycle_body_from_edges(k4, {1, 3, 4, 6});
  GeneratorCertificate cert = goddyn_construct(k4, square, {.exhaustive = true});
  CHECK_FALSE(cert.success);
  CHECK(cert.failure_reason.find("companion") != std::string::npos);
  CHECK(cert.branches_tried > 1);
  // ... while the oracle certifies that a cover containing the 4-cycle exists
  CoverCertificate oracle = oracle_cdc(k4, square);
  CHECK(oracle.pass);
  CHECK(oracle.contains_required);
}

TEST_CASE("goddyn splits non-strong-cyclic graphs into cycle components") {
  MultiGraph bow = named_graphs::bowtie();
  auto cycles = enumerate_cycles(bow);
  GeneratorCertificate cert = goddyn_construct(bow, cycles[0]);
  REQUIRE(cert.success);
  CHECK(cert.units.size() == 2);
  CHECK(cert.units[0].members[0] == cycles[0]);
  CoverCertificate cover = assemble_cover(bow, cert);
  CHECK(cover.pass);
  CHECK(cover.cycles.size() == 4);  // each triangle twice
}

TEST_CASE("goddyn rejects bad inputs") {
  MultiGraph dumb = named_graphs::dumbbell();
  CycleBody c = cycle_body_from_edges(dumb, {1, 2, 3});
  CHECK_THROWS_AS(goddyn_construct(dumb, c), Error);  // has a bridge

  MultiGraph k4 = named_graphs::complete_graph(4);
  CycleBody not_cycle = cycle_body_from_edges(k4, {1, 2});
  CHECK_THROWS_AS(goddyn_construct(k4, not_cycle), Error);
}

TEST_CASE("telescoping_check rejects a tampered sign map") {
  MultiGraph theta = named_graphs::theta();
  CycleBody ab = cycle_body_from_edges(theta, {1, 2});
  GeneratorCertificate cert = goddyn_construct(theta, ab);
  REQUIRE(cert.success);
  REQUIRE(telescoping_check(cert, cert.witness));
  GeneratorCertificate bad = cert;
  bad.units[0].signs[1] = -bad.units[0].signs[1];
  CHECK_FALSE(telescoping_check(bad, bad.witness));
}

TEST_CASE("the witness labeling differs from the unflipped canonical one") {
  // The partial sums pin the sign of each target vector; a convention-blind
  // canonical traversal gets it wrong here, which is exactly why the builder
  // records per-cycle flips. Both labelings are orientation labelings.
  MultiGraph theta = named_graphs::theta();
  CycleBody ab = cycle_body_from_edges(theta, {1, 2});
  GeneratorCertificate cert = goddyn_construct(theta, ab);
  REQUIRE(cert.success);
  int flipped = 0;
  for (int f : cert.witness_flips)
    if (f == -1) ++flipped;
  CHECK(flipped == 1);  // the target {2,3} needs the opposite traversal
  CHECK(telescoping_check(cert, cert.witness));
  CHECK_FALSE(telescoping_check(cert, orientation_labeling(theta)));
  CdimCertificate cd = cdim(theta);
  CHECK(is_optimal(theta, cert.witness, cd));
}

TEST_CASE("oracle on small graphs") {
  MultiGraph tri = named_graphs::cycle_graph(3);
  CycleBody c = cycle_body_from_edges(tri, {1, 2, 3});
  CoverCertificate cert = oracle_cdc(tri, c);
  REQUIRE(cert.pass);
  CHECK(cert.cycles.size() == 2);

  MultiGraph theta = named_graphs::theta();
  CycleBody ab = cycle_body_from_edges(theta, {1, 2});
  CoverCertificate tcert = oracle_cdc(theta, ab);
  REQUIRE(tcert.pass);
  CHECK(tcert.contains_required);

  // cap enforcement
  CHECK_THROWS_AS(oracle_cdc(named_graphs::petersen(), std::nullopt, {10, {}}),
                  Error);
}

TEST_CASE("oracle exhaustion is a proof of none over its cycle pool") {
  // No desk-scale (G, C) without a cover is known (that would refute the
  // conjecture), so the exhaustion branch is exercised over a deliberately
  // restricted pool: theta with only two of its three digons admits no cover.
  MultiGraph theta = named_graphs::theta();
  CycleBody ab = cycle_body_from_edges(theta, {1, 2});
  CycleBody bc = cycle_body_from_edges(theta, {2, 3});
  CoverCertificate cert = oracle_cdc_over(theta, {ab, bc}, ab);
  CHECK(cert.exhausted_none);
  CHECK_FALSE(cert.pass);
  // the full pool finds the cover immediately
  CoverCertificate full = oracle_cdc(theta, ab);
  CHECK(full.pass);
}

TEST_CASE("oracle never exhausts on the small corpus") {
  // Desk-scale empirical content of the conjecture itself: every cycle of
  // every small bridgeless graph lies in some cover.
  for (const CorpusEntry& entry : corpus_generate(5, false).graphs) {
    const MultiGraph& g = entry.graph;
    if (g.edge_count() == 0 || !is_bridgeless(g)) continue;
    for (const CycleBody& c : enumerate_cycles(g)) {
      CoverCertificate cert = oracle_cdc(g, c);
      CHECK(cert.pass);
      CHECK(cert.contains_required);
    }
  }
}

TEST_CASE("builder and oracle agree across the small corpus") {
  for (const CorpusEntry& entry : corpus_generate(5, false).graphs) {
    const MultiGraph& g = entry.graph;
    if (!is_connected(g) || !is_bridgeless(g) || g.edge_count() == 0) continue;
    bool strong = build_atlas(g).strong_cyclic;
    int dim = cdim_value(g);
    for (const CycleBody& c : enumerate_cycles(g)) {
      GeneratorCertificate cert = goddyn_construct(g, c, {.exhaustive = true});
      CoverCertificate oracle = oracle_cdc(g, c);
      if (cert.success) {
        CoverCertificate cover = assemble_cover(g, cert);
        if (cover.pass) {
          // builder pass with oracle exhaustive-none would be a harness bug
          CHECK_FALSE(oracle.exhausted_none);
          CHECK(telescoping_check(cert, cert.witness));
          if (strong) CHECK(static_cast<int>(cover.cycles.size()) == dim + 1);
        }
      }
    }
  }
}

TEST_CASE("failure certificates replay deterministically") {
  MultiGraph k4 = named_graphs::complete_graph(4);
  CycleBody square = cycle_body_from_edges(k4, {1, 3, 4, 6});
  GeneratorCertificate a = goddyn_construct(k4, square);
  GeneratorCertificate b = goddyn_construct(k4, square);
  CHECK(a.failure_reason == b.failure_reason);
  CHECK(a.failure_step == b.failure_step);
  CHECK(a.trace.size() == b.trace.size());
  for (std::size_t i = 0; i < a.trace.size(); ++i) {
    CHECK(a.trace[i].action == b.trace[i].action);
    CHECK(a.trace[i].segment == b.trace[i].segment);
    CHECK(a.trace[i].companion == b.trace[i].companion);
  }
}
