#include <catch2/catch.hpp>

#include "cdcw/corpus.hpp"
#include "cdcw/cyclic_core.hpp"
#include "test_oracles.hpp"

using namespace cdcw;

TEST_CASE("cycle enumeration on the classics") {
  CHECK(enumerate_cycles(named_graphs::cycle_graph(3)).size() == 1);
  CHECK(enumerate_cycles(named_graphs::theta()).size() == 3);
  CHECK(enumerate_cycles(named_graphs::complete_graph(4)).size() == 7);
  CHECK(enumerate_cycles(named_graphs::loop_graph()).size() == 1);
  CHECK(enumerate_cycles(named_graphs::petersen()).size() == 57);
}

TEST_CASE("enumeration agrees with the subset-filter oracle") {
  Corpus corpus = corpus_generate(6, false);
  for (const CorpusEntry& entry : corpus.graphs) {
    auto fast = enumerate_cycles(entry.graph);
    auto slow = test_oracle::subset_filter_cycles(entry.graph);
    REQUIRE(fast.size() == slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].edges == slow[i]);
  }
}

TEST_CASE("enumeration cap fails loudly") {
  MultiGraph big = named_graphs::petersen();
  CHECK_THROWS_AS(enumerate_cycles(big, {10}), Error);
}

TEST_CASE("cyclic core and degc") {
  MultiGraph dumb = named_graphs::dumbbell();
  CyclicCore core = cyclic_core(dumb);
  CHECK(core.core.edge_count() == 6);  // the bridge is off-core
  for (VertexId v : dumb.vertices()) CHECK(core.degc.at(v) == 2);

  CyclicCore k4core = cyclic_core(named_graphs::complete_graph(4));
  CHECK(k4core.core.edge_count() == 6);
  for (VertexId v : k4core.core.vertices()) CHECK(k4core.degc.at(v) == 3);

  MultiGraph path = build_graph({1, 2, 3}, {{1, {1, 2}}, {2, {2, 3}}});
  CyclicCore tree_core = cyclic_core(path);
  CHECK(tree_core.core.is_null());
  for (VertexId v : path.vertices()) CHECK(tree_core.degc.at(v) == 0);
}

TEST_CASE("degc handshake over the corpus") {
  Corpus corpus = corpus_generate(6, false);
  for (const CorpusEntry& entry : corpus.graphs) {
    CyclicCore core = cyclic_core(entry.graph);
    long long sum = 0;
    for (auto& [v, d] : core.degc) sum += d;
    CHECK(sum == 2LL * core.core.edge_count());
  }
}

TEST_CASE("cycle generic vertices") {
  MultiGraph sdt = named_graphs::subdivided_theta();
  CHECK(cycle_generic_vertices(sdt) == std::set<VertexId>{1, 2});

  MultiGraph c5 = named_graphs::cycle_graph(5);
  CHECK(cycle_generic_vertices(c5) == std::set<VertexId>{1, 2, 3, 4, 5});

  MultiGraph k4 = named_graphs::complete_graph(4);
  CHECK(cycle_generic_vertices(k4) == std::set<VertexId>{1, 2, 3, 4});

  // bowtie: only the shared vertex is generic
  CHECK(cycle_generic_vertices(named_graphs::bowtie()) == std::set<VertexId>{3});
}

TEST_CASE("le_star is reflexive and transitive as computed") {
  Corpus corpus = corpus_generate(5, false);
  for (const CorpusEntry& entry : corpus.graphs) {
    auto cycles = enumerate_cycles(entry.graph);
    auto through = cycles_through(entry.graph, cycles);
    const auto& verts = entry.graph.vertices();
    for (VertexId a : verts) {
      CHECK(le_star(through[a], through[a]));
      for (VertexId b : verts)
        for (VertexId c : verts)
          if (le_star(through[a], through[b]) && le_star(through[b], through[c]))
            CHECK(le_star(through[a], through[c]));
    }
  }
}

TEST_CASE("pieces: single edges and witnessed interiors") {
  MultiGraph sdt = named_graphs::subdivided_theta();
  auto cycles = enumerate_cycles(sdt);

  Walk one_edge{{1, 1, 3}};
  CHECK(is_piece(one_edge, cycles));
  auto d = decompose_maximal_pieces(one_edge, sdt, cycles);
  REQUIRE(d.size() == 1);
  CHECK(d[0].seq == one_edge.seq);

  // 2-edge path across hub 1: a cycle through both branches witnesses it
  Walk across_hub{{3, 1, 1, 3, 4}};
  CHECK(is_piece(across_hub, cycles));
  d = decompose_maximal_pieces(across_hub, sdt, cycles);
  REQUIRE(d.size() == 1);
  CHECK(body_of(d[0]).edges == std::vector<EdgeId>{1, 3});
}

TEST_CASE("pieces: a path over a bridge splits") {
  MultiGraph dumb = named_graphs::dumbbell();
  auto cycles = enumerate_cycles(dumb);
  // path 2 - 3 - 4 - 5 crosses the bridge (edge 4)
  Walk w{{2, 2, 3, 4, 4, 5, 5}};
  validate_walk(w, dumb);
  CHECK_FALSE(is_piece(w, cycles));
  auto d = decompose_maximal_pieces(w, dumb, cycles);
  REQUIRE(d.size() == 3);
  for (const Walk& piece : d) CHECK(piece.length() == 1);
}

TEST_CASE("decompose_maximal_pieces rejects non-paths") {
  MultiGraph t = named_graphs::cycle_graph(3);
  Walk closed{{1, 1, 2, 2, 3, 3, 1}};
  CHECK_THROWS_AS(decompose_maximal_pieces(closed, t, enumerate_cycles(t)), Error);
}

TEST_CASE("every nonempty common vertex set of cycles has a generic vertex") {
  Corpus corpus = corpus_generate(6, false);
  for (const CorpusEntry& entry : corpus.graphs) {
    const MultiGraph& g = entry.graph;
    auto cycles = enumerate_cycles(g);
    if (cycles.empty()) continue;
    auto generic = cycle_generic_vertices(g);
    // pairwise intersections suffice to seed; close under intersection
    std::set<std::vector<VertexId>> family;
    for (const CycleBody& c : cycles) family.insert(c.vertices);
    bool grew = true;
    while (grew) {
      grew = false;
      auto items = family;
      for (const auto& a : items)
        for (const CycleBody& c : cycles) {
          std::vector<VertexId> inter;
          std::set_intersection(a.begin(), a.end(), c.vertices.begin(),
                                c.vertices.end(), std::back_inserter(inter));
          if (!inter.empty() && family.insert(inter).second) grew = true;
        }
    }
    for (const auto& common : family) {
      bool has = false;
      for (VertexId v : common)
        if (generic.count(v)) has = true;
      CHECK(has);
    }
  }
}

TEST_CASE("cycle_walk reconstructs each body") {
  Corpus corpus = corpus_generate(5, false);
  for (const CorpusEntry& entry : corpus.graphs)
    for (const CycleBody& c : enumerate_cycles(entry.graph)) {
      Walk w = cycle_walk(entry.graph, c);
      validate_walk(w, entry.graph);
      CHECK(is_cycle(w));
      WalkBody b = body_of(w);
      CHECK(b.edges == c.edges);
      CHECK(b.vertices == c.vertices);
    }
}
