#include <catch2/catch.hpp>

#include "cdcw/corpus.hpp"
#include "cdcw/sign_labeling.hpp"
#include "test_oracles.hpp"

using namespace cdcw;

TEST_CASE("orientation labeling spans the rational cycle space") {
  auto span_dim = [](const MultiGraph& g) {
    return bareiss_rank(orientation_labeling(g).vectors);
  };
  CHECK(span_dim(named_graphs::cycle_graph(3)) == 1);
  CHECK(span_dim(named_graphs::complete_graph(4)) == 3);
  CHECK(span_dim(named_graphs::petersen()) == 6);

  // circuit rank |E^c| - |V^c| + components(G^c) across the corpus
  for (const CorpusEntry& entry : corpus_generate(6, false).graphs) {
    const MultiGraph& g = entry.graph;
    CyclicCore core = cyclic_core(g);
    int expect = static_cast<int>(core.core.edge_count()) -
                 static_cast<int>(core.core.vertex_count()) +
                 connected_components(core.core).n_total;
    CHECK(span_dim(g) == expect);
    validate_sign_labeling(g, orientation_labeling(g));
  }
}

TEST_CASE("rank_exact basics") {
  Vec v{1, -1, 0};
  Vec nv{-1, 1, 0};
  CHECK(rank_exact({v, nv}).rank == 1);
  CHECK(rank_exact({}).rank == 0);

  auto k4 = named_graphs::complete_graph(4);
  SignLabeling f = orientation_labeling(k4);
  RankCertificate cert = rank_exact(f.vectors);
  CHECK(cert.rank == 3);
  CHECK(cert.basis_rows.size() == 3);
  CHECK(cert.dependencies.size() == 4);
}

TEST_CASE("rank_exact matches naive rational elimination on random matrices") {
  test_oracle::Rng rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rows = 1 + rng.pick(12), cols = 1 + rng.pick(12);
    std::vector<Vec> m(rows, Vec(cols));
    for (auto& row : m)
      for (int& x : row) x = rng.pick(3) - 1;
    int expect = test_oracle::naive_rank_int(m);
    CHECK(rank_exact(m).rank == expect);
    CHECK(bareiss_rank(m) == expect);
  }
}

TEST_CASE("cdim golden values with certificates") {
  auto check = [](const MultiGraph& g, int expect, bool brute_possible) {
    CdimCertificate cert = cdim(g, brute_possible);
    REQUIRE(cert.complete);
    CHECK(cert.value == expect);
    CHECK(cert.lower_gf2 == expect);
    CHECK(cert.upper_orientation == expect);
    if (brute_possible) {
      REQUIRE(cert.brute_force.has_value());
      CHECK(*cert.brute_force == expect);
    }
  };
  check(named_graphs::cycle_graph(3), 1, true);
  check(named_graphs::theta(), 2, true);
  check(named_graphs::complete_graph(4), 3, true);
  check(named_graphs::petersen(), 6, false);
}

TEST_CASE("cdim brute force cap") {
  CHECK_THROWS_AS(cdim_bruteforce(named_graphs::petersen()), Error);
  CHECK(cdim_bruteforce(named_graphs::cycle_graph(3)) == 1);
  CHECK(cdim_bruteforce(named_graphs::theta()) == 2);
}

TEST_CASE("cdim sandwich equals brute force under the cap") {
  for (const CorpusEntry& entry : corpus_generate(5, false).graphs) {
    auto cycles = enumerate_cycles(entry.graph);
    std::size_t incidences = 0;
    for (const CycleBody& c : cycles) incidences += c.edges.size();
    if (incidences > 24) continue;
    CdimCertificate cert = cdim(entry.graph, true);
    REQUIRE(cert.complete);
    REQUIRE(cert.brute_force.has_value());
    CHECK(cert.value == *cert.brute_force);
  }
}

TEST_CASE("random sign labelings never beat the mod-2 lower bound") {
  test_oracle::Rng rng(1234);
  for (const CorpusEntry& entry : corpus_generate(5, false).graphs) {
    const MultiGraph& g = entry.graph;
    auto cycles = enumerate_cycles(g);
    if (cycles.empty()) continue;
    CdimCertificate cert = cdim(g);
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Vec> rows;
      for (const CycleBody& c : cycles) {
        Vec row(g.edge_count(), 0);
        for (EdgeId e : c.edges) row[g.edge_index(e)] = rng.pick(2) ? 1 : -1;
        rows.push_back(std::move(row));
      }
      CHECK(bareiss_rank(rows) >= cert.lower_gf2);
    }
  }
}

TEST_CASE("is_optimal") {
  MultiGraph k4 = named_graphs::complete_graph(4);
  CdimCertificate cert = cdim(k4);
  CHECK(is_optimal(k4, orientation_labeling(k4), cert));

  // flipping a single entry of one theta vector raises the span to 3
  MultiGraph theta = named_graphs::theta();
  CdimCertificate tcert = cdim(theta);
  SignLabeling f = orientation_labeling(theta);
  REQUIRE(is_optimal(theta, f, tcert));
  SignLabeling broken = f;
  std::size_t col = 0;
  while (broken.vectors[2][col] == 0) ++col;
  broken.vectors[2][col] = -broken.vectors[2][col];
  validate_sign_labeling(theta, broken);
  CHECK_FALSE(is_optimal(theta, broken, tcert));

  // on a single-cycle graph every labeling has span 1
  MultiGraph c4 = named_graphs::cycle_graph(4);
  CdimCertificate ccert = cdim(c4);
  SignLabeling any = orientation_labeling(c4);
  any.vectors[0][1] = -any.vectors[0][1];
  CHECK(is_optimal(c4, any, ccert));
}

TEST_CASE("parallel restriction of optimal labelings") {
  MultiGraph theta = named_graphs::theta();
  SignLabeling f = orientation_labeling(theta);
  auto cycles = f.cycles;
  CHECK(parallel_restriction_check(theta, f, cycles[0], cycles[1]));

  MultiGraph k4 = named_graphs::complete_graph(4);
  SignLabeling fk = orientation_labeling(k4);
  CycleBody t123 = cycle_body_from_edges(k4, {1, 2, 4});
  CycleBody t124 = cycle_body_from_edges(k4, {1, 3, 5});
  CHECK(parallel_restriction_check(k4, fk, t123, t124));

  // edgeless intersection is vacuously parallel
  MultiGraph bow = named_graphs::bowtie();
  SignLabeling fb = orientation_labeling(bow);
  CHECK(parallel_restriction_check(bow, fb, fb.cycles[0], fb.cycles[1]));
}

TEST_CASE("restrictions of optimal labelings stay optimal on edge subgraphs") {
  for (const CorpusEntry& entry : corpus_generate(5, false).graphs) {
    const MultiGraph& g = entry.graph;
    if (g.edge_count() == 0) continue;
    SignLabeling f = orientation_labeling(g);
    const auto& edges = g.edges();
    for (std::size_t mask = 1; mask < (std::size_t(1) << edges.size()); ++mask) {
      std::vector<EdgeId> sub;
      for (std::size_t b = 0; b < edges.size(); ++b)
        if (mask & (std::size_t(1) << b)) sub.push_back(edges[b]);
      MultiGraph h = edge_subgraph(g, sub);
      if (connected_components(h).n_total != 1) continue;
      std::vector<Vec> restricted;
      for (const CycleBody& c : enumerate_cycles(h))
        restricted.push_back(f.vector_for(c));
      CHECK(bareiss_rank(restricted) == cdim_value(h));
    }
  }
}

TEST_CASE("f-generator recognition") {
  MultiGraph theta = named_graphs::theta();
  SignLabeling f = orientation_labeling(theta);
  CdimCertificate cert = cdim(theta);

  Generator two;
  two.members = {f.cycles[0], f.cycles[1]};
  CHECK(is_f_generator(theta, two, f, cert));

  Generator one;
  one.members = {f.cycles[0]};
  CHECK_FALSE(is_f_generator(theta, one, f, cert));

  MultiGraph k4 = named_graphs::complete_graph(4);
  SignLabeling fk = orientation_labeling(k4);
  CdimCertificate kcert = cdim(k4);
  Generator four;
  for (const CycleBody& c : fk.cycles)
    if (c.edges.size() == 3) four.members.push_back(c);
  REQUIRE(four.members.size() == 4);
  CHECK_FALSE(is_f_generator(k4, four, fk, kcert));

  std::map<EdgeId, int> chi = characteristic_map(k4, four);
  for (auto& [e, k] : chi) CHECK(k == 2);  // four triangles cover K4 twice
}

TEST_CASE("dependency coefficients recombine exactly") {
  for (const CorpusEntry& entry : corpus_generate(4, false).graphs) {
    SignLabeling f = orientation_labeling(entry.graph);
    if (f.vectors.empty()) continue;
    RankCertificate cert = rank_exact(f.vectors);
    // rank_exact already verifies recombination internally; check shape here
    CHECK(cert.basis_rows.size() + cert.dependencies.size() == f.vectors.size());
    for (auto& [row, coeffs] : cert.dependencies)
      CHECK(coeffs.size() == cert.basis_rows.size());
  }
}

TEST_CASE("rational arithmetic") {
  Rational a(1, 2), b(1, 3);
  CHECK((a + b) == Rational(5, 6));
  CHECK((a - b) == Rational(1, 6));
  CHECK((a * b) == Rational(1, 6));
  CHECK((a / b) == Rational(3, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
}
