#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pact/congruence.hpp"
#include "pact/fixtures.hpp"
#include "pact/functors.hpp"
#include "pact/fwords.hpp"
#include "pact/ugroup.hpp"

using namespace pact;

namespace {

FWord random_word(std::mt19937& gen, const Groupoid& g, int len) {
  std::uniform_int_distribution<int> pick(0, g.num_morphisms() - 1);
  std::bernoulli_distribution flip(0.5);
  FWord w;
  for (int i = 0; i < len; ++i)
    w.letters.push_back({pick(gen), flip(gen) ? 1 : -1});
  return w;
}

// Normal forms stay long over a trivialized groupoid: junctions rarely
// compose, so multiplication walks real words.
void BM_UMultiply(benchmark::State& state) {
  Groupoid g = trivialized_groupoid({"a", "b", "c"}, FiniteGroup::cyclic(3));
  std::mt19937 gen(7);
  std::vector<UWord> words;
  for (int i = 0; i < 64; ++i)
    words.push_back(project(g, random_word(gen, g, 24)));
  size_t i = 0;
  for (auto _ : state) {
    const UWord& a = words[i % words.size()];
    const UWord& b = words[(i + 17) % words.size()];
    benchmark::DoNotOptimize(u_multiply(g, a, b));
    ++i;
  }
}
BENCHMARK(BM_UMultiply);

void BM_Project(benchmark::State& state) {
  Groupoid g = trivialized_groupoid({"a", "b", "c"}, FiniteGroup::cyclic(3));
  std::mt19937 gen(11);
  std::vector<FWord> words;
  for (int i = 0; i < 64; ++i)
    words.push_back(random_word(gen, g, static_cast<int>(state.range(0))));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project(g, words[i % words.size()]));
    ++i;
  }
}
BENCHMARK(BM_Project)->Arg(16)->Arg(64)->Arg(256);

void BM_PAlgorithm(benchmark::State& state) {
  Groupoid g = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
  int la = *g.morphism_index("(a|r1|a)");
  int lb = *g.morphism_index("(b|r1|b)");
  int n1 = *g.morphism_index("(a|r1|b)");
  FWord z{{{la, 1}, {la, 1}, {lb, 1}, {lb, 1}, {n1, 1}}};
  FWord u{{{la, 1}, {la, 1}}};
  MinimalRepresentation rep;
  for (const auto& e : minimal_decompose(g, z, u)) rep.push_back(e);
  for (auto _ : state) benchmark::DoNotOptimize(p_algorithm(g, rep));
}
BENCHMARK(BM_PAlgorithm);

void BM_CosetClosure(benchmark::State& state) {
  FiniteGroup v4 = FiniteGroup::klein_four();
  std::map<Elem, std::map<int, int>> maps;
  for (int h = 1; h < 4; ++h) {
    std::map<int, int> table;
    for (int x = 0; x < 4; ++x) table[x] = v4.multiply(h, x);
    maps[Elem{h}] = std::move(table);
  }
  PartialAction a(Group::finite(v4), {"e", "x", "y", "z"}, std::move(maps));
  Congruence c = make_congruence(a, {{0, 1}}, {});
  for (auto _ : state) benchmark::DoNotOptimize(build_coset_relations(a, c));
}
BENCHMARK(BM_CosetClosure);

void BM_Eta(benchmark::State& state) {
  Groupoid g = disjoint_union({fixtures::pair_groupoid(),
                               fixtures::one_object(FiniteGroup::klein_four()),
                               trivialized_groupoid({"a", "b", "c"},
                                                    FiniteGroup::cyclic(2))});
  for (auto _ : state) {
    EtaResult r = eta_of_groupoid(g);
    benchmark::DoNotOptimize(groupoid_iso_check(r.eta, g, r.psi_phi.groupoid));
  }
}
BENCHMARK(BM_Eta);

}  // namespace

BENCHMARK_MAIN();
