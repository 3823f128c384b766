// Acceptance gate: one line per criterion, PASS or FAIL, exit code counts
// the failures.  Thresholds are pinned here; PACT_SEED reseeds the random
// corpora without changing any bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pact/congruence.hpp"
#include "pact/fixtures.hpp"
#include "pact/functors.hpp"
#include "pact/fwords.hpp"
#include "pact/json_io.hpp"
#include "pact/limits.hpp"
#include "pact/reduced.hpp"
#include "pact/ugroup.hpp"
#include "support/oracles.hpp"

using namespace pact;

namespace {

constexpr int kGroupoidCorpus = 220;
constexpr double kGroupoidBudgetSeconds = 60.0;
constexpr int kWordSamples = 12000;
constexpr int kGeneratorProducts = 1200;
constexpr int kRepresentationSamples = 1100;
constexpr int kMorphismSamples = 110;
constexpr int kActionSamples = 60;
constexpr int kCoproductWordCap = 4;

struct Verdict {
  bool ok;
  std::string detail;
};

const Groupoid& p2() {
  static const Groupoid g = fixtures::pair_groupoid();
  return g;
}

FiniteQuotientHom cyc(int n) {
  FiniteGroup t = FiniteGroup::cyclic(n);
  return FiniteQuotientHom{t,
                           {{*p2().morphism_index("f"), 1 % n},
                            {*p2().morphism_index("g"), (n - 1) % n}}};
}

PartialAction restrict_translation(const FiniteGroup& G, const std::vector<int>& keep) {
  std::map<int, int> pos;
  std::vector<std::string> names;
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    pos[keep[i]] = i;
    names.push_back("p" + std::to_string(keep[i]));
  }
  std::map<Elem, std::map<int, int>> maps;
  for (int g = 0; g < G.size(); ++g) {
    if (g == G.identity()) continue;
    std::map<int, int> table;
    for (int x : keep) {
      int y = G.multiply(g, x);
      if (pos.count(y)) table[pos.at(x)] = pos.at(y);
    }
    if (!table.empty()) maps[Elem{g}] = std::move(table);
  }
  return PartialAction(Group::finite(G), std::move(names), std::move(maps));
}

PartialAction one_point_flip() {
  return PartialAction(Group::finite(FiniteGroup::cyclic(2)), {"p"},
                       {{Elem{1}, {{0, 0}}}});
}

// ---------------------------------------------------------------------------
// 1. Round trip: the comparison functor of every corpus groupoid with the
//    action groupoid of its canonical action is an isomorphism.

Verdict criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  oracle::Rng rng(oracle::seed_from_env(101));

  std::vector<Groupoid> corpus;
  corpus.push_back(p2());
  corpus.push_back(fixtures::one_object(FiniteGroup::klein_four()));
  corpus.push_back(fixtures::one_object(FiniteGroup::cyclic(4)));
  corpus.push_back(trivialized_groupoid({"a", "b", "c", "d", "e"},
                                        FiniteGroup::cyclic(2)));
  corpus.push_back(trivialized_groupoid({"a", "b"}, FiniteGroup::klein_four()));
  corpus.push_back(disjoint_union({p2(), fixtures::one_object(FiniteGroup::cyclic(3)),
                                   fixtures::one_object(FiniteGroup::klein_four())}));
  corpus.push_back(disjoint_union(
      {trivialized_groupoid({"a", "b", "c"}, FiniteGroup::cyclic(4)),
       fixtures::one_object(FiniteGroup::cyclic(2))}));
  while (static_cast<int>(corpus.size()) < kGroupoidCorpus)
    corpus.push_back(oracle::random_groupoid(rng, 5));

  int good = 0;
  for (const Groupoid& g : corpus) {
    EtaResult r = eta_of_groupoid(g);
    if (groupoid_iso_check(r.eta, g, r.psi_phi.groupoid)) ++good;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d comparison isomorphisms in %.2fs", good,
                static_cast<int>(corpus.size()), secs);
  return {good == static_cast<int>(corpus.size()) && secs < kGroupoidBudgetSeconds,
          buf};
}

// ---------------------------------------------------------------------------
// 2. Projection to the universal group: bracketing independence, inverses
//    die, and products of conjugated loops project to the identity class.

Verdict criterion2() {
  oracle::Rng rng(oracle::seed_from_env(103));
  Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
  Groupoid oc2 = fixtures::one_object(FiniteGroup::cyclic(2));
  Groupoid ov4 = fixtures::one_object(FiniteGroup::klein_four());
  const Groupoid* gs[] = {&p2(), &t2, &oc2, &ov4};

  int bad = 0;
  for (int t = 0; t < kWordSamples; ++t) {
    const Groupoid& g = *gs[t % 4];
    FWord w = oracle::random_fword(rng, g, 1 + rng.below(11));

    UWord whole = project(g, w);
    int k = rng.below(w.length() + 1);
    FWord pre, suf;
    pre.letters.assign(w.letters.begin(), w.letters.begin() + k);
    suf.letters.assign(w.letters.begin() + k, w.letters.end());
    UWord split = u_multiply(g, project(g, pre), project(g, suf));

    UWord fold;
    for (int i = w.length() - 1; i >= 0; --i) {
      UWord letter = u_letter(g, w.letters[i].morphism);
      if (w.letters[i].sign < 0) letter = u_invert(g, letter);
      fold = u_multiply(g, letter, fold);
    }

    FWord ww = w;
    for (const FLetter& l : fword_invert(w).letters) ww.letters.push_back(l);

    if (!(whole == split && whole == fold && project(g, ww).empty())) ++bad;
  }

  int products = 0, dead = 0;
  while (products < kGeneratorProducts) {
    const Groupoid& g = *gs[1 + (products % 3)];  // the loop-rich shapes
    FWord prod;
    int parts = 0;
    for (int i = 0, want = 1 + rng.below(4); i < want; ++i) {
      auto e = oracle::random_minimal_element(rng, g, 40);
      if (!e) continue;
      ++parts;
      for (const FLetter& l : e->word().letters) prod.letters.push_back(l);
    }
    if (parts == 0) continue;
    ++products;
    if (project(g, prod).empty()) ++dead;
  }

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%d/%d bracketing agreements, %d/%d loop products in the kernel",
                kWordSamples - bad, kWordSamples, dead, products);
  return {bad == 0 && dead == products, buf};
}

// ---------------------------------------------------------------------------
// 3. The rewriting pass: element preserved, pairwise property established,
//    nonempty evaluations certify loops.

Verdict criterion3() {
  oracle::Rng rng(oracle::seed_from_env(107));
  Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
  Groupoid ov4 = fixtures::one_object(FiniteGroup::klein_four());
  Groupoid t3 = trivialized_groupoid({"x", "y", "z"}, FiniteGroup::cyclic(3));
  const Groupoid* gs[] = {&t2, &ov4, &p2(), &t3};

  int done = 0, bad = 0;
  long attempts = 0;
  while (done < kRepresentationSamples && attempts < 400000) {
    ++attempts;
    const Groupoid& g = *gs[done % 4];
    auto rep = oracle::random_reduced_rep(rng, g, 5, 40);
    if (!rep) continue;
    ++done;

    MinimalRepresentation out = p_algorithm(g, *rep);
    bool ok = oracle::scan_reduce(representation_word(out)) ==
              oracle::scan_reduce(representation_word(*rep));
    ok = ok && has_p_property(g, out);

    PiValue pv = pi_eval(g, representation_word(*rep));
    if (pv.kind == PiValue::morphism) ok = ok && g.is_identity(pv.m);

    LoopCheckResult lc = loop_check(g, *rep);
    ok = ok && lc.pi_nonempty == (pv.kind != PiValue::empty);
    if (lc.pi_nonempty) ok = ok && lc.loop;

    if (!ok) ++bad;
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d representations normalized faithfully",
                done - bad, done);
  return {done >= kRepresentationSamples && bad == 0, buf};
}

// ---------------------------------------------------------------------------
// 4. Compatibility verdicts and relation tables agree with exhaustive chain
//    enumeration over every partition and every normal subgroup.

Verdict criterion4() {
  oracle::Rng rng(oracle::seed_from_env(109));
  std::vector<PartialAction> instances = {
      fixtures::swap_action(),
      fixtures::c2_on_three(),
      fixtures::c4_half_swap(),
      restrict_translation(FiniteGroup::klein_four(), {0, 1, 2, 3}),
      restrict_translation(FiniteGroup::klein_four(), {0, 1, 2}),
      restrict_translation(FiniteGroup::cyclic(3), {0, 1}),
      restrict_translation(FiniteGroup::cyclic(4), {0, 1, 2}),
      PartialAction(Group::finite(FiniteGroup::cyclic(1)), {"p", "q", "r"}, {}),
  };
  while (instances.size() < 12) {
    PartialAction a = oracle::random_paction(rng);
    if (a.carrier_size() <= 4 && a.group().table().size() <= 4)
      instances.push_back(std::move(a));
  }

  long combos = 0, disagreements = 0;
  for (const PartialAction& a : instances) {
    const FiniteGroup& G = a.group().table();
    auto partitions = oracle::all_partitions(a.carrier_size());
    auto subgroups = oracle::all_normal_subgroups(G);
    for (const auto& part : partitions)
      for (const auto& sub : subgroups) {
        ++combos;
        Congruence c{part, sub};
        bool lib = pc_check(a, c);
        bool ref = oracle::chain_pc(a, c);
        if (lib != ref) ++disagreements;

        CosetRelationTable table = build_coset_relations(a, c);
        int bound = static_cast<int>(table.blocks.size() * table.rel.size()) + 1;
        auto rels = oracle::chain_relations(a, c, bound);
        for (int e = 0; e < G.size(); ++e)
          if (table.rel[table.coset_of[e]] != rels[oracle::coset_rep(G, c.kernel, e)])
            ++disagreements;
      }
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld congruence instances, %ld disagreements",
                combos, disagreements);
  return {disagreements == 0 && combos > 0, buf};
}

// ---------------------------------------------------------------------------
// 5. Quotients validate, and morphisms factor through the quotient by their
//    induced congruence.

Verdict criterion5() {
  oracle::Rng rng(oracle::seed_from_env(113));

  struct Sample {
    PAMorphism f;
    PartialAction from, to;
  };
  std::vector<Sample> samples;

  while (static_cast<int>(samples.size()) < kMorphismSamples) {
    PartialAction a = oracle::random_paction(rng);
    int n = a.carrier_size();
    const FiniteGroup& G = a.group().table();

    std::vector<std::pair<int, int>> pairs;
    if (n > 1 && rng.coin()) pairs.push_back({rng.below(n), rng.below(n)});
    std::vector<int> kgens;
    if (rng.coin()) kgens.push_back(rng.below(G.size()));

    Congruence c = congruence_closure(a, pairs, kgens);
    QuotientResult q = quotient_paction(a, c);
    if (!validate_paction(q.action).empty() ||
        !validate_pa_morphism(q.projection, a, q.action).empty())
      return {false, "a quotient or its projection failed validation"};
    samples.push_back({q.projection, a, q.action});

    samples.push_back({identity_pa_morphism(a), a, a});

    if (rng.coin()) {
      Congruence c2 = congruence_closure(
          q.action, {}, {rng.below(q.action.group().table().size())});
      QuotientResult q2 = quotient_paction(q.action, c2);
      samples.push_back({compose_pa_morphisms(q2.projection, q.projection), a,
                         q2.action});
    } else {
      PartialAction b = oracle::random_paction(rng);
      std::vector<PartialAction> parts = {a, b};
      CoproductResult cp = coproduct_paction(parts);
      samples.push_back({cp.inject[0], a, cp.action});
    }
  }

  int bad = 0;
  for (const Sample& s : samples) {
    Congruence c = induced_congruence(s.f, s.from);
    QuotientResult q = quotient_paction(s.from, c);
    bool ok = validate_paction(q.action).empty() &&
              validate_pa_morphism(q.projection, s.from, q.action).empty();
    auto m = factor_through(s.f, s.from, q, s.to);
    ok = ok && m.has_value();
    if (ok) {
      ok = validate_pa_morphism(*m, q.action, s.to).empty() &&
           pa_morphisms_equal(compose_pa_morphisms(*m, q.projection), s.f);
    }
    if (!ok) ++bad;
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d morphisms factored through their quotients",
                static_cast<int>(samples.size()) - bad,
                static_cast<int>(samples.size()));
  return {bad == 0, buf};
}

// ---------------------------------------------------------------------------
// 6. Universal properties, brute forced: mediators exist, satisfy the
//    defining equations, and are unique.

bool unique_match(const std::vector<PAMorphism>& pool, const PAMorphism& expect,
                  const std::function<bool(const PAMorphism&)>& fits) {
  int hits = 0;
  bool found = false;
  for (const PAMorphism& k : pool)
    if (fits(k)) {
      ++hits;
      found = found || pa_morphisms_equal(k, expect);
    }
  return hits == 1 && found;
}

Verdict criterion6() {
  PartialAction pt = terminal_paction();
  PartialAction flip = one_point_flip();
  PartialAction sw = fixtures::swap_action();
  PartialAction c4 = fixtures::c4_half_swap();
  PartialAction big = fixtures::c2_on_three();
  std::vector<PartialAction> peaks = {pt, flip, sw};

  long checked = 0;
  std::string fail;

  // products
  for (const auto& [a, b] : {std::pair(sw, c4), std::pair(sw, sw)}) {
    ProductResult p = product_paction(a, b);
    if (!validate_paction(p.action).empty()) return {false, "product invalid"};
    for (const PartialAction& z : peaks) {
      auto fs = oracle::all_pa_morphisms(z, a);
      auto gs = oracle::all_pa_morphisms(z, b);
      auto pool = oracle::all_pa_morphisms(z, p.action);
      for (const PAMorphism& f : fs)
        for (const PAMorphism& g : gs) {
          PAMorphism m = product_mediator(p, a, b, z, f, g);
          ++checked;
          bool ok =
              validate_pa_morphism(m, z, p.action).empty() &&
              pa_morphisms_equal(compose_pa_morphisms(p.proj1, m), f) &&
              pa_morphisms_equal(compose_pa_morphisms(p.proj2, m), g) &&
              unique_match(pool, m, [&](const PAMorphism& k) {
                return pa_morphisms_equal(compose_pa_morphisms(p.proj1, k), f) &&
                       pa_morphisms_equal(compose_pa_morphisms(p.proj2, k), g);
              });
          if (!ok) fail = "product mediator";
        }
    }
  }

  // equalizers
  {
    PAMorphism id = identity_pa_morphism(big);
    PAMorphism swap_xy{{1, 0, 2}, GroupHom::identity(big.group())};
    EqualizerResult e = equalizer_paction(big, big, id, swap_xy);
    for (const PartialAction& w : peaks) {
      auto pool_a = oracle::all_pa_morphisms(w, big);
      auto pool_e = oracle::all_pa_morphisms(w, e.action);
      for (const PAMorphism& h : pool_a) {
        if (!pa_morphisms_equal(compose_pa_morphisms(id, h),
                                compose_pa_morphisms(swap_xy, h)))
          continue;
        PAMorphism m = equalizer_mediator(e, big, w, h);
        ++checked;
        bool ok = validate_pa_morphism(m, w, e.action).empty() &&
                  pa_morphisms_equal(compose_pa_morphisms(e.include, m), h) &&
                  unique_match(pool_e, m, [&](const PAMorphism& k) {
                    return pa_morphisms_equal(compose_pa_morphisms(e.include, k), h);
                  });
        if (!ok) fail = "equalizer mediator";
      }
    }
  }

  // coproducts; uniqueness is parameterized by the factor restrictions, so
  // the group side is checked on bounded words
  {
    std::vector<PartialAction> parts = {sw, c4};
    CoproductResult c = coproduct_paction(parts);
    if (!validate_paction(c.action).empty()) return {false, "coproduct invalid"};
    for (const PartialAction& w : peaks) {
      auto hs0 = oracle::all_pa_morphisms(parts[0], w);
      auto hs1 = oracle::all_pa_morphisms(parts[1], w);
      for (const PAMorphism& h0 : hs0)
        for (const PAMorphism& h1 : hs1) {
          std::vector<PAMorphism> hs = {h0, h1};
          PAMorphism m = coproduct_mediator(c, parts, w, hs);
          ++checked;
          bool ok = validate_pa_morphism(m, c.action, w).empty();
          for (int i = 0; i < 2; ++i)
            ok = ok && pa_morphisms_equal(compose_pa_morphisms(m, c.inject[i]),
                                          hs[i]);

          // group side on all nonempty products of factor atoms up to the cap
          std::vector<std::pair<int, int>> atoms;
          for (int i = 0; i < 2; ++i)
            for (int e = 0; e < parts[i].group().table().size(); ++e)
              if (e != parts[i].group().table().identity()) atoms.push_back({i, e});
          std::vector<std::pair<Elem, Elem>> layer = {
              {c.action.group().identity(), w.group().identity()}};
          for (int len = 0; len < kCoproductWordCap && ok; ++len) {
            std::vector<std::pair<Elem, Elem>> next;
            for (const auto& [cw, ww] : layer)
              for (const auto& [i, e] : atoms) {
                Elem atom_c = c.inject[i].hom.apply(Elem{e});
                Elem atom_w = hs[i].hom.apply(Elem{e});
                Elem nc = c.action.group().multiply(cw, atom_c);
                Elem nw = w.group().multiply(ww, atom_w);
                if (!(m.hom.apply(nc) == nw)) ok = false;
                next.push_back({nc, nw});
              }
            layer = std::move(next);
          }
          if (!ok) fail = "coproduct mediator";
        }
    }
  }

  // coequalizers
  {
    PAMorphism inc{{0, 1}, GroupHom::identity(sw.group())};
    PAMorphism swapped{{1, 0}, GroupHom::identity(sw.group())};
    CoequalizerResult c = coequalizer_paction(sw, big, inc, swapped);
    for (const PartialAction& w : peaks) {
      auto pool_b = oracle::all_pa_morphisms(big, w);
      auto pool_q = oracle::all_pa_morphisms(c.quotient.action, w);
      for (const PAMorphism& h : pool_b) {
        if (!pa_morphisms_equal(compose_pa_morphisms(h, inc),
                                compose_pa_morphisms(h, swapped)))
          continue;
        auto m = coequalizer_mediator(c, big, w, h);
        ++checked;
        bool ok = m.has_value();
        if (ok)
          ok = validate_pa_morphism(*m, c.quotient.action, w).empty() &&
               pa_morphisms_equal(
                   compose_pa_morphisms(*m, c.quotient.projection), h) &&
               unique_match(pool_q, *m, [&](const PAMorphism& k) {
                 return pa_morphisms_equal(
                     compose_pa_morphisms(k, c.quotient.projection), h);
               });
        if (!ok) fail = "coequalizer mediator";
      }
    }
  }

  // initial and terminal objects
  for (const PartialAction& x : {sw, c4, big}) {
    ++checked;
    if (oracle::all_pa_morphisms(initial_paction(), x).size() != 1)
      fail = "initial object";
    ++checked;
    if (oracle::all_pa_morphisms(x, terminal_paction()).size() != 1)
      fail = "terminal object";
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "%ld mediator instances%s%s", checked,
                fail.empty() ? "" : ", first failure: ", fail.c_str());
  return {fail.empty() && checked > 0, buf};
}

// ---------------------------------------------------------------------------
// 7. The cycle quotients of the two-object groupoid: kernel condition,
//    induced actions, and the division order.

Verdict criterion7() {
  std::string fail;

  for (int n = 1; n <= 8; ++n) {
    bool kc = kernel_condition(p2(), cyc(n));
    if (kc != (n != 1)) fail = "kernel condition at n=" + std::to_string(n);
  }

  // induced action at n=2 is the global swap
  {
    PartialAction a = induce_action(p2(), cyc(2));
    if (!(a.is_global() && a.carrier_size() == 2 && a.apply(Elem{1}, 0) == 1 &&
          a.apply(Elem{1}, 1) == 0))
      fail = "induced swap at n=2";
  }

  // the action groupoid of each induced action is the source groupoid,
  // matched arrow by arrow through the quotient images
  for (int n = 2; n <= 8; ++n) {
    FiniteQuotientHom q = cyc(n);
    PartialAction a = induce_action(p2(), q);
    if (!validate_paction(a).empty()) {
      fail = "induced action invalid at n=" + std::to_string(n);
      continue;
    }
    PsiGroupoid psi = psi_of_action(a);
    GroupoidMorphism m;
    m.object_map = {0, 1};
    m.morphism_map.assign(p2().num_morphisms(), -1);
    bool filled = true;
    for (int mo = 0; mo < p2().num_morphisms(); ++mo) {
      if (p2().is_identity(mo)) {
        m.morphism_map[mo] = psi.groupoid.identity_at(p2().src(mo));
        continue;
      }
      int t = psi.triple_index(p2().tgt(mo), Elem{q.images.at(mo)}, p2().src(mo));
      if (t < 0) filled = false;
      m.morphism_map[mo] = t;
    }
    if (!filled || !groupoid_iso_check(m, p2(), psi.groupoid))
      fail = "action groupoid mismatch at n=" + std::to_string(n);
  }

  // division order
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= 8; ++n) {
      CompareResult r = compare_reduced(p2(), cyc(n), cyc(m));
      if (r.b_dominates_a != (n % m == 0) || r.a_dominates_b != (m % n == 0))
        fail = "division order at " + std::to_string(n) + "," + std::to_string(m);
    }

  // maximality certificates across the family
  {
    std::vector<FiniteQuotientHom> family;
    for (int n = 2; n <= 8; ++n) family.push_back(cyc(n));
    for (int n = 2; n <= 8; ++n) {
      MaximalityReport r = maximality_report(p2(), cyc(n), family);
      if (!r.consistent) fail = "maximality inconsistency at n=" + std::to_string(n);
      if ((n == 2) != r.induced_global)
        fail = "globality misread at n=" + std::to_string(n);
      bool divisible = (n == 4 || n == 6 || n == 8);  // proper divisor >= 2
      if (divisible != r.dominator.has_value())
        fail = "domination misread at n=" + std::to_string(n);
    }
    std::vector<FiniteQuotientHom> others = {cyc(3), cyc(4), cyc(6)};
    if (dominating_candidate(p2(), cyc(2), others).has_value())
      fail = "the global swap found a dominator";
  }

  return {fail.empty(), fail.empty() ? "cycle family ordered by division" : fail};
}

// ---------------------------------------------------------------------------
// 8. Reduction is invisible to the action groupoid.

Verdict criterion8() {
  oracle::Rng rng(oracle::seed_from_env(127));
  std::vector<PartialAction> acts = {fixtures::c4_half_swap(), fixtures::swap_action()};
  while (static_cast<int>(acts.size()) < kActionSamples)
    acts.push_back(oracle::random_paction(rng));

  int bad = 0;
  for (const PartialAction& a : acts) {
    PartialAction r = reduce_paction(a);
    if (!validate_paction(r).empty() ||
        !oracle::groupoids_equal(psi_of_action(a).groupoid,
                                 psi_of_action(r).groupoid))
      ++bad;
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d action groupoids unchanged by reduction",
                static_cast<int>(acts.size()) - bad, static_cast<int>(acts.size()));
  return {bad == 0, buf};
}

}  // namespace

int main() {
  struct Entry {
    const char* what;
    Verdict (*run)();
  };
  const Entry entries[] = {
      {"comparison functor round trip", criterion1},
      {"universal group projection", criterion2},
      {"representation rewriting", criterion3},
      {"compatibility vs chain enumeration", criterion4},
      {"quotient factorization", criterion5},
      {"(co)limit universal properties", criterion6},
      {"cycle quotient family", criterion7},
      {"reduction invisibility", criterion8},
  };

  int failures = 0;
  int idx = 0;
  for (const Entry& e : entries) {
    ++idx;
    Verdict v = e.run();
    std::printf("criterion %d: %s  %s (%s)\n", idx, v.ok ? "PASS" : "FAIL", e.what,
                v.detail.c_str());
    std::fflush(stdout);
    if (!v.ok) ++failures;
  }
  return failures;
}
