#include <stdexcept>

#include "doctest.h"
#include "pact/fixtures.hpp"
#include "pact/fwords.hpp"
#include "support/oracles.hpp"

using namespace pact;

namespace {

const Groupoid& p2() {
  static const Groupoid g = fixtures::pair_groupoid();
  return g;
}

int mf() { return *p2().morphism_index("f"); }
int mg() { return *p2().morphism_index("g"); }

FWord word(std::initializer_list<FLetter> ls) { return FWord{ls}; }

}  // namespace

TEST_SUITE("free words") {
  TEST_CASE("reduction removes adjacent inverse pairs only") {
    FWord w = word({{mf(), 1}, {mf(), -1}, {mg(), 1}});
    CHECK(free_reduce(w) == word({{mg(), 1}}));
    CHECK(is_free_reduced(word({{mf(), 1}, {mg(), 1}})));
    CHECK_FALSE(is_free_reduced(w));
    CHECK(free_reduce(FWord{}).empty());
  }

  TEST_CASE("reduction agrees with the rescanning oracle") {
    oracle::Rng rng(oracle::seed_from_env(41));
    Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
    for (int t = 0; t < 2000; ++t) {
      const Groupoid& g = (t % 2) ? p2() : t2;
      FWord w = oracle::random_fword(rng, g, rng.below(12));
      CHECK(free_reduce(w) == oracle::scan_reduce(w));
    }
  }

  TEST_CASE("concatenation reduces and inversion reverses") {
    FWord a = word({{mf(), 1}});
    FWord b = word({{mf(), -1}, {mg(), 1}});
    CHECK(fword_concat(a, b) == word({{mg(), 1}}));
    CHECK(fword_invert(word({{mf(), 1}, {mg(), 1}})) ==
          word({{mg(), -1}, {mf(), -1}}));
    CHECK(fword_concat(a, fword_invert(a)).empty());
  }

  TEST_CASE("printing") {
    CHECK(fword_str(p2(), FWord{}) == "1");
    CHECK(fword_str(p2(), word({{mf(), 1}, {mg(), -1}})) == "f.g^-1");
  }
}

TEST_SUITE("evaluation and paths") {
  TEST_CASE("single letters evaluate to the morphism or its inverse") {
    CHECK(eval_letter(p2(), {mf(), 1}) == mf());
    CHECK(eval_letter(p2(), {mf(), -1}) == mg());
  }

  TEST_CASE("the empty word acts as the identity everywhere") {
    CHECK(pi_eval(p2(), FWord{}).kind == PiValue::identity_map);
  }

  TEST_CASE("composable words evaluate, non-composable ones vanish") {
    PiValue v = pi_eval(p2(), word({{mf(), 1}}));
    CHECK(v.kind == PiValue::morphism);
    CHECK(v.m == mf());

    PiValue loop = pi_eval(p2(), word({{mf(), 1}, {mg(), 1}}));
    CHECK(loop.kind == PiValue::morphism);
    CHECK(p2().is_identity(loop.m));

    CHECK(pi_eval(p2(), word({{mf(), 1}, {mf(), 1}})).kind == PiValue::empty);
  }

  TEST_CASE("paths and loops") {
    CHECK(is_path(p2(), word({{mf(), 1}})));
    CHECK_FALSE(is_loop(p2(), word({{mf(), 1}})));
    CHECK(is_loop(p2(), word({{mf(), 1}, {mg(), 1}})));
    CHECK_FALSE(is_path(p2(), word({{mf(), 1}, {mf(), 1}})));
    CHECK_FALSE(is_loop(p2(), FWord{}));
  }

  TEST_CASE("path decomposition splits at non-composable junctions") {
    auto one = path_decompose(p2(), word({{mf(), 1}, {mg(), 1}}));
    REQUIRE(one.size() == 1);
    CHECK(p2().is_identity(one[0].value));
    CHECK(block_src(p2(), one[0]) == block_tgt(p2(), one[0]));

    auto two = path_decompose(p2(), word({{mf(), 1}, {mf(), 1}}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].value == mf());
    CHECK(two[1].value == mf());
    CHECK(block_src(p2(), two[0]) == *p2().object_index("a"));
    CHECK(block_tgt(p2(), two[0]) == *p2().object_index("b"));

    CHECK(path_decompose(p2(), FWord{}).empty());
  }

  TEST_CASE("decomposition round-trips and its blocks are unlinked") {
    oracle::Rng rng(oracle::seed_from_env(43));
    Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
    for (int t = 0; t < 500; ++t) {
      FWord w = free_reduce(oracle::random_fword(rng, t2, rng.below(10)));
      auto blocks = path_decompose(t2, w);
      FWord glued;
      for (const auto& b : blocks) {
        CHECK(is_path(t2, b.word));
        glued = fword_concat(glued, b.word);
      }
      CHECK(glued == w);
      for (size_t i = 0; i + 1 < blocks.size(); ++i)
        CHECK(block_src(t2, blocks[i]) != block_tgt(t2, blocks[i + 1]));
    }
  }
}

TEST_SUITE("minimal elements") {
  TEST_CASE("a conjugated loop with an unlinked junction is minimal") {
    MinimalElement e{word({{mg(), 1}}), word({{mg(), 1}, {mf(), 1}})};
    CHECK(validate_minimal_element(p2(), e).empty());
    CHECK(e.word() == word({{mg(), 1}, {mg(), 1}, {mf(), 1}, {mg(), -1}}));
  }

  TEST_CASE("bare loops are minimal") {
    MinimalElement e{FWord{}, word({{mf(), 1}, {mg(), 1}})};
    CHECK(validate_minimal_element(p2(), e).empty());
  }

  TEST_CASE("rejections: non-loop core, cancelling junction, loop in the conjugator") {
    CHECK_FALSE(validate_minimal_element(
                    p2(), {FWord{}, word({{mf(), 1}})})
                    .empty());
    CHECK_FALSE(validate_minimal_element(
                    p2(), {word({{mf(), -1}}), word({{mf(), 1}, {mg(), 1}})})
                    .empty());
    Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
    int la = *t2.morphism_index("(a|r1|a)");
    int lb = *t2.morphism_index("(b|r1|b)");
    CHECK_FALSE(validate_minimal_element(
                    t2, {word({{la, 1}, {la, 1}}), word({{lb, 1}, {lb, 1}})})
                    .empty());  // conjugator carries its own loop block
  }

  TEST_CASE("peeling a loop-free conjugator is the identity operation") {
    auto parts = minimal_decompose(p2(), word({{mg(), 1}}),
                                   word({{mg(), 1}, {mf(), 1}}));
    REQUIRE(parts.size() == 1);
    CHECK(validate_minimal_element(p2(), parts[0]).empty());
    CHECK(parts[0].word() ==
          word({{mg(), 1}, {mg(), 1}, {mf(), 1}, {mg(), -1}}));
  }

  TEST_CASE("one loop inside the conjugator peels into three elements") {
    FWord z = word({{mf(), 1}, {mf(), 1}, {mg(), 1}});  // path then a loop
    FWord u = word({{mg(), 1}, {mf(), 1}});
    auto parts = minimal_decompose(p2(), z, u);
    REQUIRE(parts.size() == 3);
    FWord prod;
    for (const auto& e : parts) {
      CHECK(validate_minimal_element(p2(), e).empty());
      prod = fword_concat(prod, e.word());
    }
    FWord whole = fword_concat(fword_concat(z, u), fword_invert(z));
    CHECK(oracle::scan_reduce(prod) == oracle::scan_reduce(whole));
  }

  TEST_CASE("two loops inside the conjugator peel into five elements") {
    Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
    int la = *t2.morphism_index("(a|r1|a)");
    int lb = *t2.morphism_index("(b|r1|b)");
    int n1 = *t2.morphism_index("(a|r1|b)");
    FWord z = word({{la, 1}, {la, 1}, {lb, 1}, {lb, 1}, {n1, 1}});
    FWord u = word({{la, 1}, {la, 1}});
    auto parts = minimal_decompose(t2, z, u);
    REQUIRE(parts.size() == 5);
    FWord prod;
    for (const auto& e : parts) {
      CHECK(validate_minimal_element(t2, e).empty());
      prod = fword_concat(prod, e.word());
    }
    FWord whole = fword_concat(fword_concat(z, u), fword_invert(z));
    CHECK(oracle::scan_reduce(prod) == oracle::scan_reduce(whole));
  }

  TEST_CASE("a non-loop core is rejected") {
    CHECK_THROWS_AS(minimal_decompose(p2(), FWord{}, word({{mf(), 1}})),
                    std::invalid_argument);
  }
}

TEST_SUITE("representations") {
  static const MinimalElement loop_b{FWord{}, FWord{{{2, 1}, {3, 1}}}};   // fg
  static const MinimalElement loop_a{FWord{}, FWord{{{3, 1}, {2, 1}}}};   // gf
  static const MinimalElement conj_c{FWord{{{3, 1}}}, FWord{{{3, 1}, {2, 1}}}};

  TEST_CASE("words of representations concatenate the member words") {
    MinimalRepresentation rep{loop_b, loop_a};
    CHECK(representation_word(rep) ==
          word({{mf(), 1}, {mg(), 1}, {mg(), 1}, {mf(), 1}}));
  }

  TEST_CASE("reduction drops cancelling pairs") {
    MinimalElement inv{FWord{}, fword_invert(loop_b.loop)};
    CHECK(reduce_representation(p2(), {loop_b, inv}).empty());
  }

  TEST_CASE("reduction merges same-conjugator composable loops") {
    auto merged = reduce_representation(p2(), {loop_b, loop_b});
    REQUIRE(merged.size() == 1);
    CHECK(merged[0].conjugator.empty());
    CHECK(merged[0].loop ==
          word({{mf(), 1}, {mg(), 1}, {mf(), 1}, {mg(), 1}}));
  }

  TEST_CASE("already reduced input is unchanged") {
    MinimalRepresentation rep{loop_b, loop_a};
    CHECK(is_reduced_representation(p2(), rep));
    CHECK(reduce_representation(p2(), rep) == rep);
  }

  TEST_CASE("a surviving last loop classifies the pair as plain") {
    MinimalElement xi{word({{mf(), 1}}), word({{mf(), 1}, {mg(), 1}})};
    CHECK(validate_minimal_element(p2(), xi).empty());
    CHECK(classify_pair(p2(), xi, loop_a) == PairClass::P);
  }

  TEST_CASE("a merged last loop classifies the pair as conflicting") {
    CHECK(validate_minimal_element(p2(), conj_c).empty());
    CHECK(classify_pair(p2(), conj_c, loop_a) == PairClass::C);
  }

  TEST_CASE("the switch rewrites a conflicting pair without changing the element") {
    MinimalElement moved = switch_pair(p2(), conj_c, loop_a);
    CHECK(validate_minimal_element(p2(), moved).empty());
    CHECK(moved.conjugator == word({{mf(), -1}}));
    CHECK(moved.loop == word({{mg(), 1}, {mf(), 1}}));
    FWord before = fword_concat(conj_c.word(), loop_a.word());
    FWord after = fword_concat(loop_a.word(), moved.word());
    CHECK(oracle::scan_reduce(before) == oracle::scan_reduce(after));
    CHECK(classify_pair(p2(), loop_a, moved) == PairClass::P);
  }

  TEST_CASE("switching a plain pair is refused") {
    CHECK_THROWS_AS(switch_pair(p2(), loop_b, loop_a), std::invalid_argument);
  }

  TEST_CASE("the rewriting pass establishes the pairwise property") {
    MinimalRepresentation rep{conj_c, loop_a};
    CHECK_FALSE(has_p_property(p2(), rep));
    std::vector<PStep> trace;
    MinimalRepresentation out = p_algorithm(p2(), rep, &trace);
    CHECK(has_p_property(p2(), out));
    CHECK_FALSE(trace.empty());
    CHECK(oracle::scan_reduce(representation_word(out)) ==
          oracle::scan_reduce(representation_word(rep)));
  }

  TEST_CASE("a singleton representation is already in final form") {
    MinimalRepresentation rep{loop_b};
    CHECK(has_p_property(p2(), rep));
    CHECK(p_algorithm(p2(), rep) == rep);
  }

  TEST_CASE("a nonempty evaluation certifies a loop") {
    LoopCheckResult r = loop_check(p2(), {loop_b});
    CHECK(r.pi_nonempty);
    CHECK(r.loop);

    LoopCheckResult s = loop_check(p2(), {loop_b, loop_a});
    CHECK_FALSE(s.pi_nonempty);
  }
}
