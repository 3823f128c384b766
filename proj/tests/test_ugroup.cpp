#include "doctest.h"
#include "pact/fixtures.hpp"
#include "pact/fwords.hpp"
#include "pact/ugroup.hpp"
#include "support/oracles.hpp"

using namespace pact;

namespace {

const Groupoid& p2() {
  static const Groupoid g = fixtures::pair_groupoid();
  return g;
}

}  // namespace

TEST_SUITE("universal group") {
  TEST_CASE("identity morphisms project to the identity class") {
    CHECK(u_letter(p2(), *p2().morphism_index("1a")).empty());
    CHECK(u_letter(p2(), *p2().morphism_index("f")).letters ==
          std::vector<int>{*p2().morphism_index("f")});
  }

  TEST_CASE("normal forms have no composable junctions") {
    int f = *p2().morphism_index("f");
    int g = *p2().morphism_index("g");
    CHECK(u_is_normal(p2(), UWord{}));
    CHECK(u_is_normal(p2(), UWord{{f}}));
    CHECK(u_is_normal(p2(), UWord{{f, f}}));
    CHECK_FALSE(u_is_normal(p2(), UWord{{f, g}}));
    CHECK_FALSE(u_is_normal(p2(), UWord{{*p2().morphism_index("1a")}}));
  }

  TEST_CASE("composable letters collapse under multiplication") {
    UWord wf = u_letter(p2(), *p2().morphism_index("f"));
    UWord wg = u_letter(p2(), *p2().morphism_index("g"));
    CHECK(u_multiply(p2(), wf, wg).empty());          // composite is an identity
    CHECK(u_multiply(p2(), wf, wf).letters.size() == 2);
    CHECK(u_multiply(p2(), wf, UWord{}) == wf);
    CHECK(u_multiply(p2(), UWord{}, wf) == wf);
    CHECK(u_multiply(p2(), wf, u_invert(p2(), wf)).empty());
    CHECK(u_invert(p2(), wf) == wg);  // inverse morphism, same class
  }

  TEST_CASE("multiplication is associative on projected words") {
    oracle::Rng rng(oracle::seed_from_env(47));
    Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
    for (int t = 0; t < 400; ++t) {
      const Groupoid& g = (t % 2) ? p2() : t2;
      UWord a = project(g, oracle::random_fword(rng, g, rng.below(6)));
      UWord b = project(g, oracle::random_fword(rng, g, rng.below(6)));
      UWord c = project(g, oracle::random_fword(rng, g, rng.below(6)));
      CHECK(u_multiply(g, u_multiply(g, a, b), c) ==
            u_multiply(g, a, u_multiply(g, b, c)));
      CHECK(u_is_normal(g, u_multiply(g, a, b)));
    }
  }

  TEST_CASE("projection is a homomorphism that kills inverses") {
    oracle::Rng rng(oracle::seed_from_env(53));
    for (int t = 0; t < 600; ++t) {
      FWord a = oracle::random_fword(rng, p2(), rng.below(8));
      FWord b = oracle::random_fword(rng, p2(), rng.below(8));
      CHECK(project(p2(), fword_concat(a, b)) ==
            u_multiply(p2(), project(p2(), a), project(p2(), b)));
      CHECK(project(p2(), fword_concat(a, fword_invert(a))).empty());
    }
  }

  TEST_CASE("chains evaluate identically in the groupoid and its group") {
    oracle::Rng rng(oracle::seed_from_env(59));
    Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
    int checked = 0;
    for (int t = 0; t < 4000 && checked < 200; ++t) {
      FWord w = oracle::random_fword(rng, t2, 1 + rng.below(4));
      PiValue pv = pi_eval(t2, w);
      if (pv.kind != PiValue::morphism) continue;
      ++checked;
      UPsiValue uv = psi_of(t2, project(t2, w));
      if (t2.is_identity(pv.m)) {
        CHECK(uv.kind == UPsiValue::identity_map);
      } else {
        CHECK(uv == UPsiValue{UPsiValue::morphism, pv.m});
      }
    }
    CHECK(checked == 200);
  }

  TEST_CASE("the defining relations hold") {
    CHECK(presentation_check(p2()).empty());
    CHECK(presentation_check(fixtures::one_object(FiniteGroup::cyclic(2))).empty());
  }

  TEST_CASE("names round-trip") {
    int f = *p2().morphism_index("f");
    CHECK(uword_name(p2(), UWord{}) == "1");
    CHECK(uword_name(p2(), UWord{{f, f}}) == "f*f");
    CHECK(uword_parse(p2(), "f*f") == UWord{{f, f}});
    CHECK(uword_parse(p2(), "1") == UWord{});
    CHECK_FALSE(uword_parse(p2(), "f*bogus").has_value());
  }

  TEST_CASE("enumeration succeeds exactly for totally composable groupoids") {
    CHECK_FALSE(enumerate_ugroup(p2()).has_value());

    auto c2 = enumerate_ugroup(fixtures::one_object(FiniteGroup::cyclic(2)));
    REQUIRE(c2.has_value());
    CHECK(c2->size() == 2);

    auto one = enumerate_ugroup(fixtures::one_object(FiniteGroup::cyclic(1)));
    REQUIRE(one.has_value());
    CHECK(one->size() == 1);
    CHECK((*one)[0].empty());

    Groupoid t2 = trivialized_groupoid({"a", "b"}, FiniteGroup::cyclic(2));
    CHECK_FALSE(enumerate_ugroup(t2).has_value());
  }
}
