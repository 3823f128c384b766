#include "pact/fixtures.hpp"

#include <filesystem>
#include <fstream>

#include "pact/functors.hpp"
#include "pact/json_io.hpp"

namespace pact::fixtures {

Groupoid pair_groupoid() {
  std::map<std::pair<int, int>, int> compose;
  // indices: 0 = 1a, 1 = 1b, 2 = f: a -> b, 3 = g: b -> a
  compose[{0, 0}] = 0;
  compose[{1, 1}] = 1;
  compose[{2, 0}] = 2;
  compose[{1, 2}] = 2;
  compose[{3, 1}] = 3;
  compose[{0, 3}] = 3;
  compose[{2, 3}] = 1;
  compose[{3, 2}] = 0;
  return Groupoid({"a", "b"}, {"1a", "1b", "f", "g"}, {0, 1, 0, 1}, {0, 1, 1, 0},
                  {0, 1}, {0, 1, 3, 2}, std::move(compose));
}

Groupoid one_object(const FiniteGroup& h) {
  std::map<std::pair<int, int>, int> compose;
  for (int a = 0; a < h.size(); ++a)
    for (int b = 0; b < h.size(); ++b) compose[{a, b}] = h.multiply(a, b);
  std::vector<int> src(h.size(), 0), tgt(h.size(), 0), inv(h.size());
  for (int a = 0; a < h.size(); ++a) inv[a] = h.invert(a);
  return Groupoid({"o"}, h.names(), std::move(src), std::move(tgt), {h.identity()},
                  std::move(inv), std::move(compose));
}

PartialAction swap_action() {
  return PartialAction(Group::finite(FiniteGroup::cyclic(2)), {"x", "y"},
                       {{Elem{1}, {{0, 1}, {1, 0}}}});
}

PartialAction c2_on_three() {
  return PartialAction(Group::finite(FiniteGroup::cyclic(2)), {"x", "y", "z"},
                       {{Elem{1}, {{0, 1}, {1, 0}, {2, 2}}}});
}

PartialAction c4_half_swap() {
  return PartialAction(Group::finite(FiniteGroup::cyclic(4)), {"x", "y"},
                       {{Elem{2}, {{0, 1}, {1, 0}}}});
}

PartialAction fp_two_c2() {
  FiniteGroup c2 = FiniteGroup::cyclic(2);
  std::map<Elem, std::map<int, int>> maps;
  maps[Elem{FpWord{{{0, 1}}}}] = {{0, 1}, {1, 0}};
  maps[Elem{FpWord{{{1, 1}}}}] = {{2, 2}};
  return PartialAction(Group::free_product({c2, c2}), {"x", "y", "z"},
                       std::move(maps));
}

FiniteGroup broken_klein() {
  FiniteGroup k = FiniteGroup::klein_four();
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  std::vector<int> inv(4);
  for (int a = 0; a < 4; ++a) {
    inv[a] = k.invert(a);
    for (int b = 0; b < 4; ++b) mul[a][b] = k.multiply(a, b);
  }
  mul[1][2] = 1;  // a * b should be c
  return FiniteGroup(k.names(), std::move(mul), k.identity(), std::move(inv));
}

void write_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto put = [&](const std::string& name, const nlohmann::json& j) {
    std::ofstream out(dir + "/" + name);
    out << dump_deterministic(j) << "\n";
  };

  Groupoid p2 = pair_groupoid();
  put("p2.groupoid.json", groupoid_to_json(p2));
  put("oneobj_c2.groupoid.json", groupoid_to_json(one_object(FiniteGroup::cyclic(2))));

  PartialAction swap = swap_action();
  put("z2_swap.paction.json", paction_to_json(swap));
  put("c2_xyz.paction.json", paction_to_json(c2_on_three()));
  put("c4_partial.paction.json", paction_to_json(c4_half_swap()));
  put("fp_two_c2.paction.json", paction_to_json(fp_two_c2()));

  PartialAction phi_p2 = phi_of_groupoid(p2);
  put("phi_p2.paction.json", paction_to_json(phi_p2));

  put("klein.group.json", group_table_to_json(FiniteGroup::klein_four()));
  put("bad_assoc.group.json", group_table_to_json(broken_klein()));

  auto pair_list = [](const char* x, const char* y) {
    return nlohmann::json::array({nlohmann::json::array({x, y})});
  };
  put("cong_xy.cong.json", nlohmann::json{{"relation", pair_list("x", "y")},
                                          {"kernel", nlohmann::json::array()}});
  put("cong_bad.cong.json", nlohmann::json{{"relation", pair_list("x", "z")},
                                           {"kernel", nlohmann::json::array()}});

  put("id_on_swap.morphism.json",
      pa_morphism_to_json(identity_pa_morphism(swap), swap, swap));
  PAMorphism twist{{1, 0}, GroupHom::identity(swap.group())};
  put("twist_on_swap.morphism.json", pa_morphism_to_json(twist, swap, swap));

  // Quotient of the arrow classes of the two-object groupoid onto C2.
  FiniteQuotientHom p2_to_c2{FiniteGroup::cyclic(2),
                             {{*p2.morphism_index("f"), 1}, {*p2.morphism_index("g"), 1}}};
  put("p2_to_c2.hom.json", quotient_hom_to_json(p2, p2_to_c2));

  // Double cover of the canonical two-object action.
  PsiGroupoid psi = psi_of_action(phi_p2);
  CoverData cover;
  cover.set = {"a1", "a2", "b1", "b2"};
  cover.act.momentum = {0, 0, 1, 1};
  int up = psi.triple_index(1, *phi_p2.group().parse("f"), 0);
  int down = psi.triple_index(0, *phi_p2.group().parse("g"), 1);
  cover.act.lambda[up] = {{0, 2}, {1, 3}};
  cover.act.lambda[down] = {{2, 0}, {3, 1}};
  put("double_cover.cover.json", cover_to_json(psi, cover));
}

}  // namespace pact::fixtures
