#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pact/fixtures.hpp"
#include "pact/fwords.hpp"
#include "pact/json_io.hpp"
#include "pact/limits.hpp"
#include "pact/reduced.hpp"
#include "pact/ugroup.hpp"

namespace {

using nlohmann::json;

// Valid file, invalid mathematics: reported on stdout, exit code 1.
struct AxiomFailure {
  std::string what;
  std::vector<std::string> violations;
};

enum class FileKind { group, groupoid, action };

FileKind detect_kind(const json& j) {
  if (j.is_object() && j.contains("set") && j.contains("group")) return FileKind::action;
  if (j.is_object() && j.contains("objects")) return FileKind::groupoid;
  if (j.is_object() && j.contains("elements")) return FileKind::group;
  throw pact::SchemaError("cannot tell what this file describes");
}

void require_valid(const std::string& what, const std::vector<std::string>& violations) {
  if (!violations.empty()) throw AxiomFailure{what, violations};
}

pact::PartialAction load_action(const std::string& path) {
  pact::PartialAction a = pact::paction_from_json(pact::load_json_file(path));
  require_valid(path, pact::validate_paction(a));
  return a;
}

pact::Groupoid load_groupoid(const std::string& path) {
  pact::Groupoid g = pact::groupoid_from_json(pact::load_json_file(path));
  require_valid(path, g.validate());
  return g;
}

// Groupoid argument that may also be given as a partial action, in which
// case its action groupoid is meant.
pact::Groupoid load_source_groupoid(const std::string& path) {
  json j = pact::load_json_file(path);
  if (detect_kind(j) == FileKind::action) {
    pact::PartialAction a = pact::paction_from_json(j);
    require_valid(path, pact::validate_paction(a));
    return pact::psi_of_action(a).groupoid;
  }
  pact::Groupoid g = pact::groupoid_from_json(j);
  require_valid(path, g.validate());
  return g;
}

pact::PAMorphism load_morphism(const std::string& path, const pact::PartialAction& from,
                               const pact::PartialAction& to) {
  pact::PAMorphism f = pact::pa_morphism_from_json(pact::load_json_file(path), from, to);
  require_valid(path, pact::validate_pa_morphism(f, from, to));
  return f;
}

pact::UWord parse_uword_arg(const pact::Groupoid& g, const std::string& text) {
  auto raw = pact::uword_parse(g, text);
  if (!raw) throw pact::SchemaError("not a word over this groupoid: \"" + text + "\"");
  pact::UWord acc;
  for (int m : raw->letters) acc = pact::u_multiply(g, acc, pact::u_letter(g, m));
  return acc;
}

json rep_to_json(const pact::Groupoid& g, const pact::MinimalRepresentation& rep) {
  json out = json::array();
  for (const auto& e : rep)
    out.push_back({{"conjugator", pact::fword_to_json(g, e.conjugator)},
                   {"loop", pact::fword_to_json(g, e.loop)}});
  return out;
}

pact::MinimalRepresentation rep_from_json(const pact::Groupoid& g, const json& j) {
  pact::MinimalRepresentation rep;
  if (!j.is_array()) throw pact::SchemaError("representation must be an array");
  for (const auto& e : j) {
    pact::MinimalElement m{pact::fword_from_json(g, e.at("conjugator")),
                           pact::fword_from_json(g, e.at("loop"))};
    rep.push_back(std::move(m));
  }
  return rep;
}

json morphism_map_json(const pact::GroupoidMorphism& f, const pact::Groupoid& from,
                       const pact::Groupoid& to) {
  json objects = json::object(), morphisms = json::object();
  for (int x = 0; x < from.num_objects(); ++x)
    objects[from.object_name(x)] = to.object_name(f.object_map[x]);
  for (int m = 0; m < from.num_morphisms(); ++m)
    morphisms[from.morphism_name(m)] = to.morphism_name(f.morphism_map[m]);
  return json{{"objects", objects}, {"morphisms", morphisms}};
}

struct Output {
  json body;
  std::vector<std::string> human;  // printed instead of body with --human
  int code = 0;
};

void summarize_action(const pact::PartialAction& a, std::vector<std::string>& lines,
                      const std::string& label) {
  auto n = a.partial_maps().size();
  lines.push_back(label + ": " + std::to_string(a.carrier_size()) + " points, " +
                  std::to_string(n) + " acting elements");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with finite groupoids and partial group actions"};
  app.require_subcommand(1);
  bool human = false;
  app.add_flag("--human", human, "plain-text summaries instead of JSON");

  Output out;
  std::string file1, file2, file3, file4;
  std::vector<std::string> rest;

  auto* c_validate = app.add_subcommand("validate", "check the axioms of a stored structure");
  c_validate->add_option("file", file1)->required();
  c_validate->callback([&] {
    json j = pact::load_json_file(file1);
    std::vector<std::string> violations;
    std::string kind;
    switch (detect_kind(j)) {
      case FileKind::group:
        kind = "group";
        violations = pact::group_table_from_json(j).validate();
        break;
      case FileKind::groupoid:
        kind = "groupoid";
        violations = pact::groupoid_from_json(j).validate();
        break;
      case FileKind::action: {
        kind = "partial action";
        pact::PartialAction a = pact::paction_from_json(j);
        violations = pact::validate_paction(a);
        break;
      }
    }
    out.body = json{{"kind", kind}, {"ok", violations.empty()}, {"violations", violations}};
    out.human.push_back(violations.empty() ? kind + ": ok"
                                           : kind + ": " + std::to_string(violations.size()) +
                                                 " violation(s)");
    for (const auto& v : violations) out.human.push_back("  " + v);
    out.code = violations.empty() ? 0 : 1;
  });

  auto* c_psi = app.add_subcommand("psi", "action groupoid of a partial action");
  c_psi->add_option("action", file1)->required();
  c_psi->callback([&] {
    pact::PartialAction a = load_action(file1);
    pact::PsiGroupoid psi = pact::psi_of_action(a);
    out.body = pact::groupoid_to_json(psi.groupoid);
    out.human.push_back("action groupoid: " + std::to_string(psi.groupoid.num_objects()) +
                        " objects, " + std::to_string(psi.groupoid.num_morphisms()) +
                        " morphisms");
  });

  auto* c_phi = app.add_subcommand("phi", "canonical partial action of a groupoid");
  c_phi->add_option("groupoid", file1)->required();
  c_phi->callback([&] {
    pact::Groupoid g = load_groupoid(file1);
    pact::PartialAction a = pact::phi_of_groupoid(g);
    out.body = pact::paction_to_json(a);
    summarize_action(a, out.human, "canonical action");
  });

  auto* c_eta = app.add_subcommand("eta", "comparison of a groupoid with the action groupoid of its canonical action");
  c_eta->add_option("groupoid", file1)->required();
  c_eta->callback([&] {
    pact::Groupoid g = load_groupoid(file1);
    pact::EtaResult r = pact::eta_of_groupoid(g);
    std::vector<std::string> why;
    bool iso = pact::groupoid_iso_check(r.eta, g, r.psi_phi.groupoid, &why);
    out.body = json{{"phi", pact::paction_to_json(r.phi)},
                    {"psi_phi", pact::groupoid_to_json(r.psi_phi.groupoid)},
                    {"eta", morphism_map_json(r.eta, g, r.psi_phi.groupoid)},
                    {"iso", iso}};
    out.human.push_back(std::string("comparison functor is ") +
                        (iso ? "an isomorphism" : "NOT an isomorphism"));
    if (!iso) out.code = 1;
  });

  auto* c_nf = app.add_subcommand("nf", "normal form of a product of morphism classes");
  c_nf->add_option("groupoid", file1)->required();
  c_nf->add_option("letters", rest, "morphism names, or words joined by *")->required();
  c_nf->callback([&] {
    pact::Groupoid g = load_groupoid(file1);
    pact::UWord acc;
    for (const auto& tok : rest)
      acc = pact::u_multiply(g, acc, parse_uword_arg(g, tok));
    out.body = json{{"normal_form", pact::uword_to_json(g, acc)},
                    {"name", pact::uword_name(g, acc)}};
    out.human.push_back(pact::uword_name(g, acc));
  });

  auto* c_mul = app.add_subcommand("mul", "product of two classes in the universal group");
  c_mul->add_option("groupoid", file1)->required();
  c_mul->add_option("left", file2)->required();
  c_mul->add_option("right", file3)->required();
  c_mul->callback([&] {
    pact::Groupoid g = load_groupoid(file1);
    pact::UWord l = parse_uword_arg(g, file2), r = parse_uword_arg(g, file3);
    pact::UWord p = pact::u_multiply(g, l, r);
    out.body = json{{"product", pact::uword_to_json(g, p)},
                    {"name", pact::uword_name(g, p)}};
    out.human.push_back(pact::uword_name(g, p));
  });

  auto* c_inv = app.add_subcommand("inv", "inverse of a class in the universal group");
  c_inv->add_option("groupoid", file1)->required();
  c_inv->add_option("word", file2)->required();
  c_inv->callback([&] {
    pact::Groupoid g = load_groupoid(file1);
    pact::UWord w = parse_uword_arg(g, file2);
    pact::UWord i = pact::u_invert(g, w);
    out.body = json{{"inverse", pact::uword_to_json(g, i)},
                    {"name", pact::uword_name(g, i)}};
    out.human.push_back(pact::uword_name(g, i));
  });

  auto* c_palg = app.add_subcommand("palg", "rewrite a product of conjugated loops to one with the P-property");
  c_palg->add_option("groupoid", file1)->required();
  c_palg->add_option("representation", file2)->required();
  c_palg->callback([&] {
    pact::Groupoid g = load_groupoid(file1);
    pact::MinimalRepresentation rep = rep_from_json(g, pact::load_json_file(file2));
    pact::LoopCheckResult r = pact::loop_check(g, rep);
    json steps = json::array();
    for (const auto& s : r.trace)
      steps.push_back({{"label", s.label}, {"state", rep_to_json(g, s.state)}});
    out.body = json{{"result", rep_to_json(g, r.normalized)},
                    {"p_property", pact::has_p_property(g, r.normalized)},
                    {"pi_nonempty", r.pi_nonempty},
                    {"is_loop", r.loop},
                    {"steps", steps}};
    out.human.push_back("result has " + std::to_string(r.normalized.size()) +
                        " element(s) after " + std::to_string(r.trace.size()) + " step(s)");
    out.human.push_back(std::string("evaluation: ") +
                        (r.pi_nonempty ? (r.loop ? "a loop" : "nonempty") : "empty"));
  });

  auto* c_pc = app.add_subcommand("pc-check", "compatibility of a congruence with a partial action");
  c_pc->add_option("action", file1)->required();
  c_pc->add_option("congruence", file2)->required();
  c_pc->callback([&] {
    pact::PartialAction a = load_action(file1);
    pact::Congruence c = pact::congruence_from_json(a, pact::load_json_file(file2));
    std::string why;
    bool ok = pact::pc_check(a, c, &why);
    out.body = json{{"compatible", ok}};
    if (!ok) out.body["why"] = why;
    out.human.push_back(ok ? "compatible" : "not compatible: " + why);
  });

  auto* c_quot = app.add_subcommand("quotient", "quotient action by a compatible congruence");
  c_quot->add_option("action", file1)->required();
  c_quot->add_option("congruence", file2)->required();
  c_quot->callback([&] {
    pact::PartialAction a = load_action(file1);
    pact::Congruence c = pact::congruence_from_json(a, pact::load_json_file(file2));
    pact::QuotientResult q = pact::quotient_paction(a, c);
    out.body = json{{"action", pact::paction_to_json(q.action)},
                    {"projection", pact::pa_morphism_to_json(q.projection, a, q.action)}};
    summarize_action(q.action, out.human, "quotient");
  });

  auto* c_clo = app.add_subcommand("closure", "least compatible congruence containing the given pairs");
  c_clo->add_option("action", file1)->required();
  c_clo->add_option("congruence", file2)->required();
  c_clo->callback([&] {
    pact::PartialAction a = load_action(file1);
    json j = pact::load_json_file(file2);
    pact::Congruence seed = pact::congruence_from_json(a, j);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < a.carrier_size(); ++i) pairs.emplace_back(seed.block_of[i], i);
    pact::Congruence closed = pact::congruence_closure(a, pairs, seed.kernel);
    out.body = pact::congruence_to_json(a, closed);
    int blocks = 0;
    for (int i = 0; i < a.carrier_size(); ++i) blocks += closed.block_of[i] == i;
    out.human.push_back("closure: " + std::to_string(blocks) + " block(s), kernel of order " +
                        std::to_string(closed.kernel.size()));
  });

  auto* c_prod = app.add_subcommand("product", "product of two partial actions");
  c_prod->add_option("left", file1)->required();
  c_prod->add_option("right", file2)->required();
  c_prod->callback([&] {
    pact::PartialAction a = load_action(file1), b = load_action(file2);
    pact::ProductResult p = pact::product_paction(a, b);
    out.body = json{{"action", pact::paction_to_json(p.action)},
                    {"proj1", pact::pa_morphism_to_json(p.proj1, p.action, a)},
                    {"proj2", pact::pa_morphism_to_json(p.proj2, p.action, b)}};
    summarize_action(p.action, out.human, "product");
  });

  auto* c_coprod = app.add_subcommand("coproduct", "coproduct of partial actions");
  c_coprod->add_option("parts", rest)->required()->expected(-1);
  c_coprod->callback([&] {
    std::vector<pact::PartialAction> parts;
    for (const auto& p : rest) parts.push_back(load_action(p));
    pact::CoproductResult c = pact::coproduct_paction(parts);
    json injections = json::array();
    for (std::size_t i = 0; i < parts.size(); ++i)
      injections.push_back(pact::pa_morphism_to_json(c.inject[i], parts[i], c.action));
    out.body = json{{"action", pact::paction_to_json(c.action)},
                    {"injections", injections}};
    summarize_action(c.action, out.human, "coproduct");
  });

  auto* c_eq = app.add_subcommand("equalizer", "equalizer of two parallel morphisms");
  c_eq->add_option("from", file1)->required();
  c_eq->add_option("to", file2)->required();
  c_eq->add_option("f", file3)->required();
  c_eq->add_option("g", file4)->required();
  c_eq->callback([&] {
    pact::PartialAction a = load_action(file1), b = load_action(file2);
    pact::PAMorphism f = load_morphism(file3, a, b), g = load_morphism(file4, a, b);
    pact::EqualizerResult e = pact::equalizer_paction(a, b, f, g);
    out.body = json{{"action", pact::paction_to_json(e.action)},
                    {"include", pact::pa_morphism_to_json(e.include, e.action, a)}};
    summarize_action(e.action, out.human, "equalizer");
  });

  auto* c_coeq = app.add_subcommand("coequalizer", "coequalizer of two parallel morphisms");
  c_coeq->add_option("from", file1)->required();
  c_coeq->add_option("to", file2)->required();
  c_coeq->add_option("f", file3)->required();
  c_coeq->add_option("g", file4)->required();
  c_coeq->callback([&] {
    pact::PartialAction a = load_action(file1), b = load_action(file2);
    pact::PAMorphism f = load_morphism(file3, a, b), g = load_morphism(file4, a, b);
    pact::CoequalizerResult c = pact::coequalizer_paction(a, b, f, g);
    out.body = json{{"action", pact::paction_to_json(c.quotient.action)},
                    {"projection", pact::pa_morphism_to_json(c.quotient.projection, b,
                                                             c.quotient.action)},
                    {"congruence", pact::congruence_to_json(b, c.congruence)}};
    summarize_action(c.quotient.action, out.human, "coequalizer");
  });

  auto* c_lift = app.add_subcommand("lift", "lift a partial action along a fibered set over its carrier");
  c_lift->add_option("action", file1)->required();
  c_lift->add_option("cover", file2)->required();
  c_lift->callback([&] {
    pact::PartialAction a = load_action(file1);
    pact::PsiGroupoid psi = pact::psi_of_action(a);
    pact::CoverData cover = pact::cover_from_json(psi, a, pact::load_json_file(file2));
    pact::LiftResult r = pact::lift_action(a, psi, cover.set, cover.act);
    out.body = json{{"action", pact::paction_to_json(r.action)},
                    {"projection", pact::pa_morphism_to_json(r.projection, r.action, a)}};
    summarize_action(r.action, out.human, "lifted action");
  });

  auto* c_real = app.add_subcommand("realize", "global action whose action groupoid is the given connected groupoid");
  c_real->add_option("groupoid", file1)->required();
  c_real->callback([&] {
    pact::Groupoid g = load_groupoid(file1);
    pact::GlobalRealization r = pact::realize_connected(g);
    std::map<pact::Elem, std::map<int, int>> maps;
    for (int e = 0; e < r.group.size(); ++e) {
      if (e == r.group.identity()) continue;
      std::map<int, int> t;
      for (int x = 0; x < g.num_objects(); ++x) t[x] = r.act[e][x];
      maps[pact::Elem{e}] = std::move(t);
    }
    pact::PartialAction global(pact::Group::finite(r.group), g.object_names(),
                               std::move(maps));
    out.body = json{{"action", pact::paction_to_json(global)},
                    {"witness", morphism_map_json(r.witness, r.action_groupoid, g)}};
    out.human.push_back("global action of a group of order " +
                        std::to_string(r.group.size()) + " on " +
                        std::to_string(g.num_objects()) + " points");
  });

  auto* c_red = app.add_subcommand("reduced-check", "validity and kernel condition of a finite quotient");
  c_red->add_option("source", file1, "groupoid, or action standing for its action groupoid")->required();
  c_red->add_option("hom", file2)->required();
  c_red->callback([&] {
    pact::Groupoid g = load_source_groupoid(file1);
    pact::FiniteQuotientHom q = pact::quotient_hom_from_json(g, pact::load_json_file(file2));
    auto violations = pact::validate_quotient_hom(g, q);
    std::string why;
    bool kc = violations.empty() && pact::kernel_condition(g, q, &why);
    out.body = json{{"ok", violations.empty()},
                    {"violations", violations},
                    {"kernel_condition", kc}};
    if (!kc && violations.empty()) out.body["why"] = why;
    out.human.push_back(violations.empty() ? "hom: ok" : "hom: invalid");
    out.human.push_back(std::string("kernel condition: ") + (kc ? "holds" : "fails"));
    out.code = violations.empty() ? 0 : 1;
  });

  auto* c_ind = app.add_subcommand("induce", "partial action induced by a finite quotient");
  c_ind->add_option("source", file1)->required();
  c_ind->add_option("hom", file2)->required();
  c_ind->callback([&] {
    pact::Groupoid g = load_source_groupoid(file1);
    pact::FiniteQuotientHom q = pact::quotient_hom_from_json(g, pact::load_json_file(file2));
    require_valid(file2, pact::validate_quotient_hom(g, q));
    pact::PartialAction a = pact::induce_action(g, q);
    out.body = pact::paction_to_json(a);
    summarize_action(a, out.human, "induced action");
  });

  auto* c_cmp = app.add_subcommand("compare", "factorization order of two finite quotients");
  c_cmp->add_option("source", file1)->required();
  c_cmp->add_option("first", file2)->required();
  c_cmp->add_option("second", file3)->required();
  c_cmp->callback([&] {
    pact::Groupoid g = load_source_groupoid(file1);
    pact::FiniteQuotientHom qa = pact::quotient_hom_from_json(g, pact::load_json_file(file2));
    pact::FiniteQuotientHom qb = pact::quotient_hom_from_json(g, pact::load_json_file(file3));
    require_valid(file2, pact::validate_quotient_hom(g, qa));
    require_valid(file3, pact::validate_quotient_hom(g, qb));
    pact::CompareResult r = pact::compare_reduced(g, qa, qb);
    auto hom_json = [&](const std::optional<std::map<int, int>>& h,
                        const pact::FiniteGroup& from, const pact::FiniteGroup& to) {
      if (!h) return json();
      json o = json::object();
      for (auto [a, b] : *h) o[from.name(a)] = to.name(b);
      return o;
    };
    out.body = json{{"first_dominates_second", r.a_dominates_b},
                    {"second_dominates_first", r.b_dominates_a},
                    {"first_to_second", hom_json(r.a_to_b, qa.target, qb.target)},
                    {"second_to_first", hom_json(r.b_to_a, qb.target, qa.target)}};
    std::string rel = r.a_dominates_b && r.b_dominates_a ? "equivalent"
                      : r.a_dominates_b                  ? "first dominates second"
                      : r.b_dominates_a                  ? "second dominates first"
                                                         : "incomparable";
    out.human.push_back(rel);
  });

  auto* c_fix = app.add_subcommand("fixtures", "write the sample input files");
  c_fix->add_option("dir", file1)->required();
  c_fix->callback([&] {
    pact::fixtures::write_fixtures(file1);
    std::vector<std::string> names;
    for (const auto& e : std::filesystem::directory_iterator(file1))
      names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    out.body = json{{"dir", file1}, {"files", names}};
    out.human.push_back("wrote " + std::to_string(names.size()) + " files to " + file1);
  });

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const AxiomFailure& f) {
    json j{{"ok", false}, {"input", f.what}, {"violations", f.violations}};
    std::cout << pact::dump_deterministic(j) << "\n";
    return 1;
  } catch (const pact::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    json j{{"error", e.what()}};
    std::cout << pact::dump_deterministic(j) << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (human) {
    for (const auto& line : out.human) std::cout << line << "\n";
  } else {
    std::cout << pact::dump_deterministic(out.body) << "\n";
  }
  return out.code;
}
