#include "pact/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

namespace pact {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw SchemaError(what); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int name_index(const std::vector<std::string>& names, const std::string& name,
               const char* what) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) bad(std::string("unknown ") + what + " \"" + name + "\"");
  return static_cast<int>(it - names.begin());
}

Elem parse_elem(const Group& g, const std::string& name) {
  auto e = g.parse(name);
  if (!e) bad("unknown group element \"" + name + "\"");
  return *e;
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

std::string dump_deterministic(const json& j) { return j.dump(2); }

json group_table_to_json(const FiniteGroup& g) {
  json mul = json::array(), inv = json::array();
  for (int a = 0; a < g.size(); ++a) {
    for (int b = 0; b < g.size(); ++b)
      mul.push_back({g.name(a), g.name(b), g.name(g.multiply(a, b))});
    inv.push_back({g.name(a), g.name(g.invert(a))});
  }
  return json{{"elements", g.names()},
              {"id", g.name(g.identity())},
              {"mul", mul},
              {"inv", inv}};
}

FiniteGroup group_table_from_json(const json& j) {
  try {
    std::vector<std::string> names =
        field(j, "elements").get<std::vector<std::string>>();
    const int n = static_cast<int>(names.size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n, -1));
    for (const auto& row : field(j, "mul")) {
      if (!row.is_array() || row.size() != 3) bad("mul rows are [l, r, product]");
      int l = name_index(names, row[0].get<std::string>(), "element");
      int r = name_index(names, row[1].get<std::string>(), "element");
      mul[l][r] = name_index(names, row[2].get<std::string>(), "element");
    }
    for (const auto& row : mul)
      for (int v : row)
        if (v < 0) bad("multiplication table is incomplete");
    std::vector<int> inv(n, -1);
    for (const auto& row : field(j, "inv")) {
      if (!row.is_array() || row.size() != 2) bad("inv rows are [g, inverse]");
      int g = name_index(names, row[0].get<std::string>(), "element");
      inv[g] = name_index(names, row[1].get<std::string>(), "element");
    }
    for (int v : inv)
      if (v < 0) bad("inverse table is incomplete");
    int id = name_index(names, field(j, "id").get<std::string>(), "element");
    return FiniteGroup(std::move(names), std::move(mul), id, std::move(inv));
  } catch (const json::exception& e) {
    bad(std::string("group table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    bad(std::string("group table: ") + e.what());
  }
}

json groupoid_to_json(const Groupoid& g) {
  json morphisms = json::array();
  for (int m = 0; m < g.num_morphisms(); ++m)
    morphisms.push_back({{"id", g.morphism_name(m)},
                         {"src", g.object_name(g.src(m))},
                         {"tgt", g.object_name(g.tgt(m))}});
  json identity = json::object(), inverse = json::object();
  for (int x = 0; x < g.num_objects(); ++x)
    identity[g.object_name(x)] = g.morphism_name(g.identity_at(x));
  for (int m = 0; m < g.num_morphisms(); ++m)
    inverse[g.morphism_name(m)] = g.morphism_name(g.inverse(m));
  json compose = json::array();
  for (const auto& [pair, c] : g.compose_table())
    compose.push_back({g.morphism_name(pair.first), g.morphism_name(pair.second),
                       g.morphism_name(c)});
  return json{{"objects", g.object_names()},
              {"morphisms", morphisms},
              {"identity", identity},
              {"inverse", inverse},
              {"compose", compose}};
}

Groupoid groupoid_from_json(const json& j) {
  try {
    std::vector<std::string> objects =
        field(j, "objects").get<std::vector<std::string>>();
    std::vector<std::string> names;
    std::vector<int> src, tgt;
    for (const auto& m : field(j, "morphisms")) {
      names.push_back(field(m, "id").get<std::string>());
      src.push_back(name_index(objects, field(m, "src").get<std::string>(), "object"));
      tgt.push_back(name_index(objects, field(m, "tgt").get<std::string>(), "object"));
    }
    std::vector<int> identity_at(objects.size(), -1);
    for (const auto& [obj, mor] : field(j, "identity").items())
      identity_at[name_index(objects, obj, "object")] =
          name_index(names, mor.get<std::string>(), "morphism");
    for (int v : identity_at)
      if (v < 0) bad("identity table is incomplete");
    std::vector<int> inverse(names.size(), -1);
    for (const auto& [mor, inv] : field(j, "inverse").items())
      inverse[name_index(names, mor, "morphism")] =
          name_index(names, inv.get<std::string>(), "morphism");
    for (int v : inverse)
      if (v < 0) bad("inverse table is incomplete");
    std::map<std::pair<int, int>, int> compose;
    for (const auto& row : field(j, "compose")) {
      if (!row.is_array() || row.size() != 3) bad("compose rows are [l, r, result]");
      int l = name_index(names, row[0].get<std::string>(), "morphism");
      int r = name_index(names, row[1].get<std::string>(), "morphism");
      compose[{l, r}] = name_index(names, row[2].get<std::string>(), "morphism");
    }
    return Groupoid(std::move(objects), std::move(names), std::move(src),
                    std::move(tgt), std::move(identity_at), std::move(inverse),
                    std::move(compose));
  } catch (const json::exception& e) {
    bad(std::string("groupoid: ") + e.what());
  } catch (const std::invalid_argument& e) {
    bad(std::string("groupoid: ") + e.what());
  }
}

namespace {

json group_to_json(const Group& g) {
  switch (g.kind()) {
    case Group::Kind::finite:
      return group_table_to_json(g.table());
    case Group::Kind::free_product: {
      json factors = json::array();
      for (const auto& f : g.factors()) factors.push_back(group_table_to_json(f));
      return json{{"free_product", factors}};
    }
    case Group::Kind::universal:
      return json{{"ugroup_of", groupoid_to_json(g.groupoid())}};
  }
  bad("unreachable group kind");
}

Group group_from_json(const json& j) {
  if (!j.is_object()) bad("group must be an object");
  if (j.contains("free_product")) {
    std::vector<FiniteGroup> factors;
    for (const auto& f : j["free_product"]) factors.push_back(group_table_from_json(f));
    return Group::free_product(std::move(factors));
  }
  if (j.contains("ugroup_of")) return Group::universal(groupoid_from_json(j["ugroup_of"]));
  return Group::finite(group_table_from_json(j));
}

}  // namespace

json paction_to_json(const PartialAction& a) {
  json maps = json::object(), domains = json::object();
  for (const auto& [g, table] : a.partial_maps()) {
    std::string gname = a.group().name_of(g);
    json tj = json::object();
    for (auto [x, y] : table) tj[a.carrier()[x]] = a.carrier()[y];
    maps[gname] = std::move(tj);
    json dom = json::array();
    for (int y : a.domain_of(g)) dom.push_back(a.carrier()[y]);
    domains[gname] = std::move(dom);
  }
  return json{{"group", group_to_json(a.group())},
              {"set", a.carrier()},
              {"domains", domains},
              {"maps", maps}};
}

PartialAction paction_from_json(const json& j) {
  try {
    Group g = group_from_json(field(j, "group"));
    std::vector<std::string> carrier = field(j, "set").get<std::vector<std::string>>();
    std::map<Elem, std::map<int, int>> maps;
    if (j.contains("maps"))
      for (const auto& [gname, table] : j["maps"].items()) {
        Elem e = parse_elem(g, gname);
        std::map<int, int> t;
        for (const auto& [x, y] : table.items())
          t[name_index(carrier, x, "point")] =
              name_index(carrier, y.get<std::string>(), "point");
        maps[e] = std::move(t);
      }
    PartialAction a(std::move(g), std::move(carrier), std::move(maps));
    if (j.contains("domains"))
      for (const auto& [gname, dom] : j["domains"].items()) {
        Elem e = parse_elem(a.group(), gname);
        std::vector<int> expect;
        for (const auto& x : dom)
          expect.push_back(name_index(a.carrier(), x.get<std::string>(), "point"));
        std::sort(expect.begin(), expect.end());
        if (expect != a.domain_of(e))
          bad("domain of " + gname + " does not match the values of its map");
      }
    return a;
  } catch (const json::exception& e) {
    bad(std::string("partial action: ") + e.what());
  } catch (const std::invalid_argument& e) {
    bad(std::string("partial action: ") + e.what());
  }
}

json congruence_to_json(const PartialAction& a, const Congruence& c) {
  json relation = json::array();
  for (int i = 0; i < static_cast<int>(c.block_of.size()); ++i)
    if (c.block_of[i] != i)
      relation.push_back({a.carrier()[c.block_of[i]], a.carrier()[i]});
  json kernel = json::array();
  for (int g : c.kernel)
    if (g != a.group().table().identity()) kernel.push_back(a.group().table().name(g));
  return json{{"relation", relation}, {"kernel", kernel}};
}

Congruence congruence_from_json(const PartialAction& a, const json& j) {
  try {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& row : field(j, "relation")) {
      if (!row.is_array() || row.size() != 2) bad("relation rows are [x, y]");
      pairs.emplace_back(name_index(a.carrier(), row[0].get<std::string>(), "point"),
                         name_index(a.carrier(), row[1].get<std::string>(), "point"));
    }
    std::vector<int> gens;
    for (const auto& gname : field(j, "kernel"))
      gens.push_back(std::get<int>(parse_elem(a.group(), gname.get<std::string>())));
    return make_congruence(a, pairs, gens);
  } catch (const json::exception& e) {
    bad(std::string("congruence: ") + e.what());
  } catch (const std::invalid_argument& e) {
    bad(std::string("congruence: ") + e.what());
  }
}

namespace {

json hom_to_json(const GroupHom& h) {
  const Group& dom = h.dom();
  const Group& cod = h.cod();
  switch (dom.kind()) {
    case Group::Kind::finite: {
      json images = json::object();
      const FiniteGroup& T = dom.table();
      for (int e = 0; e < T.size(); ++e) {
        if (e == T.identity()) continue;
        images[T.name(e)] = cod.name_of(h.apply(Elem{e}));
      }
      return json{{"kind", "finite"}, {"images", images}};
    }
    case Group::Kind::free_product: {
      json factors = json::array();
      for (int k = 0; k < static_cast<int>(dom.factors().size()); ++k) {
        const FiniteGroup& F = dom.factors()[k];
        json images = json::object();
        for (int e = 0; e < F.size(); ++e) {
          if (e == F.identity()) continue;
          images[F.name(e)] = cod.name_of(h.apply(Elem{FpWord{{{k, e}}}}));
        }
        factors.push_back(json{{"images", images}});
      }
      return json{{"kind", "free_product"}, {"factors", factors}};
    }
    case Group::Kind::universal: {
      json images = json::object();
      const Groupoid& g = dom.groupoid();
      for (int m = 0; m < g.num_morphisms(); ++m) {
        if (g.is_identity(m)) continue;
        images[g.morphism_name(m)] = cod.name_of(h.apply(Elem{UWord{{m}}}));
      }
      return json{{"kind", "universal"}, {"images", images}};
    }
  }
  bad("unreachable group kind");
}

GroupHom hom_from_json(const json& j, const Group& dom, const Group& cod) {
  std::string kind = field(j, "kind").get<std::string>();
  if (kind == "identity") {
    if (!dom.same_group(cod)) bad("identity hom needs equal groups");
    return GroupHom::identity(dom);
  }
  if (kind == "finite") {
    if (dom.kind() != Group::Kind::finite) bad("hom kind does not match the group");
    const FiniteGroup& T = dom.table();
    const json& images = field(j, "images");
    std::vector<Elem> out(T.size(), cod.identity());
    for (int e = 0; e < T.size(); ++e) {
      if (e == T.identity()) continue;
      auto it = images.find(T.name(e));
      if (it == images.end()) bad("hom: no image for element " + T.name(e));
      out[e] = parse_elem(cod, it->get<std::string>());
    }
    return GroupHom::finite(dom, cod, std::move(out));
  }
  if (kind == "free_product") {
    if (dom.kind() != Group::Kind::free_product) bad("hom kind does not match the group");
    const json& factors = field(j, "factors");
    if (factors.size() != dom.factors().size()) bad("hom: one entry per factor required");
    std::vector<GroupHom> factor_homs;
    for (std::size_t k = 0; k < dom.factors().size(); ++k) {
      json sub{{"kind", "finite"}, {"images", field(factors[k], "images")}};
      factor_homs.push_back(hom_from_json(sub, Group::finite(dom.factors()[k]), cod));
    }
    return GroupHom::free_product(dom, cod, std::move(factor_homs));
  }
  if (kind == "universal") {
    if (dom.kind() != Group::Kind::universal) bad("hom kind does not match the group");
    const Groupoid& g = dom.groupoid();
    const json& images = field(j, "images");
    std::map<int, Elem> out;
    for (int m = 0; m < g.num_morphisms(); ++m) {
      if (g.is_identity(m)) continue;
      auto it = images.find(g.morphism_name(m));
      if (it == images.end()) bad("hom: no image for morphism " + g.morphism_name(m));
      out[m] = parse_elem(cod, it->get<std::string>());
    }
    return GroupHom::universal(dom, cod, std::move(out));
  }
  bad("unknown hom kind \"" + kind + "\"");
}

}  // namespace

json pa_morphism_to_json(const PAMorphism& f, const PartialAction& from,
                         const PartialAction& to) {
  json map = json::object();
  for (int x = 0; x < from.carrier_size(); ++x)
    map[from.carrier()[x]] = to.carrier()[f.map0[x]];
  return json{{"map", map}, {"hom", hom_to_json(f.hom)}};
}

PAMorphism pa_morphism_from_json(const json& j, const PartialAction& from,
                                 const PartialAction& to) {
  try {
    const json& map = field(j, "map");
    std::vector<int> map0(from.carrier_size());
    for (int x = 0; x < from.carrier_size(); ++x) {
      auto it = map.find(from.carrier()[x]);
      if (it == map.end()) bad("morphism: no image for point " + from.carrier()[x]);
      map0[x] = name_index(to.carrier(), it->get<std::string>(), "point");
    }
    return PAMorphism{std::move(map0),
                      hom_from_json(field(j, "hom"), from.group(), to.group())};
  } catch (const json::exception& e) {
    bad(std::string("morphism: ") + e.what());
  } catch (const std::invalid_argument& e) {
    bad(std::string("morphism: ") + e.what());
  }
}

json quotient_hom_to_json(const Groupoid& g, const FiniteQuotientHom& q) {
  json images = json::object();
  for (const auto& [m, e] : q.images)
    images[g.morphism_name(m)] = q.target.name(e);
  return json{{"target", group_table_to_json(q.target)}, {"images", images}};
}

FiniteQuotientHom quotient_hom_from_json(const Groupoid& g, const json& j) {
  try {
    FiniteQuotientHom q{group_table_from_json(field(j, "target")), {}};
    for (const auto& [mname, ename] : field(j, "images").items()) {
      int m = name_index(g.morphism_names(), mname, "morphism");
      q.images[m] = name_index(q.target.names(), ename.get<std::string>(), "element");
    }
    for (int m = 0; m < g.num_morphisms(); ++m)
      if (!g.is_identity(m) && !q.images.count(m))
        bad("quotient hom: no image for morphism " + g.morphism_name(m));
    return q;
  } catch (const json::exception& e) {
    bad(std::string("quotient hom: ") + e.what());
  }
}

json fword_to_json(const Groupoid& g, const FWord& w) {
  json out = json::array();
  for (const auto& l : w.letters)
    out.push_back({g.morphism_name(l.morphism), l.sign});
  return out;
}

FWord fword_from_json(const Groupoid& g, const json& j) {
  try {
    FWord w;
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != 2) bad("word letters are [morphism, sign]");
      int sign = row[1].get<int>();
      if (sign != 1 && sign != -1) bad("letter sign must be 1 or -1");
      w.letters.push_back(
          {name_index(g.morphism_names(), row[0].get<std::string>(), "morphism"), sign});
    }
    return w;
  } catch (const json::exception& e) {
    bad(std::string("word: ") + e.what());
  }
}

json uword_to_json(const Groupoid& g, const UWord& w) {
  json out = json::array();
  for (int m : w.letters) out.push_back(g.morphism_name(m));
  return out;
}

UWord uword_from_json(const Groupoid& g, const json& j) {
  try {
    UWord w;
    for (const auto& name : j)
      w.letters.push_back(
          name_index(g.morphism_names(), name.get<std::string>(), "morphism"));
    return w;
  } catch (const json::exception& e) {
    bad(std::string("word: ") + e.what());
  }
}

json cover_to_json(const PsiGroupoid& psi, const CoverData& cover) {
  json momentum = json::object(), lambda = json::object();
  const Groupoid& g = psi.groupoid;
  for (std::size_t y = 0; y < cover.set.size(); ++y)
    momentum[cover.set[y]] = g.object_name(cover.act.momentum[y]);
  for (const auto& [m, table] : cover.act.lambda) {
    json t = json::object();
    for (auto [y, y2] : table) t[cover.set[y]] = cover.set[y2];
    lambda[g.morphism_name(m)] = std::move(t);
  }
  return json{{"set", cover.set}, {"momentum", momentum}, {"lambda", lambda}};
}

CoverData cover_from_json(const PsiGroupoid& psi, const PartialAction& theta,
                          const json& j) {
  try {
    CoverData out;
    out.set = field(j, "set").get<std::vector<std::string>>();
    out.act.momentum.assign(out.set.size(), -1);
    for (const auto& [y, x] : field(j, "momentum").items())
      out.act.momentum[name_index(out.set, y, "point")] =
          name_index(theta.carrier(), x.get<std::string>(), "point");
    for (int v : out.act.momentum)
      if (v < 0) bad("momentum is incomplete");
    for (const auto& [mname, table] : field(j, "lambda").items()) {
      auto m = psi.groupoid.morphism_index(mname);
      if (!m) bad("unknown move \"" + mname + "\"");
      std::map<int, int> t;
      for (const auto& [y, y2] : table.items())
        t[name_index(out.set, y, "point")] =
            name_index(out.set, y2.get<std::string>(), "point");
      out.act.lambda[*m] = std::move(t);
    }
    return out;
  } catch (const json::exception& e) {
    bad(std::string("cover: ") + e.what());
  }
}

}  // namespace pact
