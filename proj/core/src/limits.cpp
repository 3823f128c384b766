#include "pact/limits.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pact {

namespace {

const FiniteGroup& finite_table_of(const PartialAction& a, const char* op) {
  if (a.group().kind() != Group::Kind::finite)
    throw std::logic_error(std::string(op) + ": group needs a finite table");
  return a.group().table();
}

// Builds a homomorphism from generator images, dispatching on the domain
// kind.  image_of must send the embedded generator to an element of cod.
GroupHom hom_by_images(const Group& dom, const Group& cod,
                       const std::function<Elem(const Elem&)>& image_of) {
  switch (dom.kind()) {
    case Group::Kind::finite: {
      const FiniteGroup& T = dom.table();
      std::vector<Elem> images(T.size());
      for (int e = 0; e < T.size(); ++e)
        images[e] = e == T.identity() ? cod.identity() : image_of(Elem{e});
      return GroupHom::finite(dom, cod, std::move(images));
    }
    case Group::Kind::free_product: {
      std::vector<GroupHom> factor_homs;
      for (int k = 0; k < static_cast<int>(dom.factors().size()); ++k) {
        const FiniteGroup& F = dom.factors()[k];
        Group fk = Group::finite(F);
        std::vector<Elem> images(F.size());
        for (int e = 0; e < F.size(); ++e)
          images[e] = e == F.identity() ? cod.identity()
                                        : image_of(Elem{FpWord{{{k, e}}}});
        factor_homs.push_back(GroupHom::finite(fk, cod, std::move(images)));
      }
      return GroupHom::free_product(dom, cod, std::move(factor_homs));
    }
    case Group::Kind::universal: {
      const Groupoid& g = dom.groupoid();
      std::map<int, Elem> images;
      for (int m = 0; m < g.num_morphisms(); ++m)
        if (!g.is_identity(m)) images[m] = image_of(Elem{UWord{{m}}});
      return GroupHom::universal(dom, cod, std::move(images));
    }
  }
  throw std::logic_error("unreachable group kind");
}

}  // namespace

ProductResult product_paction(const PartialAction& a, const PartialAction& b) {
  const FiniteGroup& A = finite_table_of(a, "product");
  const FiniteGroup& B = finite_table_of(b, "product");
  const int nb = b.carrier_size();
  auto pt = [nb](int x, int y) { return x * nb + y; };

  std::vector<std::string> carrier(a.carrier_size() * b.carrier_size());
  for (int x = 0; x < a.carrier_size(); ++x)
    for (int y = 0; y < b.carrier_size(); ++y)
      carrier[pt(x, y)] = "(" + a.carrier()[x] + "|" + b.carrier()[y] + ")";

  Group P = Group::finite(FiniteGroup::direct_product(A, B));
  auto pg = [&](int g, int h) { return g * B.size() + h; };

  // A component acts totally when its element is the identity, so the
  // support of the product pairs each side's support with the identity too.
  auto side_tables = [](const PartialAction& act, const FiniteGroup& T) {
    std::map<int, std::map<int, int>> out;
    std::map<int, int> total;
    for (int x = 0; x < act.carrier_size(); ++x) total[x] = x;
    out[T.identity()] = total;
    for (const auto& [g, table] : act.partial_maps()) out[std::get<int>(g)] = table;
    return out;
  };
  auto ta = side_tables(a, A), tb = side_tables(b, B);

  std::map<Elem, std::map<int, int>> maps;
  for (const auto& [g, tg] : ta)
    for (const auto& [h, th] : tb) {
      if (g == A.identity() && h == B.identity()) continue;
      std::map<int, int> table;
      for (auto [x, x2] : tg)
        for (auto [y, y2] : th) table[pt(x, y)] = pt(x2, y2);
      if (!table.empty()) maps[Elem{pg(g, h)}] = std::move(table);
    }
  PartialAction prod(P, std::move(carrier), std::move(maps));

  PAMorphism proj1{std::vector<int>(prod.carrier_size()),
                   hom_by_images(P, a.group(), [&](const Elem& e) {
                     return Elem{std::get<int>(e) / B.size()};
                   })};
  PAMorphism proj2{std::vector<int>(prod.carrier_size()),
                   hom_by_images(P, b.group(), [&](const Elem& e) {
                     return Elem{std::get<int>(e) % B.size()};
                   })};
  for (int x = 0; x < a.carrier_size(); ++x)
    for (int y = 0; y < b.carrier_size(); ++y) {
      proj1.map0[pt(x, y)] = x;
      proj2.map0[pt(x, y)] = y;
    }
  return ProductResult{std::move(prod), std::move(proj1), std::move(proj2)};
}

PAMorphism product_mediator(const ProductResult& p, const PartialAction& a,
                            const PartialAction& b, const PartialAction& z,
                            const PAMorphism& f, const PAMorphism& g) {
  const int nb = b.carrier_size();
  const int gb = finite_table_of(b, "product").size();
  (void)finite_table_of(a, "product");
  PAMorphism out{std::vector<int>(z.carrier_size()),
                 hom_by_images(z.group(), p.action.group(), [&](const Elem& e) {
                   int i = std::get<int>(f.hom.apply(e));
                   int j = std::get<int>(g.hom.apply(e));
                   return Elem{i * gb + j};
                 })};
  for (int x = 0; x < z.carrier_size(); ++x)
    out.map0[x] = f.map0[x] * nb + g.map0[x];
  return out;
}

EqualizerResult equalizer_paction(const PartialAction& a, const PartialAction& b,
                                  const PAMorphism& f, const PAMorphism& g) {
  const FiniteGroup& A = finite_table_of(a, "equalizer");
  (void)b;
  std::vector<int> points, elems;
  for (int x = 0; x < a.carrier_size(); ++x)
    if (f.map0[x] == g.map0[x]) points.push_back(x);
  for (int e = 0; e < A.size(); ++e)
    if (f.hom.apply(Elem{e}) == g.hom.apply(Elem{e})) elems.push_back(e);

  FiniteGroup E = A.subgroup(elems);
  auto point_pos = [&](int x) {
    auto it = std::lower_bound(points.begin(), points.end(), x);
    return it != points.end() && *it == x ? static_cast<int>(it - points.begin())
                                          : -1;
  };

  std::vector<std::string> carrier;
  for (int x : points) carrier.push_back(a.carrier()[x]);
  std::map<Elem, std::map<int, int>> maps;
  for (int pos = 0; pos < static_cast<int>(elems.size()); ++pos) {
    int e = elems[pos];
    auto it = a.partial_maps().find(Elem{e});
    if (it == a.partial_maps().end()) continue;
    std::map<int, int> table;
    for (auto [x, y] : it->second) {
      int px = point_pos(x);
      if (px < 0) continue;
      int py = point_pos(y);
      if (py < 0)
        throw std::invalid_argument(
            "equalizer: an agreeing element moves an agreeing point off the "
            "equalizer; the maps are not equivariant");
      table[px] = py;
    }
    if (!table.empty()) maps[Elem{pos}] = std::move(table);
  }
  PartialAction action(Group::finite(std::move(E)), std::move(carrier),
                       std::move(maps));
  PAMorphism include{points,
                     hom_by_images(action.group(), a.group(), [&](const Elem& e) {
                       return Elem{elems[std::get<int>(e)]};
                     })};
  return EqualizerResult{std::move(action), std::move(include), std::move(points),
                         std::move(elems)};
}

PAMorphism equalizer_mediator(const EqualizerResult& e, const PartialAction& a,
                              const PartialAction& w, const PAMorphism& h) {
  (void)a;
  auto elem_pos = [&](int g) {
    auto it = std::lower_bound(e.elems.begin(), e.elems.end(), g);
    if (it == e.elems.end() || *it != g)
      throw std::invalid_argument("equalizer: cone hom does not land in the agreeing subgroup");
    return static_cast<int>(it - e.elems.begin());
  };
  PAMorphism out{std::vector<int>(w.carrier_size()),
                 hom_by_images(w.group(), e.action.group(), [&](const Elem& x) {
                   return Elem{elem_pos(std::get<int>(h.hom.apply(x)))};
                 })};
  for (int x = 0; x < w.carrier_size(); ++x) {
    auto it = std::lower_bound(e.points.begin(), e.points.end(), h.map0[x]);
    if (it == e.points.end() || *it != h.map0[x])
      throw std::invalid_argument("equalizer: cone map does not land in the agreeing points");
    out.map0[x] = static_cast<int>(it - e.points.begin());
  }
  return out;
}

CoproductResult coproduct_paction(const std::vector<PartialAction>& parts) {
  if (parts.empty()) {
    PartialAction init = initial_paction();
    return CoproductResult{init, {}};
  }
  if (parts.size() == 1)
    return CoproductResult{parts[0], {identity_pa_morphism(parts[0])}};

  std::vector<FiniteGroup> factors;
  std::vector<std::string> carrier;
  std::vector<int> offset;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    factors.push_back(finite_table_of(parts[i], "coproduct"));
    offset.push_back(static_cast<int>(carrier.size()));
    for (const auto& name : parts[i].carrier())
      carrier.push_back(std::to_string(i) + ":" + name);
  }
  Group F = Group::free_product(factors);

  std::map<Elem, std::map<int, int>> maps;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& [g, table] : parts[i].partial_maps()) {
      std::map<int, int> shifted;
      for (auto [x, y] : table) shifted[x + offset[i]] = y + offset[i];
      maps[Elem{FpWord{{{static_cast<int>(i), std::get<int>(g)}}}}] = std::move(shifted);
    }
  PartialAction action(F, std::move(carrier), std::move(maps));

  CoproductResult out{std::move(action), {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    PAMorphism in{std::vector<int>(parts[i].carrier_size()),
                  hom_by_images(parts[i].group(), F, [&](const Elem& e) {
                    return Elem{FpWord{{{static_cast<int>(i), std::get<int>(e)}}}};
                  })};
    for (int x = 0; x < parts[i].carrier_size(); ++x) in.map0[x] = x + offset[i];
    out.inject.push_back(std::move(in));
  }
  return out;
}

PAMorphism coproduct_mediator(const CoproductResult& c,
                              const std::vector<PartialAction>& parts,
                              const PartialAction& w,
                              const std::vector<PAMorphism>& hs) {
  if (hs.size() != parts.size())
    throw std::invalid_argument("coproduct: one cocone leg per part required");
  if (parts.empty()) return from_initial(w);
  if (parts.size() == 1) return hs[0];

  std::vector<GroupHom> legs;
  for (const auto& h : hs) legs.push_back(h.hom);
  PAMorphism out{std::vector<int>(c.action.carrier_size()),
                 GroupHom::free_product(c.action.group(), w.group(), std::move(legs))};
  int at = 0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (int x = 0; x < parts[i].carrier_size(); ++x) out.map0[at++] = hs[i].map0[x];
  return out;
}

CoequalizerResult coequalizer_paction(const PartialAction& a, const PartialAction& b,
                                      const PAMorphism& f, const PAMorphism& g) {
  finite_table_of(b, "coequalizer");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < a.carrier_size(); ++x) pairs.emplace_back(f.map0[x], g.map0[x]);
  std::vector<int> kernel_gens;
  for (const Elem& gen : a.group().generators()) {
    int fi = std::get<int>(f.hom.apply(gen));
    int gi = std::get<int>(g.hom.apply(gen));
    kernel_gens.push_back(b.group().table().multiply(fi, b.group().table().invert(gi)));
  }
  Congruence cong = congruence_closure(b, pairs, kernel_gens);
  QuotientResult q = quotient_paction(b, cong);
  return CoequalizerResult{std::move(cong), std::move(q)};
}

std::optional<PAMorphism> coequalizer_mediator(const CoequalizerResult& c,
                                               const PartialAction& b,
                                               const PartialAction& w,
                                               const PAMorphism& h,
                                               std::vector<std::string>* why) {
  return factor_through(h, b, c.quotient, w, why);
}

PartialAction initial_paction() {
  return PartialAction(Group::finite(FiniteGroup::trivial()), {}, {});
}

PartialAction terminal_paction() {
  return PartialAction(Group::finite(FiniteGroup::trivial()), {"pt"}, {});
}

PAMorphism from_initial(const PartialAction& to) {
  return PAMorphism{{}, GroupHom::finite(initial_paction().group(), to.group(),
                                         {to.group().identity()})};
}

PAMorphism to_terminal(const PartialAction& from) {
  PartialAction t = terminal_paction();
  PAMorphism out{std::vector<int>(from.carrier_size(), 0),
                 hom_by_images(from.group(), t.group(),
                               [&](const Elem&) { return t.group().identity(); })};
  return out;
}

}  // namespace pact
