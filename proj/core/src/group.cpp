#include "pact/group.hpp"

#include <stdexcept>

namespace pact {

struct Group::Impl {
  Kind kind;
  FiniteGroup table;
  std::vector<FiniteGroup> factors;
  Groupoid groupoid;
};

Group Group::finite(FiniteGroup table) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::finite;
  impl->table = std::move(table);
  return Group(std::move(impl));
}

Group Group::free_product(std::vector<FiniteGroup> factors) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::free_product;
  impl->factors = std::move(factors);
  return Group(std::move(impl));
}

Group Group::universal(Groupoid groupoid) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::universal;
  impl->groupoid = std::move(groupoid);
  return Group(std::move(impl));
}

Group::Kind Group::kind() const { return impl_->kind; }

Elem Group::identity() const {
  switch (impl_->kind) {
    case Kind::finite: return impl_->table.identity();
    case Kind::free_product: return FpWord{};
    case Kind::universal: return UWord{};
  }
  throw std::logic_error("unreachable");
}

Elem Group::multiply(const Elem& a, const Elem& b) const {
  switch (impl_->kind) {
    case Kind::finite: return impl_->table.multiply(std::get<int>(a), std::get<int>(b));
    case Kind::free_product:
      return fp_multiply(impl_->factors, std::get<FpWord>(a), std::get<FpWord>(b));
    case Kind::universal:
      return u_multiply(impl_->groupoid, std::get<UWord>(a), std::get<UWord>(b));
  }
  throw std::logic_error("unreachable");
}

Elem Group::invert(const Elem& a) const {
  switch (impl_->kind) {
    case Kind::finite: return impl_->table.invert(std::get<int>(a));
    case Kind::free_product: return fp_invert(impl_->factors, std::get<FpWord>(a));
    case Kind::universal: return u_invert(impl_->groupoid, std::get<UWord>(a));
  }
  throw std::logic_error("unreachable");
}

bool Group::is_identity(const Elem& a) const { return a == identity(); }

bool Group::contains(const Elem& a) const {
  switch (impl_->kind) {
    case Kind::finite:
      return std::holds_alternative<int>(a) && std::get<int>(a) >= 0 &&
             std::get<int>(a) < impl_->table.size();
    case Kind::free_product:
      return std::holds_alternative<FpWord>(a) &&
             fp_is_normal(impl_->factors, std::get<FpWord>(a));
    case Kind::universal:
      return std::holds_alternative<UWord>(a) &&
             u_is_normal(impl_->groupoid, std::get<UWord>(a));
  }
  return false;
}

std::optional<std::vector<Elem>> Group::enumerate() const {
  switch (impl_->kind) {
    case Kind::finite: {
      std::vector<Elem> out;
      for (int i = 0; i < impl_->table.size(); ++i) out.push_back(i);
      return out;
    }
    case Kind::free_product: {
      // Finite exactly when at most one factor is nontrivial: adjacent
      // letters must come from distinct factors, so words stay short.
      int nontrivial = -1;
      for (size_t i = 0; i < impl_->factors.size(); ++i) {
        if (impl_->factors[i].size() == 1) continue;
        if (nontrivial >= 0) return std::nullopt;
        nontrivial = static_cast<int>(i);
      }
      std::vector<Elem> out{FpWord{}};
      if (nontrivial >= 0)
        for (int e = 0; e < impl_->factors[nontrivial].size(); ++e)
          if (e != impl_->factors[nontrivial].identity())
            out.push_back(FpWord{{{nontrivial, e}}});
      return out;
    }
    case Kind::universal: {
      auto all = enumerate_ugroup(impl_->groupoid);
      if (!all) return std::nullopt;
      std::vector<Elem> out(all->begin(), all->end());
      return out;
    }
  }
  return std::nullopt;
}

std::vector<Elem> Group::generators() const {
  std::vector<Elem> out;
  switch (impl_->kind) {
    case Kind::finite:
      for (int i = 0; i < impl_->table.size(); ++i)
        if (i != impl_->table.identity()) out.push_back(i);
      break;
    case Kind::free_product:
      for (size_t f = 0; f < impl_->factors.size(); ++f)
        for (int e = 0; e < impl_->factors[f].size(); ++e)
          if (e != impl_->factors[f].identity())
            out.push_back(FpWord{{{static_cast<int>(f), e}}});
      break;
    case Kind::universal:
      for (int m = 0; m < impl_->groupoid.num_morphisms(); ++m)
        if (!impl_->groupoid.is_identity(m)) out.push_back(UWord{{m}});
      break;
  }
  return out;
}

std::string Group::name_of(const Elem& a) const {
  switch (impl_->kind) {
    case Kind::finite: return impl_->table.name(std::get<int>(a));
    case Kind::free_product: return fp_name(impl_->factors, std::get<FpWord>(a));
    case Kind::universal: return uword_name(impl_->groupoid, std::get<UWord>(a));
  }
  throw std::logic_error("unreachable");
}

std::optional<Elem> Group::parse(const std::string& name) const {
  switch (impl_->kind) {
    case Kind::finite: {
      auto i = impl_->table.index_of(name);
      if (!i) return std::nullopt;
      return Elem(*i);
    }
    case Kind::free_product: {
      if (name == "1") return Elem(FpWord{});
      FpWord w;
      size_t pos = 0;
      while (pos <= name.size()) {
        size_t next = name.find('*', pos);
        std::string tok =
            name.substr(pos, next == std::string::npos ? next : next - pos);
        size_t colon = tok.find(':');
        if (colon == std::string::npos) return std::nullopt;
        int f;
        try {
          f = std::stoi(tok.substr(0, colon));
        } catch (...) {
          return std::nullopt;
        }
        if (f < 0 || static_cast<size_t>(f) >= impl_->factors.size()) return std::nullopt;
        auto e = impl_->factors[f].index_of(tok.substr(colon + 1));
        if (!e) return std::nullopt;
        w.letters.push_back({f, *e});
        if (next == std::string::npos) break;
        pos = next + 1;
      }
      if (!fp_is_normal(impl_->factors, w)) return std::nullopt;
      return Elem(std::move(w));
    }
    case Kind::universal: {
      auto w = uword_parse(impl_->groupoid, name);
      if (!w || !u_is_normal(impl_->groupoid, *w)) {
        if (name == "1") return Elem(UWord{});
        return std::nullopt;
      }
      return Elem(std::move(*w));
    }
  }
  return std::nullopt;
}

const FiniteGroup& Group::table() const {
  if (impl_->kind != Kind::finite) throw std::logic_error("group: not a finite table");
  return impl_->table;
}

const std::vector<FiniteGroup>& Group::factors() const {
  if (impl_->kind != Kind::free_product)
    throw std::logic_error("group: not a free product");
  return impl_->factors;
}

const Groupoid& Group::groupoid() const {
  if (impl_->kind != Kind::universal)
    throw std::logic_error("group: not a universal group");
  return impl_->groupoid;
}

bool Group::same_group(const Group& other) const {
  if (impl_ == other.impl_) return true;
  if (impl_->kind != other.impl_->kind) return false;
  switch (impl_->kind) {
    case Kind::finite: return impl_->table == other.impl_->table;
    case Kind::free_product: return impl_->factors == other.impl_->factors;
    case Kind::universal:
      return impl_->groupoid.object_names() == other.impl_->groupoid.object_names() &&
             impl_->groupoid.morphism_names() == other.impl_->groupoid.morphism_names() &&
             impl_->groupoid.compose_table() == other.impl_->groupoid.compose_table();
  }
  return false;
}

GroupHom GroupHom::finite(Group dom, Group cod, std::vector<Elem> images) {
  if (dom.kind() != Group::Kind::finite)
    throw std::invalid_argument("hom: finite kind needs a finite domain");
  GroupHom h(Kind::finite, std::move(dom), std::move(cod));
  h.images_ = std::move(images);
  if (static_cast<int>(h.images_.size()) != h.dom_.table().size())
    throw std::invalid_argument("hom: one image per domain element required");
  return h;
}

GroupHom GroupHom::identity(Group g) {
  GroupHom h(Kind::identity, g, g);
  return h;
}

GroupHom GroupHom::free_product(Group dom, Group cod, std::vector<GroupHom> factor_homs) {
  if (dom.kind() != Group::Kind::free_product)
    throw std::invalid_argument("hom: free_product kind needs a free product domain");
  if (factor_homs.size() != dom.factors().size())
    throw std::invalid_argument("hom: one hom per factor required");
  GroupHom h(Kind::free_product, std::move(dom), std::move(cod));
  h.factor_homs_ = std::move(factor_homs);
  return h;
}

GroupHom GroupHom::universal(Group dom, Group cod, std::map<int, Elem> images) {
  if (dom.kind() != Group::Kind::universal)
    throw std::invalid_argument("hom: universal kind needs a universal domain");
  GroupHom h(Kind::universal, std::move(dom), std::move(cod));
  h.gen_images_ = std::move(images);
  return h;
}

Elem GroupHom::apply(const Elem& a) const {
  switch (kind_) {
    case Kind::identity: return a;
    case Kind::finite: return images_[std::get<int>(a)];
    case Kind::free_product: {
      Elem acc = cod_.identity();
      for (const auto& [f, e] : std::get<FpWord>(a).letters)
        acc = cod_.multiply(acc, factor_homs_[f].apply(e));
      return acc;
    }
    case Kind::universal: {
      Elem acc = cod_.identity();
      for (int m : std::get<UWord>(a).letters) {
        auto it = gen_images_.find(m);
        if (it == gen_images_.end())
          throw std::logic_error("hom: no image for morphism letter");
        acc = cod_.multiply(acc, it->second);
      }
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<std::string> GroupHom::validate() const {
  std::vector<std::string> bad;
  switch (kind_) {
    case Kind::identity:
      break;
    case Kind::finite: {
      const FiniteGroup& t = dom_.table();
      for (const Elem& img : images_)
        if (!cod_.contains(img)) {
          bad.push_back("image outside the codomain");
          return bad;
        }
      if (images_[t.identity()] != cod_.identity())
        bad.push_back("identity is not preserved");
      for (int a = 0; a < t.size() && bad.size() < 8; ++a)
        for (int b = 0; b < t.size(); ++b)
          if (images_[t.multiply(a, b)] !=
              cod_.multiply(images_[a], images_[b])) {
            bad.push_back("multiplicativity fails at " + t.name(a) + "*" + t.name(b));
            break;
          }
      break;
    }
    case Kind::free_product:
      for (size_t f = 0; f < factor_homs_.size(); ++f) {
        if (!factor_homs_[f].cod().same_group(cod_)) {
          bad.push_back("factor hom " + std::to_string(f) + " has a different codomain");
          continue;
        }
        for (auto& m : factor_homs_[f].validate())
          bad.push_back("factor " + std::to_string(f) + ": " + m);
      }
      break;
    case Kind::universal: {
      const Groupoid& g = dom_.groupoid();
      for (int m = 0; m < g.num_morphisms(); ++m) {
        if (g.is_identity(m)) continue;
        auto it = gen_images_.find(m);
        if (it == gen_images_.end()) {
          bad.push_back("no image for generator " + g.morphism_name(m));
          return bad;
        }
        if (!cod_.contains(it->second)) {
          bad.push_back("image of " + g.morphism_name(m) + " outside the codomain");
          return bad;
        }
      }
      auto img = [&](int m) {
        return g.is_identity(m) ? cod_.identity() : gen_images_.at(m);
      };
      // Defining relations: images must multiply like composable morphisms.
      for (int a = 0; a < g.num_morphisms() && bad.size() < 8; ++a)
        for (int b = 0; b < g.num_morphisms(); ++b) {
          auto c = g.compose(a, b);
          if (!c) continue;
          if (cod_.multiply(img(a), img(b)) != img(*c))
            bad.push_back("relation fails at " + g.morphism_name(a) + " o " +
                          g.morphism_name(b));
        }
      break;
    }
  }
  return bad;
}

std::vector<Elem> GroupHom::kernel() const {
  auto all = dom_.enumerate();
  if (!all) throw std::logic_error("hom: kernel needs an enumerable domain");
  std::vector<Elem> out;
  for (const Elem& a : *all)
    if (cod_.is_identity(apply(a))) out.push_back(a);
  return out;
}

bool GroupHom::equal(const GroupHom& other) const {
  if (!dom_.same_group(other.dom_) || !cod_.same_group(other.cod_)) return false;
  for (const Elem& a : dom_.generators())
    if (apply(a) != other.apply(a)) return false;
  return true;
}

GroupHom GroupHom::compose(const GroupHom& outer, const GroupHom& inner) {
  if (!inner.cod().same_group(outer.dom()))
    throw std::invalid_argument("hom composition: middle groups differ");
  switch (inner.kind_) {
    case Kind::identity:
      return outer;
    case Kind::finite: {
      std::vector<Elem> images;
      images.reserve(inner.images_.size());
      for (const Elem& a : inner.images_) images.push_back(outer.apply(a));
      return GroupHom::finite(inner.dom_, outer.cod_, std::move(images));
    }
    case Kind::free_product: {
      std::vector<GroupHom> homs;
      homs.reserve(inner.factor_homs_.size());
      for (const GroupHom& h : inner.factor_homs_) homs.push_back(compose(outer, h));
      return GroupHom::free_product(inner.dom_, outer.cod_, std::move(homs));
    }
    case Kind::universal: {
      std::map<int, Elem> images;
      for (const auto& [m, e] : inner.gen_images_) images[m] = outer.apply(e);
      return GroupHom::universal(inner.dom_, outer.cod_, std::move(images));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace pact
