#include "pact/ugroup.hpp"

namespace pact {

bool u_is_normal(const Groupoid& g, const UWord& w) {
  for (int m : w.letters)
    if (m < 0 || m >= g.num_morphisms() || g.is_identity(m)) return false;
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (g.src(w.letters[i]) == g.tgt(w.letters[i + 1])) return false;
  return true;
}

UWord u_letter(const Groupoid& g, int morphism) {
  if (g.is_identity(morphism)) return {};
  return UWord{{morphism}};
}

UWord u_multiply(const Groupoid& g, const UWord& a, const UWord& b) {
  UWord out = a;
  for (size_t i = 0; i < b.letters.size(); ++i) {
    int cur = b.letters[i];
    bool dropped = false;
    while (!out.letters.empty()) {
      auto joined = g.compose(out.letters.back(), cur);
      if (!joined) break;
      out.letters.pop_back();
      if (g.is_identity(*joined)) {
        dropped = true;
        break;
      }
      cur = *joined;
    }
    if (!dropped) out.letters.push_back(cur);
  }
  return out;
}

UWord u_invert(const Groupoid& g, const UWord& a) {
  UWord out;
  out.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    out.letters.push_back(g.inverse(*it));
  return out;
}

UWord project(const Groupoid& g, const FWord& w) {
  UWord acc;
  for (const auto& l : w.letters)
    acc = u_multiply(g, acc, u_letter(g, eval_letter(g, l)));
  return acc;
}

UPsiValue psi_of(const Groupoid& g, const UWord& w) {
  if (w.letters.empty()) return {UPsiValue::identity_map, -1};
  if (w.letters.size() == 1) return {UPsiValue::morphism, w.letters[0]};
  (void)g;
  return {UPsiValue::empty, -1};
}

std::vector<std::string> presentation_check(const Groupoid& g) {
  std::vector<std::string> bad;
  for (int x = 0; x < g.num_objects(); ++x)
    if (!u_letter(g, g.identity_at(x)).empty()) {
      bad.push_back("identity class of " + g.object_name(x) + " is not trivial");
      return bad;
    }
  for (int a = 0; a < g.num_morphisms() && bad.size() < 8; ++a)
    for (int b = 0; b < g.num_morphisms(); ++b) {
      UWord prod = u_multiply(g, u_letter(g, a), u_letter(g, b));
      auto comp = g.compose(a, b);
      if (comp && prod != u_letter(g, *comp)) {
        bad.push_back("relation: class of " + g.morphism_name(a) + " o " +
                      g.morphism_name(b) + " differs from the letter product");
      } else if (!comp && !g.is_identity(a) && !g.is_identity(b) &&
                 prod != UWord{{a, b}}) {
        bad.push_back("relation: non-composable letters " + g.morphism_name(a) + ", " +
                      g.morphism_name(b) + " collapsed");
      }
    }
  return bad;
}

std::string uword_name(const Groupoid& g, const UWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += "*";
    s += g.morphism_name(w.letters[i]);
  }
  return s;
}

std::optional<UWord> uword_parse(const Groupoid& g, const std::string& name) {
  if (name == "1") return UWord{};
  UWord out;
  size_t pos = 0;
  while (pos <= name.size()) {
    size_t next = name.find('*', pos);
    std::string tok = name.substr(pos, next == std::string::npos ? next : next - pos);
    auto m = g.morphism_index(tok);
    if (!m) return std::nullopt;
    out.letters.push_back(*m);
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

std::optional<std::vector<UWord>> enumerate_ugroup(const Groupoid& g) {
  for (int a = 0; a < g.num_morphisms(); ++a) {
    if (g.is_identity(a)) continue;
    for (int b = 0; b < g.num_morphisms(); ++b) {
      if (g.is_identity(b)) continue;
      if (g.src(a) != g.tgt(b)) return std::nullopt;  // a two-letter form exists
    }
  }
  std::vector<UWord> out{UWord{}};
  for (int m = 0; m < g.num_morphisms(); ++m)
    if (!g.is_identity(m)) out.push_back(UWord{{m}});
  return out;
}

}  // namespace pact
