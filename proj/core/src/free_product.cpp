#include "pact/free_product.hpp"

namespace pact {

FpWord fp_multiply(const std::vector<FiniteGroup>& factors, const FpWord& a,
                   const FpWord& b) {
  FpWord out = a;
  for (const auto& letter : b.letters) {
    if (out.letters.empty() || out.letters.back().first != letter.first) {
      out.letters.push_back(letter);
      continue;
    }
    const auto& g = factors[letter.first];
    int prod = g.multiply(out.letters.back().second, letter.second);
    out.letters.pop_back();
    if (prod != g.identity()) out.letters.push_back({letter.first, prod});
    // A dropped identity exposes a new junction, but the exposed letters come
    // from words already in normal form, so the factors there differ unless
    // the next b-letter merges again; the loop handles that case.
  }
  return out;
}

FpWord fp_invert(const std::vector<FiniteGroup>& factors, const FpWord& a) {
  FpWord out;
  out.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    out.letters.push_back({it->first, factors[it->first].invert(it->second)});
  return out;
}

bool fp_is_normal(const std::vector<FiniteGroup>& factors, const FpWord& a) {
  int prev = -1;
  for (const auto& [f, e] : a.letters) {
    if (f < 0 || static_cast<size_t>(f) >= factors.size()) return false;
    if (e < 0 || e >= factors[f].size() || e == factors[f].identity()) return false;
    if (f == prev) return false;
    prev = f;
  }
  return true;
}

std::string fp_name(const std::vector<FiniteGroup>& factors, const FpWord& a) {
  if (a.letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < a.letters.size(); ++i) {
    if (i) s += "*";
    s += std::to_string(a.letters[i].first) + ":" +
         factors[a.letters[i].first].name(a.letters[i].second);
  }
  return s;
}

}  // namespace pact
