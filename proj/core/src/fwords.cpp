#include "pact/fwords.hpp"

#include <stdexcept>

namespace pact {

FWord free_reduce(const FWord& w) {
  FWord out;
  for (const auto& l : w.letters) {
    if (!out.letters.empty() && out.letters.back().morphism == l.morphism &&
        out.letters.back().sign == -l.sign)
      out.letters.pop_back();
    else
      out.letters.push_back(l);
  }
  return out;
}

bool is_free_reduced(const FWord& w) {
  for (size_t i = 0; i + 1 < w.letters.size(); ++i)
    if (w.letters[i].morphism == w.letters[i + 1].morphism &&
        w.letters[i].sign == -w.letters[i + 1].sign)
      return false;
  return true;
}

FWord fword_concat(const FWord& a, const FWord& b) {
  FWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return free_reduce(out);
}

FWord fword_invert(const FWord& a) {
  FWord out;
  out.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it)
    out.letters.push_back({it->morphism, -it->sign});
  return out;
}

std::string fword_str(const Groupoid& g, const FWord& w) {
  if (w.letters.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += ".";
    s += g.morphism_name(w.letters[i].morphism);
    if (w.letters[i].sign < 0) s += "^-1";
  }
  return s;
}

int eval_letter(const Groupoid& g, const FLetter& l) {
  return l.sign > 0 ? l.morphism : g.inverse(l.morphism);
}

PiValue pi_eval(const Groupoid& g, const FWord& w) {
  FWord r = free_reduce(w);
  if (r.letters.empty()) return {PiValue::identity_map, -1};
  int acc = eval_letter(g, r.letters[0]);
  for (size_t i = 1; i < r.letters.size(); ++i) {
    auto next = g.compose(acc, eval_letter(g, r.letters[i]));
    if (!next) return {PiValue::empty, -1};
    acc = *next;
  }
  return {PiValue::morphism, acc};
}

bool is_path(const Groupoid& g, const FWord& w) {
  return pi_eval(g, w).kind == PiValue::morphism;
}

bool is_loop(const Groupoid& g, const FWord& w) {
  PiValue v = pi_eval(g, w);
  return v.kind == PiValue::morphism && g.is_identity(v.m);
}

int block_src(const Groupoid& g, const PathBlock& b) { return g.src(b.value); }
int block_tgt(const Groupoid& g, const PathBlock& b) { return g.tgt(b.value); }

std::vector<PathBlock> path_decompose(const Groupoid& g, const FWord& w) {
  FWord r = free_reduce(w);
  std::vector<PathBlock> blocks;
  for (const auto& l : r.letters) {
    int m = eval_letter(g, l);
    if (!blocks.empty()) {
      auto joined = g.compose(blocks.back().value, m);
      if (joined) {
        blocks.back().word.letters.push_back(l);
        blocks.back().value = *joined;
        continue;
      }
    }
    blocks.push_back({FWord{{l}}, m});
  }
  return blocks;
}

FWord MinimalElement::word() const {
  return fword_concat(fword_concat(conjugator, loop), fword_invert(conjugator));
}

namespace {

// Object a loop word sits at (tgt of its identity-morphism value).
int loop_object(const Groupoid& g, const FWord& u) {
  PiValue v = pi_eval(g, u);
  if (v.kind != PiValue::morphism || !g.is_identity(v.m))
    throw std::invalid_argument("not a loop");
  return g.tgt(v.m);
}

FWord concat_blocks(const std::vector<PathBlock>& blocks, size_t from, size_t to) {
  FWord out;
  for (size_t i = from; i < to; ++i)
    out.letters.insert(out.letters.end(), blocks[i].word.letters.begin(),
                       blocks[i].word.letters.end());
  return out;
}

}  // namespace

std::vector<std::string> validate_minimal_element(const Groupoid& g,
                                                  const MinimalElement& e) {
  std::vector<std::string> bad;
  if (!is_free_reduced(e.conjugator)) bad.push_back("conjugator is not freely reduced");
  if (!is_free_reduced(e.loop)) bad.push_back("loop word is not freely reduced");
  PiValue v = pi_eval(g, e.loop);
  if (v.kind != PiValue::morphism || !g.is_identity(v.m)) {
    bad.push_back("loop word does not evaluate to an identity morphism");
    return bad;
  }
  auto blocks = path_decompose(g, e.conjugator);
  for (const auto& b : blocks)
    if (g.is_identity(b.value)) {
      bad.push_back("conjugator contains a loop block");
      break;
    }
  if (!blocks.empty() && block_src(g, blocks.back()) == g.tgt(v.m))
    bad.push_back("conjugator links the loop");
  return bad;
}

std::vector<MinimalElement> minimal_decompose(const Groupoid& g, const FWord& z,
                                              const FWord& u) {
  FWord cz = free_reduce(z);
  FWord cu = free_reduce(u);
  loop_object(g, cu);  // throws "not a loop" otherwise

  std::vector<PathBlock> blocks = path_decompose(g, cz);
  // Fold linked tail blocks of z into the loop; the junction uncovered by a
  // fold is a junction of z itself, hence unlinked, so one pass suffices.
  while (!blocks.empty() && block_src(g, blocks.back()) == loop_object(g, cu)) {
    const FWord& tail = blocks.back().word;
    cu = fword_concat(fword_concat(tail, cu), fword_invert(tail));
    blocks.pop_back();
  }

  size_t r = 0;
  for (; r < blocks.size(); ++r)
    if (g.is_identity(blocks[r].value)) break;
  if (r == blocks.size())
    return {MinimalElement{concat_blocks(blocks, 0, blocks.size()), cu}};

  FWord head = concat_blocks(blocks, 0, r);
  FWord rest = concat_blocks(blocks, r + 1, blocks.size());
  MinimalElement left{head, blocks[r].word};
  MinimalElement right{head, fword_invert(blocks[r].word)};
  std::vector<MinimalElement> out{left};
  for (auto& e : minimal_decompose(g, fword_concat(head, rest), cu))
    out.push_back(std::move(e));
  out.push_back(right);
  return out;
}

FWord representation_word(const MinimalRepresentation& rep) {
  FWord acc;
  for (const auto& e : rep) acc = fword_concat(acc, e.word());
  return acc;
}

bool is_reduced_representation(const Groupoid& g, const MinimalRepresentation& rep) {
  for (const auto& e : rep)
    if (!validate_minimal_element(g, e).empty()) return false;
  for (size_t i = 0; i < rep.size(); ++i) {
    FWord acc;
    for (size_t j = i; j < rep.size(); ++j) {
      acc = fword_concat(acc, rep[j].word());
      if (acc.empty()) return false;
    }
  }
  for (size_t i = 0; i + 1 < rep.size(); ++i)
    if (rep[i].conjugator == rep[i + 1].conjugator &&
        loop_object(g, rep[i].loop) == loop_object(g, rep[i + 1].loop))
      return false;
  return true;
}

MinimalRepresentation reduce_representation(const Groupoid& g,
                                            const MinimalRepresentation& rep) {
  MinimalRepresentation cur = rep;
  for (bool changed = true; changed;) {
    changed = false;
    // Cancelling subproducts are erased before any merge.
    for (size_t i = 0; i < cur.size() && !changed; ++i) {
      FWord acc;
      for (size_t j = i; j < cur.size(); ++j) {
        acc = fword_concat(acc, cur[j].word());
        if (acc.empty()) {
          cur.erase(cur.begin() + i, cur.begin() + j + 1);
          changed = true;
          break;
        }
      }
    }
    if (changed) continue;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      if (cur[i].conjugator != cur[i + 1].conjugator ||
          loop_object(g, cur[i].loop) != loop_object(g, cur[i + 1].loop))
        continue;
      FWord merged = fword_concat(cur[i].loop, cur[i + 1].loop);
      // A cancelling merge is a cancelling subproduct, already erased above.
      cur[i].loop = merged;
      cur.erase(cur.begin() + i + 1);
      changed = true;
      break;
    }
  }
  return cur;
}

namespace {

void require_reduced_pair(const Groupoid& g, const MinimalElement& xi,
                          const MinimalElement& phi) {
  if (fword_concat(xi.word(), phi.word()).empty())
    throw std::invalid_argument("not reduced: pair product cancels");
  if (xi.conjugator == phi.conjugator &&
      loop_object(g, xi.loop) == loop_object(g, phi.loop))
    throw std::invalid_argument("not reduced: equal conjugators with linked loops");
}

}  // namespace

PairClass classify_pair(const Groupoid& g, const MinimalElement& xi,
                        const MinimalElement& phi) {
  require_reduced_pair(g, xi, phi);
  auto zb = path_decompose(g, xi.conjugator);
  auto yb = path_decompose(g, phi.conjugator);
  if (yb.size() >= zb.size()) return PairClass::P;
  for (size_t i = 0; i < yb.size(); ++i)
    if (yb[i].word != zb[i].word) return PairClass::P;
  // The leftover conjugator block right after the cancelled prefix absorbs
  // the loop exactly when its target is the loop object.
  if (block_tgt(g, zb[yb.size()]) != loop_object(g, phi.loop)) return PairClass::P;
  return PairClass::C;
}

MinimalElement switch_pair(const Groupoid& g, const MinimalElement& xi,
                           const MinimalElement& phi) {
  if (classify_pair(g, xi, phi) != PairClass::C)
    throw std::invalid_argument("switch_pair: not a C-pair");
  FWord k = fword_concat(fword_invert(xi.conjugator), phi.word());
  MinimalElement out{fword_invert(k), xi.loop};
  if (!validate_minimal_element(g, out).empty())
    throw std::logic_error("switch_pair: produced element is not minimal");
  if (fword_concat(phi.word(), out.word()) != fword_concat(xi.word(), phi.word()))
    throw std::logic_error("switch_pair: element not preserved");
  return out;
}

namespace {

MinimalRepresentation p_rec(const Groupoid& g, const MinimalRepresentation& rep,
                            std::vector<PStep>* trace) {
  const size_t n = rep.size();
  if (n <= 1) return rep;
  MinimalRepresentation tail(rep.begin() + 1, rep.end());
  tail = p_rec(g, tail, trace);
  MinimalRepresentation cur{rep[0]};
  cur.insert(cur.end(), tail.begin(), tail.end());
  cur = reduce_representation(g, cur);
  if (trace) trace->push_back({"prepend head and reduce", cur});
  if (cur.size() < n) return p_rec(g, cur, trace);

  for (size_t i = 0; i + 1 < cur.size(); ++i) {
    if (classify_pair(g, cur[i], cur[i + 1]) == PairClass::P) break;
    MinimalElement moved = switch_pair(g, cur[i], cur[i + 1]);
    MinimalRepresentation next = cur;
    next[i] = cur[i + 1];
    next[i + 1] = moved;
    next = reduce_representation(g, next);
    if (trace) trace->push_back({"switch at position " + std::to_string(i), next});
    if (next.size() < n) return p_rec(g, next, trace);
    cur = next;
  }
  return cur;
}

}  // namespace

MinimalRepresentation p_algorithm(const Groupoid& g, const MinimalRepresentation& rep,
                                  std::vector<PStep>* trace) {
  MinimalRepresentation work = reduce_representation(g, rep);
  if (representation_word(work).empty())
    throw std::invalid_argument("represents identity");
  if (trace) trace->push_back({"reduced input", work});
  return p_rec(g, work, trace);
}

bool has_p_property(const Groupoid& g, const MinimalRepresentation& rep) {
  for (size_t i = 0; i + 1 < rep.size(); ++i)
    if (classify_pair(g, rep[i], rep[i + 1]) != PairClass::P) return false;
  return true;
}

LoopCheckResult loop_check(const Groupoid& g, const MinimalRepresentation& rep) {
  LoopCheckResult out;
  out.normalized = p_algorithm(g, rep, &out.trace);
  FWord w = representation_word(rep);
  PiValue v = pi_eval(g, w);
  out.pi_nonempty = v.kind != PiValue::empty;
  out.loop = is_loop(g, w);
  return out;
}

}  // namespace pact
