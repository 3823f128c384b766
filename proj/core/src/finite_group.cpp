#include "pact/finite_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pact {

FiniteGroup::FiniteGroup(std::vector<std::string> names,
                         std::vector<std::vector<int>> mul, int id,
                         std::vector<int> inv)
    : names_(std::move(names)), mul_(std::move(mul)), id_(id), inv_(std::move(inv)) {
  const size_t n = names_.size();
  if (mul_.size() != n || inv_.size() != n || id_ < 0 || static_cast<size_t>(id_) >= n)
    throw std::invalid_argument("finite group: table shape mismatch");
  for (const auto& row : mul_)
    if (row.size() != n) throw std::invalid_argument("finite group: ragged table");
}

std::optional<int> FiniteGroup::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<std::string> FiniteGroup::validate() const {
  std::vector<std::string> bad;
  const int n = size();
  for (int g = 0; g < n && bad.empty(); ++g)
    for (int h = 0; h < n; ++h)
      if (mul_[g][h] < 0 || mul_[g][h] >= n) {
        bad.push_back("closure: product " + names_[g] + "*" + names_[h] + " out of range");
        break;
      }
  if (!bad.empty()) return bad;

  for (int g = 0; g < n; ++g) {
    if (mul_[id_][g] != g || mul_[g][id_] != g) {
      bad.push_back("identity: " + names_[id_] + " does not fix " + names_[g]);
      break;
    }
  }
  for (int g = 0; g < n; ++g) {
    if (inv_[g] < 0 || inv_[g] >= n || mul_[g][inv_[g]] != id_ || mul_[inv_[g]][g] != id_) {
      bad.push_back("inverse: " + names_[g] + " has no valid inverse entry");
      break;
    }
  }
  bool assoc = true;
  for (int a = 0; a < n && assoc; ++a)
    for (int b = 0; b < n && assoc; ++b)
      for (int c = 0; c < n; ++c)
        if (mul_[mul_[a][b]][c] != mul_[a][mul_[b][c]]) {
          bad.push_back("associativity: (" + names_[a] + "*" + names_[b] + ")*" +
                        names_[c] + " != " + names_[a] + "*(" + names_[b] + "*" +
                        names_[c] + ")");
          assoc = false;
          break;
        }
  return bad;
}

std::vector<int> FiniteGroup::subgroup_closure(const std::vector<int>& gens) const {
  std::set<int> seen{id_};
  std::vector<int> work{id_};
  for (int g : gens)
    if (seen.insert(g).second) work.push_back(g);
  for (size_t i = 0; i < work.size(); ++i) {
    for (size_t j = 0; j < work.size(); ++j) {
      int p = mul_[work[i]][work[j]];
      if (seen.insert(p).second) work.push_back(p);
    }
    int v = inv_[work[i]];
    if (seen.insert(v).second) work.push_back(v);
  }
  return {seen.begin(), seen.end()};
}

std::vector<int> FiniteGroup::normal_closure(const std::vector<int>& gens) const {
  std::set<int> conj;
  for (int g : gens)
    for (int h = 0; h < size(); ++h) conj.insert(mul_[mul_[h][g]][inv_[h]]);
  return subgroup_closure({conj.begin(), conj.end()});
}

bool FiniteGroup::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(id_)) return false;
  for (int a : s) {
    if (!s.count(inv_[a])) return false;
    for (int b : s)
      if (!s.count(mul_[a][b])) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& subgroup_elems) const {
  std::set<int> s(subgroup_elems.begin(), subgroup_elems.end());
  for (int k : s)
    for (int g = 0; g < size(); ++g)
      if (!s.count(mul_[mul_[g][k]][inv_[g]])) return false;
  return true;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<int>& elems) const {
  std::vector<int> sorted = elems;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> pos(size(), -1);
  for (size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
  const int m = static_cast<int>(sorted.size());
  std::vector<std::string> names(m);
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) {
    names[i] = names_[sorted[i]];
    inv[i] = pos[inv_[sorted[i]]];
    for (int j = 0; j < m; ++j) {
      int p = pos[mul_[sorted[i]][sorted[j]]];
      if (p < 0) throw std::invalid_argument("subgroup: subset not closed");
      mul[i][j] = p;
    }
  }
  return FiniteGroup(std::move(names), std::move(mul), pos[id_], std::move(inv));
}

FiniteGroup FiniteGroup::quotient(const std::vector<int>& normal_subgroup,
                                  std::vector<int>* coset_of) const {
  std::set<int> k(normal_subgroup.begin(), normal_subgroup.end());
  std::vector<int> rep_of(size(), -1);  // element -> least member of its coset
  std::vector<int> reps;
  for (int g = 0; g < size(); ++g) {
    if (rep_of[g] >= 0) continue;
    for (int h : k) rep_of[mul_[g][h]] = g;
    reps.push_back(g);
  }
  std::vector<int> coset_index(size());
  for (int g = 0; g < size(); ++g)
    coset_index[g] = static_cast<int>(std::lower_bound(reps.begin(), reps.end(), rep_of[g]) -
                                      reps.begin());
  const int m = static_cast<int>(reps.size());
  std::vector<std::string> names(m);
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<int> inv(m);
  for (int i = 0; i < m; ++i) {
    names[i] = names_[reps[i]];
    inv[i] = coset_index[inv_[reps[i]]];
    for (int j = 0; j < m; ++j) mul[i][j] = coset_index[mul_[reps[i]][reps[j]]];
  }
  if (coset_of) *coset_of = coset_index;
  return FiniteGroup(std::move(names), std::move(mul), coset_index[id_], std::move(inv));
}

FiniteGroup FiniteGroup::trivial() {
  return FiniteGroup({"1"}, {{0}}, 0, {0});
}

FiniteGroup FiniteGroup::cyclic(int n) {
  std::vector<std::string> names(n);
  names[0] = "1";
  for (int i = 1; i < n; ++i) names[i] = "r" + std::to_string(i);
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) {
    inv[i] = (n - i) % n;
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(names), std::move(mul), 0, std::move(inv));
}

FiniteGroup FiniteGroup::klein_four() {
  // 1 a b c with a*b = c and every element an involution.
  std::vector<std::vector<int>> mul = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return FiniteGroup({"1", "a", "b", "c"}, std::move(mul), 0, {0, 1, 2, 3});
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int n = a.size(), m = b.size();
  auto idx = [m](int i, int j) { return i * m + j; };
  std::vector<std::string> names(n * m);
  std::vector<std::vector<int>> mul(n * m, std::vector<int>(n * m));
  std::vector<int> inv(n * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      names[idx(i, j)] = "(" + a.name(i) + "|" + b.name(j) + ")";
      inv[idx(i, j)] = idx(a.invert(i), b.invert(j));
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < m; ++l)
          mul[idx(i, j)][idx(k, l)] = idx(a.multiply(i, k), b.multiply(j, l));
    }
  return FiniteGroup(std::move(names), std::move(mul), idx(a.identity(), b.identity()),
                     std::move(inv));
}

}  // namespace pact
