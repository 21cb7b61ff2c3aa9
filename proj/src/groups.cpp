#include "galie/groups.hpp"

#include <algorithm>
#include <stdexcept>

namespace galie {

std::size_t FiniteGroupTable::element_order(std::size_t i) const {
  std::size_t cur = i, ord = 1;
  while (cur != id) {
    cur = at(cur, i);
    ++ord;
    if (ord > n) throw std::logic_error("element_order: not a group table");
  }
  return ord;
}

namespace {

// closure of a generating subset under the group multiplication
std::vector<std::size_t> subgroup_closure(const FiniteGroupTable& g,
                                          std::vector<std::size_t> gens) {
  std::vector<bool> in(g.n, false);
  std::vector<std::size_t> members;
  auto push = [&](std::size_t x) {
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  push(g.id);
  for (auto x : gens) push(x);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) {
      push(g.at(members[i], members[j]));
      if (members.size() > g.n) throw std::logic_error("subgroup_closure: not a group table");
    }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::size_t> derived_subgroup(const FiniteGroupTable& g,
                                          const std::vector<std::size_t>& members) {
  std::vector<std::size_t> comms;
  for (auto a : members)
    for (auto b : members) {
      std::size_t c = g.at(g.at(a, b), g.at(g.inv[a], g.inv[b]));
      comms.push_back(c);
    }
  return subgroup_closure(g, comms);
}

bool subset_abelian(const FiniteGroupTable& g, const std::vector<std::size_t>& members) {
  for (auto a : members)
    for (auto b : members)
      if (g.at(a, b) != g.at(b, a)) return false;
  return true;
}

bool is_prime_size(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

GroupAnalysis group_analysis(const FiniteGroupTable& g) {
  GroupAnalysis r;
  r.order = g.n;
  std::vector<std::size_t> all(g.n);
  for (std::size_t i = 0; i < g.n; ++i) all[i] = i;
  r.abelian = subset_abelian(g, all);
  r.cyclic = false;
  for (std::size_t i = 0; i < g.n && !r.cyclic; ++i)
    if (g.element_order(i) == g.n) r.cyclic = true;
  r.elementary_abelian = false;
  if (r.abelian) {
    if (g.n == 1) {
      r.elementary_abelian = true;
    } else {
      std::size_t p = 0;
      bool ok = true;
      for (std::size_t i = 0; i < g.n && ok; ++i) {
        if (i == g.id) continue;
        std::size_t o = g.element_order(i);
        if (p == 0) p = o;
        if (o != p) ok = false;
      }
      if (ok && is_prime_size(p)) {
        std::size_t m = g.n;
        while (m % p == 0) m /= p;
        r.elementary_abelian = m == 1;
      }
    }
  }
  std::vector<std::size_t> cur = all;
  r.derived_series_orders.push_back(cur.size());
  while (true) {
    auto next = derived_subgroup(g, cur);
    if (next.size() == cur.size()) break;
    r.derived_series_orders.push_back(next.size());
    cur = next;
    if (cur.size() == 1) break;
  }
  r.solvable = cur.size() == 1;
  auto d1 = derived_subgroup(g, all);
  r.metabelian = subset_abelian(g, d1);
  return r;
}

}  // namespace galie
