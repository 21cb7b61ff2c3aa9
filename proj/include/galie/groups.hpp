#ifndef GALIE_GROUPS_HPP
#define GALIE_GROUPS_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace galie {

/// A finite group as a multiplication table over element indices.
struct FiniteGroupTable {
  std::size_t n = 0;
  std::size_t id = 0;
  std::vector<std::size_t> mul;  // mul[i*n + j] = index of g_i g_j
  std::vector<std::size_t> inv;

  std::size_t at(std::size_t i, std::size_t j) const { return mul[i * n + j]; }
  std::size_t element_order(std::size_t i) const;
};

struct GroupAnalysis {
  std::size_t order = 0;
  bool abelian = false;
  bool cyclic = false;
  bool elementary_abelian = false;
  bool metabelian = false;
  bool solvable = false;
  std::vector<std::size_t> derived_series_orders;  // |G|, |G'|, ... until stable
};

GroupAnalysis group_analysis(const FiniteGroupTable& g);

}  // namespace galie

#endif
