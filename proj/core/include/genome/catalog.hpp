#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "genome/group.hpp"

namespace genome {

struct CatalogEntry {
  std::string spec;  // parses back to `group`
  Group group;
};

/// Test groups for the prime p of order at most max_order: cyclic groups,
/// abelian products, both extraspecial groups and their products with C_p,
/// and the wreath product C_p wr C_p as permutations when it fits. Ordered by
/// group order; entries of equal order keep a fixed construction order.
std::vector<CatalogEntry> catalog(unsigned p, std::size_t max_order);

}  // namespace genome
