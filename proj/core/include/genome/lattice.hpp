#pragma once

#include <cstddef>
#include <vector>

#include "genome/group.hpp"

namespace genome {

/// Default cap on the group order accepted by subgroup enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 243;

/// Every subgroup exactly once, sorted by size then lexicographically.
///
/// Iterated join-closure: start from the cyclic subgroups and keep adding
/// <A, g> for known A and cyclic generators g until nothing new appears.
std::vector<Subgroup> all_subgroups(const Group& g, std::size_t cap = kDefaultEnumerationCap);

/// One subgroup <g> per distinct cyclic subgroup, in canonical order.
std::vector<Subgroup> cyclic_subgroups(const Group& g);

Subgroup center(const Group& g);
/// N_G(S) = { x : S^x = S }
Subgroup normalizer(const Subgroup& s);
Subgroup centralizer(const Group& g, Element x);
bool is_normal(const Subgroup& s);
/// [G, G]
Subgroup commutator_subgroup(const Group& g);

std::vector<std::vector<Element>> conjugacy_classes(const Group& g);

/// A section H/K of an ambient group, K normal in H <= G.
///
/// The quotient numbers cosets by their smallest ambient element, in
/// increasing order, so the coset of the identity is index 0.
class Subquotient {
 public:
  Subquotient(const Subgroup& top, const Subgroup& bottom);

  const Group& group() const noexcept { return quotient_; }
  const Subgroup& top() const noexcept { return top_; }
  const Subgroup& bottom() const noexcept { return bottom_; }
  /// Coset index of an element of top().
  Element project(Element ambient) const noexcept { return project_[ambient]; }
  /// Smallest ambient element of the coset.
  Element lift(Element coset) const noexcept { return lift_[coset]; }

 private:
  Subgroup top_;
  Subgroup bottom_;
  Group quotient_;
  std::vector<Element> project_;  // ambient -> coset, or npos outside top
  std::vector<Element> lift_;
};

struct Quotient {
  Group group;
  GroupMap projection;
  std::vector<Element> lifts;  // smallest element of each coset
};

/// G/N. Throws ErrorCode::NotNormal unless N is normal.
Quotient quotient(const Group& g, const Subgroup& n);
/// G/[G,G] with its projection.
Quotient abelianization(const Group& g);

/// True iff every normal abelian subgroup is cyclic. For odd p this must
/// agree with is_cyclic(), and that is checked.
bool is_roquette(const Group& g, unsigned p);

}  // namespace genome
