#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "genome/group.hpp"

namespace genome {

/// Default cap on the size of a permutation group closure.
inline constexpr std::size_t kDefaultPermutationCap = 10000;

/// Z/n with element k <-> residue k.
Group make_cyclic(std::size_t n);

struct DirectProduct {
  Group group;
  GroupMap first;   // projection onto the left factor
  GroupMap second;  // projection onto the right factor
  std::size_t right_order = 1;

  /// Index of the pair (a, b): a * |H| + b.
  Element pair(Element a, Element b) const noexcept {
    return static_cast<Element>(a * right_order + b);
  }
};

/// Pairs indexed lexicographically with componentwise product.
DirectProduct direct_product(const Group& g, const Group& h);

/// A permutation of {0, ..., degree-1}; image[i] is where i goes.
using Permutation = std::vector<std::size_t>;

/// Closes the generators under composition. Index 0 is the identity and the
/// remaining elements are numbered in breadth-first order, multiplying by the
/// generators in the order given. Products act left to right: (ab)(i) = b(a(i)).
Group from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                        std::size_t cap = kDefaultPermutationCap);

enum class ExtraspecialKind { ExponentP, ExponentP2 };

/// The two extraspecial groups of order p^3 for odd p.
///
/// ExponentP: Heisenberg triples (a, b, c), index a*p^2 + b*p + c, with
/// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
/// ExponentP2: x^i y^j with x^{p^2} = y^p = 1 and y x y^-1 = x^{1+p},
/// index i*p + j.
Group extraspecial(unsigned p, ExtraspecialKind kind);

/// Same abstract group with its non-identity elements renumbered by a uniform
/// random permutation. Returns the relabeled group and the isomorphism
/// g -> relabel(g).
struct Relabeling {
  Group group;
  GroupMap iso;
};
Relabeling relabel(const Group& g, std::mt19937_64& rng);

}  // namespace genome
