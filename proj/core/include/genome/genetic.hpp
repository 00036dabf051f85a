#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genome/group.hpp"

namespace genome {

/// Z_P(S): the preimage in N_P(S) of the center of N_P(S)/S.
Subgroup zp_subgroup(const Subgroup& s);

/// S is genetic in P when S^x ∩ Z_P(S) <= S holds exactly for x in N_P(S),
/// and N_P(S)/S is a Roquette group.
bool is_genetic(const Subgroup& s, unsigned p);

/// Smallest x with S^x ∩ Z_P(T) <= T and ^xT ∩ Z_P(S) <= S, if one exists.
/// Both subgroups are expected to be genetic in the same ambient group.
std::optional<Element> linked(const Subgroup& s, const Subgroup& t);

/// A linkage class of genetic subgroups. The representative is the smallest
/// member in canonical subgroup order.
struct LinkageClass {
  Subgroup representative;
  std::vector<Subgroup> members;
};

/// All genetic subgroups of P grouped by linkage, ordered by representative.
/// Verifies that linkage is an equivalence relation on the genetic subgroups.
std::vector<LinkageClass> linkage_classes(const Group& p_group, unsigned p);

/// One genetic subgroup per linkage class, in canonical order.
std::vector<Subgroup> genetic_basis(const Group& p_group, unsigned p);

struct GenomeFactor {
  Subgroup subgroup;           // S
  Subgroup normalizer;         // N_P(S)
  std::size_t quotient_order;  // |N_P(S)/S|
  Element generator;           // element of N_P(S) whose class generates N_P(S)/S
};

/// Γ(P) as an ordered product of cyclic groups N_P(S)/S over a genetic basis.
struct GenomeDescriptor {
  Group group;
  unsigned prime = 0;
  std::vector<GenomeFactor> factors;
  /// How the group was specified, when known. Informational only.
  std::string group_spec;

  std::size_t size() const noexcept { return factors.size(); }
  std::vector<std::size_t> factor_orders() const;

  /// Same group, same basis and same generators.
  friend bool operator==(const GenomeDescriptor& a, const GenomeDescriptor& b);
};

/// An element of Γ(P): one exponent per factor, 0 <= e_i < quotient_order_i.
struct GenomeElement {
  std::vector<std::int64_t> exponents;
  friend bool operator==(const GenomeElement&, const GenomeElement&) = default;
};

/// Throws unless p is an odd prime and P is a p-group.
void require_odd_p_group(const Group& g, unsigned p);

/// Γ(P) over the canonical genetic basis, with canonical generators (the
/// smallest element of N_P(S) whose class generates N_P(S)/S).
GenomeDescriptor genome_of(const Group& p_group, unsigned p);

/// Γ(P) over a caller-supplied basis. `generators`, when given, pins the
/// generator of each factor; otherwise canonical generators are used.
/// Throws ErrorCode::NotGeneticBasis when `basis` is not a genetic basis.
GenomeDescriptor genome_from_basis(const Group& p_group, unsigned p, std::vector<Subgroup> basis,
                                   std::vector<Element> generators = {});

/// Canonical generator of N_P(S)/S.
Element canonical_generator(const Subgroup& s, const Subgroup& normalizer);

/// The k in [0, order) with generator^k S = n S. `n` must lie in N_P(S).
std::int64_t factor_exponent(const GenomeFactor& factor, const Group& g, Element n);

/// Indices of the factors whose subgroup meets Z(P) trivially.
std::vector<std::size_t> faithful_part(const GenomeDescriptor& descriptor);

/// The canonical genome plus the size of each factor's linkage class.
struct BasisReport {
  GenomeDescriptor descriptor;
  std::vector<std::size_t> class_sizes;
  std::size_t genetic_subgroup_count = 0;
};
BasisReport basis_report(const Group& p_group, unsigned p);

}  // namespace genome
