#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "genome/biset.hpp"
#include "genome/genome_map.hpp"
#include "genome/lattice.hpp"

namespace genome {

/// A homomorphism G -> H/[H,H], stored as the image of every element of G.
struct AbelianHom {
  Group source;          // G
  Group target;          // H
  Quotient target_ab;    // H/[H,H] with its projection
  std::vector<Element> images;  // indices into target_ab.group

  Element operator()(Element g) const noexcept { return images[g]; }
  /// Pointwise product in H/[H,H].
  AbelianHom operator+(const AbelianHom& other) const;

  friend bool operator==(const AbelianHom& a, const AbelianHom& b) {
    return a.source == b.source && a.target == b.target && a.images == b.images;
  }
};

/// outer ∘ inner, where inner: G -> H^ab and outer: H -> K^ab. The
/// intermediate value is lifted to H through the smallest coset element.
AbelianHom compose(const AbelianHom& outer, const AbelianHom& inner);

/// The generalized transfer of a left-free (H, G)-biset Ω.
///
/// For each G-element g and each H-orbit representative x, write
/// x·g = h_{g,x}·σ_g(x) with σ_g(x) again a representative; the transfer sends
/// g to the class of the product of the h_{g,x}, taken in increasing order of
/// x. Representatives default to the smallest point of each orbit; a custom
/// set (one point per H-orbit) may be supplied.
///
/// Throws ErrorCode::NotLeftFree unless Ω is left free.
AbelianHom verlagerung(const Biset& omega, std::span<const Point> representatives = {});

/// Γ(U)_{T,S} as an exponent: the generator of N_P(S)/S maps to
/// generator_T^e in N_Q(T)/T. `t` and `s` must be genetic.
std::int64_t genome_component(const Biset& u, const GenomeFactor& t, const GenomeFactor& s, unsigned p);

/// Same, building the factor data for arbitrary genetic T <= Q and S <= P.
std::int64_t genome_component(const Biset& u, const Subgroup& t, const Subgroup& s, unsigned p);

/// Γ(U): Γ(P) -> Γ(Q) for a (Q, P)-biset U, relative to the given
/// descriptors of P (source) and Q (target).
GenomeMap genome_map(const Biset& u, const GenomeDescriptor& source, const GenomeDescriptor& target);

}  // namespace genome
