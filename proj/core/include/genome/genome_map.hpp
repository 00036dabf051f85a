#pragma once

#include <cstdint>
#include <vector>

#include "genome/genetic.hpp"

namespace genome {

/// A homomorphism Γ(P) -> Γ(Q) between products of cyclic groups.
///
/// entries[t][s] = e means the generator of source factor s maps into target
/// factor t as generator_t^e. Every entry satisfies e * order_s ≡ 0 mod order_t.
class GenomeMap {
 public:
  using Matrix = std::vector<std::vector<std::int64_t>>;

  /// Reduces entries into [0, order_t) and checks the homomorphism condition.
  static GenomeMap make(GenomeDescriptor source, GenomeDescriptor target, Matrix entries);
  static GenomeMap identity(const GenomeDescriptor& d);

  const GenomeDescriptor& source() const noexcept { return source_; }
  const GenomeDescriptor& target() const noexcept { return target_; }
  const Matrix& entries() const noexcept { return entries_; }
  std::int64_t entry(std::size_t t, std::size_t s) const { return entries_[t][s]; }

  GenomeElement apply(const GenomeElement& a) const;

  /// Entries only; descriptors are compared separately when needed.
  bool same_entries(const GenomeMap& other) const noexcept { return entries_ == other.entries_; }

 private:
  GenomeMap(GenomeDescriptor source, GenomeDescriptor target, Matrix entries)
      : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {}

  GenomeDescriptor source_;
  GenomeDescriptor target_;
  Matrix entries_;
};

/// second ∘ first, requiring first.target() == second.source().
GenomeMap compose_genome_maps(const GenomeMap& second, const GenomeMap& first);

/// The canonical isomorphism γ_{to,from} between genomes of the same group
/// over two genetic bases.
GenomeMap change_of_basis(const GenomeDescriptor& from, const GenomeDescriptor& to);

}  // namespace genome
