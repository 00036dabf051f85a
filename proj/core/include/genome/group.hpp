#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace genome {

/// Index of a group element. The identity is always index 0.
using Element = std::uint32_t;

inline constexpr Element kIdentity = 0;

/// A finite group stored as a dense multiplication table.
///
/// Group is a cheap-to-copy immutable handle: copies share the same table.
/// Two groups compare equal when their tables are identical, so the same
/// abstract construction performed twice yields equal groups.
class Group {
 public:
  /// Validates the identity, inverse and associativity laws (the latter
  /// exactly, through a generating set). `table` is
  /// row-major with table[a * order + b] = a * b.
  static Group from_table(std::size_t order, std::vector<Element> table,
                          std::vector<std::string> labels = {});

  /// The trivial group.
  Group();

  std::size_t order() const noexcept { return data_->order; }
  Element mul(Element a, Element b) const noexcept { return data_->table[a * data_->order + b]; }
  Element inv(Element a) const noexcept { return data_->inverse[a]; }
  /// g^-1 x g
  Element conj(Element x, Element g) const noexcept { return mul(inv(g), mul(x, g)); }
  Element pow(Element a, long long k) const;
  Element commutator(Element a, Element b) const noexcept { return mul(mul(inv(a), inv(b)), mul(a, b)); }

  std::size_t element_order(Element a) const;
  bool is_abelian() const;
  bool is_cyclic() const;
  /// Largest element order.
  std::size_t exponent() const;

  /// Some p with order() == p^k, k >= 1. Empty for the trivial group and for
  /// groups whose order is not a prime power.
  std::optional<unsigned> prime() const noexcept { return data_->prime; }
  bool is_p_group(unsigned p) const noexcept;

  /// Greedy generating set: each entry is the smallest element outside the
  /// span of the previous ones. Empty for the trivial group.
  const std::vector<Element>& generators() const noexcept { return data_->generators; }

  std::span<const Element> table() const noexcept { return data_->table; }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }
  std::string label(Element a) const;

  bool same_handle(const Group& other) const noexcept { return data_ == other.data_; }
  friend bool operator==(const Group& a, const Group& b) noexcept;

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Element> table;
    std::vector<Element> inverse;
    std::vector<Element> generators;
    std::vector<std::string> labels;
    std::optional<unsigned> prime;
  };
  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Bitset over the elements of an ambient group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  bool contains(Element x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(Element x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  std::size_t universe() const noexcept { return universe_; }
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept;
};

/// A subgroup of an ambient group, as a sorted list of element indices.
class Subgroup {
 public:
  /// Checks closure under products and inverses.
  static Subgroup from_elements(const Group& ambient, std::vector<Element> elements);
  /// The whole group.
  static Subgroup whole(const Group& ambient);
  static Subgroup trivial(const Group& ambient);
  /// For elements already known to form a subgroup.
  static Subgroup unchecked(const Group& ambient, std::vector<Element> sorted_elements);

  const Group& ambient() const noexcept { return ambient_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element x) const noexcept { return members_.contains(x); }
  const ElementSet& members() const noexcept { return members_; }

  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == ambient_.order(); }
  bool is_subset_of(const Subgroup& other) const noexcept;

  /// Elements indexed as a group in their own right (index i <-> elements()[i]).
  Group as_group() const;

  /// Canonical order: by size, then lexicographically by element list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) noexcept;
  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.elements_ == b.elements_;
  }

 private:
  Subgroup(Group ambient, std::vector<Element> elements);

  Group ambient_;
  std::vector<Element> elements_;
  ElementSet members_;
};

/// A homomorphism between two groups, given by the image of every element.
class GroupMap {
 public:
  /// Checks images[0] == 0 and the homomorphism law on all pairs.
  static GroupMap make(const Group& source, const Group& target, std::vector<Element> images);
  static GroupMap identity(const Group& g);

  const Group& source() const noexcept { return source_; }
  const Group& target() const noexcept { return target_; }
  const std::vector<Element>& images() const noexcept { return images_; }
  Element operator()(Element x) const noexcept { return images_[x]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const { return is_injective() && is_surjective(); }
  Subgroup kernel() const;
  Subgroup image() const;

  friend bool operator==(const GroupMap&, const GroupMap&) = default;

 private:
  GroupMap(Group source, Group target, std::vector<Element> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

  Group source_;
  Group target_;
  std::vector<Element> images_;
};

/// Composite outer ∘ inner.
GroupMap compose(const GroupMap& outer, const GroupMap& inner);

/// Smallest subgroup containing `seeds`.
Subgroup subgroup_generated(const Group& g, std::span<const Element> seeds);
Subgroup subgroup_generated(const Group& g, std::initializer_list<Element> seeds);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
/// The subgroup generated by a and b.
Subgroup join(const Subgroup& a, const Subgroup& b);
/// S^x = x^-1 S x
Subgroup conjugate_subgroup(const Subgroup& s, Element x);
/// True when S^x ∩ bound <= limit, checked without building S^x.
bool conjugate_meets_within(const Subgroup& s, Element x, const Subgroup& bound, const Subgroup& limit);

bool is_prime(unsigned long long n);
/// p such that n = p^k with k >= 1, if any.
std::optional<unsigned> prime_of_power(unsigned long long n);
bool is_power_of(unsigned long long n, unsigned p);

}  // namespace genome
