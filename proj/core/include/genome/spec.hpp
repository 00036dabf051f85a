#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "genome/biset.hpp"
#include "genome/constructors.hpp"

namespace genome {

/// Parsed group expression. See docs/grammar.ebnf.
struct GroupSpec {
  enum class Kind { Cyclic, Product, ExtraspecialPlus, ExtraspecialMinus, Permutations };

  Kind kind = Kind::Cyclic;
  std::size_t offset = 0;             // byte offset of the expression in the input
  std::size_t number = 0;             // n of C<n>, p of ES±(p)
  std::vector<GroupSpec> operands;    // the two sides of a product
  std::vector<std::vector<std::vector<std::size_t>>> cycles;  // per generator, its cycles (1-based)

  /// Canonical text: products written "A x B", parenthesised on the right.
  std::string to_string() const;
};

/// A subgroup argument: generator element indices, or (q,p) pairs inside pair().
struct ElementArg {
  std::size_t offset = 0;
  bool is_pair = false;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct BisetTerm {
  enum class Kind { Identity, Restriction, Induction, Inflation, Deflation, Iso, Pair };

  Kind kind = Kind::Identity;
  std::size_t offset = 0;
  std::size_t length = 0;
  std::vector<GroupSpec> groups;  // one for id/res/ind/inf/def, two for iso/pair
  std::vector<ElementArg> elements;
};

/// term * term * ... ; the leftmost term is applied last.
struct BisetSpec {
  std::vector<BisetTerm> terms;
  std::string text;
};

/// Throws ErrorCode::ParseError with the byte offset of the problem.
GroupSpec parse_group_spec(std::string_view text);
BisetSpec parse_biset_spec(std::string_view text);

Group evaluate(const GroupSpec& spec, std::size_t permutation_cap = kDefaultPermutationCap);

/// A biset together with descriptive names for its two groups.
struct EvaluatedBiset {
  Biset biset;
  std::string left_spec;
  std::string right_spec;
};

/// Semantic failures (N not normal, mismatched interfaces, ...) keep their
/// error code and report the offset of the offending term.
EvaluatedBiset evaluate(const BisetSpec& spec);

/// parse + evaluate.
Group group_from_spec(std::string_view text);
EvaluatedBiset biset_from_spec(std::string_view text);

const char* to_string(BisetTerm::Kind kind) noexcept;

}  // namespace genome
