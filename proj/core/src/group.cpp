#include "genome/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "genome/error.hpp"

namespace genome {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidGroup: return "invalid_group";
    case ErrorCode::GroupTooLarge: return "group_too_large";
    case ErrorCode::EnumerationTooLarge: return "enumeration_too_large";
    case ErrorCode::UnsupportedPrime: return "unsupported_prime";
    case ErrorCode::NotPGroup: return "not_p_group";
    case ErrorCode::OddPrimesOnly: return "odd_primes_only";
    case ErrorCode::NotSubgroup: return "not_subgroup";
    case ErrorCode::NotNormal: return "not_normal";
    case ErrorCode::NotIsomorphism: return "not_isomorphism";
    case ErrorCode::InvalidBiset: return "invalid_biset";
    case ErrorCode::GroupMismatch: return "group_mismatch";
    case ErrorCode::NotLeftFree: return "not_left_free";
    case ErrorCode::NotGenetic: return "not_genetic";
    case ErrorCode::NotGeneticBasis: return "not_genetic_basis";
    case ErrorCode::DescriptorMismatch: return "descriptor_mismatch";
    case ErrorCode::ParseError: return "parse_error";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::InvariantViolation: return "invariant_violation";
  }
  return "unknown";
}

void invariant_failure(const std::string& what) {
  throw Error(ErrorCode::InvariantViolation, "internal invariant violated: " + what);
}

bool is_prime(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<unsigned> prime_of_power(unsigned long long n) {
  if (n < 2) return std::nullopt;
  unsigned long long p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return static_cast<unsigned>(p);
}

bool is_power_of(unsigned long long n, unsigned p) {
  if (p < 2 || n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

// ---------------------------------------------------------------------------
// Group

Group::Group() {
  auto data = std::make_shared<Data>();
  data->order = 1;
  data->table = {0};
  data->inverse = {0};
  data_ = std::move(data);
}

Group Group::from_table(std::size_t order, std::vector<Element> table, std::vector<std::string> labels) {
  if (order == 0) throw Error(ErrorCode::InvalidGroup, "group order must be positive");
  if (table.size() != order * order) throw Error(ErrorCode::InvalidGroup, "table size does not match order");
  if (!labels.empty() && labels.size() != order) throw Error(ErrorCode::InvalidGroup, "label count does not match order");
  for (Element v : table) {
    if (v >= order) throw Error(ErrorCode::InvalidGroup, "table entry out of range");
  }
  auto at = [&](std::size_t a, std::size_t b) { return table[a * order + b]; };
  for (std::size_t x = 0; x < order; ++x) {
    if (at(0, x) != x || at(x, 0) != x) throw Error(ErrorCode::InvalidGroup, "index 0 is not an identity");
  }
  // Rows and columns must be permutations (cancellation); this also makes
  // inverses unique.
  std::vector<char> seen(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[at(a, b)]++) throw Error(ErrorCode::InvalidGroup, "table row is not a permutation");
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < order; ++b) {
      if (seen[at(b, a)]++) throw Error(ErrorCode::InvalidGroup, "table column is not a permutation");
    }
  }
  std::vector<Element> inverse(order);
  for (std::size_t x = 0; x < order; ++x) {
    std::size_t y = 0;
    while (at(x, y) != 0) ++y;
    if (at(y, x) != 0) throw Error(ErrorCode::InvalidGroup, "left and right inverses differ");
    inverse[x] = static_cast<Element>(y);
  }
  // Light's test: if (x s) y == x (s y) for every generator s, the set of
  // such s is closed under products and so is everything.
  std::vector<Element> generators;
  {
    std::vector<char> reached(order, 0);
    reached[0] = 1;
    std::vector<Element> frontier{0};
    std::size_t count = 1;
    for (std::size_t cand = 1; count < order; ++cand) {
      if (reached[cand]) continue;
      generators.push_back(static_cast<Element>(cand));
      // redo the closure under right multiplication by all generators
      std::fill(reached.begin(), reached.end(), 0);
      reached[0] = 1;
      frontier.assign(1, 0);
      count = 1;
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (Element s : generators) {
          Element y = at(frontier[i], s);
          if (!reached[y]) {
            reached[y] = 1;
            frontier.push_back(y);
            ++count;
          }
        }
      }
    }
  }
  for (Element s : generators) {
    for (std::size_t x = 1; x < order; ++x) {
      const Element xs = at(x, s);
      for (std::size_t y = 1; y < order; ++y) {
        if (at(xs, y) != at(x, at(s, y))) throw Error(ErrorCode::InvalidGroup, "table is not associative");
      }
    }
  }
  auto data = std::make_shared<Data>();
  data->order = order;
  data->table = std::move(table);
  data->inverse = std::move(inverse);
  data->generators = std::move(generators);
  data->labels = std::move(labels);
  data->prime = prime_of_power(order);
  return Group(std::move(data));
}

Element Group::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = kIdentity;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t Group::element_order(Element a) const {
  std::size_t n = 1;
  for (Element x = a; x != kIdentity; x = mul(x, a)) ++n;
  return n;
}

bool Group::is_abelian() const {
  const std::size_t n = order();
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::size_t Group::exponent() const {
  std::size_t e = 1;
  for (Element a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool Group::is_cyclic() const {
  for (Element a = 0; a < order(); ++a) {
    if (element_order(a) == order()) return true;
  }
  return false;
}

bool Group::is_p_group(unsigned p) const noexcept { return is_power_of(order(), p); }

std::string Group::label(Element a) const {
  if (!data_->labels.empty()) return data_->labels[a];
  return std::to_string(a);
}

bool operator==(const Group& a, const Group& b) noexcept {
  return a.data_ == b.data_ || (a.data_->order == b.data_->order && a.data_->table == b.data_->table);
}

// ---------------------------------------------------------------------------
// ElementSet / Subgroup

std::size_t ElementSetHash::operator()(const ElementSet& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint64_t w : s.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Subgroup::Subgroup(Group ambient, std::vector<Element> elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)), members_(ambient_.order()) {
  for (Element x : elements_) members_.insert(x);
}

Subgroup Subgroup::unchecked(const Group& ambient, std::vector<Element> sorted_elements) {
  return Subgroup(ambient, std::move(sorted_elements));
}

Subgroup Subgroup::from_elements(const Group& ambient, std::vector<Element> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  for (Element x : elements) {
    if (x >= ambient.order()) throw Error(ErrorCode::NotSubgroup, "element index out of range");
  }
  Subgroup s(ambient, std::move(elements));
  if (s.elements_.empty() || s.elements_.front() != kIdentity)
    throw Error(ErrorCode::NotSubgroup, "subgroup must contain the identity");
  for (Element a : s.elements_) {
    if (!s.contains(ambient.inv(a))) throw Error(ErrorCode::NotSubgroup, "not closed under inverses");
    for (Element b : s.elements_) {
      if (!s.contains(ambient.mul(a, b))) throw Error(ErrorCode::NotSubgroup, "not closed under products");
    }
  }
  check_invariant(ambient.order() % s.order() == 0, "Lagrange: subgroup order divides group order");
  return s;
}

Subgroup Subgroup::whole(const Group& ambient) {
  std::vector<Element> all(ambient.order());
  std::iota(all.begin(), all.end(), Element{0});
  return Subgroup(ambient, std::move(all));
}

Subgroup Subgroup::trivial(const Group& ambient) { return Subgroup(ambient, {kIdentity}); }

bool Subgroup::is_subset_of(const Subgroup& other) const noexcept {
  if (order() > other.order()) return false;
  for (Element x : elements_) {
    if (!other.contains(x)) return false;
  }
  return true;
}

Group Subgroup::as_group() const {
  const std::size_t n = order();
  std::vector<Element> position(ambient_.order(), 0);
  for (std::size_t i = 0; i < n; ++i) position[elements_[i]] = static_cast<Element>(i);
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = position[ambient_.mul(elements_[i], elements_[j])];
  std::vector<std::string> labels;
  if (!ambient_.labels().empty()) {
    for (Element x : elements_) labels.push_back(ambient_.label(x));
  }
  return Group::from_table(n, std::move(table), std::move(labels));
}

bool operator<(const Subgroup& a, const Subgroup& b) noexcept {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements_ < b.elements_;
}

// ---------------------------------------------------------------------------
// GroupMap

GroupMap GroupMap::make(const Group& source, const Group& target, std::vector<Element> images) {
  if (images.size() != source.order()) throw Error(ErrorCode::InvalidArgument, "image count does not match source order");
  for (Element y : images) {
    if (y >= target.order()) throw Error(ErrorCode::InvalidArgument, "image index out of range");
  }
  if (images[0] != kIdentity) throw Error(ErrorCode::InvalidArgument, "identity must map to identity");
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b]))
        throw Error(ErrorCode::InvalidArgument, "map is not a homomorphism");
  return GroupMap(source, target, std::move(images));
}

GroupMap GroupMap::identity(const Group& g) {
  std::vector<Element> images(g.order());
  std::iota(images.begin(), images.end(), Element{0});
  return GroupMap(g, g, std::move(images));
}

bool GroupMap::is_injective() const { return kernel().is_trivial(); }

bool GroupMap::is_surjective() const { return image().order() == target_.order(); }

Subgroup GroupMap::kernel() const {
  std::vector<Element> k;
  for (Element x = 0; x < source_.order(); ++x) {
    if (images_[x] == kIdentity) k.push_back(x);
  }
  return Subgroup::unchecked(source_, std::move(k));
}

Subgroup GroupMap::image() const {
  std::vector<Element> im(images_);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return Subgroup::unchecked(target_, std::move(im));
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  if (!(inner.target() == outer.source())) throw Error(ErrorCode::GroupMismatch, "maps are not composable");
  std::vector<Element> images(inner.source().order());
  for (Element x = 0; x < images.size(); ++x) images[x] = outer(inner(x));
  return GroupMap::make(inner.source(), outer.target(), std::move(images));
}

// ---------------------------------------------------------------------------
// Subgroup operations

namespace {

Subgroup close(const Group& g, std::span<const Element> gens) {
  ElementSet members(g.order());
  std::vector<Element> list{kIdentity};
  members.insert(kIdentity);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element s : gens) {
      Element y = g.mul(list[i], s);
      if (!members.contains(y)) {
        members.insert(y);
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return Subgroup::unchecked(g, std::move(list));
}

}  // namespace

Subgroup subgroup_generated(const Group& g, std::span<const Element> seeds) {
  for (Element x : seeds) {
    if (x >= g.order()) throw Error(ErrorCode::InvalidArgument, "seed index out of range");
  }
  return close(g, seeds);
}

Subgroup subgroup_generated(const Group& g, std::initializer_list<Element> seeds) {
  return subgroup_generated(g, std::span<const Element>(seeds.begin(), seeds.size()));
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> out;
  for (Element x : a.elements()) {
    if (b.contains(x)) out.push_back(x);
  }
  return Subgroup::unchecked(a.ambient(), std::move(out));
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  std::vector<Element> gens(a.elements());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return close(a.ambient(), gens);
}

Subgroup conjugate_subgroup(const Subgroup& s, Element x) {
  const Group& g = s.ambient();
  std::vector<Element> out;
  out.reserve(s.order());
  for (Element e : s.elements()) out.push_back(g.conj(e, x));
  std::sort(out.begin(), out.end());
  return Subgroup::unchecked(g, std::move(out));
}

bool conjugate_meets_within(const Subgroup& s, Element x, const Subgroup& bound, const Subgroup& limit) {
  const Group& g = s.ambient();
  for (Element e : s.elements()) {
    Element y = g.conj(e, x);
    if (bound.contains(y) && !limit.contains(y)) return false;
  }
  return true;
}

}  // namespace genome
