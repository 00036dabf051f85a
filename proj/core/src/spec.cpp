#include "genome/spec.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "genome/error.hpp"
#include "genome/lattice.hpp"

namespace genome {

namespace {

// Products and cyclic literals above this order are refused before any table
// is allocated.
constexpr std::size_t kMaxSpecOrder = kDefaultPermutationCap;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec group_only() {
    GroupSpec g = group();
    expect_end();
    return g;
  }

  BisetSpec biset_only() {
    BisetSpec b;
    b.text = std::string(text_);
    b.terms.push_back(term());
    while (accept('*')) b.terms.push_back(term());
    expect_end();
    return b;
  }

 private:
  [[noreturn]] void fail(const std::string& message, std::size_t at) const {
    throw Error(ErrorCode::ParseError, message, at);
  }
  [[noreturn]] void fail(const std::string& message) const { fail(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
  }
  void expect_end() {
    if (peek() != '\0') fail(std::string("unexpected '") + text_[pos_] + "'");
  }

  std::size_t number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::size_t digit = static_cast<std::size_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::size_t>::max() - digit) / 10) fail("number too large", start);
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail(pos_ < text_.size() ? "expected a number" : "expected a number but input ended");
    return value;
  }

  std::string word() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  bool looking_at(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }

  GroupSpec group() {
    GroupSpec left = factor();
    while (peek() == 'x') {
      ++pos_;
      GroupSpec right = factor();
      GroupSpec product;
      product.kind = GroupSpec::Kind::Product;
      product.offset = left.offset;
      product.operands.push_back(std::move(left));
      product.operands.push_back(std::move(right));
      left = std::move(product);
    }
    return left;
  }

  GroupSpec factor() {
    const char c = peek();
    GroupSpec g;
    g.offset = pos_;
    if (c == '(') {
      ++pos_;
      GroupSpec inner = group();
      expect(')');
      return inner;
    }
    if (c == 'C') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected the order after 'C'");
      g.kind = GroupSpec::Kind::Cyclic;
      g.number = number();
      if (g.number == 0) fail("cyclic order must be positive", g.offset);
      return g;
    }
    if (looking_at("ES+") || looking_at("ES-")) {
      g.kind = text_[pos_ + 2] == '+' ? GroupSpec::Kind::ExtraspecialPlus : GroupSpec::Kind::ExtraspecialMinus;
      pos_ += 3;
      expect('(');
      g.number = number();
      expect(')');
      return g;
    }
    if (looking_at("perm")) {
      pos_ += 4;
      g.kind = GroupSpec::Kind::Permutations;
      expect('[');
      if (accept(']')) return g;
      do {
        g.cycles.push_back(permutation());
      } while (accept(';'));
      expect(']');
      return g;
    }
    if (c == '\0') fail("expected a group but input ended");
    fail(std::string("expected a group (C<n>, ES+(p), ES-(p), perm[...] or '('), found '") + c + "'");
  }

  // One generator: a product of disjoint cycles. "()" is the identity.
  std::vector<std::vector<std::size_t>> permutation() {
    std::vector<std::vector<std::size_t>> cycles;
    if (peek() != '(') fail("expected a cycle");
    std::vector<std::size_t> used;
    while (peek() == '(') {
      ++pos_;
      std::vector<std::size_t> cycle;
      while (peek() != ')') {
        const std::size_t at = pos_;
        const std::size_t point = number();
        if (point == 0) fail("points are numbered from 1", at);
        if (std::find(used.begin(), used.end(), point) != used.end())
          fail("point " + std::to_string(point) + " repeated; cycles must be disjoint", at);
        used.push_back(point);
        cycle.push_back(point);
        accept(',');
      }
      ++pos_;
      if (!cycle.empty()) cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

  ElementArg element_arg(bool pairs_allowed) {
    ElementArg e;
    e.offset = (skip_ws(), pos_);
    if (pairs_allowed && accept('(')) {
      e.is_pair = true;
      e.first = number();
      expect(',');
      e.second = number();
      expect(')');
      return e;
    }
    e.first = number();
    return e;
  }

  std::vector<ElementArg> element_list(bool pairs_allowed) {
    std::vector<ElementArg> out;
    expect('[');
    if (accept(']')) return out;
    do {
      out.push_back(element_arg(pairs_allowed));
    } while (accept(','));
    expect(']');
    return out;
  }

  BisetTerm term() {
    BisetTerm t;
    t.offset = (skip_ws(), pos_);
    const std::string name = word();
    std::size_t group_count = 1;
    bool has_list = true;
    if (name == "id") {
      t.kind = BisetTerm::Kind::Identity;
      has_list = false;
    } else if (name == "res") {
      t.kind = BisetTerm::Kind::Restriction;
    } else if (name == "ind") {
      t.kind = BisetTerm::Kind::Induction;
    } else if (name == "inf") {
      t.kind = BisetTerm::Kind::Inflation;
    } else if (name == "def") {
      t.kind = BisetTerm::Kind::Deflation;
    } else if (name == "iso") {
      t.kind = BisetTerm::Kind::Iso;
      group_count = 2;
    } else if (name == "pair") {
      t.kind = BisetTerm::Kind::Pair;
      group_count = 2;
    } else if (name.empty()) {
      fail(pos_ < text_.size() ? "expected a biset term" : "expected a biset term but input ended");
    } else {
      fail("unknown biset term '" + name + "' (expected id, res, ind, inf, def, iso or pair)", t.offset);
    }
    expect('(');
    for (std::size_t i = 0; i < group_count; ++i) {
      if (i > 0) expect(',');
      t.groups.push_back(group());
    }
    if (has_list) {
      expect(',');
      t.elements = element_list(t.kind == BisetTerm::Kind::Pair);
    }
    expect(')');
    t.length = pos_ - t.offset;
    return t;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string element_list_text(const std::vector<ElementArg>& elements) {
  std::string s = "[";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i > 0) s += ",";
    if (elements[i].is_pair)
      s += "(" + std::to_string(elements[i].first) + "," + std::to_string(elements[i].second) + ")";
    else
      s += std::to_string(elements[i].first);
  }
  return s + "]";
}

std::size_t declared_order(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return spec.number;
    case GroupSpec::Kind::Product: {
      const std::size_t a = declared_order(spec.operands[0]);
      const std::size_t b = declared_order(spec.operands[1]);
      if (a != 0 && b > kMaxSpecOrder / a) return kMaxSpecOrder + 1;
      return a * b;
    }
    case GroupSpec::Kind::ExtraspecialPlus:
    case GroupSpec::Kind::ExtraspecialMinus:
      if (spec.number > 100) return kMaxSpecOrder + 1;
      return spec.number * spec.number * spec.number;
    case GroupSpec::Kind::Permutations:
      return 0;  // bounded by the closure cap instead
  }
  return 0;
}

Group evaluate_checked(const GroupSpec& spec, std::size_t cap) {
  try {
    switch (spec.kind) {
      case GroupSpec::Kind::Cyclic:
        return make_cyclic(spec.number);
      case GroupSpec::Kind::Product:
        return direct_product(evaluate_checked(spec.operands[0], cap), evaluate_checked(spec.operands[1], cap)).group;
      case GroupSpec::Kind::ExtraspecialPlus:
        return extraspecial(static_cast<unsigned>(spec.number), ExtraspecialKind::ExponentP);
      case GroupSpec::Kind::ExtraspecialMinus:
        return extraspecial(static_cast<unsigned>(spec.number), ExtraspecialKind::ExponentP2);
      case GroupSpec::Kind::Permutations: {
        std::size_t degree = 1;
        for (const auto& gen : spec.cycles)
          for (const auto& cycle : gen) degree = std::max(degree, *std::max_element(cycle.begin(), cycle.end()));
        std::vector<Permutation> perms;
        for (const auto& gen : spec.cycles) {
          Permutation perm(degree);
          for (std::size_t i = 0; i < degree; ++i) perm[i] = i;
          for (const auto& cycle : gen)
            for (std::size_t i = 0; i < cycle.size(); ++i) perm[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
          perms.push_back(std::move(perm));
        }
        return from_permutations(degree, perms, cap);
      }
    }
  } catch (const Error& e) {
    if (e.has_offset()) throw;
    throw Error(e.code(), e.what(), spec.offset);
  }
  invariant_failure("unhandled group kind");
}

Subgroup subgroup_of(const Group& g, const std::vector<ElementArg>& elements) {
  std::vector<Element> gens;
  for (const ElementArg& e : elements) {
    if (e.first >= g.order())
      throw Error(ErrorCode::InvalidArgument,
                  "element " + std::to_string(e.first) + " out of range for a group of order " +
                      std::to_string(g.order()),
                  e.offset);
    gens.push_back(static_cast<Element>(e.first));
  }
  return subgroup_generated(g, gens);
}

struct TermValue {
  Biset biset;
  std::string left;
  std::string right;
};

TermValue evaluate_term(const BisetTerm& t) {
  std::vector<Group> groups;
  for (const GroupSpec& g : t.groups) groups.push_back(evaluate(g));
  const std::string g0 = t.groups[0].to_string();
  const std::string list = element_list_text(t.elements);
  switch (t.kind) {
    case BisetTerm::Kind::Identity:
      return {identity_biset(groups[0]), g0, g0};
    case BisetTerm::Kind::Restriction: {
      Subgroup h = subgroup_of(groups[0], t.elements);
      return {restriction(h), "sub(" + g0 + "," + list + ")", g0};
    }
    case BisetTerm::Kind::Induction: {
      Subgroup h = subgroup_of(groups[0], t.elements);
      return {induction(h), g0, "sub(" + g0 + "," + list + ")"};
    }
    case BisetTerm::Kind::Inflation: {
      Subgroup n = subgroup_of(groups[0], t.elements);
      return {inflation(n), g0, "(" + g0 + ")/" + list};
    }
    case BisetTerm::Kind::Deflation: {
      Subgroup n = subgroup_of(groups[0], t.elements);
      return {deflation(n), "(" + g0 + ")/" + list, g0};
    }
    case BisetTerm::Kind::Iso: {
      const Group& src = groups[0];
      const Group& tgt = groups[1];
      if (t.elements.size() != src.order())
        throw Error(ErrorCode::InvalidArgument,
                    "iso needs one image per element of the source (" + std::to_string(src.order()) + "), got " +
                        std::to_string(t.elements.size()));
      std::vector<Element> images;
      for (const ElementArg& e : t.elements) {
        if (e.first >= tgt.order())
          throw Error(ErrorCode::InvalidArgument, "image " + std::to_string(e.first) + " out of range", e.offset);
        images.push_back(static_cast<Element>(e.first));
      }
      GroupMap f = GroupMap::make(src, tgt, std::move(images));
      return {iso(f), t.groups[1].to_string(), g0};
    }
    case BisetTerm::Kind::Pair: {
      const Group& q = groups[0];
      const Group& p = groups[1];
      DirectProduct qp = direct_product(q, p);
      std::vector<Element> gens;
      for (const ElementArg& e : t.elements) {
        std::size_t index = e.first;
        if (e.is_pair) {
          if (e.first >= q.order() || e.second >= p.order())
            throw Error(ErrorCode::InvalidArgument, "pair component out of range", e.offset);
          index = qp.pair(static_cast<Element>(e.first), static_cast<Element>(e.second));
        } else if (index >= qp.group.order()) {
          throw Error(ErrorCode::InvalidArgument, "element " + std::to_string(index) + " out of range for Q x P",
                      e.offset);
        }
        gens.push_back(static_cast<Element>(index));
      }
      return {from_subgroup_pair(q, p, subgroup_generated(qp.group, gens)), g0, t.groups[1].to_string()};
    }
  }
  invariant_failure("unhandled biset term");
}

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic:
      return "C" + std::to_string(number);
    case Kind::Product: {
      std::string right = operands[1].to_string();
      if (operands[1].kind == Kind::Product) right = "(" + right + ")";
      return operands[0].to_string() + " x " + right;
    }
    case Kind::ExtraspecialPlus:
      return "ES+(" + std::to_string(number) + ")";
    case Kind::ExtraspecialMinus:
      return "ES-(" + std::to_string(number) + ")";
    case Kind::Permutations: {
      std::string s = "perm[";
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        if (i > 0) s += "; ";
        if (cycles[i].empty()) s += "()";
        for (const auto& cycle : cycles[i]) {
          s += "(";
          for (std::size_t j = 0; j < cycle.size(); ++j) {
            if (j > 0) s += " ";
            s += std::to_string(cycle[j]);
          }
          s += ")";
        }
      }
      return s + "]";
    }
  }
  return {};
}

const char* to_string(BisetTerm::Kind kind) noexcept {
  switch (kind) {
    case BisetTerm::Kind::Identity: return "id";
    case BisetTerm::Kind::Restriction: return "res";
    case BisetTerm::Kind::Induction: return "ind";
    case BisetTerm::Kind::Inflation: return "inf";
    case BisetTerm::Kind::Deflation: return "def";
    case BisetTerm::Kind::Iso: return "iso";
    case BisetTerm::Kind::Pair: return "pair";
  }
  return "?";
}

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).group_only(); }

BisetSpec parse_biset_spec(std::string_view text) { return Parser(text).biset_only(); }

Group evaluate(const GroupSpec& spec, std::size_t permutation_cap) {
  if (declared_order(spec) > kMaxSpecOrder)
    throw Error(ErrorCode::GroupTooLarge, "group too large", spec.offset);
  return evaluate_checked(spec, permutation_cap);
}

EvaluatedBiset evaluate(const BisetSpec& spec) {
  if (spec.terms.empty()) throw Error(ErrorCode::ParseError, "empty biset chain", 0);
  std::vector<TermValue> values;
  for (const BisetTerm& t : spec.terms) {
    try {
      values.push_back(evaluate_term(t));
    } catch (const Error& e) {
      if (e.has_offset()) throw;
      throw Error(e.code(), std::string(to_string(t.kind)) + ": " + e.what(), t.offset);
    }
  }
  TermValue acc = std::move(values.back());
  for (std::size_t i = values.size() - 1; i-- > 0;) {
    if (!(values[i].biset.right() == acc.biset.left()))
      throw Error(ErrorCode::GroupMismatch,
                  "right group " + values[i].right + " of this term does not match left group " + acc.left +
                      " of the next term",
                  spec.terms[i].offset);
    acc = TermValue{compose(values[i].biset, acc.biset), values[i].left, acc.right};
  }
  return EvaluatedBiset{std::move(acc.biset), std::move(acc.left), std::move(acc.right)};
}

Group group_from_spec(std::string_view text) { return evaluate(parse_group_spec(text)); }

EvaluatedBiset biset_from_spec(std::string_view text) { return evaluate(parse_biset_spec(text)); }

}  // namespace genome
