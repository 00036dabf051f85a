#include "genome/lattice.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "genome/error.hpp"

namespace genome {

namespace {

constexpr Element kOutside = std::numeric_limits<Element>::max();

struct Closure {
  Subgroup subgroup;
  std::vector<Element> generators;
};

Closure close_with(const Group& g, std::vector<Element> gens) {
  ElementSet members(g.order());
  std::vector<Element> list{kIdentity};
  members.insert(kIdentity);
  for (std::size_t i = 0; i < list.size(); ++i) {
    for (Element s : gens) {
      const Element y = g.mul(list[i], s);
      if (!members.contains(y)) {
        members.insert(y);
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return Closure{Subgroup::unchecked(g, std::move(list)), std::move(gens)};
}

}  // namespace

std::vector<Subgroup> cyclic_subgroups(const Group& g) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<Subgroup> out;
  for (Element x = 0; x < g.order(); ++x) {
    Subgroup c = subgroup_generated(g, {x});
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> all_subgroups(const Group& g, std::size_t cap) {
  if (g.order() > cap) throw Error(ErrorCode::EnumerationTooLarge, "enumeration too large");

  // One generator per cyclic subgroup.
  std::vector<Element> cyclic_gens;
  std::vector<Closure> found;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Element x = 0; x < g.order(); ++x) {
    Closure c = close_with(g, x == kIdentity ? std::vector<Element>{} : std::vector<Element>{x});
    if (seen.insert(c.subgroup.members()).second) {
      if (x != kIdentity) cyclic_gens.push_back(x);
      found.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Element x : cyclic_gens) {
      if (found[i].subgroup.contains(x)) continue;
      std::vector<Element> gens = found[i].generators;
      gens.push_back(x);
      Closure c = close_with(g, std::move(gens));
      if (seen.insert(c.subgroup.members()).second) found.push_back(std::move(c));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (Closure& c : found) out.push_back(std::move(c.subgroup));
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup center(const Group& g) {
  std::vector<Element> z;
  for (Element x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Element y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return Subgroup::unchecked(g, std::move(z));
}

Subgroup normalizer(const Subgroup& s) {
  const Group& g = s.ambient();
  std::vector<Element> n;
  for (Element x = 0; x < g.order(); ++x) {
    bool normalizes = true;
    for (Element e : s.elements()) {
      if (!s.contains(g.conj(e, x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) n.push_back(x);
  }
  return Subgroup::unchecked(g, std::move(n));
}

Subgroup centralizer(const Group& g, Element x) {
  std::vector<Element> c;
  for (Element y = 0; y < g.order(); ++y) {
    if (g.mul(x, y) == g.mul(y, x)) c.push_back(y);
  }
  return Subgroup::unchecked(g, std::move(c));
}

bool is_normal(const Subgroup& s) { return normalizer(s).is_whole(); }

Subgroup commutator_subgroup(const Group& g) {
  std::vector<Element> commutators;
  ElementSet seen(g.order());
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      const Element c = g.commutator(a, b);
      if (!seen.contains(c)) {
        seen.insert(c);
        commutators.push_back(c);
      }
    }
  return subgroup_generated(g, commutators);
}

std::vector<std::vector<Element>> conjugacy_classes(const Group& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (done[x]) continue;
    std::vector<Element> cls;
    for (Element y = 0; y < g.order(); ++y) {
      const Element c = g.conj(x, y);
      if (!done[c]) {
        done[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

// ---------------------------------------------------------------------------

Subquotient::Subquotient(const Subgroup& top, const Subgroup& bottom)
    : top_(top), bottom_(bottom), project_(top.ambient().order(), kOutside) {
  const Group& g = top.ambient();
  if (!bottom.is_subset_of(top)) throw Error(ErrorCode::NotSubgroup, "bottom is not contained in top");
  for (Element h : top.elements()) {
    for (Element k : bottom.elements()) {
      if (!bottom.contains(g.conj(k, h))) throw Error(ErrorCode::NotNormal, "not normal");
    }
  }
  // top.elements() is sorted, so the first unassigned element of a coset is
  // its minimum.
  for (Element h : top.elements()) {
    if (project_[h] != kOutside) continue;
    const Element index = static_cast<Element>(lift_.size());
    lift_.push_back(h);
    for (Element k : bottom.elements()) project_[g.mul(h, k)] = index;
  }
  const std::size_t n = lift_.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = project_[g.mul(lift_[a], lift_[b])];
  quotient_ = Group::from_table(n, std::move(table));
}

Quotient quotient(const Group& g, const Subgroup& n) {
  Subquotient sq(Subgroup::whole(g), n);
  std::vector<Element> images(g.order());
  for (Element x = 0; x < g.order(); ++x) images[x] = sq.project(x);
  std::vector<Element> lifts(sq.group().order());
  for (Element c = 0; c < lifts.size(); ++c) lifts[c] = sq.lift(c);
  return Quotient{sq.group(), GroupMap::make(g, sq.group(), std::move(images)), std::move(lifts)};
}

Quotient abelianization(const Group& g) { return quotient(g, commutator_subgroup(g)); }

bool is_roquette(const Group& g, unsigned p) {
  if (!g.is_p_group(p) && g.order() != 1) throw Error(ErrorCode::NotPGroup, "not a p-group");
  bool roquette = true;
  for (const Subgroup& a : all_subgroups(g)) {
    if (a.order() < p * p) continue;  // groups of order 1 or p are cyclic
    if (!is_normal(a)) continue;
    Group ag = a.as_group();
    if (ag.is_abelian() && !ag.is_cyclic()) {
      roquette = false;
      break;
    }
  }
  if (p % 2 == 1) check_invariant(roquette == g.is_cyclic(), "odd Roquette p-groups are cyclic");
  return roquette;
}

}  // namespace genome
