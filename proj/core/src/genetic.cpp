#include "genome/genetic.hpp"

#include <algorithm>
#include <numeric>

#include "genome/error.hpp"
#include "genome/genome_map.hpp"
#include "genome/lattice.hpp"

namespace genome {

namespace {

// A subgroup together with the two subgroups every genetic test needs.
struct Section {
  Subgroup s;
  Subgroup n;  // N_P(S)
  Subgroup z;  // Z_P(S)
};

Subgroup zp_given_normalizer(const Subgroup& s, const Subgroup& n) {
  const Group& g = s.ambient();
  std::vector<Element> z;
  for (Element x : n.elements()) {
    bool central = true;
    for (Element y : n.elements()) {
      if (!s.contains(g.commutator(x, y))) {
        central = false;
        break;
      }
    }
    if (central) z.push_back(x);
  }
  return Subgroup::unchecked(g, std::move(z));
}

Section section_of(const Subgroup& s) {
  Subgroup n = normalizer(s);
  Subgroup z = zp_given_normalizer(s, n);
  return Section{s, std::move(n), std::move(z)};
}

bool linked_at(const Section& a, const Section& b, Element x) {
  const Group& g = a.s.ambient();
  return conjugate_meets_within(a.s, x, b.z, b.s) && conjugate_meets_within(b.s, g.inv(x), a.z, a.s);
}

std::optional<Element> first_link(const Section& a, const Section& b) {
  for (Element x = 0; x < a.s.ambient().order(); ++x) {
    if (linked_at(a, b, x)) return x;
  }
  return std::nullopt;
}

bool genetic_section(const Section& sec, unsigned p) {
  const Group& g = sec.s.ambient();
  for (Element x = 0; x < g.order(); ++x) {
    const bool meets = conjugate_meets_within(sec.s, x, sec.z, sec.s);
    if (meets != sec.n.contains(x)) return false;
  }
  Subquotient q(sec.n, sec.s);
  return is_roquette(q.group(), p);
}

void require_prime(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::UnsupportedPrime, "unsupported prime: " + std::to_string(p));
}

void require_p_group(const Group& g, unsigned p) {
  require_prime(p);
  if (g.order() != 1 && !g.is_p_group(p))
    throw Error(ErrorCode::NotPGroup, "not a p-group for p = " + std::to_string(p) + " (order " +
                                          std::to_string(g.order()) + ")");
}

std::size_t order_modulo(const Group& g, Element x, const Subgroup& s) {
  std::size_t k = 1;
  for (Element y = x; !s.contains(y); y = g.mul(y, x)) ++k;
  return k;
}

std::vector<Section> genetic_sections(const Group& g, unsigned p) {
  std::vector<Section> out;
  for (const Subgroup& s : all_subgroups(g)) {
    Section sec = section_of(s);
    if (genetic_section(sec, p)) out.push_back(std::move(sec));
  }
  return out;
}

struct Classes {
  std::vector<Section> genetic;
  std::vector<std::vector<std::size_t>> members;  // indices into genetic
};

Classes classify(const Group& g, unsigned p) {
  Classes c{genetic_sections(g, p), {}};
  const std::size_t m = c.genetic.size();
  std::vector<std::size_t> class_of(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool placed = false;
    for (std::size_t k = 0; k < c.members.size() && !placed; ++k) {
      if (first_link(c.genetic[c.members[k].front()], c.genetic[i])) {
        c.members[k].push_back(i);
        class_of[i] = k;
        placed = true;
      }
    }
    if (!placed) {
      class_of[i] = c.members.size();
      c.members.push_back({i});
    }
  }
  // Linkage must be an equivalence relation: linked exactly within classes.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const bool link = first_link(c.genetic[i], c.genetic[j]).has_value();
      check_invariant(link == (class_of[i] == class_of[j]), "linkage is an equivalence relation");
      if (link) {
        const std::size_t qi = c.genetic[i].n.order() / c.genetic[i].s.order();
        const std::size_t qj = c.genetic[j].n.order() / c.genetic[j].s.order();
        check_invariant(qi == qj, "linked genetic subgroups have isomorphic quotients");
      }
    }
  }
  return c;
}

GenomeFactor make_factor(const Section& sec, std::optional<Element> generator) {
  const Group& g = sec.s.ambient();
  const std::size_t q = sec.n.order() / sec.s.order();
  Element gen = 0;
  if (generator) {
    gen = *generator;
    if (!sec.n.contains(gen) || order_modulo(g, gen, sec.s) != q)
      throw Error(ErrorCode::InvalidArgument, "generator " + std::to_string(gen) + " does not generate N_P(S)/S");
  } else {
    gen = canonical_generator(sec.s, sec.n);
  }
  return GenomeFactor{sec.s, sec.n, q, gen};
}

}  // namespace

Subgroup zp_subgroup(const Subgroup& s) { return zp_given_normalizer(s, normalizer(s)); }

bool is_genetic(const Subgroup& s, unsigned p) {
  require_p_group(s.ambient(), p);
  return genetic_section(section_of(s), p);
}

std::optional<Element> linked(const Subgroup& s, const Subgroup& t) {
  if (!(s.ambient() == t.ambient())) throw Error(ErrorCode::GroupMismatch, "subgroups of different groups");
  return first_link(section_of(s), section_of(t));
}

std::vector<LinkageClass> linkage_classes(const Group& g, unsigned p) {
  require_p_group(g, p);
  Classes c = classify(g, p);
  std::vector<LinkageClass> out;
  for (const auto& idx : c.members) {
    LinkageClass lc{c.genetic[idx.front()].s, {}};
    for (std::size_t i : idx) lc.members.push_back(c.genetic[i].s);
    out.push_back(std::move(lc));
  }
  return out;
}

std::vector<Subgroup> genetic_basis(const Group& g, unsigned p) {
  require_odd_p_group(g, p);
  std::vector<Subgroup> basis;
  for (LinkageClass& lc : linkage_classes(g, p)) basis.push_back(std::move(lc.representative));
  return basis;
}

void require_odd_p_group(const Group& g, unsigned p) {
  require_prime(p);
  if (p == 2) throw Error(ErrorCode::OddPrimesOnly, "odd primes only");
  require_p_group(g, p);
}

Element canonical_generator(const Subgroup& s, const Subgroup& n) {
  const std::size_t q = n.order() / s.order();
  for (Element x : n.elements()) {
    if (order_modulo(s.ambient(), x, s) == q) return x;
  }
  invariant_failure("N_P(S)/S is cyclic for a genetic subgroup of an odd p-group");
}

std::int64_t factor_exponent(const GenomeFactor& f, const Group& g, Element n) {
  if (!f.normalizer.contains(n)) throw Error(ErrorCode::InvalidArgument, "element is not in N_P(S)");
  const Element n_inv = g.inv(n);
  Element power = kIdentity;
  for (std::size_t k = 0; k < f.quotient_order; ++k) {
    if (f.subgroup.contains(g.mul(power, n_inv))) return static_cast<std::int64_t>(k);
    power = g.mul(power, f.generator);
  }
  invariant_failure("generator spans N_P(S)/S");
}

std::vector<std::size_t> GenomeDescriptor::factor_orders() const {
  std::vector<std::size_t> out;
  for (const GenomeFactor& f : factors) out.push_back(f.quotient_order);
  return out;
}

bool operator==(const GenomeDescriptor& a, const GenomeDescriptor& b) {
  if (a.prime != b.prime || a.factors.size() != b.factors.size() || !(a.group == b.group)) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    if (!(a.factors[i].subgroup == b.factors[i].subgroup) || a.factors[i].generator != b.factors[i].generator)
      return false;
  }
  return true;
}

GenomeDescriptor genome_of(const Group& g, unsigned p) {
  require_odd_p_group(g, p);
  Classes c = classify(g, p);
  GenomeDescriptor d{g, p, {}, {}};
  for (const auto& idx : c.members) d.factors.push_back(make_factor(c.genetic[idx.front()], std::nullopt));
  return d;
}

GenomeDescriptor genome_from_basis(const Group& g, unsigned p, std::vector<Subgroup> basis,
                                   std::vector<Element> generators) {
  require_odd_p_group(g, p);
  if (!generators.empty() && generators.size() != basis.size())
    throw Error(ErrorCode::InvalidArgument, "generator count does not match basis size");
  std::vector<Section> sections;
  for (const Subgroup& s : basis) {
    if (!(s.ambient() == g)) throw Error(ErrorCode::GroupMismatch, "basis subgroup of a different group");
    Section sec = section_of(s);
    if (!genetic_section(sec, p)) throw Error(ErrorCode::NotGeneticBasis, "not a genetic basis: subgroup is not genetic");
    sections.push_back(std::move(sec));
  }
  Classes c = classify(g, p);
  // Every linkage class must contain exactly one basis element.
  for (const auto& idx : c.members) {
    std::size_t hits = 0;
    for (const Section& sec : sections) {
      if (first_link(c.genetic[idx.front()], sec)) ++hits;
    }
    if (hits != 1) throw Error(ErrorCode::NotGeneticBasis, "not a genetic basis");
  }
  if (sections.size() != c.members.size()) throw Error(ErrorCode::NotGeneticBasis, "not a genetic basis");
  GenomeDescriptor d{g, p, {}, {}};
  for (std::size_t i = 0; i < sections.size(); ++i) {
    d.factors.push_back(make_factor(sections[i], generators.empty() ? std::nullopt : std::optional(generators[i])));
  }
  return d;
}

std::vector<std::size_t> faithful_part(const GenomeDescriptor& d) {
  const Subgroup z = center(d.group);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    if (intersection(d.factors[i].subgroup, z).is_trivial()) out.push_back(i);
  }
  return out;
}

BasisReport basis_report(const Group& g, unsigned p) {
  require_odd_p_group(g, p);
  Classes c = classify(g, p);
  BasisReport r{GenomeDescriptor{g, p, {}, {}}, {}, c.genetic.size()};
  for (const auto& idx : c.members) {
    r.descriptor.factors.push_back(make_factor(c.genetic[idx.front()], std::nullopt));
    r.class_sizes.push_back(idx.size());
  }
  return r;
}

// ---------------------------------------------------------------------------
// GenomeMap

GenomeMap GenomeMap::make(GenomeDescriptor source, GenomeDescriptor target, Matrix entries) {
  if (entries.size() != target.size()) throw Error(ErrorCode::InvalidArgument, "entry matrix has wrong row count");
  for (std::size_t t = 0; t < entries.size(); ++t) {
    if (entries[t].size() != source.size()) throw Error(ErrorCode::InvalidArgument, "entry matrix has wrong column count");
    const auto mod = static_cast<std::int64_t>(target.factors[t].quotient_order);
    for (std::size_t s = 0; s < entries[t].size(); ++s) {
      std::int64_t& e = entries[t][s];
      e = ((e % mod) + mod) % mod;
      const auto src_order = static_cast<std::int64_t>(source.factors[s].quotient_order);
      if ((e * src_order) % mod != 0)
        throw Error(ErrorCode::InvalidArgument, "entry violates the homomorphism condition");
    }
  }
  return GenomeMap(std::move(source), std::move(target), std::move(entries));
}

GenomeMap GenomeMap::identity(const GenomeDescriptor& d) {
  Matrix m(d.size(), std::vector<std::int64_t>(d.size(), 0));
  for (std::size_t i = 0; i < d.size(); ++i) m[i][i] = 1;
  return make(d, d, std::move(m));
}

GenomeElement GenomeMap::apply(const GenomeElement& a) const {
  if (a.exponents.size() != source_.size()) throw Error(ErrorCode::DescriptorMismatch, "element has wrong length");
  GenomeElement b{std::vector<std::int64_t>(target_.size(), 0)};
  for (std::size_t t = 0; t < target_.size(); ++t) {
    const auto mod = static_cast<std::int64_t>(target_.factors[t].quotient_order);
    std::int64_t acc = 0;
    for (std::size_t s = 0; s < source_.size(); ++s) acc = (acc + entries_[t][s] * a.exponents[s]) % mod;
    b.exponents[t] = (acc + mod) % mod;
  }
  return b;
}

GenomeMap compose_genome_maps(const GenomeMap& second, const GenomeMap& first) {
  if (!(first.target() == second.source()))
    throw Error(ErrorCode::DescriptorMismatch, "descriptor mismatch: maps are not composable");
  const std::size_t rows = second.target().size();
  const std::size_t mid = first.target().size();
  const std::size_t cols = first.source().size();
  GenomeMap::Matrix m(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t t = 0; t < rows; ++t) {
    const auto mod = static_cast<std::int64_t>(second.target().factors[t].quotient_order);
    for (std::size_t s = 0; s < cols; ++s) {
      std::int64_t acc = 0;
      for (std::size_t r = 0; r < mid; ++r) acc = (acc + second.entry(t, r) * first.entry(r, s)) % mod;
      m[t][s] = acc;
    }
  }
  return GenomeMap::make(first.source(), second.target(), std::move(m));
}

GenomeMap change_of_basis(const GenomeDescriptor& from, const GenomeDescriptor& to) {
  if (!(from.group == to.group) || from.prime != to.prime)
    throw Error(ErrorCode::DescriptorMismatch, "bases of different groups");
  const Group& g = from.group;
  std::vector<Section> src, dst;
  for (const GenomeFactor& f : from.factors) src.push_back(Section{f.subgroup, f.normalizer, zp_given_normalizer(f.subgroup, f.normalizer)});
  for (const GenomeFactor& f : to.factors) dst.push_back(Section{f.subgroup, f.normalizer, zp_given_normalizer(f.subgroup, f.normalizer)});

  GenomeMap::Matrix m(to.size(), std::vector<std::int64_t>(from.size(), 0));
  std::vector<char> hit(to.size(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::optional<std::size_t> match;
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (first_link(src[i], dst[j])) {
        if (match) throw Error(ErrorCode::NotGeneticBasis, "not a genetic basis: two linked targets");
        match = j;
      }
    }
    if (!match) throw Error(ErrorCode::NotGeneticBasis, "not a genetic basis: no linked target");
    const std::size_t j = *match;
    if (hit[j]++) throw Error(ErrorCode::NotGeneticBasis, "not a genetic basis: target matched twice");
    const Section& a = src[i];
    const Section& b = dst[j];
    const Element n = from.factors[i].generator;

    std::vector<Element> witnesses;
    for (Element x = 0; x < g.order(); ++x) {
      if (linked_at(a, b, x)) witnesses.push_back(x);
    }
    // The witnesses form one (N_P(S), N_P(S')) double coset.
    {
      ElementSet coset(g.order());
      for (Element u : a.n.elements())
        for (Element v : b.n.elements()) coset.insert(g.mul(g.mul(u, witnesses.front()), v));
      std::size_t size = 0;
      for (Element x = 0; x < g.order(); ++x) size += coset.contains(x);
      check_invariant(size == witnesses.size(), "linking elements form a single double coset");
      for (Element x : witnesses) check_invariant(coset.contains(x), "linking elements form a single double coset");
    }

    std::optional<std::int64_t> exponent;
    for (Element x : witnesses) {
      // n' in N_P(S') with S n x S' = S x n' S', i.e. x n' in S n x S'.
      ElementSet target(g.order());
      const Element nx = g.mul(n, x);
      for (Element s : a.s.elements())
        for (Element t : b.s.elements()) target.insert(g.mul(g.mul(s, nx), t));
      std::optional<std::int64_t> e;
      for (Element y : b.n.elements()) {
        if (!target.contains(g.mul(x, y))) continue;
        const std::int64_t k = factor_exponent(to.factors[j], g, y);
        check_invariant(!e || *e == k, "n' is unique modulo S'");
        e = k;
      }
      check_invariant(e.has_value(), "n' exists for every linking element");
      check_invariant(!exponent || *exponent == *e, "change of basis does not depend on the linking element");
      exponent = e;
    }
    const auto q = static_cast<std::int64_t>(to.factors[j].quotient_order);
    check_invariant(q == static_cast<std::int64_t>(from.factors[i].quotient_order), "linked factors have equal order");
    check_invariant(q == 1 || std::gcd(*exponent, q) == 1, "change of basis is an isomorphism on each factor");
    m[j][i] = *exponent;
  }
  return GenomeMap::make(from, to, std::move(m));
}

}  // namespace genome
