#include "genome/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "genome/biset.hpp"
#include "genome/constructors.hpp"
#include "genome/error.hpp"
#include "genome/genetic.hpp"
#include "genome/genome_map.hpp"
#include "genome/lattice.hpp"
#include "genome/spec.hpp"
#include "genome/transfer.hpp"

namespace genome::verify {

namespace {

using Rng = std::mt19937_64;

constexpr std::size_t kMaxFailuresKept = 5;
constexpr std::size_t kMaxPairOrder = 729;  // |Q| * |P| for random subgroup-pair bisets
constexpr std::size_t kMaxChainBiset = 4000;

std::size_t uniform(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

template <class F>
void guarded(Tally& t, const std::string& context, F&& check) {
  try {
    t.record(check(), context);
  } catch (const std::exception& e) {
    t.record(false, context + ": " + e.what());
  }
}

std::vector<CatalogEntry> groups_for(const Options& o) {
  if (!o.groups.empty()) return o.groups;
  return catalog(o.p, o.max_order);
}

class GenomeCache {
 public:
  explicit GenomeCache(unsigned p) : p_(p) {}

  const GenomeDescriptor& get(const Group& g) {
    std::vector<Element> key(g.table().begin(), g.table().end());
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(std::move(key), genome_of(g, p_)).first;
    return it->second;
  }

 private:
  unsigned p_;
  std::map<std::vector<Element>, GenomeDescriptor> cache_;
};

GenomeMap map_of(GenomeCache& cache, const Biset& u) {
  return genome_map(u, cache.get(u.right()), cache.get(u.left()));
}

Subgroup random_subgroup(const Group& g, Rng& rng) {
  std::vector<Element> gens;
  const std::size_t k = uniform(rng, 3);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(static_cast<Element>(uniform(rng, g.order())));
  return subgroup_generated(g, gens);
}

bool meets_left_factor_trivially(const Subgroup& b, std::size_t right_order) {
  for (Element e : b.elements())
    if (e != 0 && e % right_order == 0) return false;
  return true;
}

Subgroup random_left_free_subgroup(const DirectProduct& qp, Rng& rng) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    Subgroup b = random_subgroup(qp.group, rng);
    if (meets_left_factor_trivially(b, qp.right_order)) return b;
  }
  return Subgroup::trivial(qp.group);
}

// A transitive (Q, P)-biset (Q x P)/B. With left_free, B meets Q x 1 trivially.
Biset random_pair_biset(const Group& q, const Group& p, Rng& rng, bool left_free) {
  DirectProduct qp = direct_product(q, p);
  Subgroup b = left_free ? random_left_free_subgroup(qp, rng) : random_subgroup(qp.group, rng);
  return from_subgroup_pair(q, p, b);
}

Biset random_left_free(const Group& q, const Group& p, Rng& rng) {
  Biset u = random_pair_biset(q, p, rng, true);
  const std::size_t extra = uniform(rng, 3);
  for (std::size_t i = 0; i < extra; ++i) u = disjoint_union(u, random_pair_biset(q, p, rng, true));
  return u;
}

Biset permute_points(const Biset& u, Rng& rng) {
  std::vector<Point> pi(u.size());
  std::iota(pi.begin(), pi.end(), Point{0});
  std::shuffle(pi.begin(), pi.end(), rng);
  const std::size_t nq = u.left().order(), np = u.right().order(), n = u.size();
  std::vector<Point> left(nq * n), right(n * np);
  for (Point x = 0; x < n; ++x) {
    for (Element a = 0; a < nq; ++a) left[a * n + pi[x]] = pi[u.act_left(a, x)];
    for (Element b = 0; b < np; ++b) right[pi[x] * np + b] = pi[u.act_right(x, b)];
  }
  return Biset::make(u.left(), u.right(), n, std::move(left), std::move(right));
}

std::string describe(const std::string& a, const std::string& b) { return "(" + a + ", " + b + ")"; }

// ---------------------------------------------------------------------------
// transfer

void closed_form(Report& r, std::size_t max_n) {
  Tally& t = r.tally("Ver on (D x C)/B equals a -> phi(a^|C:E|) for cyclic C, D");
  for (std::size_t nc = 1; nc <= max_n; ++nc) {
    for (std::size_t nd = 1; nd <= max_n; ++nd) {
      const Group c = make_cyclic(nc);
      const Group d = make_cyclic(nd);
      DirectProduct dc = direct_product(d, c);
      // B meets both factors trivially, so B is isomorphic to a subgroup of
      // the cyclic group C and is itself cyclic.
      std::set<std::vector<Element>> seen;
      for (Element x = 0; x < dc.group.order(); ++x) {
        Subgroup b = subgroup_generated(dc.group, {x});
        if (!seen.insert(b.elements()).second) continue;
        bool free = true;
        for (Element e : b.elements())
          if (e != 0 && (e % nc == 0 || e / nc == 0)) free = false;
        if (!free) continue;
        const std::string ctx = "D=C" + std::to_string(nd) + " C=C" + std::to_string(nc) + " B=<" +
                                std::to_string(x / nc) + "," + std::to_string(x % nc) + ">";
        guarded(t, ctx, [&] {
          Biset omega = from_subgroup_pair(d, c, b);
          if (!is_left_free(omega) || !is_right_free(omega)) return false;
          AbelianHom ver = verlagerung(omega);
          std::vector<Element> phi(nc, 0);  // phi on E, indexed by the C-component
          for (Element e : b.elements()) phi[e % nc] = e / nc;
          const std::size_t index = nc / b.order();
          for (Element a = 0; a < nc; ++a) {
            const Element a_n = static_cast<Element>((a * index) % nc);
            if (ver(a) != ver.target_ab.projection(phi[a_n])) return false;
          }
          return true;
        });
      }
    }
  }
}

void classical_transfer(Report& r, const std::vector<CatalogEntry>& pool) {
  Tally& t = r.tally("Ver of G as (H, G)-biset is g -> g^[G:H] for central H");
  for (const CatalogEntry& e : pool) {
    const Group& g = e.group;
    for (const Subgroup& h : all_subgroups(g)) {
      if (!h.is_subset_of(center(g))) continue;
      guarded(t, e.spec + " |H|=" + std::to_string(h.order()), [&] {
        AbelianHom ver = verlagerung(restriction(h));
        const long long index = static_cast<long long>(g.order() / h.order());
        for (Element x = 0; x < g.order(); ++x) {
          const Element y = g.pow(x, index);
          const auto pos = std::lower_bound(h.elements().begin(), h.elements().end(), y);
          if (pos == h.elements().end() || *pos != y) return false;
          const auto local = static_cast<Element>(pos - h.elements().begin());
          if (ver(x) != ver.target_ab.projection(local)) return false;
        }
        return true;
      });
    }
  }
}

std::pair<std::size_t, std::size_t> pick_pair(const std::vector<CatalogEntry>& pool, Rng& rng) {
  for (;;) {
    const std::size_t a = uniform(rng, pool.size()), b = uniform(rng, pool.size());
    if (pool[a].group.order() * pool[b].group.order() <= kMaxPairOrder) return {a, b};
  }
}

void representative_checks(Report& r, const std::vector<CatalogEntry>& pool, const Options& o, Rng& rng) {
  Tally& reps = r.tally("Ver does not depend on the orbit representatives");
  Tally& isos = r.tally("isomorphic bisets have equal Ver");
  Tally& add = r.tally("Ver of a disjoint union is the sum of the parts");
  for (std::size_t i = 0; i < o.transfer_bisets; ++i) {
    const auto [hi, gi] = pick_pair(pool, rng);
    const Group& h = pool[hi].group;
    const Group& g = pool[gi].group;
    const std::string ctx = describe(pool[hi].spec, pool[gi].spec) + " #" + std::to_string(i);
    Biset omega = random_left_free(h, g, rng);
    AbelianHom base = verlagerung(omega);
    const std::vector<Point> defaults = left_orbit_representatives(omega);
    for (std::size_t k = 0; k < o.rechoices; ++k) {
      std::vector<Point> chosen;
      for (Point x : defaults) chosen.push_back(omega.act_left(static_cast<Element>(uniform(rng, h.order())), x));
      std::shuffle(chosen.begin(), chosen.end(), rng);
      guarded(reps, ctx, [&] { return verlagerung(omega, chosen) == base; });
    }
    guarded(isos, ctx + " relabeled points", [&] { return verlagerung(permute_points(omega, rng)) == base; });
    // Conjugating B by an element of Q x P gives an isomorphic biset.
    guarded(isos, ctx + " conjugate subgroup", [&] {
      DirectProduct hg = direct_product(h, g);
      const Subgroup b = random_left_free_subgroup(hg, rng);
      const Element z = static_cast<Element>(uniform(rng, hg.group.order()));
      const Biset one = from_subgroup_pair(h, g, b);
      const Biset other = from_subgroup_pair(h, g, conjugate_subgroup(b, z));
      return are_isomorphic(one, other) && verlagerung(one) == verlagerung(other);
    });
    Biset second = random_left_free(h, g, rng);
    guarded(add, ctx, [&] {
      return verlagerung(disjoint_union(omega, second)) == verlagerung(omega) + verlagerung(second);
    });
  }
}

void transitivity(Report& r, const std::vector<CatalogEntry>& pool, const Options& o, Rng& rng) {
  Tally& t = r.tally("Ver of a composite is the composite of Vers");
  Tally& lf = r.tally("composites of left-free bisets are left free");
  for (std::size_t i = 0; i < o.transfer_pairs; ++i) {
    auto [hi, gi] = pick_pair(pool, rng);
    std::size_t ki = 0;
    do {
      ki = uniform(rng, pool.size());
    } while (pool[ki].group.order() * pool[hi].group.order() > kMaxPairOrder);
    const Group& g = pool[gi].group;
    const Group& h = pool[hi].group;
    const Group& k = pool[ki].group;
    const std::string ctx = pool[ki].spec + " <- " + pool[hi].spec + " <- " + pool[gi].spec;
    Biset omega = random_pair_biset(h, g, rng, true);
    Biset omega2 = random_pair_biset(k, h, rng, true);
    Biset both = compose(omega2, omega);
    guarded(lf, ctx, [&] { return is_left_free(both); });
    guarded(t, ctx, [&] { return compose(verlagerung(omega2), verlagerung(omega)) == verlagerung(both); });
  }
}

void not_left_free(Report& r, const std::vector<CatalogEntry>& pool) {
  Tally& t = r.tally("Ver rejects bisets that are not left free");
  for (const CatalogEntry& e : pool) {
    const Subgroup z = center(e.group);
    if (z.is_trivial()) continue;
    guarded(t, e.spec, [&] {
      try {
        verlagerung(inflation(z));
      } catch (const Error& err) {
        return err.code() == ErrorCode::NotLeftFree;
      }
      return false;
    });
  }
}

std::vector<CatalogEntry> transfer_pool(const Options& o) {
  std::vector<CatalogEntry> pool;
  for (CatalogEntry& e : groups_for(o))
    if (e.group.order() <= 27) pool.push_back(std::move(e));
  // Ver is defined for arbitrary finite groups.
  for (const char* spec : {"C2 x C2", "C2 x C3", "perm[(1 2 3); (1 2)]"}) pool.push_back({spec, group_from_spec(spec)});
  return pool;
}

// ---------------------------------------------------------------------------
// functoriality

struct Undo {
  enum class Kind { Inflate, Induce } kind;
  Subgroup subgroup;  // N for Inflate, H for Induce (both in the parent group)
  Group child;        // P/N or H as a group
};

Biset random_step(const Group& x, const std::vector<CatalogEntry>& pool, std::vector<Undo>& undo, Rng& rng,
                  std::string& label) {
  for (;;) {
    switch (uniform(rng, 6)) {
      case 0:
        label = "id";
        return identity_biset(x);
      case 1: {
        std::vector<Subgroup> normal;
        for (const Subgroup& n : all_subgroups(x))
          if (!n.is_trivial() && is_normal(n)) normal.push_back(n);
        if (normal.empty()) continue;
        const Subgroup& n = normal[uniform(rng, normal.size())];
        Biset b = deflation(n);
        undo.push_back(Undo{Undo::Kind::Inflate, n, b.left()});
        label = "def";
        return b;
      }
      case 2: {
        const std::vector<Subgroup> subs = all_subgroups(x);
        const Subgroup& h = subs[uniform(rng, subs.size())];
        Biset b = restriction(h);
        undo.push_back(Undo{Undo::Kind::Induce, h, b.left()});
        label = "res";
        return b;
      }
      case 3: {
        Relabeling rl = relabel(x, rng);
        label = "iso";
        return iso(rl.iso);
      }
      case 4: {
        if (undo.empty() || !(undo.back().child == x)) continue;
        Undo u = std::move(undo.back());
        undo.pop_back();
        label = u.kind == Undo::Kind::Inflate ? "inf" : "ind";
        return u.kind == Undo::Kind::Inflate ? inflation(u.subgroup) : induction(u.subgroup);
      }
      case 5: {
        std::vector<std::size_t> fits;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (pool[i].group.order() * x.order() <= kMaxPairOrder) fits.push_back(i);
        if (fits.empty()) continue;
        const CatalogEntry& y = pool[fits[uniform(rng, fits.size())]];
        label = "pair(" + y.spec + ")";
        return random_pair_biset(y.group, x, rng, false);
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Inf/Def

// Γ(P/N) over the images S/N of the basis elements containing N, with the
// images of their generators. Returns the descriptor and, per quotient factor,
// the index of the factor of P it came from.
std::pair<GenomeDescriptor, std::vector<std::size_t>> quotient_descriptor(const GenomeDescriptor& d,
                                                                          const Quotient& q,
                                                                          const Subgroup& n) {
  std::vector<Subgroup> basis;
  std::vector<Element> gens;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const GenomeFactor& f = d.factors[i];
    if (!n.is_subset_of(f.subgroup)) continue;
    std::vector<Element> image;
    for (Element s : f.subgroup.elements()) image.push_back(q.projection(s));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    basis.push_back(Subgroup::from_elements(q.group, std::move(image)));
    gens.push_back(q.projection(f.generator));
    origin.push_back(i);
  }
  return {genome_from_basis(q.group, d.prime, std::move(basis), std::move(gens)), std::move(origin)};
}

// ---------------------------------------------------------------------------
// basis independence

// A second genetic basis: random class members, random generators, shuffled.
GenomeDescriptor random_basis(const Group& g, unsigned p, Rng& rng) {
  std::vector<Subgroup> basis;
  std::vector<Element> gens;
  for (const LinkageClass& c : linkage_classes(g, p)) {
    Subgroup s = c.members[uniform(rng, c.members.size())];
    const Subgroup n = normalizer(s);
    const std::size_t q = n.order() / s.order();
    std::vector<Element> choices;
    for (Element y : n.elements()) {
      std::size_t k = 1;
      for (Element z = y; !s.contains(z); z = g.mul(z, y)) ++k;
      if (k == q) choices.push_back(y);
    }
    gens.push_back(choices[uniform(rng, choices.size())]);
    basis.push_back(std::move(s));
  }
  std::vector<std::size_t> order(basis.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Subgroup> b2;
  std::vector<Element> g2;
  for (std::size_t i : order) {
    b2.push_back(basis[i]);
    g2.push_back(gens[i]);
  }
  return genome_from_basis(g, p, std::move(b2), std::move(g2));
}

}  // namespace

void Tally::record(bool ok, const std::string& context) {
  ++checked;
  if (ok) return;
  ++failed;
  if (failures.size() < kMaxFailuresKept) failures.push_back(context);
}

bool Report::passed() const {
  if (tallies.empty()) return false;
  for (const Tally& t : tallies)
    if (t.failed > 0 || t.checked == 0) return false;
  return true;
}

std::size_t Report::checked() const {
  std::size_t n = 0;
  for (const Tally& t : tallies) n += t.checked;
  return n;
}

Tally& Report::tally(const std::string& identity) {
  for (Tally& t : tallies)
    if (t.identity == identity) return t;
  tallies.push_back(Tally{identity, 0, 0, {}});
  return tallies.back();
}

Report transfer_closed_form_suite(const Options& o) {
  Report r{"transfer", {}};
  closed_form(r, std::min(o.closed_form_max, o.max_order));
  return r;
}

Report transfer_law_suite(const Options& o) {
  Report r{"transfer", {}};
  Rng rng(o.seed);
  const std::vector<CatalogEntry> pool = transfer_pool(o);
  classical_transfer(r, pool);
  representative_checks(r, pool, o, rng);
  transitivity(r, pool, o, rng);
  not_left_free(r, pool);
  return r;
}

Report transfer_suite(const Options& o) {
  Report r = transfer_closed_form_suite(o);
  for (Tally& t : transfer_law_suite(o).tallies) r.tallies.push_back(std::move(t));
  return r;
}

Report functoriality_suite(const Options& o) {
  Report r{"functoriality", {}};
  Tally& ident = r.tally("genome_map of the identity biset is the identity");
  Tally& comp = r.tally("genome_map(V x U) = genome_map(V) o genome_map(U)");
  Tally& chains = r.tally("chains evaluated");
  Rng rng(o.seed);
  const std::vector<CatalogEntry> pool = groups_for(o);
  GenomeCache cache(o.p);
  for (const CatalogEntry& e : pool) {
    guarded(ident, e.spec, [&] {
      const GenomeDescriptor& d = cache.get(e.group);
      return genome_map(identity_biset(e.group), d, d).same_entries(GenomeMap::identity(d));
    });
  }
  for (std::size_t c = 0; c < o.chains; ++c) {
    const CatalogEntry& start = pool[uniform(rng, pool.size())];
    std::string ctx = start.spec;
    std::vector<Undo> undo;
    const std::size_t length = 2 + uniform(rng, 3);
    bool ok = true;
    try {
      std::string label;
      Biset acc = random_step(start.group, pool, undo, rng, label);
      ctx += " | " + label;
      GenomeMap acc_map = map_of(cache, acc);
      for (std::size_t s = 1; s < length; ++s) {
        Biset step = random_step(acc.left(), pool, undo, rng, label);
        ctx += " | " + label;
        Biset next = compose(step, acc);
        if (next.size() > kMaxChainBiset) break;
        GenomeMap direct = map_of(cache, next);
        GenomeMap product = compose_genome_maps(map_of(cache, step), acc_map);
        const bool same = direct.same_entries(product);
        comp.record(same, ctx);
        ok = ok && same;
        acc = std::move(next);
        acc_map = std::move(direct);
      }
    } catch (const std::exception& e) {
      comp.record(false, ctx + ": " + e.what());
      ok = false;
    }
    chains.record(ok, ctx);
  }
  return r;
}

Report infdef_suite(const Options& o) {
  Report r{"infdef", {}};
  Tally& inf = r.tally("Inf is the 0/1 embedding onto the factors with S >= N");
  Tally& def = r.tally("Def is the transposed projection");
  Tally& round = r.tally("Def o Inf is the identity of the quotient genome");
  Tally& canon = r.tally("Inf over the canonical quotient basis agrees through change of basis");
  for (const CatalogEntry& e : groups_for(o)) {
    const Group& g = e.group;
    const GenomeDescriptor d = genome_of(g, o.p);
    for (const Subgroup& n : all_subgroups(g)) {
      if (!is_normal(n)) continue;
      const std::string ctx = e.spec + " |N|=" + std::to_string(n.order()) + " N=" +
                              std::to_string(n.elements().size() > 1 ? n.elements()[1] : 0);
      try {
        const Quotient q = quotient(g, n);
        const auto [dq, origin] = quotient_descriptor(d, q, n);
        GenomeMap::Matrix expected(d.size(), std::vector<std::int64_t>(dq.size(), 0));
        for (std::size_t j = 0; j < dq.size(); ++j) expected[origin[j]][j] = 1;
        const GenomeMap mi = genome_map(inflation(n), dq, d);
        const GenomeMap md = genome_map(deflation(n), d, dq);
        // Entries are stored reduced, so a 1 in an order-1 factor reads 0.
        const GenomeMap want = GenomeMap::make(dq, d, expected);
        GenomeMap::Matrix transposed(dq.size(), std::vector<std::int64_t>(d.size(), 0));
        for (std::size_t j = 0; j < dq.size(); ++j) transposed[j][origin[j]] = 1;
        const GenomeMap want_def = GenomeMap::make(d, dq, transposed);
        inf.record(mi.same_entries(want), ctx);
        def.record(md.same_entries(want_def), ctx);
        round.record(compose_genome_maps(md, mi).same_entries(GenomeMap::identity(dq)), ctx);
        const GenomeDescriptor dc = genome_of(q.group, o.p);
        const GenomeMap via = compose_genome_maps(mi, change_of_basis(dc, dq));
        canon.record(genome_map(inflation(n), dc, d).same_entries(via), ctx);
      } catch (const std::exception& ex) {
        inf.record(false, ctx + ": " + ex.what());
      }
    }
  }
  return r;
}

Report rationality_suite(const Options& o) {
  Report r{"rationality", {}};
  Tally& embed = r.tally("Indinf embeds N_P(S)/S at S and vanishes elsewhere");
  Tally& faithful = r.tally("the embedded factor is the faithful part of N_P(S)/S");
  Tally& bij = r.tally("the assembled I_B matrix is a bijection of genomes");
  for (const CatalogEntry& e : groups_for(o)) {
    const Group& g = e.group;
    const GenomeDescriptor d = genome_of(g, o.p);
    std::vector<std::vector<std::int64_t>> assembled(d.size(), std::vector<std::int64_t>(d.size(), 0));
    bool all_ok = true;
    for (std::size_t i = 0; i < d.size(); ++i) {
      const GenomeFactor& f = d.factors[i];
      const std::string ctx = e.spec + " factor " + std::to_string(i);
      try {
        const Subquotient sq(f.normalizer, f.subgroup);
        const GenomeDescriptor dr = genome_of(sq.group(), o.p);
        // The trivial subgroup of the cyclic genotype is genetic.
        std::size_t col = dr.size();
        for (std::size_t j = 0; j < dr.size(); ++j)
          if (dr.factors[j].subgroup.is_trivial()) col = j;
        if (col == dr.size()) {
          embed.record(false, ctx + ": trivial subgroup missing from the genotype basis");
          all_ok = false;
          continue;
        }
        faithful.record(faithful_part(dr) == std::vector<std::size_t>{col}, ctx);
        const GenomeMap m = genome_map(induction_inflation(f.subgroup), dr, d);
        // Canonical identification: the generator of the genotype, lifted to
        // N_P(S), read against the generator of factor i.
        const std::int64_t want = factor_exponent(f, g, sq.lift(dr.factors[col].generator));
        bool ok = true;
        for (std::size_t t = 0; t < d.size(); ++t) ok = ok && m.entry(t, col) == (t == i ? want : 0);
        embed.record(ok, ctx);
        all_ok = all_ok && ok;
        for (std::size_t t = 0; t < d.size(); ++t) assembled[t][i] = m.entry(t, col);
      } catch (const std::exception& ex) {
        embed.record(false, ctx + ": " + ex.what());
        all_ok = false;
      }
    }
    // Monomial with unit entries between cyclic factors of equal order.
    bool bijective = all_ok;
    for (std::size_t t = 0; t < d.size() && bijective; ++t) {
      const auto q = static_cast<std::int64_t>(d.factors[t].quotient_order);
      std::size_t nonzero = 0;
      for (std::size_t s = 0; s < d.size(); ++s) {
        if (assembled[t][s] == 0) continue;
        ++nonzero;
        bijective = bijective && s == t && std::gcd(assembled[t][s], q) == 1;
      }
      bijective = bijective && (q == 1 || nonzero == 1);
    }
    bij.record(bijective, e.spec);
  }
  return r;
}

Report basis_independence_suite(const Options& o) {
  Report r{"basis-independence", {}};
  Tally& gamma = r.tally("genome_map(id, B, B') = gamma_{B',B}");
  Tally& square = r.tally("genome_map over (B', B_Q') = gamma o genome_map over (B, B_Q) o gamma");
  Rng rng(o.seed);
  const std::vector<CatalogEntry> pool = groups_for(o);
  for (const CatalogEntry& e : pool) {
    const Group& g = e.group;
    const GenomeDescriptor d = genome_of(g, o.p);
    for (std::size_t trial = 0; trial < o.basis_trials; ++trial) {
      const GenomeDescriptor d2 = random_basis(g, o.p, rng);
      guarded(gamma, e.spec, [&] {
        return genome_map(identity_biset(g), d, d2).same_entries(change_of_basis(d, d2));
      });
      // A few bisets out of P.
      std::vector<std::pair<std::string, Biset>> bisets;
      bisets.emplace_back("id", identity_biset(g));
      const Subgroup z = center(g);
      if (!z.is_trivial()) bisets.emplace_back("def", deflation(subgroup_generated(g, {z.elements()[1]})));
      const std::vector<Subgroup> subs = all_subgroups(g);
      bisets.emplace_back("res", restriction(subs[uniform(rng, subs.size())]));
      bisets.emplace_back("iso", iso(relabel(g, rng).iso));
      {
        std::vector<std::size_t> fits;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (pool[i].group.order() * g.order() <= kMaxPairOrder) fits.push_back(i);
        if (!fits.empty())
          bisets.emplace_back("pair", random_pair_biset(pool[fits[uniform(rng, fits.size())]].group, g, rng, false));
      }
      for (const auto& [label, u] : bisets) {
        guarded(square, e.spec + " " + label, [&] {
          const GenomeDescriptor dq = genome_of(u.left(), o.p);
          const GenomeDescriptor dq2 = random_basis(u.left(), o.p, rng);
          const GenomeMap lhs = genome_map(u, d2, dq2);
          const GenomeMap rhs =
              compose_genome_maps(change_of_basis(dq, dq2), compose_genome_maps(genome_map(u, d, dq), change_of_basis(d2, d)));
          return lhs.same_entries(rhs);
        });
      }
    }
  }
  return r;
}

Report faithful_suite(const Options& o) {
  Report r{"faithful", {}};
  Tally& each = r.tally("Def by a minimal central Z kills exactly the factors with S not containing Z");
  Tally& all = r.tally("factors killed by every minimal central deflation = faithful_part");
  Tally& unique = r.tally("with one minimal central subgroup, its deflation kills exactly faithful_part");
  for (const CatalogEntry& e : groups_for(o)) {
    const Group& g = e.group;
    if (g.order() == 1) continue;
    const GenomeDescriptor d = genome_of(g, o.p);
    const Subgroup zg = center(g);
    std::vector<Subgroup> minimal;
    for (const Subgroup& z : all_subgroups(g))
      if (z.order() == o.p && z.is_subset_of(zg)) minimal.push_back(z);
    std::vector<char> killed_by_all(d.size(), 1);
    bool ok_all = true;
    for (const Subgroup& z : minimal) {
      const std::string ctx = e.spec + " Z=<" + std::to_string(z.elements()[1]) + ">";
      try {
        const Quotient q = quotient(g, z);
        const GenomeMap m = genome_map(deflation(z), d, genome_of(q.group, o.p));
        bool ok = true;
        std::vector<std::size_t> killed;
        for (std::size_t s = 0; s < d.size(); ++s) {
          if (d.factors[s].quotient_order == 1) continue;  // vacuously killed
          bool zero = true;
          for (std::size_t t = 0; t < m.target().size(); ++t) zero = zero && m.entry(t, s) == 0;
          if (!zero) killed_by_all[s] = 0;
          if (zero) killed.push_back(s);
          ok = ok && zero == !z.is_subset_of(d.factors[s].subgroup);
        }
        each.record(ok, ctx);
        if (minimal.size() == 1) {
          std::vector<std::size_t> fp;
          for (std::size_t s : faithful_part(d))
            if (d.factors[s].quotient_order > 1) fp.push_back(s);
          unique.record(killed == fp, ctx);
        }
      } catch (const std::exception& ex) {
        each.record(false, ctx + ": " + ex.what());
        ok_all = false;
      }
    }
    std::vector<std::size_t> killed, fp;
    for (std::size_t s = 0; s < d.size(); ++s)
      if (killed_by_all[s] && d.factors[s].quotient_order > 1) killed.push_back(s);
    for (std::size_t s : faithful_part(d))
      if (d.factors[s].quotient_order > 1) fp.push_back(s);
    all.record(ok_all && killed == fp, e.spec);
  }
  return r;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"transfer",    "functoriality",      "infdef",
                                                 "rationality", "basis-independence", "faithful"};
  return names;
}

std::vector<Report> run(const std::string& suite, const Options& o) {
  require_odd_p_group(make_cyclic(1), o.p);
  std::vector<Report> out;
  auto one = [&](const std::string& name) {
    if (name == "transfer") return transfer_suite(o);
    if (name == "functoriality") return functoriality_suite(o);
    if (name == "infdef") return infdef_suite(o);
    if (name == "rationality") return rationality_suite(o);
    if (name == "basis-independence") return basis_independence_suite(o);
    if (name == "faithful") return faithful_suite(o);
    throw Error(ErrorCode::InvalidArgument, "unknown suite: " + name);
  };
  if (suite == "all") {
    for (const std::string& name : suite_names()) out.push_back(one(name));
  } else {
    out.push_back(one(suite));
  }
  return out;
}

}  // namespace genome::verify
