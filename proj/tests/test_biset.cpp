#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "biset_oracles.hpp"
#include "genome/biset.hpp"
#include "genome/catalog.hpp"
#include "genome/constructors.hpp"
#include "genome/error.hpp"
#include "genome/lattice.hpp"

using namespace genome;

namespace {

Group c3() { return make_cyclic(3); }
Group c9() { return make_cyclic(9); }
Subgroup n9() { return subgroup_generated(c9(), {3}); }

// B = {(phi(e), e) : e in {0,3,6}} <= C3 x C9, phi(3) = 1.
Biset graph_biset() {
  DirectProduct d = direct_product(c3(), c9());
  Subgroup b = Subgroup::from_elements(d.group, {d.pair(0, 0), d.pair(1, 3), d.pair(2, 6)});
  return from_subgroup_pair(c3(), c9(), b);
}

std::size_t left_orbit_count(const Biset& u) {
  return oracle::orbits(u, oracle::all_elements(u.left()), {0}).size();
}

}  // namespace

TEST(Biset, RejectsBrokenActions) {
  Group g = c3();
  // left action not a homomorphism: 1 acts as a transposition on 3 points
  std::vector<Point> left{0, 1, 2, 1, 0, 2, 2, 1, 0};
  std::vector<Point> right{0, 0, 0, 1, 1, 1, 2, 2, 2};
  try {
    Biset::make(g, g, 3, left, right);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidBiset);
  }
  EXPECT_THROW(Biset::make(g, g, 3, {0, 1}, right), Error);
}

TEST(Biset, SubgroupPairExamples) {
  Group q = c3(), p = c9();
  DirectProduct d = direct_product(q, p);
  Biset whole = from_subgroup_pair(q, p, Subgroup::whole(d.group));
  EXPECT_EQ(whole.size(), 1u);

  Biset free = from_subgroup_pair(q, p, Subgroup::trivial(d.group));
  EXPECT_EQ(free.size(), 27u);
  EXPECT_TRUE(is_left_free(free));
  EXPECT_TRUE(is_right_free(free));

  Biset g = graph_biset();
  EXPECT_EQ(g.size(), 9u);
  EXPECT_TRUE(is_left_free(g));
  EXPECT_TRUE(is_right_free(g));
  EXPECT_TRUE(oracle::left_free(g));
  EXPECT_TRUE(oracle::right_free(g));
  EXPECT_EQ(oracle::orbits(g, oracle::all_elements(q), oracle::all_elements(p)).size(), 1u);

  // wrong ambient group
  EXPECT_THROW(from_subgroup_pair(p, q, Subgroup::trivial(d.group)), Error);
}

TEST(Biset, SubgroupPairConvention) {
  // q'·[(q,p)B]·p' = [(q'q, p'^-1 p)B]: the stabilizer of the point of the
  // identity coset is B itself.
  Group q = c3(), p = c9();
  DirectProduct d = direct_product(q, p);
  Subgroup b = Subgroup::from_elements(d.group, {d.pair(0, 0), d.pair(1, 3), d.pair(2, 6)});
  Biset u = from_subgroup_pair(q, p, b);
  std::vector<Element> stab;
  for (Element a = 0; a < q.order(); ++a)
    for (Element c = 0; c < p.order(); ++c)
      if (u.act_left(a, 0) == u.act_right(0, c)) stab.push_back(d.pair(a, c));
  EXPECT_EQ(stab, b.elements());
}

TEST(Biset, ElementaryExamples) {
  Biset id = identity_biset(c9());
  EXPECT_EQ(id.size(), 9u);
  EXPECT_TRUE(is_left_free(id) && is_right_free(id));
  EXPECT_EQ(left_orbit_count(id), 1u);

  Biset inf = inflation(n9());
  EXPECT_EQ(inf.size(), 3u);
  EXPECT_FALSE(is_left_free(inf));
  EXPECT_TRUE(is_right_free(inf));
  std::size_t kernel = 0;
  for (Element q = 0; q < 9; ++q) {
    bool trivial = true;
    for (Point x = 0; x < 3; ++x) trivial = trivial && inf.act_left(q, x) == x;
    kernel += trivial;
  }
  EXPECT_EQ(kernel, 3u);

  Biset def = deflation(n9());
  EXPECT_EQ(def.size(), 3u);
  EXPECT_TRUE(is_left_free(def));
  EXPECT_EQ(left_orbit_count(def), 1u);
  EXPECT_FALSE(is_right_free(def));

  Biset res = restriction(n9());
  EXPECT_EQ(res.left().order(), 3u);
  EXPECT_EQ(left_orbit_count(res), 3u);
  Biset ind = induction(n9());
  EXPECT_EQ(ind.right().order(), 3u);
  EXPECT_EQ(left_orbit_count(ind), 1u);
}

TEST(Biset, ElementaryErrors) {
  Group s3 = from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
  Subgroup h = subgroup_generated(s3, {1});
  ASSERT_EQ(h.order(), 2u);
  ASSERT_FALSE(is_normal(h));
  EXPECT_THROW(inflation(h), Error);
  EXPECT_THROW(deflation(h), Error);

  Group g = c9();
  GroupMap triple = GroupMap::make(g, g, {0, 3, 6, 0, 3, 6, 0, 3, 6});
  EXPECT_THROW(iso(triple), Error);
}

TEST(Biset, SinglePointIsNotFree) {
  Group g = c3();
  Biset u = Biset::make(g, g, 1, {0, 0, 0}, {0, 0, 0});
  EXPECT_FALSE(is_left_free(u));
  EXPECT_FALSE(is_right_free(u));
}

TEST(Biset, ComposeExamples) {
  Biset u = graph_biset();
  EXPECT_TRUE(are_isomorphic(compose(identity_biset(u.left()), u), u));
  EXPECT_TRUE(are_isomorphic(compose(u, identity_biset(u.right())), u));

  Biset di = compose(deflation(n9()), inflation(n9()));
  EXPECT_EQ(di.size(), 3u);
  EXPECT_TRUE(are_isomorphic(di, identity_biset(di.left())));

  Biset id = compose(inflation(n9()), deflation(n9()));
  EXPECT_EQ(id.size(), 3u);
  EXPECT_FALSE(is_left_free(id));
  EXPECT_FALSE(is_right_free(id));
  for (Element n : {0u, 3u, 6u})
    for (Point x = 0; x < 3; ++x) {
      EXPECT_EQ(id.act_left(n, x), x);
      EXPECT_EQ(id.act_right(x, n), x);
    }

  EXPECT_THROW(compose(u, u), Error);
}

TEST(Biset, ComposeAssociativeUpToIsomorphism) {
  std::mt19937_64 rng(11);
  Group g = c9();
  Subgroup n = n9();
  std::vector<Biset> gg{identity_biset(g), compose(inflation(n), deflation(n)),
                        compose(induction(n), restriction(n))};
  for (int i = 0; i < 20; ++i) {
    const Biset& a = gg[rng() % gg.size()];
    const Biset& b = gg[rng() % gg.size()];
    const Biset& c = gg[rng() % gg.size()];
    Biset left = compose(compose(a, b), c);
    Biset right = compose(a, compose(b, c));
    EXPECT_EQ(left.size(), right.size());
    EXPECT_TRUE(are_isomorphic(left, right));
  }
}

TEST(Biset, ComposeOfLeftFreeIsLeftFree) {
  Group g = extraspecial(3, ExtraspecialKind::ExponentP);
  Subgroup z = center(g);
  Subgroup h = subgroup_generated(g, {1, 3});
  Biset a = compose(restriction(h), induction(h));
  Biset b = compose(deflation(z), identity_biset(g));
  ASSERT_TRUE(is_left_free(a) && is_left_free(b));
  EXPECT_TRUE(oracle::left_free(compose(b, induction(h))));
  EXPECT_TRUE(oracle::left_free(compose(a, restriction(h))));
}

TEST(Biset, DoubleCosets) {
  Biset id = identity_biset(c9());
  EXPECT_EQ(double_cosets(id, Subgroup::whole(c9()), Subgroup::whole(c9())).size(), 1u);
  auto reps = double_cosets(id, n9(), n9());
  EXPECT_EQ(reps, (std::vector<Point>{0, 1, 2}));

  Biset g = graph_biset();
  Subgroup a = Subgroup::whole(g.left());
  Subgroup b = subgroup_generated(g.right(), {3});
  auto expected = oracle::orbits(g, a.elements(), b.elements());
  auto got = double_cosets(g, a, b);
  ASSERT_EQ(got.size(), expected.size());
  std::size_t total = 0;
  for (const auto& orbit : expected) total += orbit.size();
  EXPECT_EQ(total, g.size());
  std::vector<Point> mins;
  for (const auto& orbit : expected) mins.push_back(orbit.front());
  std::sort(mins.begin(), mins.end());
  EXPECT_EQ(got, mins);
}

TEST(Biset, DoubleCosetOrbitSizesSumToSize) {
  for (const auto& entry : catalog(3, 27)) {
    const Group& g = entry.group;
    auto subs = all_subgroups(g);
    Biset u = identity_biset(g);
    for (std::size_t i = 0; i < subs.size(); i += 3) {
      for (std::size_t j = 0; j < subs.size(); j += 4) {
        auto orbits = oracle::orbits(u, subs[i].elements(), subs[j].elements());
        auto reps = double_cosets(u, subs[i], subs[j]);
        ASSERT_EQ(reps.size(), orbits.size()) << entry.spec;
        std::size_t total = 0;
        for (const auto& o : orbits) total += o.size();
        EXPECT_EQ(total, u.size());
      }
    }
  }
}

TEST(Biset, TransportAgreesWithDefinition) {
  Group g = extraspecial(3, ExtraspecialKind::ExponentP);
  auto subs = all_subgroups(g);
  Subgroup z = center(g);
  std::vector<Biset> us{identity_biset(g), inflation(z), compose(deflation(z), identity_biset(g))};
  for (const Biset& u : us) {
    auto left_subs = all_subgroups(u.left());
    auto right_subs = all_subgroups(u.right());
    for (Point pt = 0; pt < u.size(); pt += 2) {
      for (const auto& s : right_subs) {
        Subgroup t = transport_left(u, pt, s);
        EXPECT_EQ(t.elements(), oracle::transport_left(u, pt, s.elements()));
      }
      for (const auto& t : left_subs) {
        Subgroup s = transport_right(u, pt, t);
        EXPECT_EQ(s.elements(), oracle::transport_right(u, pt, t.elements()));
      }
    }
  }
}

TEST(Biset, TransportInIdentityBisetIsConjugation) {
  Group g = extraspecial(3, ExtraspecialKind::ExponentP2);
  Biset u = identity_biset(g);
  for (const auto& s : all_subgroups(g)) {
    for (Point x = 0; x < g.order(); x += 5) {
      // ^xS = x S x^-1, and the point x of the identity biset is x itself
      EXPECT_EQ(transport_left(u, x, s), conjugate_subgroup(s, g.inv(x)));
      EXPECT_EQ(transport_right(u, x, s), conjugate_subgroup(s, x));
    }
  }
}

TEST(Biset, TransportOfTrivialIsStabilizer) {
  Biset u = inflation(n9());
  for (Point x = 0; x < u.size(); ++x) {
    Subgroup t = transport_left(u, x, Subgroup::trivial(u.right()));
    EXPECT_EQ(t, n9());
  }
}

TEST(Biset, QuotientExamples) {
  Group g = c9();
  Subgroup n = n9();
  Biset inf = inflation(n);
  QuotientBiset qb = quotient_biset(inf, n, Subgroup::trivial(inf.right()), 0);
  EXPECT_EQ(qb.biset.size(), 3u);
  EXPECT_EQ(qb.biset.left().order(), 3u);
  EXPECT_EQ(qb.biset.right().order(), 3u);
  EXPECT_TRUE(is_left_free(qb.biset) && is_right_free(qb.biset));
  EXPECT_EQ(left_orbit_count(qb.biset), 1u);

  Group e = extraspecial(3, ExtraspecialKind::ExponentP);
  Subgroup s = subgroup_generated(e, {9});
  QuotientBiset q2 = quotient_biset(identity_biset(e), s, s, 0);
  EXPECT_TRUE(are_isomorphic(q2.biset, identity_biset(q2.biset.left())));

  // T = S = 1: the quotient is the whole inflation biset, not left free
  QuotientBiset q3 = quotient_biset(inf, Subgroup::trivial(g), Subgroup::trivial(inf.right()), 0);
  EXPECT_FALSE(is_left_free(q3.biset));
}

TEST(Biset, IsomorphismSearch) {
  Biset u = graph_biset();
  std::mt19937_64 rng(5);
  std::vector<Point> perm(u.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Point> l(u.left_table().size()), r(u.right_table().size());
  for (Element q = 0; q < u.left().order(); ++q)
    for (Point x = 0; x < u.size(); ++x) l[q * u.size() + perm[x]] = perm[u.act_left(q, x)];
  for (Point x = 0; x < u.size(); ++x)
    for (Element p = 0; p < u.right().order(); ++p) r[perm[x] * u.right().order() + p] = perm[u.act_right(x, p)];
  Biset v = Biset::make(u.left(), u.right(), u.size(), l, r);
  auto f = find_isomorphism(u, v);
  ASSERT_TRUE(f.has_value());
  for (Point x = 0; x < u.size(); ++x)
    for (Element q = 0; q < u.left().order(); ++q) EXPECT_EQ((*f)[u.act_left(q, x)], v.act_left(q, (*f)[x]));

  EXPECT_FALSE(are_isomorphic(u, from_subgroup_pair(c3(), c9(), Subgroup::trivial(direct_product(c3(), c9()).group))));
  EXPECT_FALSE(are_isomorphic(identity_biset(c9()), compose(induction(n9()), restriction(n9()))));
}

TEST(Biset, DisjointUnion) {
  Biset u = disjoint_union(identity_biset(c9()), compose(inflation(n9()), deflation(n9())));
  EXPECT_EQ(u.size(), 12u);
  EXPECT_FALSE(is_left_free(u));
  EXPECT_EQ(left_orbit_representatives(u).size(), 2u);
  EXPECT_THROW(disjoint_union(identity_biset(c9()), identity_biset(c3())), Error);
}
