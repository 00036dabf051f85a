#include "genome/biset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "genome/constructors.hpp"
#include "genome/error.hpp"

namespace genome {

namespace {

constexpr Point kUnassigned = std::numeric_limits<Point>::max();

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    // Keep the smaller index as root so roots are class minima.
    if (a < b) parent_[b] = a;
    else if (b < a) parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Renumbers class labels (indexed by point) so classes appear in order of
// their smallest member. Returns the new label per point and the class count.
std::pair<std::vector<Point>, std::size_t> canonical_labels(const std::vector<std::size_t>& root) {
  std::vector<Point> label(root.size(), kUnassigned);
  std::vector<Point> by_root(root.size(), kUnassigned);
  Point next = 0;
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (by_root[root[i]] == kUnassigned) by_root[root[i]] = next++;
    label[i] = by_root[root[i]];
  }
  return {std::move(label), next};
}

std::vector<Point> orbit_of(const Biset& u, Point start, const Subgroup& a, const Subgroup& b) {
  std::vector<char> seen(u.size(), 0);
  std::vector<Point> orbit{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const Point x = orbit[i];
    for (Element q : a.elements()) {
      const Point y = u.act_left(q, x);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    for (Element p : b.elements()) {
      const Point y = u.act_right(x, p);
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

// Pairs (q, p) with q·x = x·p, as a bitset over q * |P| + p.
ElementSet stabilizer(const Biset& u, Point x) {
  const std::size_t np = u.right().order();
  ElementSet st(u.left().order() * np);
  for (Element q = 0; q < u.left().order(); ++q) {
    const Point qx = u.act_left(q, x);
    for (Element p = 0; p < np; ++p) {
      if (u.act_right(x, p) == qx) st.insert(static_cast<Element>(q * np + p));
    }
  }
  return st;
}

}  // namespace

Biset Biset::make(Group left, Group right, std::size_t size, std::vector<Point> l, std::vector<Point> r) {
  const std::size_t nq = left.order(), np = right.order();
  if (l.size() != nq * size || r.size() != size * np) throw Error(ErrorCode::InvalidBiset, "action table has wrong size");
  for (Point v : l)
    if (v >= size) throw Error(ErrorCode::InvalidBiset, "left action entry out of range");
  for (Point v : r)
    if (v >= size) throw Error(ErrorCode::InvalidBiset, "right action entry out of range");
  auto L = [&](Element q, Point x) { return l[q * size + x]; };
  auto R = [&](Point x, Element p) { return r[x * np + p]; };
  // Laws on generators imply them everywhere.
  const auto& gq = left.generators();
  const auto& gp = right.generators();
  for (Point x = 0; x < size; ++x) {
    if (L(0, x) != x || R(x, 0) != x) throw Error(ErrorCode::InvalidBiset, "identity does not act trivially");
    for (Element a = 0; a < nq; ++a)
      for (Element s : gq)
        if (L(a, L(s, x)) != L(left.mul(a, s), x)) throw Error(ErrorCode::InvalidBiset, "left action law fails");
    for (Element a = 0; a < np; ++a)
      for (Element s : gp)
        if (R(R(x, a), s) != R(x, right.mul(a, s))) throw Error(ErrorCode::InvalidBiset, "right action law fails");
    for (Element s : gq)
      for (Element t : gp)
        if (R(L(s, x), t) != L(s, R(x, t))) throw Error(ErrorCode::InvalidBiset, "actions do not commute");
  }
  return Biset(std::move(left), std::move(right), size, std::move(l), std::move(r));
}

Biset from_subgroup_pair(const Group& q, const Group& p, const Subgroup& b) {
  const std::size_t nq = q.order(), np = p.order();
  auto split = [np](Element e) { return std::pair<Element, Element>(e / np, e % np); };
  auto pair = [np](Element a, Element c) { return static_cast<Element>(a * np + c); };
  {
    const Group& amb = b.ambient();
    bool ok = amb.order() == nq * np;
    for (Element e = 0; ok && e < amb.order(); ++e) {
      const auto [e1, e2] = split(e);
      for (Element f = 0; f < amb.order(); ++f) {
        const auto [f1, f2] = split(f);
        if (amb.mul(e, f) != pair(q.mul(e1, f1), p.mul(e2, f2))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) throw Error(ErrorCode::GroupMismatch, "subgroup is not a subgroup of Q x P");
  }

  std::vector<Point> point_of(nq * np, kUnassigned);
  std::vector<Element> reps;
  for (Element e = 0; e < nq * np; ++e) {
    if (point_of[e] != kUnassigned) continue;
    const auto [x, y] = split(e);
    const Point pt = static_cast<Point>(reps.size());
    reps.push_back(e);
    for (Element be : b.elements()) {
      const auto [b1, b2] = split(be);
      point_of[pair(q.mul(x, b1), p.mul(y, b2))] = pt;
    }
  }
  const std::size_t size = reps.size();
  std::vector<Point> left(nq * size), right(size * np);
  for (Point pt = 0; pt < size; ++pt) {
    const auto [x, y] = split(reps[pt]);
    for (Element a = 0; a < nq; ++a) left[a * size + pt] = point_of[pair(q.mul(a, x), y)];
    for (Element c = 0; c < np; ++c) right[pt * np + c] = point_of[pair(x, p.mul(p.inv(c), y))];
  }
  return Biset::make(q, p, size, std::move(left), std::move(right));
}

Biset identity_biset(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Point> left(n * n), right(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x) {
      left[a * n + x] = g.mul(a, x);
      right[x * n + a] = g.mul(x, a);
    }
  return Biset::make(g, g, n, std::move(left), std::move(right));
}

Biset restriction(const Subgroup& h) {
  const Group& g = h.ambient();
  const std::size_t n = g.order(), m = h.order();
  std::vector<Point> left(m * n), right(n * n);
  for (std::size_t i = 0; i < m; ++i)
    for (Element x = 0; x < n; ++x) left[i * n + x] = g.mul(h.elements()[i], x);
  for (Element x = 0; x < n; ++x)
    for (Element a = 0; a < n; ++a) right[x * n + a] = g.mul(x, a);
  return Biset::make(h.as_group(), g, n, std::move(left), std::move(right));
}

Biset induction(const Subgroup& h) {
  const Group& g = h.ambient();
  const std::size_t n = g.order(), m = h.order();
  std::vector<Point> left(n * n), right(n * m);
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x) left[a * n + x] = g.mul(a, x);
  for (Element x = 0; x < n; ++x)
    for (std::size_t i = 0; i < m; ++i) right[x * m + i] = g.mul(x, h.elements()[i]);
  return Biset::make(g, h.as_group(), n, std::move(left), std::move(right));
}

Biset inflation(const Subgroup& n) {
  const Group& g = n.ambient();
  Quotient q = quotient(g, n);
  const std::size_t size = q.group.order();
  std::vector<Point> left(g.order() * size), right(size * size);
  for (Element a = 0; a < g.order(); ++a)
    for (Point x = 0; x < size; ++x) left[a * size + x] = q.projection(g.mul(a, q.lifts[x]));
  for (Point x = 0; x < size; ++x)
    for (Element c = 0; c < size; ++c) right[x * size + c] = q.group.mul(x, c);
  return Biset::make(g, q.group, size, std::move(left), std::move(right));
}

Biset deflation(const Subgroup& n) {
  const Group& g = n.ambient();
  Quotient q = quotient(g, n);
  const std::size_t size = q.group.order();
  std::vector<Point> left(size * size), right(size * g.order());
  for (Element c = 0; c < size; ++c)
    for (Point x = 0; x < size; ++x) left[c * size + x] = q.group.mul(c, x);
  for (Point x = 0; x < size; ++x)
    for (Element a = 0; a < g.order(); ++a) right[x * g.order() + a] = q.projection(g.mul(q.lifts[x], a));
  return Biset::make(q.group, g, size, std::move(left), std::move(right));
}

Biset iso(const GroupMap& f) {
  if (!f.is_isomorphism()) throw Error(ErrorCode::NotIsomorphism, "map is not an isomorphism");
  const Group& g = f.source();
  const Group& h = f.target();
  const std::size_t n = h.order();
  std::vector<Point> left(n * n), right(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element x = 0; x < n; ++x) {
      left[a * n + x] = h.mul(a, x);
      right[x * n + a] = h.mul(x, f(a));
    }
  return Biset::make(h, g, n, std::move(left), std::move(right));
}

Biset induction_inflation(const Subgroup& s) {
  const Group& g = s.ambient();
  Subquotient sq(normalizer(s), s);
  // Left cosets xS, numbered by smallest element.
  std::vector<Point> point_of(g.order(), kUnassigned);
  std::vector<Element> reps;
  for (Element x = 0; x < g.order(); ++x) {
    if (point_of[x] != kUnassigned) continue;
    const Point pt = static_cast<Point>(reps.size());
    reps.push_back(x);
    for (Element e : s.elements()) point_of[g.mul(x, e)] = pt;
  }
  const std::size_t size = reps.size();
  const std::size_t nr = sq.group().order();
  std::vector<Point> left(g.order() * size), right(size * nr);
  for (Element a = 0; a < g.order(); ++a)
    for (Point x = 0; x < size; ++x) left[a * size + x] = point_of[g.mul(a, reps[x])];
  for (Point x = 0; x < size; ++x)
    for (Element c = 0; c < nr; ++c) right[x * nr + c] = point_of[g.mul(reps[x], sq.lift(c))];
  return Biset::make(g, sq.group(), size, std::move(left), std::move(right));
}

Biset compose(const Biset& v, const Biset& u) {
  if (!(v.right() == u.left())) throw Error(ErrorCode::GroupMismatch, "bisets are not composable: middle groups differ");
  const Group& h = u.left();
  const std::size_t nv = v.size(), nu = u.size();
  UnionFind uf(nv * nu);
  for (Point x = 0; x < nv; ++x)
    for (Point y = 0; y < nu; ++y)
      for (Element a = 0; a < h.order(); ++a) uf.unite(v.act_right(x, a) * nu + y, x * nu + u.act_left(a, y));
  std::vector<std::size_t> root(nv * nu);
  for (std::size_t i = 0; i < root.size(); ++i) root[i] = uf.find(i);
  auto [label, size] = canonical_labels(root);
  std::vector<std::size_t> rep(size, 0);
  for (std::size_t i = nv * nu; i-- > 0;) rep[label[i]] = i;

  const Group& k = v.left();
  const Group& g = u.right();
  std::vector<Point> left(k.order() * size), right(size * g.order());
  for (Point c = 0; c < size; ++c) {
    const Point x = static_cast<Point>(rep[c] / nu), y = static_cast<Point>(rep[c] % nu);
    for (Element a = 0; a < k.order(); ++a) left[a * size + c] = label[v.act_left(a, x) * nu + y];
    for (Element b = 0; b < g.order(); ++b) right[c * g.order() + b] = label[x * nu + u.act_right(y, b)];
  }
  return Biset::make(k, g, size, std::move(left), std::move(right));
}

Biset disjoint_union(const Biset& a, const Biset& b) {
  if (!(a.left() == b.left()) || !(a.right() == b.right()))
    throw Error(ErrorCode::GroupMismatch, "disjoint union needs matching groups");
  const std::size_t na = a.size(), nb = b.size(), n = na + nb;
  const std::size_t nq = a.left().order(), np = a.right().order();
  std::vector<Point> left(nq * n), right(n * np);
  for (Element q = 0; q < nq; ++q) {
    for (Point x = 0; x < na; ++x) left[q * n + x] = a.act_left(q, x);
    for (Point x = 0; x < nb; ++x) left[q * n + na + x] = static_cast<Point>(na + b.act_left(q, x));
  }
  for (Element p = 0; p < np; ++p) {
    for (Point x = 0; x < na; ++x) right[x * np + p] = a.act_right(x, p);
    for (Point x = 0; x < nb; ++x) right[(na + x) * np + p] = static_cast<Point>(na + b.act_right(x, p));
  }
  return Biset::make(a.left(), a.right(), n, std::move(left), std::move(right));
}

std::vector<Point> double_cosets(const Biset& u, const Subgroup& a, const Subgroup& b) {
  if (!(a.ambient() == u.left()) || !(b.ambient() == u.right()))
    throw Error(ErrorCode::GroupMismatch, "subgroups do not belong to the biset's groups");
  std::vector<char> done(u.size(), 0);
  std::vector<Point> reps;
  for (Point x = 0; x < u.size(); ++x) {
    if (done[x]) continue;
    reps.push_back(x);
    for (Point y : orbit_of(u, x, a, b)) done[y] = 1;
  }
  return reps;
}

std::vector<Point> left_orbit_representatives(const Biset& u) {
  return double_cosets(u, Subgroup::whole(u.left()), Subgroup::trivial(u.right()));
}

Subgroup transport_left(const Biset& u, Point point, const Subgroup& s) {
  if (!(s.ambient() == u.right())) throw Error(ErrorCode::GroupMismatch, "S must be a subgroup of the right group");
  std::vector<char> image(u.size(), 0);
  for (Element e : s.elements()) image[u.act_right(point, e)] = 1;
  std::vector<Element> out;
  for (Element x = 0; x < u.left().order(); ++x) {
    if (image[u.act_left(x, point)]) out.push_back(x);
  }
  return Subgroup::from_elements(u.left(), std::move(out));
}

Subgroup transport_right(const Biset& u, Point point, const Subgroup& t) {
  if (!(t.ambient() == u.left())) throw Error(ErrorCode::GroupMismatch, "T must be a subgroup of the left group");
  std::vector<char> image(u.size(), 0);
  for (Element e : t.elements()) image[u.act_left(e, point)] = 1;
  std::vector<Element> out;
  for (Element x = 0; x < u.right().order(); ++x) {
    if (image[u.act_right(point, x)]) out.push_back(x);
  }
  return Subgroup::from_elements(u.right(), std::move(out));
}

QuotientBiset quotient_biset(const Biset& u, const Subgroup& t, const Subgroup& s, Point point) {
  if (!(t.ambient() == u.left()) || !(s.ambient() == u.right()))
    throw Error(ErrorCode::GroupMismatch, "subgroups do not belong to the biset's groups");
  Subquotient left_sq(normalizer(t), t);
  Subquotient right_sq(normalizer(s), s);
  const std::vector<Point> omega = orbit_of(u, point, left_sq.top(), right_sq.top());

  std::vector<Point> local(u.size(), kUnassigned);
  for (std::size_t i = 0; i < omega.size(); ++i) local[omega[i]] = static_cast<Point>(i);
  UnionFind uf(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) {
    for (Element a : t.elements()) uf.unite(i, local[u.act_left(a, omega[i])]);
    for (Element b : s.elements()) uf.unite(i, local[u.act_right(omega[i], b)]);
  }
  std::vector<std::size_t> root(omega.size());
  for (std::size_t i = 0; i < omega.size(); ++i) root[i] = uf.find(i);
  auto [label, size] = canonical_labels(root);
  std::vector<Point> rep(size, kUnassigned);
  for (std::size_t i = 0; i < omega.size(); ++i)
    if (rep[label[i]] == kUnassigned) rep[label[i]] = omega[i];

  const Group& lq = left_sq.group();
  const Group& rq = right_sq.group();
  std::vector<Point> left(lq.order() * size), right(size * rq.order());
  for (Point c = 0; c < size; ++c) {
    for (Element a = 0; a < lq.order(); ++a)
      left[a * size + c] = label[local[u.act_left(left_sq.lift(a), rep[c])]];
    for (Element b = 0; b < rq.order(); ++b)
      right[c * rq.order() + b] = label[local[u.act_right(rep[c], right_sq.lift(b))]];
  }
  Biset biset = Biset::make(lq, rq, size, std::move(left), std::move(right));
  return QuotientBiset{std::move(biset), std::move(left_sq), std::move(right_sq)};
}

bool is_left_free(const Biset& u) {
  for (Point x = 0; x < u.size(); ++x)
    for (Element q = 1; q < u.left().order(); ++q)
      if (u.act_left(q, x) == x) return false;
  return true;
}

bool is_right_free(const Biset& u) {
  for (Point x = 0; x < u.size(); ++x)
    for (Element p = 1; p < u.right().order(); ++p)
      if (u.act_right(x, p) == x) return false;
  return true;
}

std::optional<std::vector<Point>> find_isomorphism(const Biset& a, const Biset& b) {
  if (!(a.left() == b.left()) || !(a.right() == b.right()) || a.size() != b.size()) return std::nullopt;
  const Subgroup all_q = Subgroup::whole(a.left());
  const Subgroup all_p = Subgroup::whole(a.right());

  std::vector<std::vector<Point>> orbits_b;
  for (Point y : double_cosets(b, all_q, all_p)) orbits_b.push_back(orbit_of(b, y, all_q, all_p));
  std::vector<char> used(orbits_b.size(), 0);
  std::vector<Point> f(a.size(), kUnassigned);

  for (Point x : double_cosets(a, all_q, all_p)) {
    const std::vector<Point> orbit = orbit_of(a, x, all_q, all_p);
    const ElementSet stab = stabilizer(a, x);
    // Two transitive bisets are isomorphic via x -> y exactly when x and y
    // have the same stabilizer in Q x P.
    std::optional<Point> image;
    for (std::size_t k = 0; k < orbits_b.size() && !image; ++k) {
      if (used[k] || orbits_b[k].size() != orbit.size()) continue;
      for (Point y : orbits_b[k]) {
        if (stabilizer(b, y) == stab) {
          image = y;
          used[k] = 1;
          break;
        }
      }
    }
    if (!image) return std::nullopt;
    for (Element q = 0; q < a.left().order(); ++q)
      for (Element p = 0; p < a.right().order(); ++p)
        f[a.act_right(a.act_left(q, x), p)] = b.act_right(b.act_left(q, *image), p);
  }
  // Confirm equivariance.
  for (Point x = 0; x < a.size(); ++x) {
    for (Element q = 0; q < a.left().order(); ++q)
      if (f[a.act_left(q, x)] != b.act_left(q, f[x])) return std::nullopt;
    for (Element p = 0; p < a.right().order(); ++p)
      if (f[a.act_right(x, p)] != b.act_right(f[x], p)) return std::nullopt;
  }
  return f;
}

}  // namespace genome
