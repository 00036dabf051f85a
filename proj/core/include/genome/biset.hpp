#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "genome/group.hpp"
#include "genome/lattice.hpp"

namespace genome {

using Point = std::uint32_t;

/// A finite (Q, P)-biset: a left Q-action and a right P-action that commute.
///
/// left_action is |Q| x size (row q holds q·x for every point x) and
/// right_action is size x |P| (row x holds x·p).
class Biset {
 public:
  /// Checks both action laws and that the actions commute.
  static Biset make(Group left, Group right, std::size_t size, std::vector<Point> left_action,
                    std::vector<Point> right_action);

  const Group& left() const noexcept { return left_; }
  const Group& right() const noexcept { return right_; }
  std::size_t size() const noexcept { return size_; }

  Point act_left(Element q, Point x) const noexcept { return left_action_[q * size_ + x]; }
  Point act_right(Point x, Element p) const noexcept { return right_action_[x * right_.order() + p]; }

  const std::vector<Point>& left_table() const noexcept { return left_action_; }
  const std::vector<Point>& right_table() const noexcept { return right_action_; }

 private:
  Biset(Group left, Group right, std::size_t size, std::vector<Point> l, std::vector<Point> r)
      : left_(std::move(left)), right_(std::move(right)), size_(size), left_action_(std::move(l)),
        right_action_(std::move(r)) {}

  Group left_;
  Group right_;
  std::size_t size_;
  std::vector<Point> left_action_;
  std::vector<Point> right_action_;
};

/// (Q x P)/B with q'·[(q,p)B]·p' = [(q'q, p'^-1 p)B]. `b` is a subgroup of
/// direct_product(q, p). Points are numbered by smallest coset element.
Biset from_subgroup_pair(const Group& q, const Group& p, const Subgroup& b);

/// P acted on by multiplication on both sides.
Biset identity_biset(const Group& p);
/// P as an (H, P)-biset; the left group is h.as_group().
Biset restriction(const Subgroup& h);
/// P as a (P, H)-biset; the right group is h.as_group().
Biset induction(const Subgroup& h);
/// P/N as a (P, P/N)-biset.
Biset inflation(const Subgroup& n);
/// P/N as a (P/N, P)-biset.
Biset deflation(const Subgroup& n);
/// For an isomorphism f: G -> H, the (H, G)-biset H with h·x·g = h x f(g).
Biset iso(const GroupMap& f);
/// P/S as a (P, N_P(S)/S)-biset.
Biset induction_inflation(const Subgroup& s);

/// V x_H U for a (K, H)-biset V and an (H, G)-biset U.
Biset compose(const Biset& v, const Biset& u);

Biset disjoint_union(const Biset& a, const Biset& b);

/// Smallest point of each orbit of (a, b)·u = a·u·b, in increasing order.
std::vector<Point> double_cosets(const Biset& u, const Subgroup& a, const Subgroup& b);

/// Left orbit representatives (smallest point of each Q-orbit).
std::vector<Point> left_orbit_representatives(const Biset& u);

/// ^uS = { x in Q : x·u = u·s for some s in S }, for S <= P.
Subgroup transport_left(const Biset& u, Point point, const Subgroup& s);
/// T^u = { x in P : t·u = u·x for some t in T }, for T <= Q.
Subgroup transport_right(const Biset& u, Point point, const Subgroup& t);

/// T\ω/S as an (N_Q(T)/T, N_P(S)/S)-biset, where ω is the
/// (N_Q(T), N_P(S))-orbit of `point`.
struct QuotientBiset {
  Biset biset;
  Subquotient left;   // N_Q(T)/T
  Subquotient right;  // N_P(S)/S
};
QuotientBiset quotient_biset(const Biset& u, const Subgroup& t, const Subgroup& s, Point point);

bool is_left_free(const Biset& u);
bool is_right_free(const Biset& u);

/// A point bijection f with f(q·x·p) = q·f(x)·p, if the bisets are isomorphic.
std::optional<std::vector<Point>> find_isomorphism(const Biset& a, const Biset& b);
inline bool are_isomorphic(const Biset& a, const Biset& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace genome
