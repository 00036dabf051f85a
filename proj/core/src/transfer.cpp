#include "genome/transfer.hpp"

#include <algorithm>
#include <limits>

#include "genome/error.hpp"

namespace genome {

namespace {

constexpr Point kNone = std::numeric_limits<Point>::max();

void require_odd_prime(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::UnsupportedPrime, "unsupported prime: " + std::to_string(p));
  if (p == 2) throw Error(ErrorCode::OddPrimesOnly, "odd primes only");
}

}  // namespace

AbelianHom AbelianHom::operator+(const AbelianHom& other) const {
  if (!(source == other.source) || !(target == other.target))
    throw Error(ErrorCode::GroupMismatch, "transfers between different groups");
  AbelianHom sum = *this;
  for (Element g = 0; g < images.size(); ++g) sum.images[g] = target_ab.group.mul(images[g], other.images[g]);
  return sum;
}

AbelianHom compose(const AbelianHom& outer, const AbelianHom& inner) {
  if (!(inner.target == outer.source)) throw Error(ErrorCode::GroupMismatch, "transfers are not composable");
  AbelianHom out{inner.source, outer.target, outer.target_ab, std::vector<Element>(inner.source.order())};
  for (Element g = 0; g < inner.source.order(); ++g) out.images[g] = outer(inner.target_ab.lifts[inner(g)]);
  return out;
}

AbelianHom verlagerung(const Biset& omega, std::span<const Point> representatives) {
  if (!is_left_free(omega)) throw Error(ErrorCode::NotLeftFree, "transfer undefined: not left free");
  const Group& h = omega.left();
  const Group& g = omega.right();

  std::vector<Point> reps;
  if (representatives.empty()) {
    reps = left_orbit_representatives(omega);
  } else {
    reps.assign(representatives.begin(), representatives.end());
  }
  // owner[y] = index of the representative in y's orbit; coeff[y] = the
  // unique h with y = h·rep.
  std::vector<Point> owner(omega.size(), kNone);
  std::vector<Element> coeff(omega.size(), 0);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (reps[i] >= omega.size()) throw Error(ErrorCode::InvalidArgument, "representative out of range");
    for (Element a = 0; a < h.order(); ++a) {
      const Point y = omega.act_left(a, reps[i]);
      if (owner[y] != kNone) throw Error(ErrorCode::InvalidArgument, "two representatives share an orbit");
      owner[y] = static_cast<Point>(i);
      coeff[y] = a;
    }
  }
  for (Point y = 0; y < omega.size(); ++y)
    if (owner[y] == kNone) throw Error(ErrorCode::InvalidArgument, "an orbit has no representative");

  // Products are taken in increasing order of representative point.
  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return reps[a] < reps[b]; });

  Quotient ab = abelianization(h);
  AbelianHom ver{g, h, ab, std::vector<Element>(g.order())};
  for (Element x = 0; x < g.order(); ++x) {
    Element product = kIdentity;
    for (std::size_t i : order) product = h.mul(product, coeff[omega.act_right(reps[i], x)]);
    ver.images[x] = ab.projection(product);
  }
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b)
      check_invariant(ver.images[g.mul(a, b)] == ab.group.mul(ver.images[a], ver.images[b]),
                      "generalized transfer is a homomorphism");
  return ver;
}

std::int64_t genome_component(const Biset& u, const GenomeFactor& t, const GenomeFactor& s, unsigned p) {
  require_odd_prime(p);
  const Group& q = u.left();
  if (!(t.subgroup.ambient() == q) || !(s.subgroup.ambient() == u.right()))
    throw Error(ErrorCode::GroupMismatch, "factors do not belong to the biset's groups");
  const auto modulus = static_cast<std::int64_t>(t.quotient_order);
  std::int64_t total = 0;
  for (Point point : double_cosets(u, t.normalizer, s.normalizer)) {
    if (!intersection(transport_right(u, point, t.subgroup), s.normalizer).is_subset_of(s.subgroup)) continue;
    if (!intersection(transport_left(u, point, s.subgroup), t.normalizer).is_subset_of(t.subgroup)) continue;
    QuotientBiset qb = quotient_biset(u, t.subgroup, s.subgroup, point);
    check_invariant(is_left_free(qb.biset) && is_right_free(qb.biset),
                    "T\\ω/S is left and right free for ω in D(U)_{T,S}");
    const AbelianHom ver = verlagerung(qb.biset);
    const Element image = ver(qb.right.project(s.generator));
    const Element lifted = qb.left.lift(ver.target_ab.lifts[image]);
    total = (total + factor_exponent(t, q, lifted)) % modulus;
  }
  return total;
}

std::int64_t genome_component(const Biset& u, const Subgroup& t, const Subgroup& s, unsigned p) {
  require_odd_prime(p);
  if (!is_genetic(t, p)) throw Error(ErrorCode::NotGenetic, "T is not genetic");
  if (!is_genetic(s, p)) throw Error(ErrorCode::NotGenetic, "S is not genetic");
  auto factor = [](const Subgroup& x) {
    Subgroup n = normalizer(x);
    const Element gen = canonical_generator(x, n);
    const std::size_t order = n.order() / x.order();
    return GenomeFactor{x, std::move(n), order, gen};
  };
  return genome_component(u, factor(t), factor(s), p);
}

GenomeMap genome_map(const Biset& u, const GenomeDescriptor& source, const GenomeDescriptor& target) {
  if (!(source.group == u.right())) throw Error(ErrorCode::DescriptorMismatch, "source descriptor is not for the right group");
  if (!(target.group == u.left())) throw Error(ErrorCode::DescriptorMismatch, "target descriptor is not for the left group");
  if (source.prime != target.prime) throw Error(ErrorCode::DescriptorMismatch, "descriptors for different primes");
  GenomeMap::Matrix m(target.size(), std::vector<std::int64_t>(source.size(), 0));
  for (std::size_t t = 0; t < target.size(); ++t)
    for (std::size_t s = 0; s < source.size(); ++s)
      m[t][s] = genome_component(u, target.factors[t], source.factors[s], source.prime);
  return GenomeMap::make(source, target, std::move(m));
}

}  // namespace genome
