#include "genome/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "genome/error.hpp"

namespace genome {

Group make_cyclic(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "cyclic group order must be positive");
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Element>((a + b) % n);
  return Group::from_table(n, std::move(table));
}

DirectProduct direct_product(const Group& g, const Group& h) {
  const std::size_t m = g.order();
  const std::size_t k = h.order();
  const std::size_t n = m * k;
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const Element a1 = static_cast<Element>(a / k), a2 = static_cast<Element>(a % k);
    for (std::size_t b = 0; b < n; ++b) {
      const Element b1 = static_cast<Element>(b / k), b2 = static_cast<Element>(b % k);
      table[a * n + b] = static_cast<Element>(g.mul(a1, b1) * k + h.mul(a2, b2));
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty() || !h.labels().empty()) {
    for (std::size_t a = 0; a < n; ++a)
      labels.push_back("(" + g.label(static_cast<Element>(a / k)) + "," + h.label(static_cast<Element>(a % k)) + ")");
  }
  Group product = Group::from_table(n, std::move(table), std::move(labels));
  std::vector<Element> first(n), second(n);
  for (std::size_t a = 0; a < n; ++a) {
    first[a] = static_cast<Element>(a / k);
    second[a] = static_cast<Element>(a % k);
  }
  return DirectProduct{product, GroupMap::make(product, g, std::move(first)),
                       GroupMap::make(product, h, std::move(second)), k};
}

namespace {

std::string cycle_notation(const Permutation& perm) {
  std::ostringstream out;
  std::vector<char> done(perm.size(), 0);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (done[i] || perm[i] == i) continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << j + 1;
      first = false;
      done[j] = 1;
      j = perm[j];
    } while (j != i);
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

}  // namespace

Group from_permutations(std::size_t degree, const std::vector<Permutation>& generators, std::size_t cap) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "permutation degree must be positive");
  for (const Permutation& g : generators) {
    if (g.size() != degree) throw Error(ErrorCode::InvalidArgument, "generator has wrong degree");
    std::vector<char> hit(degree, 0);
    for (std::size_t v : g) {
      if (v >= degree || hit[v]++) throw Error(ErrorCode::InvalidArgument, "generator is not a bijection");
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::map<Permutation, Element> index{{id, 0}};
  std::vector<Permutation> elements{id};
  // (a b)(i) = b(a(i))
  auto compose = [&](const Permutation& a, const Permutation& b) {
    Permutation c(degree);
    for (std::size_t i = 0; i < degree; ++i) c[i] = b[a[i]];
    return c;
  };
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Permutation& s : generators) {
      Permutation next = compose(elements[i], s);
      if (index.contains(next)) continue;
      if (elements.size() >= cap) throw Error(ErrorCode::GroupTooLarge, "group too large");
      index.emplace(next, static_cast<Element>(elements.size()));
      elements.push_back(std::move(next));
    }
  }
  const std::size_t n = elements.size();
  std::vector<Element> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const Permutation& e : elements) labels.push_back(cycle_notation(e));
  return Group::from_table(n, std::move(table), std::move(labels));
}

Group extraspecial(unsigned p, ExtraspecialKind kind) {
  if (p == 2 || !is_prime(p)) throw Error(ErrorCode::UnsupportedPrime, "unsupported prime");
  const std::size_t n = static_cast<std::size_t>(p) * p * p;
  std::vector<Element> table(n * n);
  if (kind == ExtraspecialKind::ExponentP) {
    auto encode = [p](std::size_t a, std::size_t b, std::size_t c) {
      return static_cast<Element>(((a % p) * p + (b % p)) * p + (c % p));
    };
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
        table[x * n + y] = encode(a + a2, b + b2, c + c2 + a * b2);
      }
    }
  } else {
    const std::size_t p2 = static_cast<std::size_t>(p) * p;
    // (1+p)^j mod p^2
    std::vector<std::size_t> twist(p, 1);
    for (std::size_t j = 1; j < p; ++j) twist[j] = twist[j - 1] * (1 + p) % p2;
    for (std::size_t x = 0; x < n; ++x) {
      const std::size_t i = x / p, j = x % p;
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t k = y / p, l = y % p;
        // x^i y^j x^k y^l = x^{i + k(1+p)^j} y^{j+l}
        const std::size_t i2 = (i + k * twist[j]) % p2;
        table[x * n + y] = static_cast<Element>(i2 * p + (j + l) % p);
      }
    }
  }
  return Group::from_table(n, std::move(table));
}

Relabeling relabel(const Group& g, std::mt19937_64& rng) {
  const std::size_t n = g.order();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<Element> table(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) table[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.resize(n);
    for (Element a = 0; a < n; ++a) labels[perm[a]] = g.label(a);
  }
  Group h = Group::from_table(n, std::move(table), std::move(labels));
  return Relabeling{h, GroupMap::make(g, h, std::move(perm))};
}

}  // namespace genome
