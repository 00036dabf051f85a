#include "genome/catalog.hpp"

#include <algorithm>

#include "genome/error.hpp"
#include "genome/spec.hpp"

namespace genome {

namespace {

// Partitions of k into parts in nondecreasing order.
void partitions(std::size_t k, std::size_t min_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (k == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = min_part; part <= k; ++part) {
    current.push_back(part);
    partitions(k - part, part, current, out);
    current.pop_back();
  }
}

std::size_t power(std::size_t p, std::size_t k) {
  std::size_t r = 1;
  while (k-- > 0) r *= p;
  return r;
}

std::string wreath_spec(unsigned p) {
  std::string base = "(";
  for (unsigned i = 1; i <= p; ++i) base += std::to_string(i) + (i < p ? " " : ")");
  std::string top;
  for (unsigned j = 1; j <= p; ++j) {
    top += "(";
    for (unsigned i = 0; i < p; ++i) top += std::to_string(j + i * p) + (i + 1 < p ? " " : ")");
  }
  return "perm[" + base + "; " + top + "]";
}

}  // namespace

std::vector<CatalogEntry> catalog(unsigned p, std::size_t max_order) {
  if (!is_prime(p)) throw Error(ErrorCode::UnsupportedPrime, "unsupported prime: " + std::to_string(p));
  std::vector<std::pair<std::size_t, std::string>> specs;
  specs.emplace_back(1, "C1");
  for (std::size_t k = 1; power(p, k) <= max_order; ++k) {
    std::vector<std::vector<std::size_t>> parts;
    std::vector<std::size_t> current;
    partitions(k, 1, current, parts);
    for (const auto& partition : parts) {
      std::string spec;
      for (std::size_t part : partition) {
        if (!spec.empty()) spec += " x ";
        spec += "C" + std::to_string(power(p, part));
      }
      specs.emplace_back(power(p, k), spec);
    }
  }
  if (p > 2) {
    const std::size_t p3 = power(p, 3);
    const std::string ps = std::to_string(p);
    if (p3 <= max_order) {
      specs.emplace_back(p3, "ES+(" + ps + ")");
      specs.emplace_back(p3, "ES-(" + ps + ")");
    }
    if (p3 * p <= max_order) {
      specs.emplace_back(p3 * p, "ES+(" + ps + ") x C" + ps);
      specs.emplace_back(p3 * p, "ES-(" + ps + ") x C" + ps);
    }
  }
  if (p < 8 && power(p, p + 1) <= max_order) specs.emplace_back(power(p, p + 1), wreath_spec(p));

  std::stable_sort(specs.begin(), specs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CatalogEntry> out;
  for (const auto& [order, spec] : specs) {
    Group g = group_from_spec(spec);
    check_invariant(g.order() == order, "catalog group has the expected order");
    out.push_back(CatalogEntry{spec, std::move(g)});
  }
  return out;
}

}  // namespace genome
