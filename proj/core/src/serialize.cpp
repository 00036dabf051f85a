#include "genome/serialize.hpp"

#include <string>

#include "genome/error.hpp"

namespace genome {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, "malformed JSON: " + what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing '") + key + "'");
  return *it;
}

std::size_t natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) malformed(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

template <typename T>
std::vector<T> naturals(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(static_cast<T>(natural(v, what)));
  return out;
}

// rows x cols matrix flattened row-major
template <typename T>
std::vector<T> flat_matrix(const Json& j, std::size_t rows, std::size_t cols, const char* what) {
  if (!j.is_array() || j.size() != rows) malformed(std::string(what) + " has the wrong number of rows");
  std::vector<T> out;
  out.reserve(rows * cols);
  for (const Json& row : j) {
    auto r = naturals<T>(row, what);
    if (r.size() != cols) malformed(std::string(what) + " has a row of the wrong length");
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

}  // namespace

Json to_json(const Group& g) {
  const std::size_t n = g.order();
  Json table = Json::array();
  for (Element a = 0; a < n; ++a) {
    Json row = Json::array();
    for (Element b = 0; b < n; ++b) row.push_back(g.mul(a, b));
    table.push_back(std::move(row));
  }
  return Json{{"order", n}, {"table", std::move(table)}};
}

Json to_json(const Biset& u) {
  Json left = Json::array(), right = Json::array();
  for (Element q = 0; q < u.left().order(); ++q) {
    Json row = Json::array();
    for (Point x = 0; x < u.size(); ++x) row.push_back(u.act_left(q, x));
    left.push_back(std::move(row));
  }
  for (Point x = 0; x < u.size(); ++x) {
    Json row = Json::array();
    for (Element p = 0; p < u.right().order(); ++p) row.push_back(u.act_right(x, p));
    right.push_back(std::move(row));
  }
  return Json{{"left_group", to_json(u.left())},
              {"right_group", to_json(u.right())},
              {"size", u.size()},
              {"left_action", std::move(left)},
              {"right_action", std::move(right)}};
}

Json to_json(const GenomeDescriptor& d) {
  Json factors = Json::array();
  for (const auto& f : d.factors) {
    factors.push_back(Json{{"subgroup_elements", f.subgroup.elements()},
                           {"quotient_order", f.quotient_order},
                           {"generator", f.generator}});
  }
  return Json{{"group_spec", d.group_spec},
              {"prime", d.prime},
              {"group", to_json(d.group)},
              {"factors", std::move(factors)}};
}

Json to_json(const GenomeMap& m) {
  return Json{{"source", to_json(m.source())}, {"target", to_json(m.target())}, {"entries", m.entries()}};
}

Group group_from_json(const Json& j) {
  const std::size_t n = natural(field(j, "order"), "order");
  if (n == 0) malformed("order must be positive");
  return Group::from_table(n, flat_matrix<Element>(field(j, "table"), n, n, "table"));
}

Biset biset_from_json(const Json& j) {
  Group left = group_from_json(field(j, "left_group"));
  Group right = group_from_json(field(j, "right_group"));
  const std::size_t size = natural(field(j, "size"), "size");
  auto l = flat_matrix<Point>(field(j, "left_action"), left.order(), size, "left_action");
  auto r = flat_matrix<Point>(field(j, "right_action"), size, right.order(), "right_action");
  return Biset::make(std::move(left), std::move(right), size, std::move(l), std::move(r));
}

GenomeDescriptor descriptor_from_json(const Json& j) {
  Group g = group_from_json(field(j, "group"));
  const std::size_t prime = natural(field(j, "prime"), "prime");
  const Json& spec = field(j, "group_spec");
  if (!spec.is_string()) malformed("group_spec must be a string");
  const Json& fs = field(j, "factors");
  if (!fs.is_array()) malformed("factors must be an array");
  std::vector<Subgroup> basis;
  std::vector<Element> generators;
  std::vector<std::size_t> orders;
  for (const Json& f : fs) {
    auto elements = naturals<Element>(field(f, "subgroup_elements"), "subgroup_elements");
    for (Element e : elements)
      if (e >= g.order()) malformed("subgroup element out of range");
    basis.push_back(Subgroup::from_elements(g, std::move(elements)));
    const std::size_t gen = natural(field(f, "generator"), "generator");
    if (gen >= g.order()) malformed("generator out of range");
    generators.push_back(static_cast<Element>(gen));
    orders.push_back(natural(field(f, "quotient_order"), "quotient_order"));
  }
  GenomeDescriptor d = genome_from_basis(g, static_cast<unsigned>(prime), std::move(basis), std::move(generators));
  if (d.factor_orders() != orders) malformed("quotient_order does not match the group");
  d.group_spec = spec.get<std::string>();
  return d;
}

GenomeMap genome_map_from_json(const Json& j) {
  GenomeDescriptor source = descriptor_from_json(field(j, "source"));
  GenomeDescriptor target = descriptor_from_json(field(j, "target"));
  const Json& e = field(j, "entries");
  if (!e.is_array() || e.size() != target.size()) malformed("entries must have one row per target factor");
  GenomeMap::Matrix entries;
  for (const Json& row : e) {
    if (!row.is_array() || row.size() != source.size()) malformed("entries must have one column per source factor");
    std::vector<std::int64_t> r;
    for (const Json& v : row) {
      if (!v.is_number_integer()) malformed("entries must be integers");
      r.push_back(v.get<std::int64_t>());
    }
    entries.push_back(std::move(r));
  }
  return GenomeMap::make(std::move(source), std::move(target), std::move(entries));
}

}  // namespace genome
