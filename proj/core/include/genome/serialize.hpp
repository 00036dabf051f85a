#pragma once

#include <nlohmann/json.hpp>

#include "genome/biset.hpp"
#include "genome/genetic.hpp"
#include "genome/genome_map.hpp"

namespace genome {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// {order, table}; table is row-major, table[a][b] = a * b.
Json to_json(const Group& g);
/// {left_group, right_group, size, left_action, right_action} with
/// left_action[q][x] = q·x and right_action[x][p] = x·p.
Json to_json(const Biset& u);
/// {group_spec, prime, group, factors: [{subgroup_elements, quotient_order, generator}]}
Json to_json(const GenomeDescriptor& d);
/// {source, target, entries}
Json to_json(const GenomeMap& m);

// The readers revalidate everything: group laws, biset laws, that the
// factors form a genetic basis with the stated orders, and the
// homomorphism condition. Malformed input raises ErrorCode::InvalidArgument.
Group group_from_json(const Json& j);
Biset biset_from_json(const Json& j);
GenomeDescriptor descriptor_from_json(const Json& j);
GenomeMap genome_map_from_json(const Json& j);

}  // namespace genome
