#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "genome/catalog.hpp"

namespace genome::verify {

/// Outcome counts for one identity.
struct Tally {
  std::string identity;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few failing contexts

  void record(bool ok, const std::string& context);
};

struct Report {
  std::string suite;
  std::deque<Tally> tallies;  // stable references from tally()

  /// False for an empty report and for any identity checked zero times.
  bool passed() const;
  std::size_t checked() const;
  /// The tally for `identity`, created on first use.
  Tally& tally(const std::string& identity);
};

struct Options {
  unsigned p = 3;
  std::size_t max_order = 81;
  std::uint64_t seed = 1;
  /// Groups to check; the catalog for (p, max_order) when empty.
  std::vector<CatalogEntry> groups;

  std::size_t closed_form_max = 27;    // cyclic orders for the closed-form transfer check
  std::size_t transfer_bisets = 20;    // left-free bisets for the representative checks
  std::size_t rechoices = 50;          // representative re-choices per biset
  std::size_t transfer_pairs = 100;    // composable pairs for transitivity
  std::size_t chains = 100;            // biset chains for functoriality
  std::size_t basis_trials = 3;        // alternative bases per group
};

/// closed form plus laws
Report transfer_suite(const Options& options);
/// Every transitive left-and-right-free (D, C)-biset for cyclic C, D of order
/// up to closed_form_max.
Report transfer_closed_form_suite(const Options& options);
/// Classical case, representative independence, isomorphism invariance,
/// additivity, transitivity and the left-free requirement.
Report transfer_law_suite(const Options& options);
Report functoriality_suite(const Options& options);
Report infdef_suite(const Options& options);
Report rationality_suite(const Options& options);
Report basis_independence_suite(const Options& options);
Report faithful_suite(const Options& options);

/// transfer, functoriality, infdef, rationality, basis-independence, faithful.
const std::vector<std::string>& suite_names();

/// One suite by name, or all of them for "all". Throws ErrorCode::InvalidArgument
/// for an unknown name.
std::vector<Report> run(const std::string& suite, const Options& options);

}  // namespace genome::verify
