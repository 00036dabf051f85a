// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.
// Exit status is 0 only when every criterion passes within its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "genome/biset.hpp"
#include "genome/catalog.hpp"
#include "genome/cli.hpp"
#include "genome/constructors.hpp"
#include "genome/error.hpp"
#include "genome/genetic.hpp"
#include "genome/lattice.hpp"
#include "genome/transfer.hpp"
#include "genome/verify.hpp"
#include "oracles.hpp"

using namespace genome;

namespace {

// Collects the reasons a criterion failed.
struct Outcome {
  std::vector<std::string> problems;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::size_t power(std::size_t p, unsigned n) {
  std::size_t r = 1;
  while (n--) r *= p;
  return r;
}

void absorb(Outcome& out, const verify::Report& r) {
  for (const auto& t : r.tallies) {
    out.require(t.checked > 0, r.suite + ": nothing checked for '" + t.identity + "'");
    if (t.failed > 0) {
      out.problems.push_back(r.suite + ": " + std::to_string(t.failed) + " failures of '" + t.identity + "'" +
                             (t.failures.empty() ? "" : " e.g. " + t.failures.front()));
    }
  }
  out.require(!r.tallies.empty(), r.suite + ": empty report");
}

std::size_t checked(const verify::Report& r, const std::string& identity) {
  for (const auto& t : r.tallies)
    if (t.identity == identity) return t.checked;
  return 0;
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvariantViolation;
}

verify::Options options(unsigned p, std::size_t max_order, std::uint64_t seed) {
  verify::Options o;
  o.p = p;
  o.max_order = max_order;
  o.seed = seed;
  return o;
}

// ---------------------------------------------------------------------------

Outcome cyclic_genomes() {
  Outcome out;
  for (unsigned p : {3u, 5u}) {
    for (unsigned n = 0; n <= 3; ++n) {
      GenomeDescriptor d = genome_of(make_cyclic(power(p, n)), p);
      std::vector<std::size_t> expected;
      for (unsigned k = 0; k <= n; ++k) expected.push_back(power(p, k));
      out.require(sorted(d.factor_orders()) == expected, "C" + std::to_string(power(p, n)));
    }
  }
  out.detail = "p in {3,5}, n = 0..3";
  return out;
}

Outcome elementary_abelian() {
  Outcome out;
  for (unsigned p : {3u, 5u}) {
    Group g = direct_product(make_cyclic(p), make_cyclic(p)).group;
    std::vector<std::size_t> expected(p + 1, p);
    expected.insert(expected.begin(), 1);
    out.require(sorted(genome_of(g, p).factor_orders()) == expected, "C" + std::to_string(p) + "^2");
  }
  out.detail = "{1} + (p+1) x {p}";
  return out;
}

Outcome extraspecial_27() {
  Outcome out;
  std::ostringstream detail;
  for (auto kind : {ExtraspecialKind::ExponentP, ExtraspecialKind::ExponentP2}) {
    Group g = extraspecial(3, kind);
    const std::size_t basis = genetic_basis(g, 3).size();
    const std::size_t classes = oracle::cyclic_subgroup_classes(g);
    out.require(basis == classes, "basis size differs from cyclic subgroup class count");
    detail << (kind == ExtraspecialKind::ExponentP ? "ES+(3)" : "; ES-(3)") << ": " << basis << " = " << classes;
  }
  const auto orders = sorted(genome_of(extraspecial(3, ExtraspecialKind::ExponentP), 3).factor_orders());
  out.require(orders == std::vector<std::size_t>{1, 3, 3, 3, 3, 3}, "ES+(3) factor orders");
  out.detail = detail.str();
  return out;
}

Outcome transfer_closed_form() {
  Outcome out;
  verify::Options o = options(3, 27, 1);
  o.closed_form_max = 27;
  verify::Report r = verify::transfer_closed_form_suite(o);
  absorb(out, r);
  out.detail = std::to_string(r.checked()) + " bisets over cyclic orders 1..27";
  return out;
}

Outcome transfer_laws() {
  Outcome out;
  verify::Options o = options(3, 27, 7);
  o.rechoices = 50;
  o.transfer_pairs = 100;
  verify::Report r = verify::transfer_law_suite(o);
  absorb(out, r);
  const std::size_t pairs = checked(r, "Ver of a composite is the composite of Vers");
  out.require(pairs >= 100, "fewer than 100 composable pairs");
  out.require(checked(r, "Ver of a disjoint union is the sum of the parts") > 0, "no additivity checks");
  out.detail = std::to_string(checked(r, "Ver does not depend on the orbit representatives")) +
               " re-choices, " + std::to_string(pairs) + " pairs";
  return out;
}

Outcome infdef() {
  Outcome out;
  std::size_t total = 0;
  for (unsigned p : {3u, 5u}) {
    verify::Report r = verify::infdef_suite(options(p, 81, 1));
    absorb(out, r);
    total += checked(r, "Inf is the 0/1 embedding onto the factors with S >= N");
  }
  out.detail = std::to_string(total) + " (P, N) pairs";
  return out;
}

Outcome functoriality() {
  Outcome out;
  verify::Options o = options(3, 81, 7);
  o.chains = 100;
  verify::Report r = verify::functoriality_suite(o);
  absorb(out, r);
  const std::size_t chains = checked(r, "chains evaluated");
  out.require(chains >= 100, "fewer than 100 chains");
  out.detail = std::to_string(chains) + " chains, " +
               std::to_string(checked(r, "genome_map(V x U) = genome_map(V) o genome_map(U)")) + " compositions";
  return out;
}

// Replace the first representative with a nontrivial conjugate and check the
// change-of-basis square directly, then run the randomized suite on ES+(3).
Outcome basis_independence() {
  Outcome out;
  Group g = extraspecial(3, ExtraspecialKind::ExponentP);
  GenomeDescriptor b = genome_of(g, 3);
  std::vector<Subgroup> alt_basis;
  for (const auto& f : b.factors) alt_basis.push_back(f.subgroup);
  std::size_t moved = b.size();
  for (std::size_t i = 0; i < b.size() && moved == b.size(); ++i) {
    for (Element x = 1; x < g.order(); ++x) {
      Subgroup c = conjugate_subgroup(alt_basis[i], x);
      if (!(c == alt_basis[i])) {
        alt_basis[i] = c;
        moved = i;
        break;
      }
    }
  }
  out.require(moved < b.size(), "no representative has a distinct conjugate");
  if (moved == b.size()) return out;
  GenomeDescriptor b2 = genome_from_basis(g, 3, alt_basis);
  out.require(!(b2 == b), "bases coincide");

  const GenomeMap to_b2 = change_of_basis(b, b2);
  const GenomeMap to_b = change_of_basis(b2, b);
  out.require(genome_map(identity_biset(g), b, b2).same_entries(to_b2), "genome_map(id, B, B') != gamma");

  Subgroup z = center(g);
  Subgroup h = subgroup_generated(g, {9, 1});
  std::vector<Biset> bisets{identity_biset(g), compose(inflation(z), deflation(z)),
                            compose(induction(h), restriction(h))};
  for (const Biset& u : bisets) {
    GenomeMap m = genome_map(u, b, b);
    GenomeMap m2 = genome_map(u, b2, b2);
    out.require(m2.same_entries(compose_genome_maps(to_b2, compose_genome_maps(m, to_b))),
                "square fails for a biset");
  }

  verify::Options o = options(3, 27, 8);
  o.groups = {CatalogEntry{"ES+(3)", g}};
  o.basis_trials = 10;
  verify::Report r = verify::basis_independence_suite(o);
  absorb(out, r);
  out.detail = "conjugated factor " + std::to_string(moved) + ", " + std::to_string(r.checked()) + " suite checks";
  return out;
}

Outcome rationality() {
  Outcome out;
  verify::Report r = verify::rationality_suite(options(3, 81, 1));
  absorb(out, r);
  out.detail = std::to_string(checked(r, "Indinf embeds N_P(S)/S at S and vanishes elsewhere")) + " basis factors";
  return out;
}

Outcome faithful() {
  Outcome out;
  std::size_t total = 0;
  for (auto [p, max] : {std::pair<unsigned, std::size_t>{3, 81}, {5, 125}}) {
    verify::Report r = verify::faithful_suite(options(p, max, 1));
    absorb(out, r);
    total += r.checked();
  }
  out.detail = std::to_string(total) + " checks";
  return out;
}

Outcome degenerate_inputs() {
  Outcome out;
  Group c8 = make_cyclic(8), c6 = make_cyclic(6), c9 = make_cyclic(9);
  out.require(code_of([&] { genome_of(c8, 2); }) == ErrorCode::OddPrimesOnly, "genome_of(C8, 2)");
  out.require(code_of([&] { genetic_basis(c8, 2); }) == ErrorCode::OddPrimesOnly, "genetic_basis(C8, 2)");
  out.require(code_of([&] { genome_of(c6, 3); }) == ErrorCode::NotPGroup, "genome_of(C6, 3)");
  out.require(code_of([&] { genome_of(c9, 5); }) == ErrorCode::NotPGroup, "genome_of(C9, 5)");
  out.require(code_of([&] { genome_of(c9, 9); }) == ErrorCode::UnsupportedPrime, "genome_of(C9, 9)");
  out.require(code_of([&] { genome_component(identity_biset(c8), Subgroup::whole(c8), Subgroup::whole(c8), 2); }) ==
                  ErrorCode::OddPrimesOnly,
              "genome_component with p = 2");

  struct Case {
    std::vector<std::string> args;
    const char* code;
  };
  const std::vector<Case> cases{
      {{"genome", "C8", "-p", "2"}, "odd_primes_only"},
      {{"basis", "C2 x C2", "-p", "2", "--json"}, "odd_primes_only"},
      {{"map", "id(C4)", "-p", "2"}, "odd_primes_only"},
      {{"verify", "--suite", "infdef", "-p", "2"}, "odd_primes_only"},
      {{"genome", "C6", "-p", "3"}, "not_p_group"},
      {{"basis", "perm[(1 2 3); (1 2)]", "-p", "3"}, "not_p_group"},
      {{"map", "id(C15)", "-p", "5"}, "not_p_group"},
  };
  for (const auto& c : cases) {
    std::ostringstream o, e;
    const int code = cli::run(c.args, o, e);
    out.require(code == cli::kExitInputError, c.args[0] + " " + c.args[1] + ": exit " + std::to_string(code));
    out.require(e.str().find(c.code) != std::string::npos, c.args[0] + " " + c.args[1] + ": message " + e.str());
    out.require(o.str().empty(), c.args[0] + ": wrote to stdout");
  }
  out.detail = std::to_string(cases.size()) + " CLI cases, 6 library cases";
  return out;
}

struct Criterion {
  int number;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "cyclic genomes", 1, cyclic_genomes},
      {2, "elementary abelian genomes", 1, elementary_abelian},
      {3, "extraspecial order 27", 10, extraspecial_27},
      {4, "transfer closed form", 30, transfer_closed_form},
      {5, "transfer laws", 60, transfer_laws},
      {6, "inflation and deflation structure", 120, infdef},
      {7, "functoriality", 120, functoriality},
      {8, "basis independence", 10, basis_independence},
      {9, "rationality", 120, rationality},
      {10, "faithful part", 60, faithful},
      {11, "degenerate inputs", 60, degenerate_inputs},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.problems.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "took %.2f s, budget %.0f s", secs, c.budget_seconds);
      out.problems.push_back(buf);
    }
    const bool pass = out.problems.empty();
    failures += !pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << " (" << timing;
    if (!out.detail.empty()) std::cout << "; " << out.detail;
    std::cout << ")\n";
    for (const auto& p : out.problems) std::cout << "      " << p << '\n';
    std::cout.flush();
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << '\n';
  return failures ? 1 : 0;
}
