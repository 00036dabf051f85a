#include "genome/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "genome/error.hpp"
#include "genome/genetic.hpp"
#include "genome/serialize.hpp"
#include "genome/spec.hpp"
#include "genome/transfer.hpp"
#include "genome/verify.hpp"

namespace genome::cli {

namespace {

std::string element_list(const std::vector<Element>& xs) {
  std::ostringstream s;
  s << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) s << (i ? "," : "") << xs[i];
  s << '}';
  return s.str();
}

std::string orders_text(const std::vector<std::size_t>& orders) {
  std::ostringstream s;
  for (std::size_t i = 0; i < orders.size(); ++i) s << (i ? " x " : "") << 'C' << orders[i];
  return s.str();
}

Json document(const char* command) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}};
}

GenomeDescriptor descriptor_for(const std::string& spec, unsigned p) {
  Group g = group_from_spec(spec);
  require_odd_p_group(g, p);
  GenomeDescriptor d = genome_of(g, p);
  d.group_spec = spec;
  return d;
}

int cmd_basis(const std::string& spec, unsigned p, bool json, std::ostream& out) {
  Group g = group_from_spec(spec);
  require_odd_p_group(g, p);
  BasisReport report = basis_report(g, p);
  report.descriptor.group_spec = spec;
  const auto& d = report.descriptor;
  if (json) {
    Json doc = document("basis");
    doc["descriptor"] = to_json(d);
    doc["class_sizes"] = report.class_sizes;
    doc["genetic_subgroup_count"] = report.genetic_subgroup_count;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "group " << spec << ", order " << g.order() << ", p = " << p << '\n';
  out << report.genetic_subgroup_count << " genetic subgroups in " << d.size() << " linkage classes\n";
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& f = d.factors[i];
    out << "factor " << i << ": |S| = " << f.subgroup.order() << ", |N_P(S)/S| = " << f.quotient_order
        << ", generator " << f.generator << ", class size " << report.class_sizes[i] << ", S = "
        << element_list(f.subgroup.elements()) << '\n';
  }
  return kExitOk;
}

int cmd_genome(const std::string& spec, unsigned p, bool json, std::ostream& out) {
  GenomeDescriptor d = descriptor_for(spec, p);
  const auto faithful = faithful_part(d);
  if (json) {
    Json doc = document("genome");
    doc["descriptor"] = to_json(d);
    doc["factor_orders"] = d.factor_orders();
    doc["faithful_part"] = faithful;
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "Gamma(" << spec << ") = " << orders_text(d.factor_orders()) << '\n';
  out << "faithful part: factors";
  for (std::size_t i : faithful) out << ' ' << i;
  out << '\n';
  return kExitOk;
}

int cmd_map(const std::string& spec, unsigned p, bool json, std::ostream& out) {
  EvaluatedBiset eb = biset_from_spec(spec);
  require_odd_p_group(eb.biset.right(), p);
  require_odd_p_group(eb.biset.left(), p);
  GenomeDescriptor source = genome_of(eb.biset.right(), p);
  GenomeDescriptor target = genome_of(eb.biset.left(), p);
  source.group_spec = eb.right_spec;
  target.group_spec = eb.left_spec;
  GenomeMap m = genome_map(eb.biset, source, target);
  if (json) {
    Json doc = document("map");
    doc["biset_spec"] = spec;
    doc["biset"] = to_json(eb.biset);
    doc["map"] = to_json(m);
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "biset " << spec << ": (" << eb.left_spec << ", " << eb.right_spec << ")-biset with "
      << eb.biset.size() << " points\n";
  out << "source Gamma(" << eb.right_spec << ") = " << orders_text(source.factor_orders()) << '\n';
  out << "target Gamma(" << eb.left_spec << ") = " << orders_text(target.factor_orders()) << '\n';
  out << "entries (row t, column s: generator s -> generator t ^ e):\n";
  for (const auto& row : m.entries()) {
    out << ' ';
    for (auto e : row) out << ' ' << e;
    out << '\n';
  }
  return kExitOk;
}

int cmd_verify(const std::string& suite, const verify::Options& options, bool json, std::ostream& out) {
  const auto reports = verify::run(suite, options);
  const bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  if (json) {
    Json doc = document("verify");
    doc["suite"] = suite;
    doc["p"] = options.p;
    doc["max_order"] = options.max_order;
    doc["seed"] = options.seed;
    doc["passed"] = passed;
    Json rs = Json::array();
    for (const auto& r : reports) {
      Json ids = Json::array();
      for (const auto& t : r.tallies) {
        ids.push_back(Json{{"identity", t.identity}, {"checked", t.checked}, {"failed", t.failed},
                           {"failures", t.failures}});
      }
      rs.push_back(Json{{"suite", r.suite}, {"passed", r.passed()}, {"identities", std::move(ids)}});
    }
    doc["reports"] = std::move(rs);
    out << doc.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      out << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << '\n';
      for (const auto& t : r.tallies) {
        out << "  " << (t.failed || !t.checked ? "FAIL " : "ok   ") << t.identity << ": " << t.checked
            << " checked, " << t.failed << " failed\n";
        for (const auto& f : t.failures) out << "       " << f << '\n';
      }
    }
    out << (passed ? "all suites passed" : "verification FAILED") << '\n';
  }
  return passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genomes of odd p-groups and the biset action on them."};
  app.name("genome");
  app.require_subcommand(1);

  std::string spec;
  unsigned p = 3;
  bool json = false;

  auto* basis = app.add_subcommand("basis", "genetic basis of a group");
  auto* genome = app.add_subcommand("genome", "the genome as a product of cyclic groups");
  auto* map = app.add_subcommand("map", "the genome map of a biset");
  for (auto* sub : {basis, genome, map}) {
    sub->add_option("spec", spec, sub == map ? "biset expression" : "group expression")->required();
    sub->add_option("-p,--prime", p, "odd prime")->required();
    sub->add_flag("--json", json, "JSON output");
  }

  std::string suite;
  verify::Options options;
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  auto* ver = app.add_subcommand("verify", "run property suites");
  ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suites));
  ver->add_option("-p,--prime", options.p, "odd prime")->capture_default_str();
  ver->add_option("--max-order", options.max_order, "largest catalog group order")
      ->capture_default_str()
      ->check(CLI::Range(1, 243));
  ver->add_option("--seed", options.seed, "random seed")->capture_default_str();
  ver->add_flag("--json", json, "JSON output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*basis) return cmd_basis(spec, p, json, out);
    if (*genome) return cmd_genome(spec, p, json, out);
    if (*map) return cmd_map(spec, p, json, out);
    return cmd_verify(suite, options, json, out);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InvariantViolation) {
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
      return kExitVerifyFailed;
    }
    err << "error: " << to_string(e.code()) << ": " << e.what();
    if (e.has_offset()) err << " (at offset " << e.offset() << ')';
    err << '\n';
    return kExitInputError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitInputError;
  }
}

}  // namespace genome::cli
