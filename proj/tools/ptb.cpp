// Batch driver for the permutation-tableau toolkit: enumeration, the
// involution with its trace, rendering, verification verdicts, generating
// polynomials and the type D equidistribution check.
//
// Exit codes: 0 all requested checks pass, 1 a verification verdict failed,
// 2 usage or input-format error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ptb/poly.hpp"
#include "ptb/pr.hpp"
#include "ptb/serialize.hpp"
#include "ptb/verify.hpp"

namespace {

using namespace ptb;

Family parse_family(const std::string& s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "D") return Family::D;
  throw CLI::ValidationError("--family", "must be one of A, B, D");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_enumerate(const std::string& family, int n, bool count_only, const std::string& out_path,
                  int jobs) {
  Family fam = parse_family(family);
  if (count_only) {
    std::cout << count_tableaux(n, fam, jobs) << "\n";
    return 0;
  }
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw FormatError("cannot write " + out_path);
    out = &file;
  }
  for_each_tableau(n, fam, [&](const PermutationTableau& t) { *out << serialize(t) << "\n"; });
  return 0;
}

int run_transform(const std::string& input, const std::string& family, bool with_trace) {
  Family fam = parse_family(family);
  PermutationTableau t = deserialize(slurp(input), fam);
  TransformResult r = transform(PermutationTableau::validate(t.filling(), Family::B));
  PermutationTableau out =
      fam == Family::B ? r.tableau
                       : PermutationTableau::validate(iota(r.tableau.filling()), fam);
  std::cout << serialize(out) << "\n";
  if (with_trace) std::cout << to_text(r.trace);
  return 0;
}

int run_render(const std::string& input) {
  std::cout << render(deserialize(slurp(input)).filling());
  return 0;
}

int report(const CheckOutcome& out, int n) {
  std::cout << "check=" << out.name << " n=" << n << (out.pass ? " PASS" : " FAIL") << "\n";
  for (const std::string& note : out.notes) std::cerr << out.name << ": " << note << "\n";
  return out.pass ? 0 : 1;
}

int run_verify(const std::string& which, int n, int jobs) {
  int rc = 0;
  if (which == "bstar")
    rc |= report(verify_bstar(n, jobs), n);
  else if (which == "ehat")
    rc |= report(verify_ehat(n, jobs), n);
  else if (which == "dhat")
    rc |= report(verify_dhat(n, jobs), n);
  else if (which == "eB")
    rc |= report(verify_eulerian_b(n, jobs), n);
  else if (which == "eD")
    rc |= report(verify_eulerian_d(n, jobs), n);
  else if (which == "involution") {
    rc |= report(verify_counts(n, jobs), n);
    rc |= report(verify_involution(n, jobs), n);
    rc |= report(verify_statistics_contract(n, jobs), n);
    rc |= report(verify_transform_a(n), n);
    rc |= report(verify_transform_d(n), n);
  } else if (which == "phi")
    rc |= report(verify_phi_distribution(n), n);
  else if (which == "pr") {
    rc |= report(verify_pr_shapes(n), n);
    rc |= report(verify_pr_traces(n), n);
  } else
    throw CLI::ValidationError("--which", "unknown check " + which);
  return rc;
}

int run_poly(const std::string& which, int n, const std::string& format,
             const std::string& source, int jobs) {
  Source src = source == "perms" ? Source::Perms : Source::Tableaux;
  KPolyMap polys;
  std::vector<std::string> vars;
  if (which == "bstar") {
    polys = bstar(n, src, jobs);
    vars = {"t", "q"};
  } else if (which == "ehat") {
    polys = ehat(n, jobs);
    vars = {"q"};
  } else if (which == "dhat") {
    polys = dhat(n, jobs);
    vars = {"p", "q", "r"};
  } else if (which == "eB") {
    polys = eulerian_b(n, jobs);
    vars = {"q"};
  } else if (which == "eD") {
    polys = eulerian_d(n, src, jobs);
    vars = {"t", "q"};
  } else {
    throw CLI::ValidationError("--which", "unknown polynomial " + which);
  }
  if (format == "csv")
    std::cout << poly_to_csv(vars, polys);
  else
    std::cout << poly_to_json(which, n, vars, polys).dump() << "\n";
  return 0;
}

int run_conjecture(int n, int jobs) {
  ConjectureResult r = conjecture_check(n, jobs);
  auto dump = [&](const std::string& name, const std::map<int, long long>& h) {
    std::cout << "stat=" << name << " histogram:";
    for (const auto& [k, v] : h) std::cout << " " << k << ":" << v;
    std::cout << "\n";
  };
  dump("fwex_D", r.fwex_d);
  dump("Ddes+2", r.Ddes2);
  dump("ddes+2", r.ddes2);
  std::cout << "verdict=" << (r.equal ? "PASS" : "FAIL") << "\n";
  return r.equal ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"permutation tableaux of types A/B/D: enumeration, involution, verification"};
  app.require_subcommand(1);

  std::string family = "B", input, out_path, which, format = "json", source = "tableaux";
  int n = 0, jobs = 1;
  bool count_only = false, with_trace = false;

  auto* enumerate = app.add_subcommand("enumerate", "stream tableaux as JSON lines");
  enumerate->add_option("--family", family, "A, B or D")->default_val("B");
  enumerate->add_option("--n", n, "length")->required()->check(CLI::Range(1, max_length));
  enumerate->add_flag("--count-only", count_only, "print only the number of tableaux");
  enumerate->add_option("--out", out_path, "write to a file instead of stdout");
  enumerate->add_option("--jobs", jobs, "worker threads for counting")->check(CLI::Range(1, 256));

  auto* transform_cmd = app.add_subcommand("transform", "apply the involution to a tableau file");
  transform_cmd->add_option("--input", input, "tableau JSON file")->required();
  transform_cmd->add_flag("--trace", with_trace, "print the rule applications");
  transform_cmd->add_option("--family", family, "A, B or D")->default_val("B");

  auto* render_cmd = app.add_subcommand("render", "print a tableau file as an ASCII grid");
  render_cmd->add_option("--input", input, "tableau JSON file")->required();

  auto* verify = app.add_subcommand("verify", "run a named verification at one length");
  verify->add_option("--which", which, "bstar, ehat, dhat, eB, eD, involution, phi or pr")
      ->required();
  verify->add_option("--n", n, "length")->required()->check(CLI::Range(1, max_length));
  verify->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* poly = app.add_subcommand("poly", "export a generating polynomial family");
  poly->add_option("--which", which, "bstar, ehat, dhat, eB or eD")->required();
  poly->add_option("--n", n, "length")->required()->check(CLI::Range(1, max_length));
  poly->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_val("json");
  poly->add_option("--source", source, "tableaux or perms")
      ->check(CLI::IsMember({"tableaux", "perms"}))
      ->default_val("tableaux");
  poly->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  auto* conjecture = app.add_subcommand("conjecture", "compare the three type D statistics");
  conjecture->add_option("--n", n, "length")->required()->check(CLI::Range(1, max_length));
  conjecture->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(family, n, count_only, out_path, jobs);
    if (transform_cmd->parsed()) return run_transform(input, family, with_trace);
    if (render_cmd->parsed()) return run_render(input);
    if (verify->parsed()) return run_verify(which, n, jobs);
    if (poly->parsed()) return run_poly(which, n, format, source, jobs);
    if (conjecture->parsed()) return run_conjecture(n, jobs);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const TableauError& e) {
    std::cerr << "invalid tableau: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification aborted: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
