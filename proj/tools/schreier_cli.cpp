// Command-line front end: claim verification, presentation export, script
// replay.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "schreier/catalog.hpp"
#include "schreier/error.hpp"
#include "schreier/presentation_io.hpp"
#include "schreier/report.hpp"
#include "schreier/scripts.hpp"

using namespace schreier;

namespace {

int verify(const std::string& group, const std::vector<std::int64_t>& n,
           const std::vector<std::int64_t>& windows, const std::string& claims,
           const std::string& format, bool serial) {
  RunParameters p{n, windows, serial ? Execution::serial : Execution::parallel};
  VerificationReport r = run_claims(select_claims(claims, group), p);
  std::cout << (format == "json-lines" ? emit_json_lines(r) : emit_table(r));
  return r.any_refuted() ? 1 : 0;
}

int export_presentation(const std::string& group, std::int64_t n) {
  std::cout << emit_presentation(catalog(parse_group_family(group), n));
  return 0;
}

int replay_script(const std::string& name, std::optional<std::int64_t> n, std::int64_t window,
                  const std::string& transcript, bool check) {
  if (!n) {
    for (const auto& info : script_catalog())
      if (info.name == name) n = info.default_n;
  }
  ScriptSetup s = setup_script(name, n.value_or(3), window);
  std::optional<std::vector<Generator>> expected = s.expected_survivors;
  ReplayResult r = replay(s.script, std::move(s.input), {check});

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!transcript.empty() && transcript != "-") {
    file.open(transcript);
    if (!file) throw Error("cannot write transcript to " + transcript);
    out = &file;
  }
  *out << "# " << s.script.name << ": " << s.script.description << "\n";
  *out << "# n = " << *n << ", window = " << window << "\n";
  for (const auto& line : r.transcript) *out << line << "\n";

  std::vector<Generator> survivors = surviving_interior(r.presentation);
  std::cout << s.script.name << ": eliminated " << r.eliminated << ", skipped " << r.skipped
            << " (boundary)\n";
  std::cout << "interior survivors (" << survivors.size() << "):";
  for (const auto& g : survivors) std::cout << " " << to_string(g);
  std::cout << "\n";
  int status = 0;
  if (expected) {
    std::sort(expected->begin(), expected->end());
    bool ok = *expected == survivors;
    std::cout << "expected survivor set: " << (ok ? "match" : "MISMATCH") << "\n";
    if (!ok) status = 1;
  }
  if (check) {
    std::cout << "invariant checks: " << r.invariant_checks << ", failures "
              << r.invariant_failures.size() << "\n";
    for (const auto& f : r.invariant_failures) std::cout << "  " << f << "\n";
    if (!r.invariant_failures.empty()) status = 1;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Presentations of commutator subgroups of braid-type groups"};
  app.require_subcommand(1);

  auto* v = app.add_subcommand("verify", "run registered claims and print a report");
  std::string group = "all", claims = "all", format = "table";
  std::vector<std::int64_t> ns = {3, 4, 5, 6}, windows = {4, 5};
  bool serial = false;
  v->add_option("--group", group, "gvb, sg or all")
      ->check(CLI::IsMember({"gvb", "sg", "all"}, CLI::ignore_case));
  v->add_option("--n", ns, "strand counts")->delimiter(',');
  v->add_option("--window", windows, "truncation windows M")->delimiter(',');
  v->add_option("--claims", claims, "comma-separated claim ids or prefixes, or all");
  v->add_option("--format", format, "table or json-lines")
      ->check(CLI::IsMember({"table", "json-lines"}));
  v->add_flag("--serial", serial, "use the serial reference kernels");

  auto* e = app.add_subcommand("export-presentation", "print a catalog presentation");
  std::string egroup;
  std::int64_t en = 4;
  e->add_option("--group", egroup, "B, S, VB, WB, GVB, SG or UB")->required();
  e->add_option("--n", en, "number of strands");

  auto* r = app.add_subcommand("replay", "replay an elimination script");
  std::string script, transcript;
  std::optional<std::int64_t> rn;
  std::int64_t rwindow = 5;
  bool check = false;
  r->add_option("--script", script, "script name")->required();
  r->add_option("--n", rn, "number of strands (default depends on the script)");
  r->add_option("--window", rwindow, "truncation window M");
  r->add_option("--transcript", transcript, "write the transcript here ('-' for stdout)");
  r->add_flag("--check-invariants", check, "recompute abelian invariants after each step");

  auto* l = app.add_subcommand("list", "list claims and scripts");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*v) return verify(group, ns, windows, claims, format, serial);
    if (*e) return export_presentation(egroup, en);
    if (*r) return replay_script(script, rn, rwindow, transcript, check);
    if (*l) {
      for (const auto& c : claim_registry())
        std::cout << "claim  " << c.id << "  [" << c.group << "] " << c.statement << "\n";
      for (const auto& s : script_catalog())
        std::cout << "script " << s.name << "  (n = " << s.default_n << ") " << s.description
                  << "\n";
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
  return 0;
}
