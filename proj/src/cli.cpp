#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "heiscay/pipeline.hpp"

namespace heiscay {

namespace {

struct CommonFlags {
  int k = 0;
  int m = 0;
  std::string kind;
  std::optional<int> base_prime;
};

void add_common(CLI::App& cmd, CommonFlags& flags) {
  cmd.add_option("--k", flags.k, "valency (>= 2)")->required();
  cmd.add_option("--m", flags.m, "block size (>= 2)")->required();
  cmd.add_option("--kind", flags.kind, "graph or oriented")
      ->required()
      ->check(CLI::IsMember({"graph", "oriented"}));
}

Kind parse_kind(const std::string& kind) {
  return kind == "graph" ? Kind::Graph : Kind::Oriented;
}

bool write_text(const std::string& path, const std::string& text, std::ostream& out,
                std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return true;
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  if (!file) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arc-transitive digraphs with blocks of imprimitivity of prescribed size"};
  app.require_subcommand(1);

  CommonFlags build_flags;
  std::string build_out;
  std::string build_format = "edgelist";
  auto* build_cmd = app.add_subcommand("build", "build the digraph and write it out");
  add_common(*build_cmd, build_flags);
  build_cmd->add_option("--base-prime", build_flags.base_prime, "force the prime base");
  build_cmd->add_option("--out", build_out, "output path (default stdout)");
  build_cmd->add_option("--format", build_format, "dot or edgelist")
      ->check(CLI::IsMember({"dot", "edgelist"}));

  CommonFlags cert_flags;
  std::string cert_out;
  std::string cert_format = "edgelist";
  std::string cert_json;
  std::size_t aut_cap = 256;
  std::uint64_t closure_cap = 100'000;
  bool no_timings = false;
  auto* cert_cmd = app.add_subcommand("certify", "build and certify every claimed property");
  add_common(*cert_cmd, cert_flags);
  cert_cmd->add_option("--base-prime", cert_flags.base_prime, "force the prime base");
  cert_cmd->add_option("--out", cert_out, "also write the digraph here");
  cert_cmd->add_option("--format", cert_format, "dot or edgelist")
      ->check(CLI::IsMember({"dot", "edgelist"}));
  cert_cmd->add_option("--json", cert_json, "report path (default stdout)");
  cert_cmd->add_option("--aut-cap", aut_cap, "largest vertex count for automorphism search");
  cert_cmd->add_option("--closure-cap", closure_cap, "largest group order to enumerate");
  cert_cmd->add_flag("--no-timings", no_timings, "omit the timings field");

  CommonFlags plan_flags;
  auto* plan_cmd = app.add_subcommand("plan", "print the construction plan");
  add_common(*plan_cmd, plan_flags);
  plan_cmd->add_option("--base-prime", plan_flags.base_prime, "force the prime base");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*plan_cmd) {
      const BuildPlan p =
          plan(plan_flags.k, plan_flags.m, parse_kind(plan_flags.kind), plan_flags.base_prime);
      out << to_json(p).dump(2) << '\n';
      return 0;
    }
    if (*build_cmd) {
      const BuildPlan p = plan(build_flags.k, build_flags.m, parse_kind(build_flags.kind),
                               build_flags.base_prime);
      const BuildOutput built = build(p);
      const auto format = build_format == "dot" ? ExportFormat::Dot : ExportFormat::Edgelist;
      const std::string text = export_digraph(built.digraph, format, {p.k, p.m});
      return write_text(build_out, text, out, err) ? 0 : 2;
    }
    const BuildPlan p =
        plan(cert_flags.k, cert_flags.m, parse_kind(cert_flags.kind), cert_flags.base_prime);
    const BuildOutput built = build(p);
    if (!cert_out.empty()) {
      const auto format = cert_format == "dot" ? ExportFormat::Dot : ExportFormat::Edgelist;
      if (!write_text(cert_out, export_digraph(built.digraph, format, {p.k, p.m}), out, err)) {
        return 2;
      }
    }
    CertifyOptions options;
    options.aut_cap = aut_cap;
    options.closure_cap = closure_cap;
    const CertReport report = certify(built, options);
    const std::string json = to_json(report, !no_timings).dump(2) + "\n";
    if (!write_text(cert_json, json, out, err)) return 2;
    if (!report.certified()) {
      err << "certification failed: " << report.failures.front() << '\n';
      return 1;
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::CertificationFailed:
      case ErrorCode::NotAutomorphism:
        return 1;
      default:
        return 2;
    }
  }
}

}  // namespace heiscay
