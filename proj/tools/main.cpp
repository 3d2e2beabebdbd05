#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace sugawara::cli;

namespace {

struct Common {
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", common.out, "Write output to a file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Segal-Sugawara vectors for affine gl_n: exact construction and verification"};
  app.require_subcommand(1);
  Common common;

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "Emit S_1..S_n or T_{k0}..T_{kk}");
  c->add_option("--n", compute.n, "Rank")->required();
  c->add_option("--family", compute.family, "cdet or trace")->check(CLI::IsMember({"cdet", "trace"}));
  c->add_option("--k", compute.k, "Power k for the trace family");
  add_common(c, common);

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Run a verification suite; exit 0 iff every check passes");
  v->add_option("--n", verify.n, "Rank")->required();
  v->add_option("--suite", verify.suite, "Suite name")->check(CLI::IsMember(suite_names()));
  v->add_option("--truncation", verify.truncation, "Newton truncation N (default n+3)")->check(CLI::PositiveNumber);
  v->add_option("--k-max", verify.k_max, "Highest t-power for trace images")->check(CLI::PositiveNumber);
  v->add_option("--r-max", verify.r_max, "Highest T-power in commutativity and membership sweeps")
      ->check(CLI::NonNegativeNumber);
  add_common(v, common);

  WAlgebraOptions walg;
  auto* w = app.add_subcommand("walgebra", "Miura images B_l or trace generating coefficients");
  w->add_option("--n", walg.n, "Rank")->required();
  w->add_option("--family", walg.family, "cdet or trace")->check(CLI::IsMember({"cdet", "trace"}));
  w->add_option("--k-max", walg.k_max, "Highest t-power for the trace family")->check(CLI::PositiveNumber);
  w->add_flag("--screening", walg.screening, "Apply every Q_i to each B_l; exit 1 unless all vanish");
  add_common(w, common);

  GaudinOptions gaudin;
  std::string sites;
  auto* g = app.add_subcommand("gaudin", "Check commutativity of the evaluated operators");
  g->add_option("--n", gaudin.n, "Rank")->required();
  g->add_option("--sites", sites, "Comma-separated distinct rational points")->required();
  g->add_option("--transpose-convention", gaudin.convention, "on (default), off, or both")
      ->check(CLI::IsMember({"on", "off", "both"}));
  g->add_option("--dump-ops", gaudin.dump_path, "Write the operators as dense rational matrices");
  add_common(g, common);

  EigenvalueOptions eig;
  std::string residues;
  auto* e = app.add_subcommand("eigenvalue", "Wakimoto eigenvalue operator for a character chi");
  e->add_option("--family", eig.family, "cdet or trace")->check(CLI::IsMember({"cdet", "trace"}));
  e->add_option("--k", eig.k, "t-power for the trace family");
  e->add_option("--chi", eig.chi_path, "JSON file with the chi series");
  e->add_option("--residues", residues, "chi_i(z) = c_i/z, comma-separated c_i");
  e->add_option("--order", eig.order, "Highest z-power that must be exact");
  add_common(e, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  const Format format = common.format == "text" ? Format::Text : Format::Json;
  std::ostringstream buffer;
  int code = kExitPass;
  try {
    if (*c) code = run_compute(compute, format, buffer);
    if (*v) code = run_verify(verify, format, buffer);
    if (*w) code = run_walgebra(walg, format, buffer);
    if (*g) {
      gaudin.sites = parse_rational_list(sites);
      code = run_gaudin(gaudin, format, buffer);
    }
    if (*e) {
      if (!residues.empty()) eig.residues = parse_rational_list(residues);
      code = run_eigenvalue(eig, format, buffer);
    }
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitFail;
  }

  if (common.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(common.out);
    if (!file) {
      std::cerr << "usage error: cannot write " << common.out << '\n';
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}
