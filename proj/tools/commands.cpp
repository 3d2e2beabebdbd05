#include "commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "sugawara/gaudin.hpp"
#include "sugawara/nc_matrix.hpp"
#include "sugawara/segal_sugawara.hpp"
#include "sugawara/serialize.hpp"
#include "sugawara/w_algebra.hpp"

namespace sugawara::cli {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << '\n'; }

std::string status_word(bool passed) { return passed ? "PASS" : "FAIL"; }

void print_report(const CheckReport& r, std::ostream& out) {
  out << status_word(r.passed) << "  " << r.check << " n=" << r.n << " (" << r.checked << " checked, " << r.wall_ms
      << " ms)\n";
  for (const auto& w : r.witnesses) out << "    " << w.label << ": " << w.residual << '\n';
}

CheckReport newton_report(int n, int truncation) {
  Stopwatch clock;
  Algebra alg(n);
  const NewtonResult res = newton_identity_check(alg, truncation);
  CheckReport r = CheckReport::named("newton", n);
  r.checked = res.exponents.size();
  if (res.status == CheckStatus::Inconclusive) r.fail("truncation " + std::to_string(truncation), "inconclusive");
  if (res.status == CheckStatus::Fail)
    r.fail("u^" + std::to_string(res.first_mismatch.value_or(0)), res.residual.to_string());
  r.wall_ms = clock.elapsed_ms();
  return r;
}

CheckReport manin_report(int n) {
  Stopwatch clock;
  Algebra alg(n);
  const ManinResult res = is_manin(alg, build_tau_matrix(n));
  CheckReport r = CheckReport::named("manin", n);
  r.checked = static_cast<std::size_t>(n) * n * n * n;
  if (!res.is_manin) {
    const auto& w = *res.witness;
    r.fail("(" + std::to_string(w[0] + 1) + "," + std::to_string(w[1] + 1) + "," + std::to_string(w[2] + 1) + "," +
               std::to_string(w[3] + 1) + ")",
           res.residual.to_string());
  }
  r.wall_ms = clock.elapsed_ms();
  return r;
}

CheckReport gaudin_report(int n) {
  SiteConfig cfg;
  cfg.n = n;
  cfg.points = {Rational(0), Rational(1)};
  return verify_gaudin_commutativity(cfg, true).report;
}

using SuiteItem = std::function<CheckReport(const VerifyOptions&)>;

const std::vector<std::pair<std::string, SuiteItem>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteItem>> table = {
      {"centrality", [](const VerifyOptions& o) { return verify_centrality(o.n, {.exhaustive_first_mode = o.n <= 2}); }},
      {"newton", [](const VerifyOptions& o) { return newton_report(o.n, o.truncation == 0 ? o.n + 3 : o.truncation); }},
      {"manin", [](const VerifyOptions& o) { return manin_report(o.n); }},
      {"commutativity", [](const VerifyOptions& o) { return verify_commutativity(o.n, o.r_max); }},
      {"complete-set", [](const VerifyOptions& o) { return verify_complete_set(o.n); }},
      {"w-membership", [](const VerifyOptions& o) { return verify_w_membership(o.n, o.r_max); }},
      {"miura", [](const VerifyOptions& o) { return verify_miura_image(o.n); }},
      {"trace-images", [](const VerifyOptions& o) { return verify_trace_images(o.n, o.k_max); }},
      {"formal-substitution", [](const VerifyOptions& o) { return verify_formal_substitution(o.n); }},
      {"gaudin", [](const VerifyOptions& o) { return gaudin_report(o.n); }},
  };
  return table;
}

std::string element_name(const std::string& family, int k, int l) {
  if (family == "cdet") return "S_" + std::to_string(l);
  return "T_{" + std::to_string(k) + std::to_string(l) + "}";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [name, item] : suite_table()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(Rational::parse(item));
    } catch (const std::invalid_argument& e) {
      throw UsageError("bad rational \"" + item + "\" in list: " + e.what());
    }
  }
  require(!out.empty(), "empty list");
  return out;
}

int run_compute(const ComputeOptions& opts, Format format, std::ostream& out) {
  require(opts.n >= 1, "--n must be >= 1");
  require(opts.family == "cdet" || opts.family == "trace", "--family must be cdet or trace");
  require(opts.family == "cdet" || opts.k >= 0, "--k must be >= 0");
  Algebra alg(opts.n);
  const auto elements = opts.family == "cdet" ? segal_sugawara_cdet(alg) : segal_sugawara_trace(alg, opts.k);
  const int offset = opts.family == "cdet" ? 1 : 0;
  if (format == Format::Text) {
    for (std::size_t l = 0; l < elements.size(); ++l)
      out << element_name(opts.family, opts.k, static_cast<int>(l) + offset) << " = " << elements[l] << '\n';
    return kExitPass;
  }
  Json list = Json::array();
  for (std::size_t l = 0; l < elements.size(); ++l)
    list.push_back({{"name", element_name(opts.family, opts.k, static_cast<int>(l) + offset)},
                    {"value", to_json(elements[l])}});
  Json doc{{"family", opts.family}, {"n", opts.n}, {"elements", std::move(list)}};
  if (opts.family == "trace") doc["k"] = opts.k;
  emit(doc, out);
  return kExitPass;
}

int run_verify(const VerifyOptions& opts, Format format, std::ostream& out) {
  require(opts.n >= 1, "--n must be >= 1");
  require(opts.truncation >= 0, "--truncation must be >= 1");
  require(opts.k_max >= 1 && opts.r_max >= 0, "--k-max must be >= 1 and --r-max >= 0");
  const auto& names = suite_names();
  require(std::find(names.begin(), names.end(), opts.suite) != names.end(), "unknown suite \"" + opts.suite + "\"");
  std::vector<CheckReport> reports;
  for (const auto& [name, item] : suite_table())
    if (opts.suite == "all" || opts.suite == name) reports.push_back(item(opts));
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed;
  if (format == Format::Text) {
    for (const auto& r : reports) print_report(r, out);
    out << status_word(passed) << "  suite " << opts.suite << " n=" << opts.n << '\n';
  } else {
    Json checks = Json::array();
    for (const auto& r : reports) checks.push_back(to_json(r));
    emit({{"suite", opts.suite}, {"n", opts.n}, {"passed", passed}, {"checks", std::move(checks)}}, out);
  }
  return passed ? kExitPass : kExitFail;
}

int run_walgebra(const WAlgebraOptions& opts, Format format, std::ostream& out) {
  require(opts.n >= 1, "--n must be >= 1");
  require(opts.family == "cdet" || opts.family == "trace", "--family must be cdet or trace");
  require(opts.k_max >= 1, "--k-max must be >= 1");
  bool all_screened = true;
  Json doc{{"family", opts.family}, {"n", opts.n}};

  auto screen = [&](const WPolynomial& p, Json& entry, std::string& text) {
    if (!opts.screening) return;
    Json results = Json::array();
    for (int i = 1; i < opts.n; ++i) {
      const WPolynomial q = screening(i, p);
      all_screened = all_screened && q.is_zero();
      results.push_back({{"i", i}, {"value", to_json(q)}});
      text += "    Q_" + std::to_string(i) + " -> " + q.to_string() + "\n";
    }
    entry["screening"] = std::move(results);
  };

  std::string text;
  Json list = Json::array();
  if (opts.family == "cdet") {
    const auto bs = miura_image_cdet(opts.n);
    for (std::size_t l = 0; l < bs.size(); ++l) {
      const std::string name = "B_" + std::to_string(l + 1);
      Json entry{{"name", name}, {"value", to_json(bs[l])}};
      text += name + " = " + bs[l].to_string() + "\n";
      screen(bs[l], entry, text);
      list.push_back(std::move(entry));
    }
  } else {
    const auto coeffs = trace_generating_image(opts.n, opts.k_max);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      const std::string name = "t^" + std::to_string(k);
      Json tau = Json::array();
      for (const auto& c : coeffs[k].coefficients()) tau.push_back(to_json(c));
      Json entry{{"name", name}, {"tau_coefficients", std::move(tau)}};
      text += name + ": " + to_string(coeffs[k]) + "\n";
      list.push_back(std::move(entry));
    }
  }
  if (format == Format::Text) {
    out << text;
  } else {
    doc["elements"] = std::move(list);
    emit(doc, out);
  }
  return all_screened ? kExitPass : kExitFail;
}

int run_gaudin(const GaudinOptions& opts, Format format, std::ostream& out) {
  require(opts.convention == "on" || opts.convention == "off" || opts.convention == "both",
          "--transpose-convention must be on, off or both");
  SiteConfig cfg;
  cfg.n = opts.n;
  cfg.points = opts.sites;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<bool> conventions;
  if (opts.convention != "off") conventions.push_back(true);
  if (opts.convention != "on") conventions.push_back(false);

  Json sites = Json::array();
  for (const auto& z : cfg.points) sites.push_back(z.to_string());
  Json runs = Json::array();
  Json dumps = Json::array();
  Json passing = Json::array();
  for (bool transposed : conventions) {
    const GaudinReport r = verify_gaudin_commutativity(cfg, transposed);
    const std::string label = transposed ? "on" : "off";
    if (r.report.passed) passing.push_back(label);
    if (format == Format::Text) {
      print_report(r.report, out);
      out << "    convention " << label << ": " << r.operator_count << " operators, max violation "
          << r.max_violation.to_display_string() << '\n';
    }
    runs.push_back({{"transpose_convention", label},
                    {"operator_count", r.operator_count},
                    {"max_violation", r.max_violation.to_string()},
                    {"report", to_json(r.report)}});
    if (!opts.dump_path.empty()) {
      Json ops = Json::array();
      for (const auto& op : gaudin_operators(cfg, transposed))
        ops.push_back({{"d_power", op.d_power}, {"z_power", op.z_power}, {"matrix", to_json(op.matrix)}});
      dumps.push_back({{"transpose_convention", label}, {"operators", std::move(ops)}});
    }
  }
  if (!opts.dump_path.empty()) {
    std::ofstream file(opts.dump_path);
    if (!file) throw UsageError("cannot write " + opts.dump_path);
    file << Json{{"n", cfg.n}, {"sites", sites}, {"conventions", dumps}}.dump() << '\n';
  }
  // "both" succeeds when some convention commutes; the report says which.
  const bool ok = !passing.empty() && (opts.convention == "both" || passing.size() == conventions.size());
  if (format == Format::Json)
    emit({{"n", cfg.n}, {"sites", sites}, {"runs", runs}, {"passing_conventions", passing}, {"passed", ok}}, out);
  return ok ? kExitPass : kExitFail;
}

int run_eigenvalue(const EigenvalueOptions& opts, Format format, std::ostream& out) {
  require(opts.family == "cdet" || opts.family == "trace", "--family must be cdet or trace");
  require(opts.chi_path.empty() != opts.residues.empty(), "give exactly one of --chi or --residues");
  require(opts.k >= 0, "--k must be >= 0");
  std::optional<ChiSeries> chi;
  if (!opts.chi_path.empty()) {
    std::ifstream file(opts.chi_path);
    if (!file) throw UsageError("cannot read " + opts.chi_path);
    std::stringstream buf;
    buf << file.rdbuf();
    try {
      chi = parse_chi_series(buf.str());
    } catch (const SerializationError& e) {
      throw UsageError(opts.chi_path + ": " + e.what());
    }
  } else {
    chi = ChiSeries::simple_poles(opts.residues);
  }
  require(chi->rank() >= 1, "chi must have at least one component");
  const EigenFamily family = opts.family == "cdet" ? EigenFamily::Cdet : EigenFamily::Trace;
  try {
    const auto op = wakimoto_eigenvalue(family, *chi, opts.k, opts.order);
    if (format == Format::Text) {
      out << to_string(op) << '\n';
    } else {
      Json doc{{"family", opts.family}, {"n", chi->rank()}, {"order", opts.order}, {"operator", to_json(op)},
               {"text", to_string(op)}};
      if (family == EigenFamily::Trace) doc["k"] = opts.k;
      emit(doc, out);
    }
    return kExitPass;
  } catch (const TruncationError& e) {
    if (format == Format::Text)
      out << "error: " << e.what() << '\n';
    else
      emit({{"error", e.what()}, {"required_min_r", e.required_min_r()}}, out);
    return kExitFail;
  }
}

}  // namespace sugawara::cli
