// One line per acceptance criterion; exit status 0 iff every criterion passes
// within its time limit.
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "properties.hpp"
#include "sugawara/gaudin.hpp"
#include "sugawara/nc_matrix.hpp"
#include "sugawara/segal_sugawara.hpp"
#include "sugawara/serialize.hpp"
#include "sugawara/w_algebra.hpp"

using namespace sugawara;

namespace {

const std::string kGoldenDir = SUGAWARA_GOLDEN_DIR;

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (passed) detail = what;
    passed = false;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class Run>
bool matches_golden(Run run, const std::string& expected_file) {
  std::ostringstream out;
  if (run(out) != cli::kExitPass) return false;
  const std::string expected = slurp(kGoldenDir + "/expected/" + expected_file);
  return !expected.empty() && out.str() == expected;
}

bool compute_matches(int n, const std::string& family, int k, const std::string& file) {
  return matches_golden([&](std::ostream& out) { return run_compute({n, family, k}, cli::Format::Json, out); }, file);
}

bool report_ok(const CheckReport& r, Outcome& o) {
  std::string what = r.check + " n=" + std::to_string(r.n);
  if (!r.witnesses.empty()) what += ": " + r.witnesses.front().label + " -> " + r.witnesses.front().residual;
  o.require(r.passed, what);
  return r.passed;
}

Outcome golden_cdet() {
  Outcome o;
  o.require(compute_matches(2, "cdet", 0, "cdet_n2.json"), "S_l at n=2 differ from golden");
  o.require(compute_matches(3, "cdet", 0, "cdet_n3.json"), "S_l at n=3 differ from golden");
  return o;
}

Outcome golden_trace() {
  Outcome o;
  for (int k = 1; k <= 3; ++k)
    o.require(compute_matches(3, "trace", k, "trace_n3_k" + std::to_string(k) + ".json"),
              "T_{" + std::to_string(k) + "l} at n=3 differ from golden");
  return o;
}

Outcome centrality() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    report_ok(verify_centrality(n), o);
    Algebra alg(n);
    const NcElement lhs =
        act_on_vacuum(alg, Generator::e(n, n, 1), VacuumVector(cdet(alg, build_tau_matrix(n)))).element();
    std::string frozen = slurp(kGoldenDir + "/expected/centrality_n" + std::to_string(n) + ".json");
    if (!frozen.empty()) frozen.pop_back();
    o.require(serialize(lhs) == frozen, "e_nn[1] action differs from frozen value at n=" + std::to_string(n));
  }
  return o;
}

Outcome manin() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    Algebra alg(n);
    o.require(is_manin(alg, build_tau_matrix(n)).is_manin, "tau + E[-1] not Manin at n=" + std::to_string(n));
  }
  return o;
}

Outcome newton() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    Algebra alg(n);
    const NewtonResult r = newton_identity_check(alg, n + 3);
    o.require(r.status == CheckStatus::Pass && !r.exponents.empty() && r.exponents.back() == -(n + 3),
              "identity fails or is inconclusive at n=" + std::to_string(n));
  }
  return o;
}

Outcome commutativity() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) report_ok(verify_commutativity(n, 2), o);
  return o;
}

Outcome complete_set() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) report_ok(verify_complete_set(n), o);
  return o;
}

Outcome miura() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    report_ok(verify_miura_image(n), o);
    const RhoMap rho(n);
    const auto s = segal_sugawara_cdet(rho.algebra());
    const auto b = miura_image_cdet(n);
    for (std::size_t l = 0; l < s.size(); ++l) o.require(rho(s[l]) == b[l], "rho(S_l) != B_l");
    o.require(matches_golden(
                  [&](std::ostream& out) { return run_walgebra({n, "cdet", 1, false}, cli::Format::Json, out); },
                  "miura_n" + std::to_string(n) + ".json"),
              "B_l differ from golden at n=" + std::to_string(n));
  }
  return o;
}

Outcome screening_membership() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) report_ok(verify_w_membership(n, 2), o);
  o.require(screening(1, WPolynomial::variable(1, -1)) == WPolynomial::constant(Rational(1)),
            "negative control: Q_1(b_1[-1]) != 1");
  return o;
}

Outcome trace_images() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) report_ok(verify_trace_images(n, 4), o);
  return o;
}

Outcome gaudin() {
  Outcome o;
  const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {3, 2}};
  for (const auto& [n, m] : cases) {
    SiteConfig cfg;
    cfg.n = n;
    for (int a = 0; a < m; ++a) cfg.points.emplace_back(a);
    const GaudinReport r = verify_gaudin_commutativity(cfg, true);
    report_ok(r.report, o);
    o.require(r.operator_count > 0, "no operators produced");
  }
  return o;
}

Outcome property_suites() {
  Outcome o;
  constexpr int kInstances = 1000;
  for (const auto& r : {props::jacobi_on_generators(kInstances), props::jacobi_on_elements(kInstances),
                        props::translation_is_derivation(kInstances), props::commutator_is_derivation(kInstances),
                        props::row_swap_antisymmetry(kInstances), props::column_swap_antisymmetry_manin(kInstances),
                        props::serialization_round_trip(kInstances)})
    o.require(r.passed() && r.instances >= kInstances, r.name + ": " + r.first_failure);
  return o;
}

struct Criterion {
  int id;
  std::string name;
  double limit_ms;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden column-determinant family, n=2,3", 1000, golden_cdet},
      {2, "golden trace family T_{kl}, k<=3, n=3", 5000, golden_trace},
      {3, "centrality and e_nn[1] right-hand side, n=2,3", 60000, centrality},
      {4, "Manin property of tau+E[-1], n=2,3,4", 5000, manin},
      {5, "Newton-Liouville identity down to u^-(n+3), n=2,3", 60000, newton},
      {6, "commutativity of S_l, T^r S_m, T_{ll}, n=2,3, r<=2", 120000, commutativity},
      {7, "complete-set symbols and Jacobian rank, n=2,3", 0, complete_set},
      {8, "Miura image rho(S_l) = B_l, n=2,3", 1000, miura},
      {9, "screening membership with negative control, n=2,3", 0, screening_membership},
      {10, "trace generating function vs Newton transport, t^4, n=2,3", 0, trace_images},
      {11, "Gaudin commutativity, (n,m) in (2,2),(2,3),(3,2)", 120000, gaudin},
      {12, "property suites, 1000 seeded instances each", 0, property_suites},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    Stopwatch clock;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double ms = clock.elapsed_ms();
    if (c.limit_ms > 0 && ms > c.limit_ms)
      o.require(false, "took " + std::to_string(ms) + " ms, limit " + std::to_string(c.limit_ms) + " ms");
    if (!o.passed) ++failed;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  [" << std::setw(2) << c.id << "] " << c.name << "  ("
              << std::fixed << std::setprecision(1) << ms << " ms";
    if (c.limit_ms > 0) std::cout << ", limit " << c.limit_ms / 1000 << " s";
    std::cout << ")";
    if (!o.passed) std::cout << "  " << o.detail;
    std::cout << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
