// corners-lab: batch front end for the multilevel ensemble library.
// Subcommands: sample, density, verify, cauchy, limits.
// Exit codes: 0 all requested work passed, 1 a check failed, 2 usage or
// configuration error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "corners/checks.hpp"
#include "corners/densities.hpp"
#include "corners/sampling_csv.hpp"

using nlohmann::json;
using namespace corners;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

std::uint64_t seed_from_env() {
  const char* env = std::getenv("CORNERS_LAB_SEED");
  if (!env || !*env) return kDefaultSeed;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end && *end == '\0') return static_cast<std::uint64_t>(v);
  std::fprintf(stderr, "warning: ignoring malformed CORNERS_LAB_SEED=%s\n", env);
  return kDefaultSeed;
}

int write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  f.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!f) {
    std::fprintf(stderr, "error: cannot write %s\n", path.c_str());
    return 2;
  }
  return 0;
}

json result_json(const CheckResult& r) {
  json j;
  j["id"] = r.id;
  j["pass"] = r.pass;
  if (std::isfinite(r.metric))
    j["metric"] = r.metric;
  else
    j["metric"] = r.metric > 0 ? "inf" : (r.metric < 0 ? "-inf" : "nan");
  j["threshold"] = r.threshold;
  j["detail"] = r.detail;
  return j;
}

void print_results(const std::vector<CheckResult>& rs) {
  for (const CheckResult& r : rs)
    std::printf("[%s] %-28s metric=%10.3e threshold=%9.3e  %s\n",
                r.pass ? "PASS" : "FAIL", r.id.c_str(), r.metric, r.threshold,
                r.detail.c_str());
}

// Shared tail for the report-producing commands: human lines already printed,
// now persist/emit the JSON report and return the exit code.
int finish_report(json report, const std::vector<CheckResult>& all,
                  const std::string& json_path) {
  bool ok = true;
  for (const CheckResult& r : all) ok = ok && r.pass;
  report["all_pass"] = ok;
  if (!json_path.empty()) {
    int rc = write_text(json_path, report.dump(2) + "\n");
    if (rc != 0) return rc;
  } else if (!ok) {
    json failing = json::array();
    for (const CheckResult& r : all)
      if (!r.pass) failing.push_back(result_json(r));
    std::printf("%s\n", failing.dump(2).c_str());
  }
  std::printf("%zu checks, %s\n", all.size(), ok ? "all passed" : "FAILURES above");
  return ok ? 0 : 1;
}

// --- sample ---------------------------------------------------------------

struct SampleCfg {
  std::string model = "wishart";
  int beta = 2;
  std::vector<double> pi, pihat;
  int A = 0, n = 0, levels = 0;  // 0 = infer (wishart: pihat size, jacobi: 1)
  std::size_t count = 100;
  std::uint64_t seed = kDefaultSeed;
  int workers = 1;
  std::string out;
};

int run_sample(const SampleCfg& c) {
  if (c.model == "wishart") {
    if (c.pi.empty()) {
      std::fprintf(stderr, "error: sample --model wishart needs --pi\n");
      return 2;
    }
    const int m = c.levels > 0 ? c.levels : static_cast<int>(c.pihat.size());
    if (static_cast<int>(c.pihat.size()) < m || m < 1) {
      std::fprintf(stderr, "error: need a pihat entry for each of the %d levels\n", m);
      return 2;
    }
    for (double pii : c.pi)
      for (int j = 0; j < m; ++j)
        if (!(pii + c.pihat[j] > 0.0)) {
          std::fprintf(stderr, "error: pi_i + pihat_j must be positive\n");
          return 2;
        }
    WishartModel model{c.beta, c.pi, c.pihat, m};
    return write_text(c.out, wishart_csv(model, c.count, c.seed, c.workers));
  }
  if (c.model == "jacobi") {
    const int m = c.levels > 0 ? c.levels : 1;
    if (!(1 <= m && m <= c.n && c.n <= c.A)) {
      std::fprintf(stderr, "error: jacobi needs 1 <= levels <= n <= A\n");
      return 2;
    }
    JacobiModel model{c.beta, c.A, c.n, m};
    return write_text(c.out, jacobi_csv(model, c.count, c.seed, c.workers));
  }
  std::fprintf(stderr, "error: unknown model %s\n", c.model.c_str());
  return 2;
}

// --- density ---------------------------------------------------------------

struct DensityCfg {
  std::string id;
  int beta = 2;
  std::vector<double> pi, pihat;
  int A = 0, n = 0, levels = 0;
  std::string points, out;
};

bool parse_point_line(const std::string& line, LevelArray& lv, std::string& err) {
  lv.clear();
  std::stringstream groups(line);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<double> vals;
    std::stringstream ss(group);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t pos = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &pos);
      } catch (const std::exception&) {
        err = "not a number: '" + tok + "'";
        return false;
      }
      if (pos != tok.size()) {
        err = "trailing characters in '" + tok + "'";
        return false;
      }
      vals.push_back(v);
    }
    if (vals.empty()) {
      err = "empty level";
      return false;
    }
    lv.push_back(std::move(vals));
  }
  if (lv.empty()) {
    err = "empty point";
    return false;
  }
  return true;
}

int run_density(const DensityCfg& c) {
  const double theta = c.beta == 2 ? 1.0 : 0.5;
  const QuadSpec spec = QuadSpec::for_theta(theta);
  const bool wants_pi = c.id.rfind("jacobi", 0) != 0;
  const bool marginal = c.id.find("marginal") != std::string::npos;
  if (wants_pi && c.pi.empty()) {
    std::fprintf(stderr, "error: %s needs --pi\n", c.id.c_str());
    return 2;
  }
  if (!wants_pi && !(1 <= c.n && c.n <= c.A)) {
    std::fprintf(stderr, "error: %s needs --A and --n\n", c.id.c_str());
    return 2;
  }

  std::ifstream file;
  std::istream* in = &std::cin;
  if (!c.points.empty() && c.points != "-") {
    file.open(c.points);
    if (!file) {
      std::fprintf(stderr, "error: cannot read %s\n", c.points.c_str());
      return 2;
    }
    in = &file;
  }

  std::string outbuf = "# corners-lab density " + c.id + "\n# columns: line,log_density\n";
  std::string line;
  std::size_t lineno = 0;
  char buf[96];
  while (std::getline(*in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    LevelArray lv;
    std::string err;
    if (!parse_point_line(line, lv, err)) {
      std::fprintf(stderr, "error: points file line %zu: %s\n", lineno, err.c_str());
      return 2;
    }
    const int m = marginal ? (c.levels > 0 ? c.levels : static_cast<int>(c.pihat.size()))
                           : static_cast<int>(lv.size());
    if (wants_pi && static_cast<int>(c.pihat.size()) < m) {
      std::fprintf(stderr, "error: points file line %zu: need %d pihat entries\n",
                   lineno, m);
      return 2;
    }
    double lg = 0.0;
    try {
      if (c.id == "wishart-joint") {
        lg = log_wishart_joint(theta, c.pi, c.pihat, lv, spec);
      } else if (c.id == "wishart-marginal") {
        lg = log_wishart_marginal(theta, c.pi, c.pihat, m, lv[0], spec);
      } else if (c.id == "ho-joint") {
        lg = log_ho_joint(theta, c.pi, c.pihat, lv, spec);
      } else if (c.id == "ho-marginal") {
        lg = log_ho_marginal(theta, c.pi, c.pihat, m, lv[0], spec);
      } else if (c.id == "jacobi-joint") {
        lg = log_jacobi_joint(c.beta, c.A, c.n, lv);
      } else {
        std::fprintf(stderr, "error: unknown density %s\n", c.id.c_str());
        return 2;
      }
    } catch (const std::exception& e) {
      std::fprintf(stderr, "error: points file line %zu: %s\n", lineno, e.what());
      return 2;
    }
    if (marginal && lv.size() != 1) {
      std::fprintf(stderr, "error: points file line %zu: marginal wants one level\n",
                   lineno);
      return 2;
    }
    if (lg == kNegInf) {
      std::snprintf(buf, sizeof(buf), "%zu,-inf\n", lineno);
    } else {
      std::snprintf(buf, sizeof(buf), "%zu,%.16e\n", lineno, lg);
    }
    outbuf += buf;
  }
  return write_text(c.out, outbuf);
}

// --- verify / cauchy / limits -----------------------------------------------

int run_verify(const std::string& suite, std::uint64_t seed,
               const std::string& json_path) {
  if (suite == "acceptance") {
    std::vector<CriterionResult> crits = run_acceptance(seed);
    bool ok = true;
    json jcrit = json::array();
    for (const CriterionResult& c : crits) {
      std::printf("[%s] criterion %2d %-28s (%zu checks)\n", c.pass ? "PASS" : "FAIL",
                  c.index, c.name.c_str(), c.results.size());
      for (const CheckResult& r : c.results)
        if (!r.pass)
          std::printf("       failing: %s metric=%.3e threshold=%.3e  %s\n",
                      r.id.c_str(), r.metric, r.threshold, r.detail.c_str());
      ok = ok && c.pass;
      json jc;
      jc["index"] = c.index;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      jc["results"] = json::array();
      for (const CheckResult& r : c.results) jc["results"].push_back(result_json(r));
      jcrit.push_back(std::move(jc));
    }
    json report;
    report["tool"] = "corners-lab";
    report["command"] = "verify";
    report["suite"] = "acceptance";
    report["seed"] = seed;
    report["criteria"] = std::move(jcrit);
    report["all_pass"] = ok;
    if (!json_path.empty()) {
      int rc = write_text(json_path, report.dump(2) + "\n");
      if (rc != 0) return rc;
    }
    std::printf("%zu criteria, %s\n", crits.size(), ok ? "all passed" : "FAILURES above");
    return ok ? 0 : 1;
  }

  std::vector<CheckResult> rs;
  if (suite == "all") {
    rs = run_all_checks(seed);
  } else if (suite == "identities") {
    rs = check_identities();
  } else if (suite == "chain") {
    rs = check_chain();
  } else if (suite == "cauchy") {
    rs = check_cauchy();
  } else if (suite == "macdonald") {
    rs = {check_macdonald_cauchy()};
  } else if (suite == "hciz") {
    rs = check_hciz(seed);
  } else if (suite == "kernels") {
    rs = check_kernels(seed);
  } else if (suite == "jacobi") {
    rs = check_jacobi_laws(seed);
  } else if (suite == "pushforward") {
    rs = check_pushforward(seed);
  } else if (suite == "limits") {
    rs = check_limits();
  } else if (suite == "interlacing") {
    rs = {check_interlacing(seed)};
  } else {
    rs = {check_sampling_determinism(seed)};
  }
  print_results(rs);
  json report;
  report["tool"] = "corners-lab";
  report["command"] = "verify";
  report["suite"] = suite;
  report["seed"] = seed;
  report["results"] = json::array();
  for (const CheckResult& r : rs) report["results"].push_back(result_json(r));
  return finish_report(std::move(report), rs, json_path);
}

int run_cauchy(std::uint64_t seed, const std::string& json_path) {
  (void)seed;
  std::vector<CheckResult> rs = check_cauchy();
  rs.push_back(check_macdonald_cauchy());
  print_results(rs);
  json report;
  report["tool"] = "corners-lab";
  report["command"] = "cauchy";
  report["results"] = json::array();
  for (const CheckResult& r : rs) report["results"].push_back(result_json(r));
  return finish_report(std::move(report), rs, json_path);
}

int run_limits(std::vector<std::string> ids, const std::vector<double>& eps,
               const std::string& json_path) {
  if (ids.empty()) ids = limit_ids();
  if (!eps.empty()) {
    // Custom ladder: emit the raw error trajectory, no pass verdict.
    std::string outbuf = "# corners-lab limits\n# columns: id,eps,rel_error\n";
    char buf[128];
    json rows = json::array();
    for (const std::string& id : ids) {
      for (double e : eps) {
        double err = 0.0;
        try {
          err = limit_error(id, e);
        } catch (const std::invalid_argument& ex) {
          std::fprintf(stderr, "error: %s\n", ex.what());
          return 2;
        }
        std::snprintf(buf, sizeof(buf), "%s,%.6e,%.16e\n", id.c_str(), e, err);
        outbuf += buf;
        rows.push_back({{"id", id}, {"eps", e}, {"error", err}});
      }
    }
    std::fputs(outbuf.c_str(), stdout);
    if (!json_path.empty()) {
      json report;
      report["tool"] = "corners-lab";
      report["command"] = "limits";
      report["trajectory"] = std::move(rows);
      return write_text(json_path, report.dump(2) + "\n");
    }
    return 0;
  }
  std::vector<CheckResult> rs;
  try {
    rs = check_limits(ids);
  } catch (const std::invalid_argument& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  print_results(rs);
  json report;
  report["tool"] = "corners-lab";
  report["command"] = "limits";
  report["results"] = json::array();
  for (const CheckResult& r : rs) report["results"].push_back(result_json(r));
  return finish_report(std::move(report), rs, json_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"corners-lab: multilevel ensemble sampling and verification"};
  app.require_subcommand(1);
  // Config values land in the subcommand whose name heads their section, e.g.
  // [sample] / model=jacobi.  Fallthrough lets --config appear after the
  // subcommand name; explicit flags always win over file values.
  app.set_config("--config", "", "read options from a sectioned key=value file (flags override)");
  app.fallthrough();

  const std::uint64_t env_seed = seed_from_env();

  SampleCfg sc;
  sc.seed = env_seed;
  CLI::App* sample = app.add_subcommand("sample", "Draw multilevel spectra to CSV");
  sample->add_option("--model", sc.model, "wishart or jacobi")
      ->check(CLI::IsMember({"wishart", "jacobi"}));
  sample->add_option("--beta", sc.beta, "ensemble symmetry class")
      ->check(CLI::IsMember({1, 2}));
  sample->add_option("--pi", sc.pi, "column parameters")->delimiter(',');
  sample->add_option("--pihat", sc.pihat, "row parameters, one per level")->delimiter(',');
  sample->add_option("--A", sc.A, "ratio-process row count");
  sample->add_option("--n", sc.n, "ratio-process column count");
  sample->add_option("--levels,--m", sc.levels, "number of corner levels");
  sample->add_option("--count", sc.count, "number of draws");
  sample->add_option("--seed", sc.seed, "RNG seed (default: CORNERS_LAB_SEED or 12345)");
  sample->add_option("--workers", sc.workers, "worker threads (output-invariant)");
  sample->add_option("--out", sc.out, "output path (default stdout)");

  DensityCfg dc;
  CLI::App* density = app.add_subcommand("density", "Evaluate log densities at points");
  density->add_option("--density", dc.id, "which density")
      ->required()
      ->check(CLI::IsMember({"wishart-joint", "wishart-marginal", "ho-joint",
                             "ho-marginal", "jacobi-joint"}));
  density->add_option("--beta", dc.beta, "ensemble symmetry class")
      ->check(CLI::IsMember({1, 2}));
  density->add_option("--pi", dc.pi, "column parameters")->delimiter(',');
  density->add_option("--pihat", dc.pihat, "row parameters")->delimiter(',');
  density->add_option("--A", dc.A, "ratio-process row count");
  density->add_option("--n", dc.n, "ratio-process column count");
  density->add_option("--levels,--m", dc.levels, "marginal level index m");
  density->add_option("--points", dc.points,
                      "points file, one pattern per line: levels split by ';', "
                      "values by ',' (default stdin)");
  density->add_option("--out", dc.out, "output path (default stdout)");

  std::string suite = "all";
  std::uint64_t vseed = env_seed;
  std::string vjson;
  CLI::App* verify = app.add_subcommand("verify", "Run named check suites");
  verify->add_option("--suite", suite, "which suite")
      ->check(CLI::IsMember({"all", "acceptance", "identities", "chain", "cauchy",
                             "macdonald", "hciz", "kernels", "jacobi", "pushforward",
                             "limits", "interlacing", "determinism"}));
  verify->add_option("--seed", vseed, "RNG seed for the stochastic checks");
  verify->add_option("--json", vjson, "write the JSON report here");

  std::uint64_t cseed = env_seed;
  std::string cjson;
  CLI::App* cauchy = app.add_subcommand("cauchy", "Run the pairing-identity checks");
  cauchy->add_option("--seed", cseed, "unused; accepted for uniformity");
  cauchy->add_option("--json", cjson, "write the JSON report here");

  std::vector<std::string> lids;
  std::vector<double> leps;
  std::string ljson;
  CLI::App* limits = app.add_subcommand("limits", "Run degeneration ladders");
  limits->add_option("--id", lids, "ladder ids (default: all)")->delimiter(',');
  limits->add_option("--eps", leps, "custom epsilon ladder; emits the trajectory")
      ->delimiter(',');
  limits->add_option("--json", ljson, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sample) return run_sample(sc);
    if (*density) return run_density(dc);
    if (*verify) return run_verify(suite, vseed, vjson);
    if (*cauchy) return run_cauchy(cseed, cjson);
    if (*limits) return run_limits(lids, leps, ljson);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
