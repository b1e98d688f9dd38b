#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "flagschur/errors.hpp"
#include "flagschur/flag_oracle.hpp"
#include "flagschur/json_io.hpp"
#include "flagschur/schur.hpp"
#include "flagschur/stabilization.hpp"
#include "flagschur/sweeps.hpp"

using namespace flagschur;
using json_io::Json;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUnsupported = 2;
constexpr int kExitNoStabilization = 3;
constexpr int kExitUsage = 64;

struct RunConfig {
  int n = 3;
  int d = 3;
  std::vector<int> q{2, 3};
  std::optional<int> m;
  std::optional<int> p_min;
  int p_count = 14;
  std::size_t cap = kDefaultFlagCap;
  std::string format = "json";
  unsigned seed = 0;
  std::string report;
};

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "t1,2" names a generator (1-based); anything else is a JSON file.
std::optional<std::pair<int, int>> generator_token(const std::string& s) {
  static const std::regex re(R"(t(\d+),(\d+))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) return std::nullopt;
  return std::make_pair(std::stoi(m[1]) - 1, std::stoi(m[2]) - 1);
}

SchurElement load_element(const std::string& src, const RunConfig& cfg) {
  if (auto g = generator_token(src)) return generator_tbar(g->first, g->second, cfg.n, cfg.d);
  return json_io::schur_from_json(json_io::parse(read_source(src)));
}

UElement load_uelement(const std::string& src, const RunConfig& cfg) {
  if (auto g = generator_token(src)) return limit_generator(g->first, g->second, cfg.n);
  return json_io::uelement_from_json(json_io::parse(read_source(src)));
}

Matrix load_matrix(const std::string& src) {
  const std::string text = src.find('{') != std::string::npos ? src : read_source(src);
  return json_io::matrix_from_json(json_io::parse(text));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_element_table(const SchurElement& x) {
  std::cout << "n=" << x.n() << " d=" << x.d() << " basis=" << to_string(x.basis()) << " terms=" << x.terms().size()
            << "\n";
  for (const auto& [m, c] : x.terms()) std::cout << "  " << m.to_string() << "  " << c.to_string() << "\n";
}

void write_report(const RunConfig& cfg, const Json& report) {
  if (cfg.report.empty()) return;
  std::ofstream out(cfg.report);
  if (!out) throw ParseError("cannot write report " + cfg.report);
  out << report.dump(2) << "\n";
}

int finish_verify(const RunConfig& cfg, const std::string& target, bool ok, long checked, long failed, Json cases) {
  Json report;
  report["target"] = target;
  report["status"] = ok ? "pass" : "fail";
  report["checked"] = checked;
  report["failed"] = failed;
  report["seed"] = cfg.seed;
  report["cases"] = std::move(cases);
  write_report(cfg, report);
  if (cfg.format == "json") {
    emit(report);
  } else {
    std::cout << target << ": " << (ok ? "PASS" : "FAIL") << " (" << checked << " checks, " << failed << " failures)\n";
    if (!ok) {
      for (const auto& c : report["cases"]) {
        if (c.contains("failures") && !c["failures"].empty()) std::cout << c.dump() << "\n";
      }
    }
  }
  return ok ? 0 : kExitFailure;
}

int cmd_theta(const RunConfig& cfg) {
  const auto theta = enumerate_theta(cfg.n, cfg.d);
  if (cfg.format == "json") {
    Json j = Json::array();
    for (const auto& m : theta) j.push_back(json_io::to_json(m));
    emit(j);
  } else {
    std::cout << "|Theta_" << cfg.d << "| = " << theta.size() << " for n = " << cfg.n << "\n";
    for (const auto& m : theta) std::cout << "  " << m.to_string() << "  ro=" << to_string(ro(m)) << " co=" << to_string(co(m)) << "\n";
  }
  return 0;
}

int cmd_mult(const RunConfig& cfg, const std::string& left, const std::string& right) {
  const SchurElement x = load_element(left, cfg);
  const SchurElement y = load_element(right, cfg);
  if (x.n() != y.n() || x.d() != y.d()) throw ParseError("elements have different n or d");
  const SchurElement z = product(x, y);
  if (cfg.format == "json") {
    emit(json_io::to_json(z));
  } else {
    print_element_table(z);
  }
  return 0;
}

Json rtt_failures_json(const RttReport& rep) {
  Json f = Json::array();
  for (const auto& x : rep.failures) {
    Json e;
    e["relation"] = x.relation;
    std::vector<int> one_based;
    for (int k : x.indices) one_based.push_back(k + 1);
    e["indices"] = one_based;
    e["difference"] = json_io::to_json(x.difference);
    f.push_back(std::move(e));
  }
  return f;
}

int cmd_verify(const RunConfig& cfg, const std::string& target) {
  if (target == "schur-rtt") {
    const auto rep = verify_rtt_schur(cfg.n, cfg.d);
    Json c;
    c["n"] = cfg.n;
    c["d"] = cfg.d;
    c["status"] = rep.ok() ? "pass" : "fail";
    c["failures"] = rtt_failures_json(rep);
    return finish_verify(cfg, target, rep.ok(), rep.checked, static_cast<long>(rep.failures.size()), Json::array({c}));
  }
  if (target == "limit-rtt") {
    const auto rep = verify_limit_rtt(cfg.n);
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
      Json e;
      std::vector<int> one_based;
      for (int k : f.indices) one_based.push_back(k + 1);
      e["indices"] = one_based;
      e["difference"] = json_io::to_json(f.difference);
      fails.push_back(std::move(e));
    }
    Json c;
    c["n"] = cfg.n;
    c["status"] = rep.ok() ? "pass" : "fail";
    c["failures"] = std::move(fails);
    return finish_verify(cfg, target, rep.ok(), rep.checked, static_cast<long>(rep.failures.size()), Json::array({c}));
  }
  if (target == "triangular") {
    const auto rep = verify_triangular(cfg.n, cfg.d);
    Json fails = Json::array();
    for (const auto& a : rep.failures) fails.push_back(json_io::to_json(a));
    Json c;
    c["n"] = cfg.n;
    c["d"] = cfg.d;
    c["status"] = rep.ok() ? "pass" : "fail";
    c["failures"] = std::move(fails);
    return finish_verify(cfg, target, rep.ok(), rep.checked, static_cast<long>(rep.failures.size()), Json::array({c}));
  }
  if (target == "counting-lemmas") {
    Json cases = Json::array();
    bool ok = true;
    long checked = 0;
    long failed = 0;
    const std::vector<int> ms = cfg.m ? std::vector<int>{*cfg.m} : std::vector<int>{1, 2, 3, 4, 5};
    for (int q : cfg.q) {
      for (int m : ms) {
        for (int n = 1; n <= m; ++n) {
          const auto rep = verify_counting_lemmas(q, m, n);
          Json c;
          c["q"] = q;
          c["m"] = m;
          c["n"] = n;
          c["first_count"] = rep.first_count;
          c["first_expected"] = rep.first_expected;
          if (rep.second_applicable) {
            c["second_count"] = rep.second_count;
            c["second_expected"] = rep.second_expected;
          }
          c["status"] = rep.ok() ? "pass" : "fail";
          ++checked;
          if (!rep.ok()) {
            ok = false;
            ++failed;
            c["failures"] = Json::array({"count mismatch"});
          }
          cases.push_back(std::move(c));
        }
      }
    }
    return finish_verify(cfg, target, ok, checked, failed, std::move(cases));
  }
  if (target == "oracle") {
    Json cases = Json::array();
    bool ok = true;
    long checked = 0;
    long failed = 0;
    for (int q : cfg.q) {
      const auto rep = verify_formulas_against_oracle(cfg.n, cfg.d, q, cfg.cap);
      Json fails = Json::array();
      for (const auto& mm : rep.mismatches) {
        Json e;
        e["B"] = json_io::to_json(mm.b);
        e["A"] = json_io::to_json(mm.a);
        e["C"] = json_io::to_json(mm.c);
        e["formula"] = mm.formula.get_str();
        e["oracle"] = mm.oracle;
        fails.push_back(std::move(e));
      }
      Json c;
      c["n"] = cfg.n;
      c["d"] = cfg.d;
      c["q"] = q;
      c["checked"] = rep.checked;
      c["status"] = rep.ok() ? "pass" : "fail";
      c["failures"] = std::move(fails);
      checked += rep.checked;
      failed += static_cast<long>(rep.mismatches.size());
      ok = ok && rep.ok();
      cases.push_back(std::move(c));
    }
    return finish_verify(cfg, target, ok, checked, failed, std::move(cases));
  }
  throw ParseError("unknown verify target " + target);
}

int cmd_stabilize(const RunConfig& cfg, const std::string& query_src) {
  const StableQuery q = json_io::query_from_json(json_io::parse(read_source(query_src)));
  StabilizeOptions opt;
  opt.p_min = cfg.p_min;
  opt.max_samples = cfg.p_count;
  if (opt.p_min && *opt.p_min < min_valid_shift(q)) throw ParseError("--p-min is below the smallest valid shift");
  if (opt.max_samples < 3) throw ParseError("--p-count must be at least 3");
  const StableProduct sp = stabilize(q, opt);
  const auto spec = specialize(sp);
  if (cfg.format == "json") {
    Json j;
    j["product"] = json_io::to_json(sp);
    j["specialized"] = json_io::specialized_to_json(spec);
    j["integral"] = specialized_integral(spec);
    j["fit_p"] = sp.fit_ps;
    j["held_out_p"] = sp.held_out_ps;
    emit(j);
  } else {
    std::cout << "fit on p = " << to_string(sp.fit_ps) << ", validated on p = " << to_string(sp.held_out_ps) << "\n";
    for (const auto& t : sp.terms) {
      std::cout << "  Z=" << t.z.to_string() << "  G=";
      for (int k = 0; k <= t.g.degree(); ++k) {
        std::cout << (k ? " + " : "") << "(" << t.g.coeffs()[static_cast<std::size_t>(k)].to_string() << ")v'^" << k;
      }
      if (t.den_pow > 0) std::cout << " / (v^2 - 1)^" << t.den_pow;
      std::cout << "\n";
    }
    std::cout << "at v' = 1:\n";
    for (const auto& [z, c] : spec) std::cout << "  " << z.to_string() << "  " << c.to_string() << "\n";
    if (!specialized_integral(spec)) std::cout << "note: non-integral specialized coefficient\n";
  }
  return 0;
}

int cmd_limit_mult(const RunConfig& cfg, const std::string& left, const std::string& right) {
  const UElement x = load_uelement(left, cfg);
  const UElement y = load_uelement(right, cfg);
  if (x.n() != y.n()) throw ParseError("elements have different n");
  const UElement z = formal_product(x, y);
  if (cfg.format == "json") {
    emit(json_io::to_json(z));
  } else {
    std::cout << z.to_string() << "\n";
  }
  return 0;
}

int cmd_triangular(const RunConfig& cfg, const std::string& src) {
  const Matrix a = load_matrix(src);
  if (!is_theta(a)) throw ParseError("matrix must have nonnegative entries");
  const auto factors = triangular_factors(a);
  const auto res = triangular_product(a);
  if (cfg.format == "json") {
    Json j;
    j["matrix"] = json_io::to_json(a);
    Json fs = Json::array();
    for (const auto& f : factors) {
      Json e;
      e["i"] = f.i + 1;
      e["j"] = f.j + 1;
      e["a"] = f.a;
      e["factor"] = json_io::to_json(f.m);
      fs.push_back(std::move(e));
    }
    j["factors"] = std::move(fs);
    j["chi"] = json_io::to_json(res.chi);
    j["leading_ok"] = res.leading_ok;
    j["product"] = json_io::to_json(res.result);
    emit(j);
  } else {
    std::cout << "A = " << a.to_string() << "\nfactors (leftmost first):\n";
    for (const auto& f : factors) {
      std::cout << "  (" << f.i + 1 << "," << f.j + 1 << ") a=" << f.a << "  " << f.m.to_string() << "\n";
    }
    std::cout << "chi_A = " << res.chi.to_string() << "\nleading term ok: " << (res.leading_ok ? "yes" : "no") << "\n";
    print_element_table(res.result);
  }
  return res.leading_ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in q-Schur algebras of n-step flags"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "number of flag steps")->check(CLI::Range(1, 8));
    sub->add_option("--d", cfg.d, "dimension of the ambient space")->check(CLI::NonNegativeNumber);
    sub->add_option("--q", cfg.q, "prime field orders, comma separated")->delimiter(',');
    sub->add_option("--cap", cfg.cap, "flag enumeration cap")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--seed", cfg.seed, "seed recorded in reports");
    sub->add_option("--report", cfg.report, "write the JSON report to this file");
  };

  auto* theta = app.add_subcommand("theta", "list Theta_d for n");
  add_common(theta);

  std::string left;
  std::string right;
  auto* mult = app.add_subcommand("mult", "product of two S_d elements (JSON files or t<i>,<j> generators)");
  add_common(mult);
  mult->add_option("left", left)->required();
  mult->add_option("right", right)->required();

  std::string target;
  auto* verify = app.add_subcommand("verify", "run a verification sweep");
  add_common(verify);
  verify->add_option("target", target)
      ->required()
      ->check(CLI::IsMember({"schur-rtt", "limit-rtt", "triangular", "counting-lemmas", "oracle"}));
  verify->add_option("--m", cfg.m, "ambient dimension for counting-lemmas")->check(CLI::Range(1, 6));

  std::string query;
  auto* stab = app.add_subcommand("stabilize", "fit stabilized structure constants of a query file");
  add_common(stab);
  stab->add_option("query", query)->required();
  stab->add_option("--p-min", cfg.p_min, "first shift sampled");
  stab->add_option("--p-count", cfg.p_count, "maximum number of shifts sampled");

  auto* lmult = app.add_subcommand("limit-mult", "product in the limit algebra (JSON files or t<i>,<j> generators)");
  add_common(lmult);
  lmult->add_option("left", left)->required();
  lmult->add_option("right", right)->required();

  std::string matrix_src;
  auto* tri = app.add_subcommand("triangular", "triangular product for a matrix (inline JSON or file)");
  add_common(tri);
  tri->add_option("matrix", matrix_src)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (int q : cfg.q) {
    if (!is_prime(q)) {
      std::cerr << "error: q = " << q << " is not prime\n";
      return kExitUsage;
    }
  }

  try {
    if (*theta) return cmd_theta(cfg);
    if (*mult) return cmd_mult(cfg, left, right);
    if (*verify) return cmd_verify(cfg, target);
    if (*stab) return cmd_stabilize(cfg, query);
    if (*lmult) return cmd_limit_mult(cfg, left, right);
    if (*tri) return cmd_triangular(cfg, matrix_src);
  } catch (const UnsupportedShape& e) {
    std::cerr << "unsupported shape: " << e.what() << "\n";
    return kExitUnsupported;
  } catch (const NoStabilization& e) {
    std::cerr << "no stabilization: " << e.what() << "\n";
    return kExitNoStabilization;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
