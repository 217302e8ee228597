// Command-line front end: parameter sweeps over the generator families,
// single checks, pair and triality inspection, and the group-order prime
// sets.  Exit code 0 means every executed check passed; failures and
// rejected parameter sets exit 1; usage errors exit 64.

#include <CLI11.hpp>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

#include "ortho8/report.hpp"
#include "ortho8/steinberg.hpp"

using namespace ortho8;
using namespace ortho8::verify;
using gf::Elt;

namespace {

constexpr int kExitUsage = 64;

std::string now_iso() {
  std::time_t t = std::time(nullptr);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

// q -> (p, f) or nullopt when q is not a prime power
std::optional<std::pair<std::uint32_t, std::uint32_t>> factor_prime_power(std::uint32_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!gf::is_prime_u64(p)) continue;
    if (q % p != 0) continue;
    std::uint32_t f = 0, m = q;
    while (m % p == 0) {
      m /= p;
      ++f;
    }
    if (m != 1) return std::nullopt;
    return std::make_pair(p, f);
  }
  return std::nullopt;
}

std::vector<generators::Family> parse_families(const std::string& csv) {
  std::vector<generators::Family> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    std::string name =
        comma == std::string::npos ? csv.substr(start) : csv.substr(start, comma - start);
    if (!name.empty()) {
      auto fam = generators::family_from_name(name);
      if (!fam) throw CLI::ValidationError("families", "unknown family: " + name);
      out.push_back(*fam);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// flat key=value config file, '#' comments; returns pairs in file order
std::vector<std::pair<std::string, std::string>> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("config", "cannot open config file: " + path);
  std::vector<std::pair<std::string, std::string>> kv;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t\r");
      std::size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (!key.empty()) kv.push_back({key, value});
  }
  return kv;
}

int emit_and_count(const SweepResult& result, const SweepConfig& cfg, const std::string& format,
                   const std::string& output, const std::string& started) {
  std::string payload;
  if (format == "json") {
    payload = report_to_json(result, config_to_json(cfg), started).dump(2);
    payload += "\n";
  } else {
    std::ostringstream os;
    for (const auto& r : result.reports) os << report_text_line(r) << "\n";
    os << "summary: pass=" << result.passed << " fail=" << result.failed
       << " skipped=" << result.skipped << " rejected=" << result.rejected << "\n";
    payload = os.str();
  }
  if (output.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write report to " << output << "\n";
      return 1;
    }
    out << payload;
    std::cout << "report written to " << output << "\n";
    std::cout << "summary: pass=" << result.passed << " fail=" << result.failed
              << " skipped=" << result.skipped << " rejected=" << result.rejected << "\n";
  }
  if (result.failed || result.rejected) {
    std::cerr << result.failed << " failed, " << result.rejected << " rejected\n";
    return 1;
  }
  return 0;
}

void print_matrix(const char* name, const linalg::Mat<Elt>& m) {
  std::cout << name << " = " << m.str() << "\n";
}

int cmd_pair(generators::Family fam, std::uint32_t q, std::optional<std::uint32_t> a,
             std::optional<std::uint32_t> xi) {
  auto pf = factor_prime_power(q);
  if (!pf) {
    std::cerr << "q = " << q << " is not a prime power\n";
    return kExitUsage;
  }
  auto F = gf::field_make(pf->first, pf->second);
  std::optional<Elt> av, xv;
  if (a) av = F->elt(*a);
  if (xi) xv = F->elt(*xi);
  if (fam == generators::Family::kMinusOdd && !xv) xv = gf::find_nonsquare(F);
  auto reports = generation_evidence(fam, F, av, xv);
  bool bad = false;
  for (const auto& r : reports) {
    if (r.check_id != "pair.construct" && r.check_id != "pair.invariants") continue;
    std::cout << report_text_line(r) << "\n";
    bad = bad || r.status == Status::kFail || r.status == Status::kRejected;
  }
  if (bad) return 1;
  auto pr = generators::build_pair(fam, F, av, xv);
  std::cout << "field " << F->descriptor() << "\n";
  print_matrix("x", pr.x);
  print_matrix("y", pr.y);
  std::cout << "gram = " << pr.form.gram().str() << "\n";
  std::string diag;
  for (const auto& d : pr.form.diag()) {
    if (!diag.empty()) diag += ",";
    diag += std::to_string(d.code);
  }
  std::cout << "diag = " << diag << "\nchar2 = " << (pr.form.char2() ? "1" : "0") << "\n";
  std::cout << "sign = " << forms::sign_name(forms::form_sign(pr.form)) << "\n";
  return 0;
}

int cmd_triality(std::uint32_t q, std::uint32_t a) {
  auto pf = factor_prime_power(q);
  if (!pf) {
    std::cerr << "q = " << q << " is not a prime power\n";
    return kExitUsage;
  }
  auto F = gf::field_make(pf->first, pf->second);
  Elt av = F->elt(a);
  bool even = F->p == 2;
  auto fam = even ? generators::Family::kPlusEven : generators::Family::kPlusOdd;
  try {
    generators::validate_params(fam, F, av, std::nullopt);
  } catch (const std::invalid_argument& e) {
    std::cout << "rejected  [q=" << q << " a=" << a << "]  " << e.what() << "\n";
    return 1;
  }
  namespace st = ortho8::steinberg;
  st::Word wx = st::word_x(even), wy = st::word_y();
  std::cout << "word_x = " << st::word_str(wx) << "\n";
  std::cout << "word_y = " << st::word_str(wy) << "\n";
  auto im = generators::printed_triality_images(F, av);
  auto pr = generators::build_pair(fam, F, av);
  int mismatches = 0;
  auto show = [&](const char* name, const st::Word& w, const linalg::Mat<Elt>& printed) {
    auto got = st::eval_word(w, F, av);
    std::cout << name << " = " << got.str() << "\n";
    if (got == printed) {
      std::cout << name << " matches the printed matrix\n";
    } else {
      ++mismatches;
      std::cout << name << " DIFFERS from the printed matrix: " << printed.str() << "\n";
    }
  };
  show("eval(word_x)", wx, pr.x);
  show("eval(word_y)", wy, pr.y);
  show("tau(x)", st::tau_rewrite(wx), im.tau_x);
  show("tau^2(x)", st::tau_rewrite(st::tau_rewrite(wx)), im.tau2_x);
  show("tau(y)", st::tau_rewrite(wy), im.tau_y);
  show("tau^2(y)", st::tau_rewrite(st::tau_rewrite(wy)), im.tau2_y);
  std::cout << "note: x_{-1,4}(alpha) is evaluated with the alpha reading "
               "(x_{-1,3}(alpha))^{pi_{3,4}}; the printed definition fixes the parameter to 1 "
               "and cannot reproduce the x matrices (run `check steinberg.x-14-flag`)\n";
  return mismatches == 0 ? 0 : 1;
}

int cmd_check(const std::string& id, std::uint32_t q, std::optional<std::uint32_t> a,
              std::optional<std::uint32_t> xi, const std::string& family) {
  const CheckDef* def = find_check(id);
  if (!def && id != "pol_irr.carlitz") {
    std::cerr << "unknown check id: " << id << "\n";
    return kExitUsage;
  }
  auto pf = factor_prime_power(q);
  if (!pf) {
    std::cerr << "q = " << q << " is not a prime power\n";
    return kExitUsage;
  }
  auto F = gf::field_make(pf->first, pf->second);
  if (id == "pol_irr.carlitz") {
    CheckReport rep = run_carlitz(F);
    std::cout << report_text_line(rep) << "\n";
    return rep.status == Status::kFail ? 1 : 0;
  }
  if (!def->pointwise) {
    CheckReport rep = run_symbolic(*def, F->p);
    std::cout << report_text_line(rep) << "\n";
    return rep.status == Status::kFail ? 1 : 0;
  }
  // resolve the family from parity unless given explicitly
  std::vector<generators::Family> candidates;
  for (generators::Family fam : def->families) {
    bool even_fam = fam == generators::Family::kPlusEven ||
                    fam == generators::Family::kMinusEven || fam == generators::Family::kMinus2;
    if (even_fam != (F->p == 2)) continue;
    if (fam == generators::Family::kMinus2 && F->q != 2) continue;
    if (fam != generators::Family::kMinus2 && F->q == 2) continue;
    candidates.push_back(fam);
  }
  generators::Family fam;
  if (!family.empty()) {
    auto parsed = generators::family_from_name(family);
    if (!parsed) {
      std::cerr << "unknown family: " << family << "\n";
      return kExitUsage;
    }
    fam = *parsed;
  } else if (candidates.size() == 1) {
    fam = candidates[0];
  } else {
    std::cerr << "ambiguous family for this check at q = " << q << "; pass --family (one of:";
    for (auto f : candidates) std::cerr << " " << generators::family_name(f);
    std::cerr << ")\n";
    return kExitUsage;
  }
  std::optional<Elt> av, xv;
  if (a) av = F->elt(*a);
  if (xi) xv = F->elt(*xi);
  if (fam == generators::Family::kMinusOdd && !xv) xv = gf::find_nonsquare(F);
  std::optional<generators::GeneratorPair> pair;
  try {
    pair = generators::build_pair(fam, F, av, xv);
  } catch (const std::invalid_argument& e) {
    Params prm;
    prm.family = fam;
    prm.q = q;
    prm.a_code = a;
    prm.xi_code = xi;
    CheckReport rep{id, prm, Status::kRejected, e.what()};
    std::cout << report_text_line(rep) << "\n";
    return 1;
  }
  CheckReport rep = run_pointwise(*def, *pair);
  std::cout << report_text_line(rep) << "\n";
  return rep.status == Status::kFail ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ortho8: exact verification harness for the (2,3)-generator pairs of the "
               "8-dimensional orthogonal groups"};
  app.require_subcommand(1);

  // ---- sweep ----
  auto* sweep = app.add_subcommand("sweep", "run the check battery over parameter sweeps");
  std::string cfg_file, families_csv, a_policy = "exhaustive", checks = "*";
  std::string output, format = "json";
  SweepConfig cfg;
  std::uint32_t samples = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  bool no_symbolic = false;
  sweep->add_option("--config", cfg_file, "flat key=value config file; flags override");
  sweep->add_option("--families", families_csv, "comma-separated family list");
  sweep->add_option("--q-even-max", cfg.q_even_max, "largest even q");
  sweep->add_option("--q-odd-max", cfg.q_odd_max, "largest odd q");
  sweep->add_option("--a-policy", a_policy, "exhaustive | sample");
  sweep->add_option("--samples", samples, "a-values per field when sampling");
  sweep->add_option("--seed", seed, "LCG seed (mandatory when sampling)");
  sweep->add_option("--checks", checks, "glob filter over check ids");
  sweep->add_flag("--no-symbolic", no_symbolic, "skip the symbolic battery");
  sweep->add_option("--output", output, "report file (stdout when omitted)");
  sweep->add_option("--format", format, "json | text");
  sweep->add_option("--jobs", jobs, "worker count (default: ORTHO8_JOBS or hardware)");

  // ---- check ----
  auto* check = app.add_subcommand("check", "run one named check");
  std::string check_id, check_family;
  std::uint32_t check_q = 0;
  std::optional<std::uint32_t> check_a, check_xi;
  check->add_option("id", check_id, "check id from the registry")->required();
  check->add_option("--q", check_q, "field size")->required();
  check->add_option("--a", check_a, "parameter a (element code)");
  check->add_option("--xi", check_xi,
                    "parameter xi (element code; canonical nonsquare when omitted)");
  check->add_option("--family", check_family, "family when the id is ambiguous for q");

  // ---- pair ----
  auto* pairc = app.add_subcommand("pair", "print a generator pair and its membership evidence");
  std::string pair_family;
  std::uint32_t pair_q = 0;
  std::optional<std::uint32_t> pair_a, pair_xi;
  pairc->add_option("family", pair_family, "family name")->required();
  pairc->add_option("--q", pair_q, "field size")->required();
  pairc->add_option("--a", pair_a, "parameter a (element code)");
  pairc->add_option("--xi", pair_xi, "parameter xi (element code)");

  // ---- triality ----
  auto* tri = app.add_subcommand("triality", "print the Steinberg words and triality images");
  std::uint32_t tri_q = 0, tri_a = 0;
  tri->add_option("--q", tri_q, "field size")->required();
  tri->add_option("--a", tri_a, "parameter a (element code)")->required();

  // ---- primes ----
  auto* pr = app.add_subcommand("primes", "prime divisors of |Omega_8^sign(q)|");
  std::string sign;
  std::uint32_t primes_q = 0;
  pr->add_option("sign", sign, "plus | minus")->required();
  pr->add_option("q", primes_q, "prime power")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (sweep->parsed()) {
      // config file first, then flags override
      if (!cfg_file.empty()) {
        for (auto& [key, value] : read_config_file(cfg_file)) {
          if (key == "families" && families_csv.empty()) families_csv = value;
          else if (key == "q-even-max" && !sweep->count("--q-even-max"))
            cfg.q_even_max = std::stoul(value);
          else if (key == "q-odd-max" && !sweep->count("--q-odd-max"))
            cfg.q_odd_max = std::stoul(value);
          else if (key == "a-policy" && !sweep->count("--a-policy")) a_policy = value;
          else if (key == "samples" && !sweep->count("--samples")) samples = std::stoul(value);
          else if (key == "seed" && !sweep->count("--seed")) seed = std::stoull(value);
          else if (key == "checks" && !sweep->count("--checks")) checks = value;
          else if (key == "symbolic" && !sweep->count("--no-symbolic"))
            no_symbolic = (value == "0" || value == "false");
          else if (key == "output" && output.empty()) output = value;
          else if (key == "format" && !sweep->count("--format")) format = value;
          else if (key == "jobs" && !sweep->count("--jobs")) jobs = std::stoul(value);
        }
      }
      if (!families_csv.empty()) cfg.families = parse_families(families_csv);
      if (a_policy == "sample") {
        if (!seed) {
          std::cerr << "--seed is mandatory with --a-policy sample\n";
          return kExitUsage;
        }
        cfg.sample = true;
        cfg.samples = samples ? samples : 1;
        cfg.seed = seed;
      } else if (a_policy != "exhaustive") {
        std::cerr << "unknown a-policy: " << a_policy << "\n";
        return kExitUsage;
      }
      cfg.checks = checks;
      cfg.symbolic = !no_symbolic;
      cfg.jobs = jobs;
      if (format != "json" && format != "text") {
        std::cerr << "unknown format: " << format << "\n";
        return kExitUsage;
      }
      std::string started = now_iso();
      SweepResult result = run_sweep(cfg);
      return emit_and_count(result, cfg, format, output, started);
    }
    if (check->parsed()) return cmd_check(check_id, check_q, check_a, check_xi, check_family);
    if (pairc->parsed()) {
      auto fam = generators::family_from_name(pair_family);
      if (!fam) {
        std::cerr << "unknown family: " << pair_family << "\n";
        return kExitUsage;
      }
      return cmd_pair(*fam, pair_q, pair_a, pair_xi);
    }
    if (tri->parsed()) return cmd_triality(tri_q, tri_a);
    if (pr->parsed()) {
      forms::Sign s;
      if (sign == "plus")
        s = forms::Sign::kPlus;
      else if (sign == "minus")
        s = forms::Sign::kMinus;
      else {
        std::cerr << "sign must be plus or minus\n";
        return kExitUsage;
      }
      auto ps = primes::prime_set_omega(s, primes_q);
      std::cout << "Upsilon(Omega_8^" << (s == forms::Sign::kPlus ? "+" : "-") << "(" << primes_q
                << ")) = {";
      bool first = true;
      for (auto p : ps) {
        if (!first) std::cout << ", ";
        std::cout << p;
        first = false;
      }
      std::cout << "}\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
