#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "ramopuc/closed_forms.hpp"
#include "ramopuc/duality.hpp"
#include "ramopuc/errors.hpp"
#include "ramopuc/number_theory.hpp"
#include "ramopuc/serialize.hpp"

namespace ramopuc::cli {
namespace {

enum class Format { Human, Json, Csv };

constexpr const char* kFormatEnv = "RAMOPUC_FORMAT";
constexpr std::uint64_t kEnumOrderCap = 12;
constexpr unsigned kSweepWeightDigits = 10;

Format parse_format(const std::string& s) {
  if (s == "human" || s == "human-table") return Format::Human;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw InvalidArgument("unknown output format '" + s + "' (expected human, json or csv)");
}

std::string default_format() {
  const char* env = std::getenv(kFormatEnv);
  return env && *env ? env : "human";
}

std::string join(const std::vector<Rational>& v, const char* sep = " ") {
  std::string s;
  for (const auto& q : v) {
    if (!s.empty()) s += sep;
    s += to_string(q);
  }
  return s;
}

std::string csv_field(std::string s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

// --- rendering --------------------------------------------------------------

void print_system_human(const PopucSystem& sys, std::ostream& out) {
  out << "family: " << sys.family << '\n'
      << "source: " << sys.source << '\n'
      << "N: " << sys.n() << '\n'
      << "verblunsky: " << join(sys.verblunsky.values()) << '\n'
      << "moments: " << join(sys.moments.values()) << '\n';
  std::size_t wa = 3, wh = 3, wd = 11;
  for (std::size_t n = 0; n <= sys.n(); ++n) {
    wa = std::max(wa, to_string(sys.verblunsky[n]).size());
    wh = std::max(wh, to_string(sys.h[n]).size());
    wd = std::max(wd, to_string(sys.delta[n]).size());
  }
  out << std::left << std::setw(4) << "n" << std::setw(static_cast<int>(wa) + 2) << "a_n"
      << std::setw(static_cast<int>(wh) + 2) << "h_n" << std::setw(static_cast<int>(wd) + 2) << "Delta_{n+1}"
      << "Phi_n" << '\n';
  for (std::size_t n = 0; n < sys.phis.size(); ++n) {
    const bool has = n <= sys.n();
    out << std::setw(4) << n << std::setw(static_cast<int>(wa) + 2) << (has ? to_string(sys.verblunsky[n]) : "-")
        << std::setw(static_cast<int>(wh) + 2) << (has ? to_string(sys.h[n]) : "-")
        << std::setw(static_cast<int>(wd) + 2) << (has ? to_string(sys.delta[n]) : "-") << sys.phis[n].to_string()
        << '\n';
  }
  out << std::right;
}

void print_system_csv(const PopucSystem& sys, std::ostream& out) {
  out << "n,k,coefficient\n";
  for (std::size_t n = 0; n < sys.phis.size(); ++n)
    for (std::size_t k = 0; k <= n; ++k) out << n << ',' << k << ',' << to_string(sys.phis[n][k]) << '\n';
}

void print_system(const PopucSystem& sys, Format f, std::ostream& out) {
  switch (f) {
    case Format::Human: print_system_human(sys, out); break;
    case Format::Json: out << system_to_json(sys).dump(2) << '\n'; break;
    case Format::Csv: print_system_csv(sys, out); break;
  }
}

// --- systems from flags -----------------------------------------------------

struct SpecFlags {
  std::uint64_t m = 0;
  std::string kronecker;
};

KroneckerSpec spec_from_flags(const SpecFlags& flags, CLI::Option* m_opt, CLI::Option* k_opt) {
  if ((m_opt->count() > 0) == (k_opt->count() > 0))
    throw InvalidArgument("exactly one of --m or --kronecker is required");
  if (m_opt->count() > 0) {
    if (flags.m == 0) throw InvalidArgument("--m must be a positive integer");
    return KroneckerSpec({flags.m});
  }
  return parse_kronecker_spec(flags.kronecker);
}

PopucSystem build_family(const KroneckerSpec& spec, bool cyclotomic_source, const std::string& family,
                         const BuildOptions& options) {
  if (family == "sturmian") {
    if (cyclotomic_source) {
      const auto m = spec.orders().front();
      return sturmian_from_charpoly(cyclotomic(m), "cyclotomic:" + std::to_string(m));
    }
    return sturmian_from_spec(spec, options);
  }
  if (cyclotomic_source) {
    const auto m = spec.orders().front();
    const auto points = euler_totient(m);
    auto sys = popuc_from_moments(moments_from_cyclotomic(m, points), points, options);
    require(sys.charpoly() == cyclotomic(m), "terminal polynomial is not C_" + std::to_string(m));
    return sys;
  }
  return ramanujan_from_charpoly(spec, options);
}

// --- verify -----------------------------------------------------------------

void verify_system(const PopucSystem& sys, const std::string& label) {
  const auto c = check_system(sys);
  require(c.ok(), label + ": " + c.failures());
}

void verify_pair(const KroneckerSpec& spec) {
  const auto pair = build_dual_pair(spec);
  verify_system(pair.ramanujan, "Ramanujan system");
  verify_system(pair.sturmian, "Sturmian system");
  verify_weights(pair, kSweepWeightDigits).require();
}

void verify_cyclotomic(std::uint64_t m) {
  const auto table = ramanujan_table(m, 2 * m);
  require(table.values[0] == static_cast<unsigned long>(euler_totient(m)), "c_M(0) != phi(M)");
  require(table.values[1] == mobius(m), "c_M(1) != mu(M)");
  require(vieta_checks(m).ok(), "Vieta coefficient identities");

  const Poly c = cyclotomic(m);
  require(c.is_monic() && c.degree() == static_cast<int>(euler_totient(m)), "C_M is not monic of degree phi(M)");
  for (const auto& coeff : c.coeffs()) require(coeff.get_den() == 1, "C_M has a non-integer coefficient");
  if (m >= 2) require(poly_reverse(c, c.degree()) == c, "C_M is not palindromic");
  Poly product = Poly::constant(1);
  for (auto d : divisors(m)) product = product * cyclotomic(d);
  require(product == z_power_minus_one(m), "product of C_d over d | M is not z^M - 1");
  require(anti_cyclotomic(m) * c == z_power_minus_one(m), "A_M * C_M != z^M - 1");

  const auto points = euler_totient(m);
  auto engine = popuc_from_moments(moments_from_cyclotomic(m, points), points);
  require(engine.charpoly() == c, "equal-mass ladder does not end in C_M");
  verify_pair(KroneckerSpec({m}));
}

void verify_prime(std::uint64_t p) {
  const auto engine = popuc_from_moments(moments_from_cyclotomic(p, p - 1), p - 1);
  const auto cf = cf_ramanujan_prime(p);
  require(same_system_data(engine, cf), "engine and closed form differ");
  verify_system(cf, "closed form");
  const auto single = cf_single_moment(p - 2);
  require(mirror_dual(cf.verblunsky) == single.verblunsky, "mirror map does not give the single-moment parameters");
  require(same_system_data(sturmian_from_spec(KroneckerSpec({p})), single), "Sturmian system != single-moment family");
  verify_system(single, "single-moment closed form");
}

void verify_2p(std::uint64_t p) {
  const auto engine = popuc_from_moments(moments_from_cyclotomic(2 * p, p - 1), p - 1);
  const auto cf = cf_ramanujan_2p(p);
  require(same_system_data(engine, cf), "engine and closed form differ");
  require(cf.charpoly() == cyclotomic(2 * p), "terminal polynomial is not C_2p");
  verify_system(cf, "closed form");
}

void verify_anti2p(std::uint64_t p) {
  const KroneckerSpec spec({1, 2, p});
  require(kronecker_poly(spec) == anti_cyclotomic(2 * p), "C_1 C_2 C_p != A_2p");
  const auto ram = cf_ramanujan_anti2p(p);
  const auto stu = cf_sturmian_anti2p(p);
  require(same_system_data(ramanujan_from_charpoly(spec), ram), "Ramanujan engine and closed form differ");
  require(same_system_data(sturmian_from_charpoly(anti_cyclotomic(2 * p)), stu), "Sturmian descent and closed form differ");
  require(mirror_dual(ram.verblunsky) == stu.verblunsky, "closed forms are not mirror-dual");
  verify_system(ram, "Ramanujan closed form");
  verify_system(stu, "Sturmian closed form");
}

std::vector<KroneckerSpec> enumerate_specs(std::uint64_t max_order) {
  std::vector<KroneckerSpec> out;
  for (std::uint64_t a = 1; a <= max_order; ++a) {
    out.emplace_back(std::vector<std::uint64_t>{a});
    for (std::uint64_t b = a + 1; b <= max_order; ++b) {
      out.emplace_back(std::vector<std::uint64_t>{a, b});
      for (std::uint64_t c = b + 1; c <= max_order; ++c) out.emplace_back(std::vector<std::uint64_t>{a, b, c});
    }
  }
  return out;
}

std::vector<std::uint64_t> odd_primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; p <= n; p += 2)
    if (is_prime(p)) out.push_back(p);
  return out;
}

// --- commands ---------------------------------------------------------------

struct Context {
  std::ostream& out;
  std::ostream& err;
};

int cmd_sums(Context& ctx, std::uint64_t m, std::uint64_t n_max, Format f) {
  const auto table = ramanujan_table(m, n_max);
  switch (f) {
    case Format::Human: {
      std::string line;
      for (const auto& v : table.values) line += (line.empty() ? "" : " ") + to_string(v);
      ctx.out << line << '\n';
      break;
    }
    case Format::Json: ctx.out << table_to_json(table).dump(2) << '\n'; break;
    case Format::Csv:
      ctx.out << "n,c\n";
      for (std::size_t n = 0; n < table.values.size(); ++n) ctx.out << n << ',' << to_string(table.values[n]) << '\n';
      break;
  }
  return kSuccess;
}

int cmd_popuc(Context& ctx, const KroneckerSpec& spec, bool cyclotomic_source, const std::string& family, Format f,
              bool paranoid) {
  const auto sys = build_family(spec, cyclotomic_source, family, {paranoid});
  verify_system(sys, family + " system");
  print_system(sys, f, ctx.out);
  return kSuccess;
}

int cmd_dual(Context& ctx, const KroneckerSpec& spec, unsigned digits, Format f) {
  DualPair pair{spec, ramanujan_from_charpoly(spec), sturmian_from_spec(spec), kronecker_poly(spec), {}};
  pair.checks = check_dual(spec, pair.ramanujan, pair.sturmian);
  const auto ram_check = check_system(pair.ramanujan);
  const auto stu_check = check_system(pair.sturmian);
  const auto weights = verify_weights(pair, digits);
  const bool ok = pair.checks.ok() && ram_check.ok() && stu_check.ok() && weights.passed;
  const auto exact = checks_to_json(pair.checks);

  switch (f) {
    case Format::Json: {
      auto j = dual_to_json(pair);
      j["checks"]["ramanujan_system"] = ram_check.ok();
      j["checks"]["sturmian_system"] = stu_check.ok();
      j["weights"] = weights_to_json(weights);
      j["passed"] = ok;
      ctx.out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      ctx.out << "check,passed,detail\n";
      for (const auto& [name, val] : exact.items())
        ctx.out << name << ',' << (val.get<bool>() ? "true" : "false") << ",\n";
      ctx.out << "ramanujan_system," << (ram_check.ok() ? "true" : "false") << ',' << csv_field(ram_check.failures()) << '\n';
      ctx.out << "sturmian_system," << (stu_check.ok() ? "true" : "false") << ',' << csv_field(stu_check.failures()) << '\n';
      ctx.out << "weights," << (weights.passed ? "true" : "false") << ",max residual " << weights.max_residual << '\n';
      break;
    case Format::Human: {
      auto mark = [](bool b) { return b ? "pass" : "FAIL"; };
      ctx.out << "spec: {" << spec.to_string() << "}  N = " << pair.ramanujan.n() << '\n'
              << "characteristic polynomial: " << pair.charpoly.to_string() << '\n'
              << "ramanujan verblunsky: " << join(pair.ramanujan.verblunsky.values()) << '\n'
              << "sturmian verblunsky:  " << join(pair.sturmian.verblunsky.values()) << '\n';
      for (const auto& [name, val] : exact.items())
        ctx.out << "  [" << mark(val.get<bool>()) << "] " << name << '\n';
      ctx.out << "  [" << mark(ram_check.ok()) << "] ramanujan_system " << ram_check.failures() << '\n'
              << "  [" << mark(stu_check.ok()) << "] sturmian_system " << stu_check.failures() << '\n'
              << "  [" << mark(weights.passed) << "] weights at " << weights.roots.size()
              << " roots, tolerance " << weights.tolerance << ", max residual " << weights.max_residual << '\n';
      for (const auto& r : weights.roots)
        ctx.out << "      z = exp(2 pi i " << r.angle.numerator << "/" << r.angle.order << ")  w = " << r.w
                << "  tw = " << r.tw << '\n';
      ctx.out << (ok ? "all checks passed" : "CHECK FAILURE") << '\n';
      break;
    }
  }
  if (!ok) {
    ctx.err << "dual: checks failed:";
    if (!pair.checks.ok()) ctx.err << ' ' << pair.checks.failures() << ';';
    if (!ram_check.ok()) ctx.err << " Ramanujan system: " << ram_check.failures() << ';';
    if (!stu_check.ok()) ctx.err << " Sturmian system: " << stu_check.failures() << ';';
    if (!weights.passed) ctx.err << " weights: max residual " << weights.max_residual;
    ctx.err << '\n';
  }
  return ok ? kSuccess : kCheckFailed;
}

int cmd_verify(Context& ctx, std::uint64_t max_m, const std::string& families, unsigned jobs, Format f) {
  const auto start = std::chrono::steady_clock::now();
  const auto tasks = make_verify_tasks(max_m, families);
  const auto results = run_verify_tasks(tasks, jobs);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });

  switch (f) {
    case Format::Json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : results)
        rows.push_back({{"family", r.family}, {"parameter", r.parameter}, {"passed", r.passed},
                        {"seconds", r.seconds}, {"detail", r.detail}});
      ctx.out << nlohmann::json{{"max_m", max_m}, {"families", families}, {"results", rows},
                                {"passed", failed == 0}, {"runtime_seconds", seconds}}
                     .dump(2)
              << '\n';
      break;
    }
    case Format::Csv:
      ctx.out << "family,parameter,status,seconds,detail\n";
      for (const auto& r : results)
        ctx.out << r.family << ',' << csv_field(r.parameter) << ',' << (r.passed ? "pass" : "FAIL") << ','
                << r.seconds << ',' << csv_field(r.detail) << '\n';
      break;
    case Format::Human:
      ctx.out << std::left << std::setw(16) << "family" << std::setw(14) << "parameter" << std::setw(8) << "status"
              << "seconds" << '\n';
      for (const auto& r : results) {
        ctx.out << std::setw(16) << r.family << std::setw(14) << r.parameter << std::setw(8)
                << (r.passed ? "pass" : "FAIL") << std::fixed << std::setprecision(3) << r.seconds
                << std::defaultfloat;
        if (!r.passed) ctx.out << "  " << r.detail;
        ctx.out << '\n' << std::flush;
      }
      ctx.out << std::right << results.size() << " checks, " << results.size() - static_cast<std::size_t>(failed)
              << " passed, " << failed << " failed; runtime " << std::fixed << std::setprecision(2) << seconds
              << " s" << std::defaultfloat << '\n';
      break;
  }
  if (failed) {
    const auto first = std::find_if(results.begin(), results.end(), [](const auto& r) { return !r.passed; });
    ctx.err << "verify: first failure: " << first->family << ' ' << first->parameter << ": " << first->detail << '\n';
    return kCheckFailed;
  }
  return kSuccess;
}

int cmd_explore(Context& ctx, std::uint64_t p, std::uint64_t q, Format f) {
  if (!is_prime(p) || !is_prime(q) || p == 2 || q == 2)
    throw InvalidArgument("--p and --q must be odd primes");
  if (p == q) throw InvalidArgument("--p and --q must be distinct");
  const std::uint64_t m = p * q;
  const auto points = euler_totient(m);
  const auto sys = popuc_from_moments(moments_from_cyclotomic(m, points), points);
  require(sys.charpoly() == cyclotomic(m), "terminal polynomial is not C_pq");
  verify_system(sys, "pq system");
  constexpr const char* note = "exploratory: no closed form known";
  switch (f) {
    case Format::Human:
      ctx.out << "M = " << m << " (p = " << p << ", q = " << q << "), N = " << sys.n() << "\n" << note << '\n';
      for (std::size_t n = 0; n <= sys.n(); ++n) ctx.out << "a_" << n << " = " << to_string(sys.verblunsky[n]) << '\n';
      break;
    case Format::Json: {
      nlohmann::json a = nlohmann::json::array();
      for (const auto& v : sys.verblunsky.values()) a.push_back(rational_to_json(v));
      ctx.out << nlohmann::json{{"p", p}, {"q", q}, {"M", m}, {"N", sys.n()}, {"verblunsky", a}, {"note", note}}.dump(2)
              << '\n';
      break;
    }
    case Format::Csv:
      ctx.out << "n,a_n\n";
      for (std::size_t n = 0; n <= sys.n(); ++n) ctx.out << n << ',' << to_string(sys.verblunsky[n]) << '\n';
      break;
  }
  return kSuccess;
}

}  // namespace

std::vector<VerifyTask> make_verify_tasks(std::uint64_t max_m, const std::string& families) {
  static const std::vector<std::string> known{"all", "cyclotomic", "prime", "2p", "anti2p", "kronecker-enum"};
  if (std::find(known.begin(), known.end(), families) == known.end())
    throw InvalidArgument("unknown family set '" + families + "'");
  if (max_m == 0) throw InvalidArgument("--max-m must be at least 1");
  auto want = [&](const char* name) { return families == "all" || families == name; };

  std::vector<VerifyTask> tasks;
  if (want("cyclotomic"))
    for (std::uint64_t m = 1; m <= max_m; ++m)
      tasks.push_back({"cyclotomic", "M=" + std::to_string(m), [m] { verify_cyclotomic(m); }});
  const auto primes = odd_primes_up_to(max_m);
  if (want("prime"))
    for (auto p : primes) tasks.push_back({"prime", "p=" + std::to_string(p), [p] { verify_prime(p); }});
  if (want("2p"))
    for (auto p : primes)
      if (2 * p <= max_m) tasks.push_back({"2p", "p=" + std::to_string(p), [p] { verify_2p(p); }});
  if (want("anti2p"))
    for (auto p : primes)
      if (2 * p <= max_m) tasks.push_back({"anti2p", "p=" + std::to_string(p), [p] { verify_anti2p(p); }});
  if (want("kronecker-enum"))
    for (const auto& spec : enumerate_specs(std::min(max_m, kEnumOrderCap)))
      tasks.push_back({"kronecker-enum", "{" + spec.to_string() + "}", [spec] { verify_pair(spec); }});
  return tasks;
}

std::vector<VerifyResult> run_verify_tasks(const std::vector<VerifyTask>& tasks, unsigned jobs) {
  std::vector<VerifyResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      auto& r = results[i];
      r.family = tasks[i].family;
      r.parameter = tasks[i].parameter;
      const auto t0 = std::chrono::steady_clock::now();
      try {
        tasks[i].body();
        r.passed = true;
      } catch (const std::exception& e) {
        r.detail = e.what();
      }
      r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramanujan-sum para-orthogonal polynomials on the unit circle: exact construction and verification"};
  app.require_subcommand(1);
  std::string format_text = default_format();
  app.add_option("--format", format_text, "Output format: human, json or csv (default from $RAMOPUC_FORMAT)");

  std::uint64_t m = 0, n_max = 0;
  auto* sums = app.add_subcommand("sums", "Ramanujan sums c_M(0..L)");
  sums->add_option("--m", m, "Modulus M")->required();
  sums->add_option("--n-max", n_max, "Largest n")->required();
  sums->add_option("--format", format_text, "Output format");

  SpecFlags popuc_flags;
  std::string family = "ramanujan";
  bool paranoid = false;
  auto* popuc = app.add_subcommand("popuc", "Build a Ramanujan or Sturmian para-orthogonal system");
  auto* popuc_m = popuc->add_option("--m", popuc_flags.m, "Cyclotomic modulus M");
  auto* popuc_k = popuc->add_option("--kronecker", popuc_flags.kronecker, "Distinct orders m1,m2,...");
  popuc_m->excludes(popuc_k);
  popuc->add_option("--family", family, "ramanujan or sturmian")->check(CLI::IsMember({"ramanujan", "sturmian"}));
  popuc->add_flag("--paranoid", paranoid, "Cross-check every Phi_n against the determinant formula");
  popuc->add_option("--format", format_text, "Output format");

  SpecFlags dual_flags;
  unsigned digits = 12;
  auto* dual = app.add_subcommand("dual", "Build the mirror-dual pair and run every check");
  auto* dual_m = dual->add_option("--m", dual_flags.m, "Cyclotomic modulus M");
  auto* dual_k = dual->add_option("--kronecker", dual_flags.kronecker, "Distinct orders m1,m2,...");
  dual_m->excludes(dual_k);
  dual->add_option("--precision", digits, "Weight checks hold to 10^-D (D <= 15: double, else 100-digit floats)")
      ->check(CLI::Range(1u, 90u));
  dual->add_option("--format", format_text, "Output format");

  std::uint64_t max_m = 1;
  std::string families = "all";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  auto* verify = app.add_subcommand("verify", "Sweep every family up to M_max and run the invariant suite");
  verify->add_option("--max-m", max_m, "Largest modulus")->required();
  verify->add_option("--families", families, "all, cyclotomic, prime, 2p, anti2p or kronecker-enum");
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  verify->add_option("--format", format_text, "Output format");

  std::uint64_t p = 0, q = 0;
  auto* explore = app.add_subcommand("explore", "Verblunsky parameters of the M = pq Ramanujan system");
  explore->add_option("--p", p, "Odd prime p")->required();
  explore->add_option("--q", q, "Odd prime q")->required();
  explore->add_option("--format", format_text, "Output format");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  Context ctx{out, err};
  try {
    const Format f = parse_format(format_text);
    if (*sums) {
      if (m == 0) throw InvalidArgument("--m must be a positive integer");
      return cmd_sums(ctx, m, n_max, f);
    }
    if (*popuc) return cmd_popuc(ctx, spec_from_flags(popuc_flags, popuc_m, popuc_k), popuc_m->count() > 0, family, f, paranoid);
    if (*dual) return cmd_dual(ctx, spec_from_flags(dual_flags, dual_m, dual_k), digits, f);
    if (*verify) return cmd_verify(ctx, max_m, families, jobs, f);
    if (*explore) return cmd_explore(ctx, p, q, f);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kCheckFailed;
  } catch (const std::exception& e) {
    err << "verification failed: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}

}  // namespace ramopuc::cli
