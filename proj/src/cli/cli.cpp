// Copyright 2026 The Wildla Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wildla/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "suites.hpp"
#include "wildla/contfrac.hpp"
#include "wildla/encoder.hpp"
#include "wildla/ipdemo.hpp"
#include "wildla/logic/builders.hpp"
#include "wildla/logic/eval.hpp"
#include "wildla/logic/parser.hpp"
#include "wildla/model/semantic.hpp"
#include "wildla/model/two_scalar.hpp"
#include "wildla/model_json.hpp"

namespace wildla::cli {

namespace {

// Bad flags or inputs detected before any computation.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t budget = 100'000'000;
  unsigned threads = 1;
  bool no_timestamp = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

BigInt parse_number(const std::string& text, const std::string& what) {
  try {
    return parse_decimal(text);
  } catch (const std::exception&) {
    throw UsageError("bad " + what + ": '" + text + "'");
  }
}

// Residues separated by whitespace or commas; '#' starts a comment.
std::vector<BigInt> read_sequence(const std::string& path) {
  std::string text = read_file(path);
  std::string cleaned;
  bool comment = false;
  for (char ch : text) {
    if (ch == '#') comment = true;
    if (ch == '\n') comment = false;
    cleaned += comment || ch == ',' ? ' ' : ch;
  }
  std::istringstream in(cleaned);
  std::vector<BigInt> out;
  for (std::string tok; in >> tok;) out.push_back(parse_number(tok, "residue"));
  return out;
}

struct ModelSource {
  std::string file;
  std::optional<std::uint32_t> L;

  void add_to(CLI::App& cmd) {
    auto* m = cmd.add_option("--model", file, "model document");
    auto* l = cmd.add_option("--L", L, "build the squaring model for L instead");
    m->excludes(l);
  }
  bool given() const { return !file.empty() || L.has_value(); }
  encoder::WildModel load() const {
    if (L) return encoder::build_squaring_model(*L);
    if (file.empty()) throw UsageError("a model is required (--model FILE or --L N)");
    return encoder::deserialize_model(read_file(file));
  }
};

// --- encode ---

struct EncodeArgs {
  std::optional<std::uint32_t> L;
  std::string seq_file;
  std::string prime;
  std::string out_file;
};

int cmd_encode(const EncodeArgs& args, std::ostream& out, std::ostream& err) {
  if (args.L.has_value() == !args.seq_file.empty()) throw UsageError("encode needs exactly one of --L or --seq");
  if (!args.seq_file.empty() && args.prime.empty()) throw UsageError("--seq needs --prime");
  std::optional<encoder::TargetSequence> seq;
  if (!args.seq_file.empty()) {
    seq = encoder::TargetSequence{read_sequence(args.seq_file), parse_number(args.prime, "prime")};
    try {
      seq->validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("invalid sequence: ") + e.what());
    }
  }
  const encoder::WildModel m =
      args.L ? encoder::build_squaring_model(*args.L) : encoder::model_from_encoding(encoder::encode_sequence(*seq));
  const std::string doc = encoder::serialize_model(m);
  if (!args.out_file.empty()) write_file(args.out_file, doc + "\n");
  std::ostream& summary = args.out_file.empty() ? err : out;
  summary << "L=" << m.L << " c=" << m.c() << " length=" << m.seq.z.size() << " a_bits=" << bit_length(m.a())
          << " b_bits=" << bit_length(m.b()) << "\n";
  if (args.out_file.empty()) out << doc << "\n";
  return kExitOk;
}

// --- verify ---

struct VerifyArgs {
  ModelSource model;
  std::string suite = "all";
};

int cmd_verify(const VerifyArgs& args, const Globals& g, std::ostream& out) {
  const bool needs_model = args.suite != "cf";
  if (needs_model && !args.model.given()) throw UsageError("suite '" + args.suite + "' needs --model or --L");
  std::optional<encoder::WildModel> m;
  if (args.model.given()) m = args.model.load();

  const SuiteOptions opts{g.budget, g.threads};
  SuiteResult res;
  bool skipped = false;
  if (m) {
    res = consistency_suite(*m);
    if (!res.report.ok()) {
      skipped = true;
      res.summary.push_back("model inconsistent; remaining suites skipped");
    }
  }
  if (!skipped) {
    if (args.suite == "mult" || args.suite == "all") res.append(mult_suite(*m, opts));
    if (args.suite == "equiv" || args.suite == "all") res.append(equiv_suite(*m, opts));
    if (args.suite == "two-scalar" || args.suite == "all") res.append(two_scalar_suite(*m, opts));
    if (args.suite == "cf" || args.suite == "all") res.append(cf_suite(opts));
  }

  if (!g.no_timestamp) out << "# generated " << utc_now() << "\n";
  out << res.report.format();
  const auto& rep = res.report;
  for (const std::string& s : res.summary) out << "SUMMARY " << s << "\n";
  out << "SUMMARY checks=" << rep.records.size() << " pass=" << rep.count(model::Status::pass)
      << " fail=" << rep.count(model::Status::fail) << " budget=" << rep.count(model::Status::budget) << "\n";
  if (const model::CheckRecord* w = rep.first_failure()) out << "WITNESS " << model::format_record(*w) << "\n";
  if (rep.count(model::Status::fail) > 0) {
    out << "FAIL\n";
    return kExitFail;
  }
  if (rep.count(model::Status::budget) > 0) {
    out << "BUDGET\n";
    return kExitBudget;
  }
  out << "PASS\n";
  return kExitOk;
}

// --- eval ---

struct EvalArgs {
  ModelSource model;
  std::string builtin;
  std::string formula_file;
  std::string env;
  std::string mode = "literal";
  std::string scalars;
};

std::map<std::string, BigInt> parse_env(const std::string& text) {
  std::map<std::string, BigInt> env;
  std::istringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("bad binding '" + item + "' in --env");
    const std::string name = item.substr(0, eq);
    if (env.count(name)) throw UsageError("variable " + name + " bound twice in --env");
    env[name] = parse_number(item.substr(eq + 1), "value of " + name);
  }
  return env;
}

using SemanticFn = std::function<bool(const std::map<std::string, BigInt>&)>;

SemanticFn semantic_builtin(const std::string& name, const encoder::WildModel& m) {
  auto sem = std::make_shared<model::SemanticModel>(m);
  auto get = [](const std::map<std::string, BigInt>& env, const std::string& v) -> const BigInt& {
    auto it = env.find(v);
    if (it == env.end()) throw UsageError("--env does not bind " + v);
    if (it->second < 0) throw UsageError("variable " + v + " is negative");
    return it->second;
  };
  if (name == "gamma") return [=](const auto& e) { return sem->gamma(get(e, "u"), get(e, "v")); };
  if (name == "V") return [=](const auto& e) { return sem->V(get(e, "v")); };
  if (name == "V0") return [=](const auto& e) { return sem->V0(get(e, "v")); };
  if (name == "V1") return [=](const auto& e) { return sem->V1(get(e, "v")); };
  if (name == "pi") return [=](const auto& e) { return sem->pi(get(e, "v"), get(e, "v'")); };
  if (name == "pi-uncorrected") return [=](const auto& e) { return sem->pi(get(e, "v"), get(e, "v'"), false); };
  if (name == "sigma") return [=](const auto& e) { return sem->sigma(get(e, "x"), get(e, "y")); };
  if (name == "mu") return [=](const auto& e) { return sem->mu(get(e, "x"), get(e, "y"), get(e, "z")); };
  if (name == "mu2") {
    auto two = std::make_shared<model::TwoScalarSemantics>(model::TwoScalarView::of(m));
    return [=](const auto& e) { return two->mu(get(e, "x"), get(e, "y"), get(e, "z")); };
  }
  throw UsageError("no semantic evaluator for " + name);
}

int cmd_eval(const EvalArgs& args, const Globals& g, std::ostream& out) {
  if (args.builtin.empty() == args.formula_file.empty()) {
    throw UsageError("eval needs exactly one of --builtin or --formula");
  }
  if (args.mode == "semantic" && args.builtin.empty()) throw UsageError("semantic mode needs --builtin");
  const auto& names = logic::builtin_formula_names();
  if (!args.builtin.empty() && std::find(names.begin(), names.end(), args.builtin) == names.end()) {
    throw UsageError("unknown builtin formula " + args.builtin);
  }
  const auto env = parse_env(args.env);
  std::optional<logic::Formula> f;
  if (args.mode == "literal") {
    f = args.builtin.empty() ? logic::parse_formula(read_file(args.formula_file)) : logic::builtin_formula(args.builtin);
  }
  const encoder::WildModel m = args.model.load();

  bool value = false;
  if (args.mode == "semantic") {
    value = semantic_builtin(args.builtin, m)(env);
  } else {
    std::string scalars = args.scalars;
    if (scalars.empty()) scalars = !args.builtin.empty() && logic::builtin_scalar_count(args.builtin) == 2 ? "two" : "abc";
    std::vector<BigInt> sc = scalars == "two" ? std::vector<BigInt>{m.alpha, m.delta}
                                              : std::vector<BigInt>{m.a(), m.b(), m.c()};
    logic::EvalOptions opts;
    opts.budget = g.budget;
    logic::Evaluator ev(*f, std::move(sc), opts);
    value = ev.eval(env);
  }
  out << (value ? "true" : "false") << "\n";
  return kExitOk;
}

// --- cf ---

std::pair<BigInt, BigInt> ordered_pair(const std::vector<std::string>& ab) {
  if (ab.size() != 2) throw UsageError("expected two numbers A B");
  BigInt a = parse_number(ab[0], "A"), b = parse_number(ab[1], "B");
  if (!(b > 0 && b < a)) throw UsageError("need 0 < B < A");
  return {a, b};
}

int cmd_cf(const std::string& action, const std::vector<std::string>& args, std::ostream& out) {
  if (action == "value") {
    std::vector<BigInt> coeffs;
    for (const std::string& s : args) coeffs.push_back(parse_number(s, "coefficient"));
    std::optional<contfrac::ContinuedFraction> cf;
    try {
      cf.emplace(coeffs);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    const contfrac::CoprimePair p = contfrac::cf_value(*cf);
    out << p.a << " " << p.b << "\n";
    return kExitOk;
  }
  const auto [a, b] = ordered_pair(args);
  const contfrac::ContinuedFraction cf = contfrac::cf_expand(a, b);
  if (action == "expand") {
    for (std::size_t i = 0; i < cf.size(); ++i) out << (i ? " " : "") << cf[i];
    out << "\n";
    return kExitOk;
  }
  const contfrac::ConvergentTable t = contfrac::convergents(cf, contfrac::CoprimePair{a, b});
  out << "i u v r\n";
  for (std::ptrdiff_t i = -2; i <= t.n(); ++i) out << i << " " << t.u(i) << " " << t.v(i) << " " << t.r(i) << "\n";
  return kExitOk;
}

// --- ip ---

int cmd_ip(unsigned n, bool force, const Globals& g, std::ostream& out, std::ostream& err) {
  if (n == 0) throw UsageError("--n must be at least 1");
  if (n > ipdemo::kMaxUnforcedPrimes && !force) {
    throw UsageError("--n above " + std::to_string(ipdemo::kMaxUnforcedPrimes) + " needs --force");
  }
  if (n >= 4) err << "warning: n = " << n << " builds a large model and may take very long\n";
  const ipdemo::IpInstance inst = ipdemo::build_ip_instance(n, force);
  const ipdemo::IpMatrix mat = ipdemo::check_ip_pattern(inst, g.threads);
  out << "n=" << n << " L=" << inst.L << " c=" << inst.model.c() << "\n";
  out << ipdemo::format_matrix(inst, mat);
  for (const auto& [i, mask] : mat.mismatches) {
    out << "MISMATCH i=" << i << " b_J=" << ipdemo::subset_product(inst, mask) << "\n";
  }
  out << (mat.matches() ? "PASS" : "FAIL") << "\n";
  return mat.matches() ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"wildla: wild models of linear arithmetic"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--budget", g.budget, "step budget per literal evaluation")->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-timestamp", g.no_timestamp, "omit the timestamp line of reports");
  app.fallthrough();

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "build a model document");
  encode->add_option("--L", enc.L, "squaring sequence length parameter");
  encode->add_option("--seq", enc.seq_file, "file of residues");
  encode->add_option("--prime", enc.prime, "modulus for --seq");
  encode->add_option("--out", enc.out_file, "output file (default: stdout)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  ver.model.add_to(*verify);
  verify->add_option("--suite", ver.suite, "suite to run")
      ->check(CLI::IsMember({"mult", "equiv", "cf", "two-scalar", "all"}));

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "evaluate a formula in a model");
  ev.model.add_to(*eval);
  auto* b_opt = eval->add_option("--builtin", ev.builtin, "builtin formula name");
  auto* f_opt = eval->add_option("--formula", ev.formula_file, "formula file");
  b_opt->excludes(f_opt);
  eval->add_option("--env", ev.env, "bindings x=..,y=..");
  eval->add_option("--mode", ev.mode, "literal or semantic")->check(CLI::IsMember({"literal", "semantic"}));
  eval->add_option("--scalars", ev.scalars, "abc or two")->check(CLI::IsMember({"abc", "two"}));

  std::string cf_action;
  std::vector<std::string> cf_args;
  auto* cf = app.add_subcommand("cf", "continued fractions of small pairs");
  cf->add_option("action", cf_action, "expand, convergents or value")
      ->required()
      ->check(CLI::IsMember({"expand", "convergents", "value"}));
  cf->add_option("numbers", cf_args, "A B, or coefficients for value")->required();

  unsigned ip_n = 0;
  bool ip_force = false;
  auto* ip = app.add_subcommand("ip", "independence pattern of the divisibility formula");
  ip->add_option("--n", ip_n, "number of primes")->required();
  ip->add_flag("--force", ip_force, "allow n above the default limit");

  std::string formula_name;
  auto* formula = app.add_subcommand("formula", "print a builtin formula");
  formula->add_option("name", formula_name, "builtin name; omit to list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode) return cmd_encode(enc, out, err);
    if (*verify) return cmd_verify(ver, g, out);
    if (*eval) return cmd_eval(ev, g, out);
    if (*cf) return cmd_cf(cf_action, cf_args, out);
    if (*ip) return cmd_ip(ip_n, ip_force, g, out, err);
    if (*formula) {
      if (formula_name.empty()) {
        for (const std::string& n : logic::builtin_formula_names()) out << n << "\n";
        return kExitOk;
      }
      const auto& names = logic::builtin_formula_names();
      if (std::find(names.begin(), names.end(), formula_name) == names.end()) {
        throw UsageError("unknown builtin formula " + formula_name);
      }
      out << logic::print(logic::builtin_formula(formula_name)) << "\n";
      return kExitOk;
    }
  } catch (const logic::BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const model::SearchBudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const encoder::ModelFormatError& e) {
    err << "model format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const logic::ParseError& e) {
    err << "formula parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const logic::EvalError& e) {
    err << "evaluation error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace wildla::cli
