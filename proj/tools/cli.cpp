#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "quadsyn/error.hpp"
#include "quadsyn/fixtures.hpp"
#include "quadsyn/json_io.hpp"
#include "quadsyn/oracle.hpp"

namespace quadsyn::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::Parse, "cannot write " + path);
  out << text << '\n';
}

struct Options {
  std::string file;
  std::string method = "synthetic";
  std::string trace_path;
  std::string kind;
  std::string out_path;
  std::uint64_t seed = 0;
  std::uint64_t count = 100;
  bool pretty = false;
  bool negate = false;
};

int cmd_decide(const Options& o, std::ostream& out) {
  const Config pts = config_from_json(parse_json_text(read_file(o.file)));
  const bool synthetic = o.method != "oracle";
  const bool oracle = o.method != "synthetic";

  Json report;
  report["method"] = o.method;
  Json timings = Json::object();
  std::optional<Decision> d;
  if (synthetic) {
    const auto t0 = Clock::now();
    d = decide(pts, {.record_trace = !o.trace_path.empty(), .parallel = false});
    timings["synthetic"] = ms_since(t0);
    if (o.negate) d->on_quadric = !d->on_quadric;
    if (!o.trace_path.empty()) write_file(o.trace_path, dump(d->trace ? to_json(*d->trace) : to_json(Trace{}), o.pretty));
    report["decision"] = to_json(*d, o.trace_path);
  } else {
    report["decision"] = nullptr;
  }
  std::optional<bool> verdict;
  if (oracle) {
    const auto t0 = Clock::now();
    verdict = oracle_decide(pts);
    timings["oracle"] = ms_since(t0);
    report["oracle_verdict"] = *verdict;
  }
  bool agree = true;
  if (synthetic && oracle) {
    agree = d->on_quadric == *verdict;
    report["agreement"] = agree;
    if (!agree) report["config"] = config_to_json(pts);
  }
  report["timings_ms"] = timings;
  out << dump(report, o.pretty) << '\n';
  return agree ? kOk : kDisagreement;
}

int cmd_gen(const Options& o, std::ostream& out) {
  const std::string text = dump(config_to_json(make_fixture(o.kind, o.seed)), o.pretty);
  if (o.out_path.empty()) {
    out << text << '\n';
  } else {
    write_file(o.out_path, text);
  }
  return kOk;
}

int cmd_fuzz(const Options& o, std::ostream& out) {
  std::vector<Config> configs;
  configs.reserve(o.count);
  for (std::uint64_t i = 0; i < o.count; ++i) configs.push_back(fuzz_config(o.seed, i));
  const auto t0 = Clock::now();
  auto decisions = decide_batch(configs, Exec::Parallel);
  const double t_syn = ms_since(t0);
  const auto t1 = Clock::now();
  const auto verdicts = oracle_batch(configs, Exec::Parallel);
  const double t_orc = ms_since(t1);

  Json bad = Json::array();
  Json branches = Json::object();
  std::uint64_t agreements = 0;
  for (std::uint64_t i = 0; i < o.count; ++i) {
    bool v = decisions[i].on_quadric;
    if (o.negate) v = !v;
    const std::string b(to_string(decisions[i].branch));
    branches[b] = branches.value(b, 0) + 1;
    if (v == static_cast<bool>(verdicts[i])) {
      ++agreements;
    } else {
      bad.push_back(Json{{"index", i}, {"seed", mix_seed(o.seed, i)}, {"config", config_to_json(configs[i])}});
    }
  }
  Json summary{{"seed", o.seed}, {"count", o.count}, {"agreements", agreements}, {"disagreements", bad},
               {"branches", branches}, {"timings_ms", {{"synthetic", t_syn}, {"oracle", t_orc}}}};
  out << dump(summary, o.pretty) << '\n';
  return bad.empty() ? kOk : kDisagreement;
}

int cmd_replay(const Options& o, std::ostream& out) {
  const Trace t = trace_from_json(parse_json_text(read_file(o.file)));
  const ReplayReport r = replay(t);
  Json j{{"ok", r.ok}, {"checked", r.checked}};
  if (!r.ok) {
    j["first_mismatch"] = r.first_mismatch;
    j["message"] = r.message;
  }
  out << dump(j, o.pretty) << '\n';
  return r.ok ? kOk : kDisagreement;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide whether ten points of projective 3-space lie on a quadric."};
  app.require_subcommand(1);
  Options o;

  auto* decide_cmd = app.add_subcommand("decide", "Decide one configuration");
  decide_cmd->add_option("file", o.file, "Input JSON")->required();
  decide_cmd->add_option("--method", o.method)->check(CLI::IsMember({"synthetic", "oracle", "both"}));
  decide_cmd->add_option("--trace", o.trace_path, "Write the construction trace here");
  decide_cmd->add_flag("--pretty", o.pretty);
  decide_cmd->add_flag("--negate-synthetic", o.negate)->group("");

  auto* gen_cmd = app.add_subcommand("gen", "Write a deterministic fixture");
  gen_cmd->add_option("--kind", o.kind)->required();
  gen_cmd->add_option("--seed", o.seed);
  gen_cmd->add_option("--out", o.out_path);
  gen_cmd->add_flag("--pretty", o.pretty);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Compare both methods on mixed configurations");
  fuzz_cmd->add_option("--seed", o.seed);
  fuzz_cmd->add_option("--count", o.count);
  fuzz_cmd->add_flag("--pretty", o.pretty);
  fuzz_cmd->add_flag("--negate-synthetic", o.negate)->group("");

  auto* replay_cmd = app.add_subcommand("replay", "Re-execute a trace file");
  replay_cmd->add_option("file", o.file)->required();
  replay_cmd->add_flag("--pretty", o.pretty);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kMalformed;
  }

  try {
    if (decide_cmd->parsed()) return cmd_decide(o, out);
    if (gen_cmd->parsed()) return cmd_gen(o, out);
    if (fuzz_cmd->parsed()) return cmd_fuzz(o, out);
    return cmd_replay(o, out);
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMalformed;
  }
}

}  // namespace quadsyn::cli
