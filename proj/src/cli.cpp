#include "ila/cli.hpp"

#include <chrono>
#include <cstdio>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "ila/elman.hpp"
#include "ila/error.hpp"
#include "ila/eval.hpp"
#include "ila/io.hpp"
#include "ila/ipta.hpp"
#include "ila/merger.hpp"
#include "ila/tomita.hpp"

namespace ila {

namespace {

constexpr int kExitError = 1;
constexpr int kExitIncoherent = 2;

struct Options {
  // gen
  std::string lang;
  std::string weights;
  std::string inputs;
  std::size_t n = 1000;
  std::size_t max_len = 20;
  double noise = 0.0;
  std::uint64_t seed = 0;
  std::int64_t grid = LetterDistribution{}.grid;
  std::string out;
  // learn / check
  std::string traces;
  std::string partition;
  std::optional<double> threshold;
  std::optional<std::size_t> max_merges;
  bool ipta_only = false;
  // eval / export-dot
  std::string ila;
  std::string report;
  bool detail = false;
  bool balance = false;
  std::size_t jobs = 1;
};

std::string pct(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

/// Records what a command did next to its main output.
class Manifest {
public:
  Manifest(std::string command, const std::vector<std::string>& args)
      : start_(std::chrono::steady_clock::now()) {
    j_["tool"] = "ila";
    j_["version"] = kVersion;
    j_["command"] = std::move(command);
    j_["args"] = args;
    j_["flags"] = Json::object();
    j_["inputs"] = Json::array();
    j_["outputs"] = Json::array();
  }

  void flags(const CLI::App& sub) {
    for (const CLI::Option* opt : sub.get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help")
        continue;
      const auto& res = opt->results();
      j_["flags"][opt->get_name()] = res.empty() ? Json(true) : Json(res.back());
    }
  }
  void seed(std::uint64_t s) { j_["seed"] = s; }
  void input(const std::string& p) { j_["inputs"].push_back(p); }
  void output(const std::string& p) { j_["outputs"].push_back(p); }

  void write(const std::string& main_output) {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    j_["duration_ms"] =
        std::chrono::duration<double, std::milli>(elapsed).count();
    write_json_file(main_output + ".manifest.json", j_);
  }

private:
  Json j_;
  std::chrono::steady_clock::time_point start_;
};

int cmd_gen(const Options& o, Manifest& m, std::ostream& out) {
  TraceSet set;
  if (!o.lang.empty()) {
    SynthConfig cfg;
    cfg.count = o.n;
    cfg.max_len = o.max_len;
    cfg.noise = o.noise;
    cfg.seed = o.seed;
    cfg.letters.grid = o.grid;
    set = gen_traces(LanguageId::parse(o.lang), cfg);
  } else {
    const ElmanWeights w = read_weights(o.weights);
    m.input(o.weights);
    m.input(o.inputs);
    const auto words = read_words(std::filesystem::path(o.inputs));
    set.dim = w.input_dim;
    set.hidden_dim = w.hidden_dim;
    set.y0_default = classify(w, std::vector<double>(w.hidden_dim, 0.0));
    for (const auto& word : words)
      set.traces.push_back(run_rnn(w, word));
  }
  m.seed(o.seed);
  write_traces(std::filesystem::path(o.out), set);
  m.output(o.out);
  m.write(o.out);
  out << "traces=" << set.traces.size() << '\n';
  return 0;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const TraceSet set = read_traces(std::filesystem::path(o.traces));
  const Partition p = read_partition(o.partition);
  if (auto c = check_coherence(set, p)) {
    err << describe(*c, set) << '\n';
    return kExitIncoherent;
  }
  out << "coherent traces=" << set.traces.size() << " classes=" << p.class_count() << '\n';
  return 0;
}

int cmd_learn(const Options& o, Manifest& m, std::ostream& out, std::ostream& err) {
  if (!o.ipta_only && !o.threshold)
    throw CLI::ValidationError("--threshold", "required unless --ipta-only is given");
  const TraceSet set = read_traces(std::filesystem::path(o.traces));
  const Partition p = read_partition(o.partition);
  m.input(o.traces);
  m.input(o.partition);
  if (auto c = check_coherence(set, p)) {
    err << describe(*c, set) << '\n';
    return kExitIncoherent;
  }
  LatticeAutomaton a = build_ipta(set, p);
  const std::size_t ipta_states = a.state_count();
  std::size_t merges = 0;
  if (!o.ipta_only) {
    if (*o.threshold > 2.0)
      err << "warning: threshold " << *o.threshold
          << " exceeds 2, every pair of states qualifies for merging\n";
    merges = merge_loop(a, MergeConfig{*o.threshold, o.max_merges});
  }
  write_automaton(o.out, a);
  m.output(o.out);
  m.write(o.out);
  out << "ipta_states=" << ipta_states << " merges=" << merges << " states=" << a.state_count()
      << " transitions=" << a.transition_count() << '\n';
  return 0;
}

int cmd_eval(const Options& o, Manifest& m, std::ostream& out) {
  const LatticeAutomaton a = read_automaton(o.ila);
  m.input(o.ila);
  const LetterDistribution letters{o.grid};

  Oracle oracle;
  std::vector<Word> words;
  if (!o.lang.empty()) {
    const LanguageId id = LanguageId::parse(o.lang);
    if (a.dim() != 1)
      throw DimensionMismatch("language oracles are one-dimensional, automaton has dimension " +
                              std::to_string(a.dim()));
    oracle = [id](const Word& w) { return member(id, w); };
    if (o.inputs.empty()) {
      auto sample = sample_words(id, o.n, o.max_len, o.seed, o.balance, letters);
      words = std::move(sample.words);
    }
  } else {
    auto w = std::make_shared<const ElmanWeights>(read_weights(o.weights));
    m.input(o.weights);
    if (w->input_dim != a.dim())
      throw DimensionMismatch("weights of input dimension " + std::to_string(w->input_dim) +
                              " for an automaton of dimension " + std::to_string(a.dim()));
    oracle = [w](const Word& word) {
      std::vector<double> h(w->hidden_dim, 0.0);
      for (const auto& x : word)
        h = elman_step(*w, x, h);
      return classify(*w, h);
    };
    if (o.inputs.empty())
      words = sample_uniform_words(w->input_dim, o.n, o.max_len, o.seed, letters);
  }
  if (!o.inputs.empty()) {
    words = read_words(std::filesystem::path(o.inputs));
    m.input(o.inputs);
  }
  m.seed(o.seed);

  const EvalReport r = evaluate(oracle, a, words, o.jobs, o.detail);
  write_json_file(o.report, report_to_json(r, a, o.detail ? &words : nullptr));
  m.output(o.report);
  m.write(o.report);
  out << "fidelity=" << pct(r.fidelity_pct()) << " type1=" << pct(r.type1_pct())
      << " type2=" << pct(r.type2_pct()) << " states=" << a.state_count() << '\n';
  return 0;
}

int cmd_export_dot(const Options& o, Manifest& m) {
  const LatticeAutomaton a = read_automaton(o.ila);
  m.input(o.ila);
  write_text_file(o.out, to_dot(a));
  m.output(o.out);
  m.write(o.out);
  return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Learn interval lattice automata from recurrent network traces", "ila"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a trace file");
  auto* lang = gen->add_option("--lang", o.lang, "tomita:K or tomita2:K");
  auto* weights = gen->add_option("--weights", o.weights, "Elman weights file")->check(CLI::ExistingFile);
  auto* inputs = gen->add_option("--inputs", o.inputs, "Word file to run the network on")
                     ->check(CLI::ExistingFile);
  lang->excludes(weights)->excludes(inputs);
  weights->needs(inputs);
  inputs->needs(weights);
  gen->add_option("--n", o.n, "Number of traces");
  gen->add_option("--max-len", o.max_len, "Maximum word length")->check(CLI::PositiveNumber);
  gen->add_option("--noise", o.noise, "Hidden-state noise sigma")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", o.seed, "Random seed");
  gen->add_option("--grid", o.grid, "Letters are multiples of 1/grid")->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out, "Output trace file")->required();

  auto* learn = app.add_subcommand("learn", "Build the prefix tree and merge states");
  learn->add_option("--traces", o.traces)->required()->check(CLI::ExistingFile);
  learn->add_option("--partition", o.partition)->required()->check(CLI::ExistingFile);
  learn->add_option("--threshold", o.threshold, "Merge pairs scoring below this value")
      ->check(CLI::NonNegativeNumber);
  learn->add_option("--max-merges", o.max_merges);
  learn->add_flag("--ipta-only", o.ipta_only, "Skip the merging phase");
  learn->add_option("--out", o.out)->required();

  auto* eval = app.add_subcommand("eval", "Measure fidelity against an oracle");
  eval->add_option("--ila", o.ila)->required()->check(CLI::ExistingFile);
  auto* elang = eval->add_option("--lang", o.lang, "tomita:K or tomita2:K");
  auto* eweights = eval->add_option("--weights", o.weights)->check(CLI::ExistingFile);
  elang->excludes(eweights);
  eval->add_option("--inputs", o.inputs, "Evaluate on these words instead of sampling")
      ->check(CLI::ExistingFile);
  eval->add_option("--n", o.n)->check(CLI::PositiveNumber);
  eval->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
  eval->add_option("--seed", o.seed);
  eval->add_option("--grid", o.grid)->check(CLI::PositiveNumber);
  eval->add_flag("--balance", o.balance, "Aim for at least 25% members among sampled words");
  eval->add_flag("--detail", o.detail, "Add per-word disagreements to the report");
  eval->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);
  eval->add_option("--report", o.report)->required();

  auto* dot = app.add_subcommand("export-dot", "Render an automaton as Graphviz");
  dot->add_option("--ila", o.ila)->required()->check(CLI::ExistingFile);
  dot->add_option("--out", o.out)->required();

  auto* check = app.add_subcommand("check", "Check trace coherence against a partition");
  check->add_option("--traces", o.traces)->required()->check(CLI::ExistingFile);
  check->add_option("--partition", o.partition)->required()->check(CLI::ExistingFile);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (gen->parsed() && o.lang.empty() && o.weights.empty())
      throw CLI::RequiredError("gen needs --lang or --weights/--inputs");
    if (eval->parsed() && o.lang.empty() && o.weights.empty())
      throw CLI::RequiredError("eval needs an oracle: --lang or --weights");
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const auto run = [&](CLI::App* sub, auto&& body) {
    Manifest m(sub->get_name(), args);
    m.flags(*sub);
    return body(m);
  };
  try {
    if (gen->parsed())
      return run(gen, [&](Manifest& m) { return cmd_gen(o, m, out); });
    if (learn->parsed())
      return run(learn, [&](Manifest& m) { return cmd_learn(o, m, out, err); });
    if (eval->parsed())
      return run(eval, [&](Manifest& m) { return cmd_eval(o, m, out); });
    if (dot->parsed())
      return run(dot, [&](Manifest& m) { return cmd_export_dot(o, m); });
    if (check->parsed())
      return cmd_check(o, out, err);
  } catch (const CoherenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIncoherent;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

} // namespace ila
