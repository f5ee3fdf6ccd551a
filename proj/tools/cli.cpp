#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chromaspec/errors.hpp"
#include "chromaspec/graph6.hpp"
#include "chromaspec/graph_props.hpp"
#include "chromaspec/serialization.hpp"

namespace chromaspec::cli {
namespace {

struct RunConfig {
  std::string q;
  int n = -1;
  std::string cls = "all";
  std::string format = "json";
  std::string output;
  std::string input;
  unsigned threads = 0;
  std::string regime;
  unsigned m = 0;
  bool audit = false;
  bool exhaustive = false;
  bool values = false;
  std::string word;
  std::string seed = "K2";
  int n_max = 7;
  int k_max = 4;
  std::string lemma;
  std::size_t instances = 200;
  std::uint64_t rng_seed = VerifyOptions{}.seed;
};

Scalar parse_q(const RunConfig& c) { return Scalar::parse(c.q); }

RegimeOverride parse_override(const RunConfig& c) {
  RegimeOverride o;
  if (!c.regime.empty()) o.kind = parse_regime_kind(c.regime);
  if (c.m > 0) o.m = c.m;
  return o;
}

// Writes to --output when given, otherwise to the command's stream.
void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(c.output, std::ios::trunc);
  if (!file) throw DomainError("cannot write " + c.output);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join_values(const std::vector<Scalar>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? " " : "") + values[i].to_string();
  return out;
}

// Loads the persisted chromatic cache on construction and saves it on success.
class PersistedCache {
 public:
  PersistedCache() {
    const char* dir = std::getenv("CHROMASPEC_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return;
    path_ = std::filesystem::path(dir) / "chromatic-cache.v1";
    if (std::filesystem::exists(*path_)) default_engine().cache().load(*path_);
  }
  void save() const {
    if (!path_) return;
    std::filesystem::create_directories(path_->parent_path());
    default_engine().cache().save(*path_);
  }

 private:
  std::optional<std::filesystem::path> path_;
};

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
  const Scalar q = parse_q(c);
  const GraphClass cls = parse_graph_class(c.cls);
  Spectrum s;
  if (!c.input.empty()) {
    std::ifstream in(c.input);
    if (!in) throw DomainError("cannot read " + c.input);
    const auto graphs = read_graph6_lines(in);
    int n = c.n;
    if (n < 0) n = graphs.empty() ? 0 : graphs.front().order();
    s = compute_spectrum(graphs, n, q, cls, default_engine(), c.threads);
  } else {
    if (c.n < 0) throw DomainError("spectrum needs --n or --input");
    SpectrumEnumerator enumerator(default_engine(), c.threads);
    s = enumerator.spectrum(c.n, q, cls);
  }
  if (c.format == "json") {
    emit(c, out, dump(to_json(s)));
  } else if (c.format == "csv") {
    emit(c, out, std::string(kSpectrumCsvHeader) + "\n" + spectrum_csv_row(s) + "\n");
  } else {
    std::ostringstream text;
    text << "q = " << s.q << ", n = " << s.n << ", class = " << to_string(s.cls) << "\n"
         << "count = " << s.values.size() << "\n"
         << "values = " << join_values(s.values) << "\n";
    emit(c, out, text.str());
  }
  return kOk;
}

int cmd_census(const RunConfig& c, std::ostream& out) {
  if (c.n < 0) throw DomainError("census needs --n");
  const GraphCensus census = enumerate_census(c.n, parse_graph_class(c.cls));
  std::ostringstream text;
  write_graph6_lines(text, census.graphs);
  emit(c, out, text.str());
  return kOk;
}

std::string certificate_text(const Certificate& cert) {
  const Regime& r = cert.regime;
  std::ostringstream text;
  text << "regime " << to_string(r.kind) << " at q = " << r.q;
  if (r.m > 0) text << " (m = " << r.m << ")";
  text << "\nseed " << to_string(r.seed) << ", K = " << r.k_name << ", L = " << r.l_name << "\n"
       << "I = " << r.i_target << ", J = " << r.j_target << ", base ratio = " << cert.base_ratio << "\n";
  for (const auto& check : cert.checks) {
    text << (check.passed ? "  pass  " : "  FAIL  ") << check.name << "  " << check.detail << "\n";
  }
  text << (cert.certified ? "certified" : "not certified: " + cert.failure()) << "\n";
  return text.str();
}

int cmd_certify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const Scalar q = parse_q(c);
  const RegimeOverride override = parse_override(c);
  Certificate cert;
  if (override.kind) {
    const bool search_m = (*override.kind == RegimeKind::Case1 || *override.kind == RegimeKind::Case2) && !override.m;
    try {
      cert = pingpong_certify(regime_for(q, override));
    } catch (const CertificationError&) {
      try {
        cert = pingpong_certify(make_regime(*override.kind, q, search_m ? 0 : override.m.value_or(0)));
      } catch (const DomainError& e) {
        err << "certification failed: regime " << to_string(*override.kind) << " does not apply at q = " << q << ": "
            << e.what() << "\n";
        return kMathFailure;
      }
    }
  } else {
    cert = certify(q);
  }
  emit(c, out, c.format == "json" ? dump(to_json(cert)) : certificate_text(cert));
  if (!cert.certified) {
    err << "certification failed: " << cert.failure() << "\n";
    return kMathFailure;
  }
  return kOk;
}

int cmd_lowerbound(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.n < 0) throw DomainError("lowerbound needs --n");
  const Scalar q = parse_q(c);
  ConstructiveOptions options;
  options.threads = c.threads;
  options.audit = c.audit;
  const Regime regime = regime_for(q, parse_override(c));
  const ConstructiveReport report = distinct_witness_values(c.n, regime, options);
  bool passed = report.counts_match && report.sqrt_bound_holds && (!report.audited || report.audit_passed);

  Json j = to_json(report, c.values);
  if (c.exhaustive) {
    LowerBoundOptions lb;
    lb.constructive = options;
    lb.regime = parse_override(c);
    const LowerBoundAudit audit = lower_bound_audit(c.n, q, lb);
    j["exhaustive_audit"] = to_json(audit);
    passed = passed && audit.passed;
    j["passed"] = passed;
  }
  if (c.format == "json") {
    emit(c, out, dump(j));
  } else {
    std::ostringstream text;
    text << "regime " << to_string(regime.kind) << " at q = " << q << ", n = " << c.n << "\n"
         << "words = " << report.plan.words.size() << " (expected " << report.plan.expected_count << ")"
         << ", padding = " << report.plan.padding << "\n"
         << "ratios pairwise distinct\n"
         << "values = " << report.values.size() << ", bound = sqrt(" << report.plan.words.size() << ")"
         << (report.sqrt_bound_holds ? " met" : " NOT met") << "\n";
    if (report.audited) text << "audit " << (report.audit_passed ? "passed" : "FAILED") << "\n";
    if (c.exhaustive) text << "exhaustive audit " << (j["exhaustive_audit"]["passed"].get<bool>() ? "passed" : "FAILED") << "\n";
    if (c.values) text << join_values(report.values) << "\n";
    emit(c, out, text.str());
  }
  if (!passed) {
    err << "lower bound audit failed\n";
    return kMathFailure;
  }
  return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.instances = c.instances;
  options.seed = c.rng_seed;
  options.n_max = c.n_max;
  options.k_max = c.k_max;
  options.lemma = c.lemma;
  const auto results = run_verify(options);
  bool passed = true;
  for (const auto& r : results) passed = passed && r.passed();
  if (c.format == "json") {
    emit(c, out, dump(to_json(results)));
  } else {
    std::ostringstream text;
    for (const auto& r : results) {
      text << std::left << std::setw(22) << r.name << std::right << std::setw(6) << r.instances << "  "
           << (r.passed() ? "pass" : "FAIL " + r.first_failure) << "\n";
    }
    emit(c, out, text.str());
  }
  if (!passed) {
    err << "failing lemmas:";
    for (const auto& r : results) {
      if (!r.passed()) err << " " << r.name;
    }
    err << "\n";
    return kMathFailure;
  }
  return kOk;
}

int cmd_witness(const RunConfig& c, std::ostream& out) {
  const Scalar q = parse_q(c);
  const Word word = parse_word(c.word);
  const Witness w = apply_word_graph(word, seed_witness(parse_seed(c.seed)));
  const Vec2 feasible = feasible_vector(w, -q);
  const Vec2 attainable = attainable_vector(w, q);
  Json j{{"seed", c.seed},
         {"word", word_to_string(word)},
         {"q", q.to_string()},
         {"n", w.graph.order()},
         {"witness", to_json(w)},
         {"planar", is_planar(w.graph)},
         {"feasible_vector", to_json(feasible)},
         {"attainable_vector", to_json(attainable)},
         {"ratio", attainable.y.is_zero() ? Json(nullptr) : Json(ratio(attainable).to_string())}};
  if (c.format == "json") {
    emit(c, out, dump(j));
  } else {
    std::ostringstream text;
    text << "graph6 " << j["witness"]["graph6"].get<std::string>() << ", edge (" << w.edge.a << "," << w.edge.b << ")\n"
         << "n = " << w.graph.order() << ", planar = " << (j["planar"].get<bool>() ? "yes" : "no") << "\n"
         << "feasible at lambda = " << -q << ": " << feasible << "\n"
         << "attainable at q = " << q << ": " << attainable << "\n"
         << "ratio = " << (j["ratio"].is_null() ? "undefined" : j["ratio"].get<std::string>()) << "\n";
    emit(c, out, text.str());
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Chromatic polynomial evaluation spectra and ping-pong certificates", "chromaspec"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"json", "csv", "text"});
  const auto formats_no_csv = CLI::IsMember({"json", "text"});

  auto* spectrum = app.add_subcommand("spectrum", "Exhaustive spectrum over a census or a graph6 file");
  spectrum->add_option("--n", c.n, "Vertex count (at most 8)");
  spectrum->add_option("--q", c.q, "Evaluation point, e.g. -1, 3/2 or 3/2+1/2*sqrt(5)")->required();
  spectrum->add_option("--class", c.cls, "all, planar, connected or planar-connected");
  spectrum->add_option("--format", c.format)->check(formats);
  spectrum->add_option("--output", c.output);
  spectrum->add_option("--input", c.input, "graph6 file to evaluate instead of the census");
  spectrum->add_option("--threads", c.threads);

  auto* census = app.add_subcommand("census", "Write the census as graph6 lines");
  census->add_option("--n", c.n)->required();
  census->add_option("--class", c.cls);
  census->add_option("--output", c.output);

  auto* certify_cmd = app.add_subcommand("certify", "Certify the ping-pong regime at q");
  certify_cmd->add_option("--q", c.q)->required();
  certify_cmd->add_option("--regime", c.regime);
  certify_cmd->add_option("--m", c.m);
  certify_cmd->add_option("--format", c.format)->check(formats_no_csv);
  certify_cmd->add_option("--output", c.output);

  auto* lowerbound = app.add_subcommand("lowerbound", "Constructive lower bound from certified witnesses");
  lowerbound->add_option("--n", c.n)->required();
  lowerbound->add_option("--q", c.q)->required();
  lowerbound->add_option("--regime", c.regime);
  lowerbound->add_option("--m", c.m);
  lowerbound->add_flag("--audit", c.audit, "Recompute every witness at graph level");
  lowerbound->add_flag("--exhaustive", c.exhaustive, "Compare with the exhaustive planar spectrum (n <= 8)");
  lowerbound->add_flag("--values", c.values, "Include the value set");
  lowerbound->add_option("--threads", c.threads);
  lowerbound->add_option("--format", c.format)->check(formats_no_csv);
  lowerbound->add_option("--output", c.output);

  auto* verify = app.add_subcommand("verify", "Randomized identity suite");
  verify->add_option("--n-max", c.n_max);
  verify->add_option("--k-max", c.k_max);
  verify->add_option("--lemma", c.lemma)->check(CLI::IsMember(lemma_names()));
  verify->add_option("--instances", c.instances);
  verify->add_option("--seed", c.rng_seed);
  verify->add_option("--format", c.format)->check(formats_no_csv);
  verify->add_option("--output", c.output);

  auto* witness = app.add_subcommand("witness", "Apply a word to a seed and print its vectors");
  witness->add_option("--word", c.word, "Letters S, B and D = SS");
  witness->add_option("--seed", c.seed)->check(CLI::IsMember({"K2", "K3", "K4"}));
  witness->add_option("--q", c.q)->required();
  witness->add_option("--format", c.format)->check(formats_no_csv);
  witness->add_option("--output", c.output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    PersistedCache cache;
    int code = kOk;
    if (spectrum->parsed()) code = cmd_spectrum(c, out);
    else if (census->parsed()) code = cmd_census(c, out);
    else if (certify_cmd->parsed()) code = cmd_certify(c, out, err);
    else if (lowerbound->parsed()) code = cmd_lowerbound(c, out, err);
    else if (verify->parsed()) code = cmd_verify(c, out, err);
    else if (witness->parsed()) code = cmd_witness(c, out);
    cache.save();
    return code;
  } catch (const GuardError& e) {
    err << "guard: " << e.what() << "\n";
    return kGuard;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CertificationError& e) {
    err << "certification: " << e.what() << "\n";
    return kMathFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  }
}

}  // namespace chromaspec::cli
