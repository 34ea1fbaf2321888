#include "hopfchain/absorption.hpp"
#include "hopfchain/emit.hpp"
#include "hopfchain/instances.hpp"
#include "hopfchain/shuffle.hpp"
#include "hopfchain/spectral.hpp"
#include "hopfchain/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using namespace hopfchain;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kOutDirEnv = "HOPFCHAIN_OUT_DIR";

struct RunConfig {
  std::string command;
  std::string instance = "rock";
  int n = 0;
  std::vector<int> nu;
  int degree = 0;
  int a = 2;
  int steps = 10;
  int runs = 1;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  std::string start;
  std::string graph_file;
  std::string complex_file;
  std::string direction = "inverse";
  std::string side = "both";
  bool check = false;
  std::string table = "gsr";
  std::string q = "1";
  std::vector<int> criteria;
};

json config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  if (c.command == "verify") {
    j["criteria"] = c.criteria;
    return j;
  }
  if (c.command != "shuffle") j["instance"] = c.instance;
  j["n"] = c.n;
  if (!c.nu.empty()) j["nu"] = c.nu;
  if (c.degree) j["degree"] = c.degree;
  j["a"] = c.a;
  if (c.command == "matrix") j["direction"] = c.direction;
  if (c.command == "eigen") {
    j["side"] = c.side;
    j["check"] = c.check;
  }
  if (c.command == "simulate" || c.command == "distance" || c.command == "absorb") {
    j["steps"] = c.steps;
    if (!c.start.empty()) j["start"] = c.start;
    if (!c.graph_file.empty()) j["graph"] = c.graph_file;
    if (!c.complex_file.empty()) j["complex"] = c.complex_file;
  }
  if (c.command == "simulate") {
    j["runs"] = c.runs;
    j["seed"] = c.seed;
  }
  if (c.command == "shuffle") {
    j["table"] = c.table;
    if (c.table == "q") j["q"] = c.q;
  }
  j["format"] = c.format;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::invalid_input, "cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::unique_ptr<HopfInstance> build_instance(const RunConfig& c) {
  if (c.n < 0) fail(ErrorCode::invalid_input, "n must be nonnegative");
  if (c.a < 1) fail(ErrorCode::invalid_input, "a must be at least 1");
  int degree = std::max(c.n, c.degree);
  return make_instance(c.instance, degree, c.nu);
}

Element start_state(const HopfInstance& h, const RunConfig& c) {
  Element b;
  if (!c.graph_file.empty()) {
    Graph g = parse_edge_list(read_file(c.graph_file));
    if (auto* gi = dynamic_cast<const GraphInstance*>(&h)) b = gi->from_graph(g);
    else if (auto* li = dynamic_cast<const LabeledGraphInstance*>(&h)) b = li->factorize(g);
    else fail(ErrorCode::invalid_input, "--graph needs a graph instance");
  } else if (!c.complex_file.empty()) {
    auto* si = dynamic_cast<const SimplicialInstance*>(&h);
    if (!si) fail(ErrorCode::invalid_input, "--complex needs the simplicial instance");
    b = si->from_complex(parse_faces(read_file(c.complex_file)));
  } else if (!c.start.empty()) {
    b = h.parse_element(c.start);
  } else if (auto* deck = dynamic_cast<const FreeAssocInstance*>(&h); deck && !deck->nu().empty()) {
    std::vector<int> w;
    for (std::size_t i = 0; i < deck->nu().size(); ++i)
      for (int k = 0; k < deck->nu()[i]; ++k) w.push_back(static_cast<int>(i) + 1);
    b = word_element(w);
  } else {
    auto gens = h.generators(c.n);
    if (gens.empty()) fail(ErrorCode::invalid_input, "no generator of degree " + std::to_string(c.n) + "; pass --start");
    b = Element{gens.back()};
  }
  if (b.degree() != c.n)
    fail(ErrorCode::invalid_input, "start state " + h.element_label(b) + " has degree " +
                                       std::to_string(b.degree()) + ", expected " + std::to_string(c.n));
  return b;
}

std::string csv_header(const RunConfig& c) {
  return "# hopfchain " + library_version() + "\n# config " + config_json(c).dump() + "\n";
}

json wrap(const RunConfig& c, json result) {
  json j;
  j["version"] = library_version();
  j["config"] = config_json(c);
  j["result"] = std::move(result);
  return j;
}

std::string emit(const RunConfig& c, const std::string& csv_body, const json& result) {
  if (c.format == "json") return wrap(c, result).dump(2) + "\n";
  return csv_header(c) + csv_body;
}

std::string opt_text(const std::optional<Rational>& r) { return r ? to_string(*r) : "undefined"; }

std::string cmd_matrix(const RunConfig& c) {
  auto h = build_instance(c);
  TransitionMatrix k = transition_matrix(*h, c.n, c.a);
  if (c.direction == "forward") k = transpose(k);
  return emit(c, matrix_csv(*h, k), matrix_json(*h, k));
}

struct Status {
  int code = 0;
};

std::string cmd_eigen(const RunConfig& c, Status& st) {
  auto h = build_instance(c);
  EigenSystem sys = eigensystem(*h, c.n);
  bool cert = duality_certificate(sys);
  if (!cert) st.code = 5;
  json j = eigen_json(*h, sys, cert);
  std::string csv;
  if (c.side != "right") csv += eigen_csv(*h, sys, Side::left);
  if (c.side == "right") csv += eigen_csv(*h, sys, Side::right);
  else if (c.side == "both") {
    std::string right = eigen_csv(*h, sys, Side::right);
    csv += right.substr(right.find('\n') + 1);
  }
  if (c.side == "left") j.erase("right");
  if (c.side == "right") j.erase("left");
  csv += "# certificate " + std::string(cert ? "pass" : "fail") + "\n";
  if (c.check) {
    EigenCheckReport r = eigen_equation_check(transition_matrix(*h, c.n, c.a), sys);
    if (!r.ok) st.code = 5;
    j["eigen_check"] = {{"a", c.a}, {"ok", r.ok}, {"failures", r.failures}};
    csv += "# eigen-check a=" + std::to_string(c.a) + " " + (r.ok ? "pass" : "fail") + "\n";
  }
  return emit(c, csv, j);
}

std::string cmd_simulate(const RunConfig& c) {
  auto h = build_instance(c);
  Element b = start_state(*h, c);
  std::string csv = "run,step,state\n";
  json runs = json::array();
  for (int r = 0; r < c.runs; ++r) {
    auto path = simulate(*h, c.n, c.a, b, c.steps, c.seed, static_cast<std::uint64_t>(r));
    json p = json::array();
    for (std::size_t t = 0; t < path.size(); ++t) {
      std::string label = h->element_label(path[t]);
      csv += std::to_string(r) + "," + std::to_string(t) + "," + label + "\n";
      p.push_back(label);
    }
    runs.push_back(p);
  }
  return emit(c, csv, json{{"trajectories", runs}});
}

std::string cmd_distance(const RunConfig& c) {
  auto h = build_instance(c);
  Element b = start_state(*h, c);
  StationarySet s = stationary_set(*h, c.n);
  const Distribution* pi = nullptr;
  for (const Distribution& d : s.stationary)
    if (!d.empty() && h->grading(d.begin()->first) == h->grading(b)) {
      pi = &d;
      break;
    }
  if (!pi) fail(ErrorCode::not_applicable, "no stationary distribution for " + h->element_label(b));
  std::string csv = "step,tv,sep,linf\n";
  json rows = json::array();
  Distribution d{{b, Rational(1)}};
  std::map<Element, Vec> cache;
  for (int t = 0; t <= c.steps; ++t) {
    if (t > 0) {
      Distribution next;
      for (const auto& [x, p] : d) {
        auto it = cache.find(x);
        if (it == cache.end()) it = cache.emplace(x, transition_row(*h, x, c.a)).first;
        for (const auto& [y, v] : it->second) next[y] += p * v;
      }
      d = std::move(next);
    }
    Distances dist = distances(d, *pi);
    csv += std::to_string(t) + "," + to_string(dist.tv) + "," + opt_text(dist.sep) + "," + opt_text(dist.linf) + "\n";
    rows.push_back({{"step", t}, {"tv", to_string(dist.tv)}, {"sep", opt_text(dist.sep)}, {"linf", opt_text(dist.linf)}});
  }
  return emit(c, csv, json{{"distances", rows}});
}

std::string cmd_absorb(const RunConfig& c) {
  auto h = build_instance(c);
  Element b = start_state(*h, c);
  CharacterSpec spec;
  for (GenId g : h->generators(1)) spec.C.insert(g);
  QuasisymFunction chi = chromatic_quasisym(*h, b, spec);
  std::string csv = "step,absorbed\n";
  json curve = json::array();
  Integer a_k = 1;
  for (int k = 0; k <= c.steps; ++k) {
    if (!a_k.fits_sint_p()) fail(ErrorCode::unsupported_size, "a^k is too large at step " + std::to_string(k));
    Rational p = chi.evaluate_constant(make_rational(1, a_k), static_cast<int>(a_k.get_si()));
    csv += std::to_string(k) + "," + to_string(p) + "\n";
    curve.push_back({{"step", k}, {"absorbed", to_string(p)}});
    a_k *= c.a;
  }
  return emit(c, csv, json{{"start", h->element_label(b)}, {"chi", quasisym_json(chi)}, {"curve", curve}});
}

std::string perm_text(const Perm& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "." : "") + std::to_string(w[i]);
  return s;
}

std::string cmd_shuffle(const RunConfig& c) {
  if (c.n < 1) fail(ErrorCode::invalid_input, "n must be positive");
  std::string csv;
  json result;
  if (c.table == "gsr") {
    if (c.n > 8) fail(ErrorCode::unsupported_size, "GSR tables are capped at n = 8");
    csv = "perm,descents,probability\n";
    json rows = json::array();
    for (const Perm& w : all_permutations(c.n)) {
      Rational p = gsr_probability(c.n, c.a, w);
      csv += perm_text(w) + "," + std::to_string(descents(w)) + "," + to_string(p) + "\n";
      rows.push_back({{"perm", perm_text(w)}, {"descents", descents(w)}, {"probability", to_string(p)}});
    }
    result["table"] = rows;
  } else if (c.table == "q") {
    Rational q = parse_rational(c.q);
    csv = "perm,inversions,rising_sequences,probability\n";
    json rows = json::array();
    for (const Perm& w : all_permutations(c.n)) {
      Rational p = q_shuffle_probability(c.n, q, w);
      csv += perm_text(w) + "," + std::to_string(inversions(w)) + "," + std::to_string(rising_sequences(w)) + "," +
             to_string(p) + "\n";
      rows.push_back({{"perm", perm_text(w)}, {"inversions", inversions(w)}, {"probability", to_string(p)}});
    }
    result["normalizer"] = to_string(q_shuffle_normalizer(c.n, q));
    result["table"] = rows;
  } else if (c.table == "named") {
    std::vector<int> nu = c.nu.empty() ? std::vector<int>(static_cast<std::size_t>(c.n), 1) : c.nu;
    FreeAssocInstance deck(nu);
    auto words = deck.basis(deck.working_degree());
    csv = "name,exponent";
    for (const Element& w : words) csv += "," + deck.element_label(w);
    csv += "\n";
    json fns = json::array();
    for (const auto& f : named_eigenfunctions(nu, c.a)) {
      csv += f.name + "," + std::to_string(f.exponent);
      json vals = json::array();
      for (const Rational& v : f.values) {
        csv += "," + to_string(v);
        vals.push_back(to_string(v));
      }
      csv += "\n";
      fns.push_back({{"name", f.name}, {"exponent", f.exponent}, {"values", vals}});
    }
    json basis = json::array();
    for (const Element& w : words) basis.push_back(deck.element_label(w));
    result["basis"] = basis;
    result["functions"] = fns;
  } else {
    fail(ErrorCode::invalid_input, "unknown table '" + c.table + "'");
  }
  return emit(c, csv, result);
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_input:
    case ErrorCode::not_applicable:
    case ErrorCode::not_supported: return 2;
    case ErrorCode::no_markov_rescaling:
    case ErrorCode::not_nonnegative: return 3;
    case ErrorCode::unsupported_size: return 4;
    case ErrorCode::internal_inconsistency: return 5;
  }
  return 5;
}

std::string default_name(const RunConfig& c) {
  std::string base = c.command;
  if (c.command != "shuffle") base += "-" + c.instance;
  else base += "-" + c.table;
  base += "-n" + std::to_string(c.n) + "-a" + std::to_string(c.a);
  return base + "." + c.format;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

ProbeResult in_process(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str() + err.str()};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Markov chains from Hopf power maps"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);

  auto add_common = [&c](CLI::App* s) {
    s->add_option("--instance", c.instance, "rock, quotient-sym, deck, free, graph, labeled-graph, simplicial");
    s->add_option("--n", c.n, "degree")->required();
    s->add_option("--nu", c.nu, "deck composition, e.g. 2,1,1")->delimiter(',');
    s->add_option("--degree", c.degree, "working degree (defaults to n)");
    s->add_option("--a", c.a, "power a");
    s->add_option("--format", c.format)->check(CLI::IsMember({"csv", "json"}));
    s->add_option("--out", c.out, std::string("output file (default: stdout, or a file under $") + kOutDirEnv + ")");
  };
  auto add_start = [&c](CLI::App* s) {
    s->add_option("--start", c.start, "start state label");
    s->add_option("--graph", c.graph_file, "start graph as an edge-list file");
    s->add_option("--complex", c.complex_file, "start complex as a face-list file");
    s->add_option("--steps", c.steps, "number of steps");
  };

  auto* matrix = app.add_subcommand("matrix", "transition matrix");
  add_common(matrix);
  matrix->add_option("--direction", c.direction)->check(CLI::IsMember({"inverse", "forward"}));

  auto* eigen = app.add_subcommand("eigen", "left/right eigenbases with duality certificate");
  add_common(eigen);
  eigen->add_option("--side", c.side)->check(CLI::IsMember({"left", "right", "both"}));
  eigen->add_flag("--check", c.check, "verify the eigen-equations against K_a");

  auto* sim = app.add_subcommand("simulate", "sample trajectories");
  add_common(sim);
  add_start(sim);
  sim->add_option("--seed", c.seed, "random seed")->required();
  sim->add_option("--runs", c.runs, "number of trajectories");

  auto* dist = app.add_subcommand("distance", "TV, separation and l-infinity distance by step");
  add_common(dist);
  add_start(dist);

  auto* absorb = app.add_subcommand("absorb", "chromatic quasisymmetric function and absorption curve");
  add_common(absorb);
  add_start(absorb);

  auto* shuffle = app.add_subcommand("shuffle", "GSR and q-shuffle tables, named eigenfunctions");
  add_common(shuffle);
  shuffle->add_option("--table", c.table)->check(CLI::IsMember({"gsr", "q", "named"}));
  shuffle->add_option("--q", c.q, "rational q > 0");

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--criterion", c.criteria, "criterion numbers (default: all)");

  std::vector<std::string> argv_store{"hopfchain"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << library_version() << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "hopfchain: " << e.what() << "\n";
    return 2;
  }

  for (CLI::App* s : app.get_subcommands()) c.command = s->get_name();
  try {
    Status st;
    std::string text;
    if (c.command == "verify") {
      std::vector<int> ids = c.criteria;
      if (ids.empty())
        for (int i = 1; i <= kCriterionCount; ++i) ids.push_back(i);
      bool all = true;
      for (int id : ids) {
        CriterionResult r = run_criterion(id, in_process);
        all = all && r.pass;
        out << format_result(r) << "\n" << std::flush;
      }
      return all ? 0 : 5;
    }
    if (c.command == "matrix") text = cmd_matrix(c);
    else if (c.command == "eigen") text = cmd_eigen(c, st);
    else if (c.command == "simulate") text = cmd_simulate(c);
    else if (c.command == "distance") text = cmd_distance(c);
    else if (c.command == "absorb") text = cmd_absorb(c);
    else if (c.command == "shuffle") text = cmd_shuffle(c);

    std::string path = c.out;
    if (path.empty())
      if (const char* dir = std::getenv(kOutDirEnv); dir && *dir)
        path = (std::filesystem::path(dir) / default_name(c)).string();
    if (path.empty()) {
      out << text;
    } else {
      std::ofstream f(path, std::ios::binary);
      if (!f) fail(ErrorCode::invalid_input, "cannot write " + path);
      f << text;
      err << "wrote " << path << "\n";
    }
    return st.code;
  } catch (const HopfError& e) {
    err << "hopfchain: error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "hopfchain: internal error: " << e.what() << "\n";
    return 5;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}
