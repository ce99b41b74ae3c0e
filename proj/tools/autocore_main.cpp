// Command-line front end: core and CS-core enumeration, hardness and MAS
// analysis, membership classification, DOT export, the invariant checker,
// and the oracle equivalence runner.

#include <CLI11.hpp>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "autocore/cores.hpp"
#include "autocore/oracle.hpp"
#include "autocore/parser.hpp"
#include "autocore/report.hpp"

namespace fs = std::filesystem;
using namespace autocore;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFindings = 1;
constexpr int kExitUsage = 2;

struct Options {
  SearchBounds bounds;
  std::string json_out;  // empty = no JSON, "-" = stdout
  bool allow_open = false;
  double tolerance = 1e-9;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

ReactionNetwork load_network(const std::string& path, const Options& opt, std::string* bytes_out) {
  std::string bytes = read_file(path);
  if (bytes_out) *bytes_out = bytes;
  return parse_reactions(bytes, opt.allow_open);
}

void emit(const Options& opt, const Json& doc, const std::string& text) {
  if (!opt.json_out.empty())
    write_output(opt.json_out, emit_json(doc));
  else
    std::cout << text;
}

std::string describe_core(const ReactionNetwork& rn, const CoreReport& rep) {
  std::string s = "({" + join(entity_names(rn, rep.sub.entities), ",") + "}, {" +
                  join(reaction_names(rn, rep.sub.reactions), ",") + "})";
  s += " kind=" + core_kind_str(rep.kind);
  std::vector<std::string> w;
  for (const Rat& v : rep.witness) w.push_back(rat_str(v));
  s += " witness=(" + join(w, ",") + ")";
  return s;
}

int run_cores(const std::string& file, const Options& opt, bool cs_mode) {
  std::string bytes;
  ReactionNetwork rn = load_network(file, opt, &bytes);
  CoreList list = cs_mode ? enumerate_cs_cores(rn, opt.bounds) : enumerate_autocatalytic_cores(rn, opt.bounds);

  Json doc = document_skeleton(cs_mode ? "cs-cores" : "cores", bytes, rn, opt.bounds);
  Json arr = Json::array();
  for (const CoreReport& rep : list.items) arr.push_back(core_report_json(rn, rep));
  doc[cs_mode ? "cs_cores" : "cores"] = arr;
  doc["complete"] = list.complete;

  std::string text = cs_mode ? "cs-cores: " : "cores: ";
  text += std::to_string(list.items.size()) + (list.complete ? "" : " (incomplete)") + "\n";
  for (const CoreReport& rep : list.items) text += "  " + describe_core(rn, rep) + "\n";
  emit(opt, doc, text);
  return list.complete ? kExitOk : kExitFindings;
}

int run_hard(const std::string& file, const Options& opt) {
  std::string bytes;
  ReactionNetwork rn = load_network(file, opt, &bytes);
  CoreList cores = enumerate_autocatalytic_cores(rn, opt.bounds);

  Json doc = document_skeleton("hard", bytes, rn, opt.bounds);
  Json arr = Json::array();
  std::string text;
  bool complete = cores.complete;
  for (const CoreReport& rep : cores.items) {
    HardnessReport h = hardness(rn, rep, opt.bounds);
    complete = complete && h.complete;
    Json j = core_report_json(rn, rep);
    j["hard"] = h.hard;
    j["drainable_criterion_hard"] = h.drainable_criterion_hard;
    Json extras = Json::array();
    for (const CoreReport& e : h.extras) extras.push_back(core_report_json(h.extension, e));
    j["extension_extras"] = extras;
    arr.push_back(j);
    text += describe_core(rn, rep) + " hard=" + (h.hard ? "yes" : "no") +
            " drainable-criterion=" + (h.drainable_criterion_hard ? "yes" : "no") +
            " extras=" + std::to_string(h.extras.size()) + "\n";
    for (const CoreReport& e : h.extras) text += "  extra " + describe_core(h.extension, e) + "\n";
  }
  doc["cores"] = arr;
  doc["complete"] = complete;
  emit(opt, doc, text);
  return complete ? kExitOk : kExitFindings;
}

int run_mas(const std::string& file, const Options& opt) {
  std::string bytes;
  ReactionNetwork rn = load_network(file, opt, &bytes);
  MasResult mas = enumerate_mas(rn, opt.bounds);

  Json doc = document_skeleton("mas", bytes, rn, opt.bounds);
  doc["mas"] = mas_json(rn, mas);
  doc["complete"] = mas.complete;

  std::string text = "mas: " + std::to_string(mas.items.size()) + (mas.complete ? "" : " (incomplete)") + "\n";
  for (const MasEntry& e : mas.items)
    text += "  ({" + join(reaction_names(rn, e.reactions), ",") + "} on {" +
            join(entity_names(rn, e.entities), ",") + "})\n";
  emit(opt, doc, text);
  return mas.complete ? kExitOk : kExitFindings;
}

ChildSelection parse_kappa(const ReactionNetwork& rn, const std::string& spec) {
  ChildSelection cs;
  std::vector<int> xs, rs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw Error("--kappa expects x=r pairs separated by commas");
    std::string xn = item.substr(0, eq), rname = item.substr(eq + 1);
    int x = rn.entity_index(xn);
    int r = rn.reaction_index(rname);
    if (x < 0) throw Error("unknown entity '" + xn + "' in --kappa");
    if (r < 0) throw Error("unknown reaction '" + rname + "' in --kappa");
    cs.kappa[x] = r;
    xs.push_back(x);
    rs.push_back(r);
  }
  cs.sub = make_sub(xs, rs);
  check_child_selection(rn, cs);
  return cs;
}

int run_classify(const std::string& file, const std::string& kappa_spec, const Options& opt) {
  std::string bytes;
  ReactionNetwork rn = load_network(file, opt, &bytes);
  ChildSelection cs = parse_kappa(rn, kappa_spec);

  RatMatrix m = cs_matrix(cs, rn);
  SemipositivityCertificate cert = is_semipositive(m);
  MembershipReport rep = membership_report(rn, cs, opt.bounds);
  KoenigGraph k = build_koenig(rn);
  bool fluffle = is_fluffle(koenig_of_cs(cs, k));

  Json doc = document_skeleton("classify", bytes, rn, opt.bounds);
  Json kj;
  for (const auto& [x, r] : cs.kappa) kj[rn.entities[x]] = rn.reactions[r].name;
  doc["kappa"] = kj;
  doc["matrix"] = matrix_json(m);
  doc["certificate"] = certificate_json(cert);
  doc["flags"] = membership_json(rep);
  doc["kappa_graph_is_fluffle"] = fluffle;
  if (rep.cs_core) doc["kind"] = core_kind_str(classify_cs_core(rn, cs));

  std::string text = "matrix: " + m.str() + "\n";
  text += std::string("semipositive: ") + (cert.semipositive ? "yes" : "no") + "\n";
  text += std::string("metzler: ") + (rep.metzler ? "yes" : "no") + "\n";
  text += std::string("irreducible: ") + (rep.irreducible ? "yes" : "no") + "\n";
  text += std::string("metzler_part_irreducible: ") + (rep.metzler_part_irreducible ? "yes" : "no") + "\n";
  text += std::string("cs_core: ") + (rep.cs_core ? "yes" : "no") + "\n";
  text += std::string("autocatalytic_core: ") + (rep.autocatalytic_core ? "yes" : "no") + "\n";
  text += std::string("kappa_graph_is_fluffle: ") + (fluffle ? "yes" : "no") + "\n";
  emit(opt, doc, text);
  return kExitOk;
}

int run_graph(const std::string& file, const std::string& dot_out, bool highlight, const Options& opt) {
  std::string bytes;
  ReactionNetwork rn = load_network(file, opt, &bytes);
  KoenigGraph k = build_koenig(rn);
  std::set<int> hx, hr;
  if (highlight) {
    for (const CoreReport& rep : enumerate_autocatalytic_cores(rn, opt.bounds).items) {
      hx.insert(rep.sub.entities.begin(), rep.sub.entities.end());
      hr.insert(rep.sub.reactions.begin(), rep.sub.reactions.end());
    }
  }
  write_output(dot_out, emit_dot(full_graph(k), rn, hx, hr));
  return kExitOk;
}

// Built-in witnesses reported in the source material for the bundled
// fixtures, verified exactly on request.
struct PaperWitness {
  const char* fixture;
  std::vector<std::pair<const char*, const char*>> kappa;  // entity=reaction
  std::vector<int> witness;
};

const std::vector<PaperWitness>& paper_witnesses() {
  static const std::vector<PaperWitness> table = {
      {"ex_cat1", {{"x1", "r1"}, {"x2", "r2"}}, {2, 1}},
      {"ex_cat2", {{"x1", "r1"}, {"x2", "r2"}}, {3, 2}},
      {"ex_cat2b", {{"x1", "r11"}, {"x3", "r12"}, {"x2", "r2"}}, {7, 6, 4}},
  };
  return table;
}

bool verify_paper_witness(const ReactionNetwork& rn, const PaperWitness& pw, std::string& detail) {
  ChildSelection cs;
  std::vector<int> xs, rs;
  // The witness is ordered like the kappa list; rebuild that column order.
  std::vector<int> order;
  for (const auto& [xn, rname] : pw.kappa) {
    int x = rn.entity_index(xn), r = rn.reaction_index(rname);
    if (x < 0 || r < 0) {
      detail = "fixture does not carry the expected names";
      return false;
    }
    cs.kappa[x] = r;
    xs.push_back(x);
    rs.push_back(r);
    order.push_back(x);
  }
  cs.sub = make_sub(xs, rs);
  RatMatrix s = net_stoich(rn);
  // Product S[.,kappa(x_j)] * v_j over the listed order, checked >> 0.
  for (int xi : cs.sub.entities) {
    Rat acc = 0;
    for (size_t j = 0; j < order.size(); ++j) acc += s.at(xi, cs.kappa.at(order[j])) * pw.witness[j];
    if (acc <= 0) {
      detail = "witness product has a non-positive component";
      return false;
    }
  }
  return true;
}

int run_check(const std::vector<std::string>& paths, bool witness_paper, const Options& opt) {
  std::vector<std::string> files;
  for (const std::string& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> dir_files;
      for (const auto& e : fs::directory_iterator(p))
        if (e.path().extension() == ".rn") dir_files.push_back(e.path().string());
      std::sort(dir_files.begin(), dir_files.end());
      files.insert(files.end(), dir_files.begin(), dir_files.end());
    } else {
      files.push_back(p);
    }
  }
  if (files.empty()) throw Error("check: no input files");

  int failures = 0;
  for (const std::string& file : files) {
    std::vector<std::string> issues;
    std::string bytes;
    ReactionNetwork rn = load_network(file, opt, &bytes);

    // Parser fixpoint.
    ReactionNetwork reparsed = parse_reactions(serialize_reactions(rn), true);
    if (!(serialize_reactions(reparsed) == serialize_reactions(rn)))
      issues.push_back("serialization round trip not a fixpoint");

    CoreList cores = enumerate_autocatalytic_cores(rn, opt.bounds);
    CoreList cs_cores = enumerate_cs_cores(rn, opt.bounds);
    if (!cores.complete || !cs_cores.complete) issues.push_back("enumeration incomplete under bounds");

    for (const CoreReport& rep : cores.items) {
      for (const std::string& s : core_structural_issues(rn, rep))
        issues.push_back("core " + describe_core(rn, rep) + ": " + s);
      HardnessReport h = hardness(rn, rep, opt.bounds);
      if (h.hard != h.drainable_criterion_hard)
        issues.push_back("hardness criteria disagree for " + describe_core(rn, rep));
      if (has_unit_stoichiometry(rn, rep.sub)) {
        try {
          unit_stoich_classify(rn, rep);
          contributing_dichotomy_check(rn, rep);
        } catch (const Error& e) {
          issues.push_back(std::string("unit analysis: ") + e.what());
        }
        if (!h.hard) issues.push_back("unit-stoichiometry core is not hard");
      }
    }

    // Oracle agreement on small networks.
    OracleBounds ob;
    if (rn.n_entities() <= ob.max_entities && rn.n_reactions() <= ob.max_reactions) {
      std::vector<SubNetwork> expected = brute_force_cores(rn, ob);
      std::vector<SubNetwork> got;
      for (const CoreReport& rep : cores.items) got.push_back(rep.sub);
      std::sort(got.begin(), got.end());
      if (got != expected) issues.push_back("core enumeration disagrees with the brute-force oracle");

      std::vector<ChildSelection> expected_cs = brute_force_cs_cores(rn, ob);
      std::vector<ChildSelection> got_cs;
      for (const CoreReport& rep : cs_cores.items) got_cs.push_back(rep.cs);
      std::sort(got_cs.begin(), got_cs.end());
      if (got_cs != expected_cs) issues.push_back("CS-core enumeration disagrees with the brute-force oracle");
    }

    if (witness_paper) {
      std::string stem = fs::path(file).stem().string();
      for (const PaperWitness& pw : paper_witnesses()) {
        if (stem != pw.fixture) continue;
        std::string detail;
        if (!verify_paper_witness(rn, pw, detail))
          issues.push_back("paper witness: " + detail);
        else
          std::cout << "  witness verified for " << stem << "\n";
      }
    }

    if (issues.empty()) {
      std::cout << "ok " << file << " (cores=" << cores.items.size()
                << " cs-cores=" << cs_cores.items.size() << ")\n";
    } else {
      ++failures;
      std::cout << "FAIL " << file << "\n";
      for (const std::string& s : issues) std::cout << "  " << s << "\n";
    }
  }
  return failures == 0 ? kExitOk : kExitFindings;
}

int thread_count() {
  const char* env = std::getenv("CORE_THREADS");
  int n = 0;
  if (env) n = std::atoi(env);
  if (n <= 0) n = int(std::thread::hardware_concurrency());
  if (n <= 0) n = 1;
  return std::min(n, 16);
}

int run_oracle(std::uint64_t seed, int networks, OracleBounds ob, const std::string& out_dir,
               const Options& opt) {
  ob.seed = seed;
  ob.instances = networks;

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    Json manifest;
    manifest["seed"] = seed;
    manifest["networks"] = networks;
    manifest["max_entities"] = ob.max_entities;
    manifest["max_reactions"] = ob.max_reactions;
    manifest["max_coeff"] = ob.max_coeff;
    manifest["catalysis_prob"] = ob.catalysis_prob;
    Json digests = Json::array();
    for (int i = 0; i < networks; ++i) {
      ReactionNetwork rn = random_network(ob, seed + i);
      std::string text = serialize_reactions(rn);
      std::string name = "net_" + std::to_string(seed + i) + ".rn";
      write_output((fs::path(out_dir) / name).string(), text);
      Json d;
      d["file"] = name;
      d["digest"] = input_digest(text);
      digests.push_back(d);
    }
    manifest["files"] = digests;
    write_output((fs::path(out_dir) / "manifest.json").string(), emit_json(manifest));
  }

  std::atomic<int> next{0};
  std::vector<int> core_mismatch(networks, 0), cs_mismatch(networks, 0);
  auto worker = [&]() {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= networks) return;
      ReactionNetwork rn = random_network(ob, seed + i);
      CoreList cores = enumerate_autocatalytic_cores(rn, opt.bounds);
      std::vector<SubNetwork> got;
      for (const CoreReport& rep : cores.items) got.push_back(rep.sub);
      std::sort(got.begin(), got.end());
      if (got != brute_force_cores(rn, ob)) core_mismatch[i] = 1;

      CoreList cs = enumerate_cs_cores(rn, opt.bounds);
      std::vector<ChildSelection> got_cs;
      for (const CoreReport& rep : cs.items) got_cs.push_back(rep.cs);
      std::sort(got_cs.begin(), got_cs.end());
      if (got_cs != brute_force_cs_cores(rn, ob)) cs_mismatch[i] = 1;
    }
  };
  std::vector<std::thread> pool;
  int n_threads = thread_count();
  for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  int bad = 0;
  for (int i = 0; i < networks; ++i) {
    if (core_mismatch[i] || cs_mismatch[i]) {
      ++bad;
      std::cout << "disagreement on seed " << (seed + i)
                << (core_mismatch[i] ? " [cores]" : "") << (cs_mismatch[i] ? " [cs-cores]" : "") << "\n";
    }
  }
  std::cout << "oracle: networks=" << networks << " agree=" << (networks - bad)
            << " disagree=" << bad << "\n";
  return bad == 0 ? kExitOk : kExitFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"autocatalytic core analysis for reaction networks"};
  app.require_subcommand(1);

  Options opt;
  int max_circuit_len = -1;
  app.add_option("--max-circuit-len", max_circuit_len, "cap on circuit length (vertex count)");
  app.add_option("--max-superposition-depth", opt.bounds.max_superposition_depth,
                 "cap on circuits per superposition");
  app.add_option("--max-core-entities", opt.bounds.max_core_entities, "cap on entities per core");
  app.add_option("--json", opt.json_out, "write a JSON report to this path ('-' = stdout)");
  app.add_flag("--allow-open", opt.allow_open, "accept reactions with an empty side");
  app.add_option("--tolerance", opt.tolerance, "Perron instability threshold");

  std::string file, kappa_spec, dot_out = "-", oracle_out;
  std::vector<std::string> check_paths;
  bool highlight = false, witness_paper = false;
  std::uint64_t seed = 1;
  int networks = 200;
  OracleBounds ob;

  CLI::App* cores_cmd = app.add_subcommand("cores", "enumerate autocatalytic cores");
  cores_cmd->add_option("file", file)->required();
  CLI::App* cs_cmd = app.add_subcommand("cs-cores", "enumerate autocatalytic CS-cores");
  cs_cmd->add_option("file", file)->required();
  CLI::App* classify_cmd = app.add_subcommand("classify", "membership report for a child-selection");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->add_option("--kappa", kappa_spec, "x1=r1,x2=r2,...")->required();
  CLI::App* hard_cmd = app.add_subcommand("hard", "hardness of each core under reversal");
  hard_cmd->add_option("file", file)->required();
  CLI::App* mas_cmd = app.add_subcommand("mas", "minimal autocatalytic subsystems");
  mas_cmd->add_option("file", file)->required();
  CLI::App* graph_cmd = app.add_subcommand("graph", "DOT export of the bipartite graph");
  graph_cmd->add_option("file", file)->required();
  graph_cmd->add_option("--dot", dot_out, "output path ('-' = stdout)");
  graph_cmd->add_flag("--highlight-cores", highlight, "mark core members");
  CLI::App* check_cmd = app.add_subcommand("check", "run the invariant suite over files or directories");
  check_cmd->add_option("paths", check_paths)->required();
  check_cmd->add_flag("--witness-paper", witness_paper, "verify the published fixture witnesses");
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "random corpus equivalence against brute force");
  oracle_cmd->add_option("--seed", seed, "base seed");
  oracle_cmd->add_option("--networks", networks, "number of networks");
  oracle_cmd->add_option("--max-entities", ob.max_entities);
  oracle_cmd->add_option("--max-reactions", ob.max_reactions);
  oracle_cmd->add_option("--max-coeff", ob.max_coeff);
  oracle_cmd->add_option("--catalysis-prob", ob.catalysis_prob);
  oracle_cmd->add_option("--out", oracle_out, "write the corpus and manifest to this directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
  }

  if (max_circuit_len > 0) opt.bounds.max_circuit_len = max_circuit_len;

  try {
    if (cores_cmd->parsed()) return run_cores(file, opt, false);
    if (cs_cmd->parsed()) return run_cores(file, opt, true);
    if (classify_cmd->parsed()) return run_classify(file, kappa_spec, opt);
    if (hard_cmd->parsed()) return run_hard(file, opt);
    if (mas_cmd->parsed()) return run_mas(file, opt);
    if (graph_cmd->parsed()) return run_graph(file, dot_out, highlight, opt);
    if (check_cmd->parsed()) return run_check(check_paths, witness_paper, opt);
    if (oracle_cmd->parsed()) return run_oracle(seed, networks, ob, oracle_out, opt);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
