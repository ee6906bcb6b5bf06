#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "berge/berge.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFails = 1, kUsage = 2, kTruncated = 3 };

struct Failure {
  int code;
  std::string message;
};

struct HgDeleter {
  void operator()(berge_hypergraph* h) const { berge_hypergraph_free(h); }
};
struct PatternDeleter {
  void operator()(berge_pattern* p) const { berge_pattern_free(p); }
};
using HgPtr = std::unique_ptr<berge_hypergraph, HgDeleter>;
using PatternPtr = std::unique_ptr<berge_pattern, PatternDeleter>;

void ok(berge_status s) {
  if (s == BERGE_OK) return;
  std::string msg = std::string(berge_status_name(s)) + ": " + berge_last_error();
  throw Failure{kUsage, msg};
}

// Takes ownership of a library string.
std::string take(char* s) {
  if (!s) return {};
  std::string out(s);
  berge_string_free(s);
  return out;
}

json take_json(char* s) {
  if (!s) return nullptr;
  return json::parse(take(s));
}

HgPtr load(const std::string& path) {
  berge_hypergraph* h = nullptr;
  ok(berge_hypergraph_read_file(path.c_str(), &h));
  return HgPtr(h);
}

PatternPtr pattern(const std::string& expr) {
  berge_pattern* p = nullptr;
  ok(berge_pattern_parse(expr.c_str(), &p));
  return PatternPtr(p);
}

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {};
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (in.gcount() > 0) EVP_DigestUpdate(ctx.get(), buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned len = 0;
  EVP_DigestFinal_ex(ctx.get(), md, &len);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kUsage, "cannot write " + path};
  out << text;
  if (!out) throw Failure{kUsage, "cannot write " + path};
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kUsage, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<int>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

const char* search_word(berge_search_status s) {
  switch (s) {
    case BERGE_FOUND: return "found";
    case BERGE_NOT_FOUND: return "not_found";
    case BERGE_INDETERMINATE: return "indeterminate";
  }
  return "indeterminate";
}

int search_exit(berge_search_status s) {
  return s == BERGE_FOUND ? kOk : s == BERGE_NOT_FOUND ? kFails : kTruncated;
}

// Common state for one invocation.
struct Run {
  std::string json_path;  // "-" for stdout
  bool json_requested = false;
  std::string csv_path;
  std::string manifest_path;
  unsigned threads = 1;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  json summary = json::object();

  bool machine() const { return json_requested; }

  void emit(json j) const {
    if (!json_requested) return;
    const std::string text = j.dump(2) + "\n";
    if (json_path.empty() || json_path == "-")
      std::cout << text;
    else
      write_text(json_path, text);
  }

  void say(const std::string& line) const {
    if (json_requested && (json_path.empty() || json_path == "-")) return;
    std::cout << line << "\n";
  }
};

unsigned default_threads() {
  if (const char* env = std::getenv("BERGE_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

berge_search_options search_options(unsigned threads) {
  berge_search_options o;
  berge_search_options_init(&o);
  o.threads = threads;
  return o;
}

// ---- subcommands ----

struct ConstructArgs {
  long long n = 0, r = 0, k = 0, l = 0;
  std::string out, layout;
  bool audit = false;
};

int cmd_construct(Run& run, const ConstructArgs& a) {
  berge_hypergraph* raw = nullptr;
  char* layout_raw = nullptr;
  ok(berge_extremal_construction(a.n, a.r, a.l, a.k, &raw, &layout_raw));
  HgPtr h(raw);
  const std::string layout_text = take(layout_raw);
  const std::string layout_path = a.layout.empty() ? a.out + ".layout.json" : a.layout;
  ok(berge_hypergraph_write_file(h.get(), a.out.c_str()));
  write_text(layout_path, json::parse(layout_text).dump(2) + "\n");
  run.outputs = {a.out, layout_path};

  json j = {{"command", "construct"}, {"n", a.n}, {"r", a.r}, {"k", a.k}, {"l", a.l},
            {"edges", berge_hypergraph_size(h.get())}, {"output", a.out}, {"layout_file", layout_path},
            {"layout", json::parse(layout_text)}};
  int code = kOk;
  if (a.audit) {
    char* rep = nullptr;
    int pass = 0;
    ok(berge_construction_audit(h.get(), layout_text.c_str(), &rep, &pass));
    j["audit"] = take_json(rep);
    if (!pass) code = kFails;
  }
  run.summary = {{"edges", j["edges"]}};
  run.say("wrote " + std::to_string(berge_hypergraph_size(h.get())) + " edges to " + a.out + " (layout " +
          layout_path + ")");
  if (a.audit) run.say(std::string("audit ") + (code == kOk ? "PASS" : "FAIL"));
  run.emit(j);
  return code;
}

struct BlockArgs {
  int n = 0, l = 0, r = 0;
  std::string out;
};

int cmd_block(Run& run, const BlockArgs& a) {
  berge_hypergraph* raw = nullptr;
  ok(berge_block_construction(a.n, a.l, a.r, &raw));
  HgPtr h(raw);
  ok(berge_hypergraph_write_file(h.get(), a.out.c_str()));
  run.outputs = {a.out};
  const auto m = berge_hypergraph_size(h.get());
  run.summary = {{"edges", m}};
  run.say("wrote " + std::to_string(m) + " edges to " + a.out);
  run.emit({{"command", "block"}, {"n", a.n}, {"l", a.l}, {"r", a.r}, {"edges", m}, {"output", a.out}});
  return kOk;
}

struct FormulaArgs {
  std::string name;
  std::map<std::string, long long> ints;
  std::vector<long long> lengths;
};

int cmd_formula(Run& run, const FormulaArgs& a) {
  json params = json::object();
  for (const auto& [k, v] : a.ints) params[k] = v;
  if (!a.lengths.empty()) params["lengths"] = a.lengths;
  char* out = nullptr;
  ok(berge_formula(a.name.c_str(), params.dump().c_str(), &out));
  json j = take_json(out);
  j["command"] = "formula";
  run.summary = {{"formula", a.name}};
  if (j.contains("value")) run.summary["value"] = j["value"];
  if (j.contains("value"))
    run.say(a.name + " = " + j["value"].get<std::string>());
  else
    run.say(a.name + " conjectured value = " + j["conjectured_value"].get<std::string>());
  run.emit(j);
  return kOk;
}

struct CheckArgs {
  std::string input, pattern;
  unsigned long long budget = 0;
  std::string certificate_out;
  bool maximal = false;
};

int cmd_check(Run& run, const CheckArgs& a) {
  run.inputs = {a.input};
  HgPtr h = load(a.input);
  PatternPtr f = pattern(a.pattern);
  berge_search_status st;
  char* cert = nullptr;
  uint64_t nodes = 0;
  ok(berge_find_embedding(h.get(), f.get(), a.budget, &st, &cert, &nodes));
  json certificate = take_json(cert);
  const char* word = st == BERGE_FOUND ? "CONTAINS" : st == BERGE_NOT_FOUND ? "FREE" : "UNKNOWN";
  json j = {{"command", "check"}, {"input", a.input}, {"pattern", berge_pattern_tag(f.get())},
            {"result", word},     {"nodes", nodes},    {"certificate", certificate}};
  int code = st == BERGE_FOUND ? kFails : st == BERGE_NOT_FOUND ? kOk : kTruncated;
  if (st == BERGE_FOUND && !a.certificate_out.empty()) {
    write_text(a.certificate_out, certificate.dump(2) + "\n");
    run.outputs.push_back(a.certificate_out);
  }
  run.say(word);
  if (a.maximal && st == BERGE_NOT_FOUND) {
    int maximal = 0;
    ok(berge_is_maximal_free(h.get(), f.get(), &maximal));
    j["maximal"] = maximal != 0;
    run.say(maximal ? "MAXIMAL" : "NOT MAXIMAL");
    if (!maximal) code = kFails;
  }
  run.summary = {{"result", word}, {"nodes", nodes}};
  run.emit(j);
  return code;
}

struct FindArgs {
  std::string input, pattern, verify, certificate_out;
  unsigned long long budget = 0;
};

int cmd_find(Run& run, const FindArgs& a) {
  run.inputs = {a.input};
  HgPtr h = load(a.input);
  if (!a.verify.empty()) {
    run.inputs.push_back(a.verify);
    const std::string text = read_text(a.verify);
    int valid = 0;
    ok(berge_verify_certificate(h.get(), text.c_str(), &valid));
    run.summary = {{"valid", valid != 0}};
    run.say(valid ? "VALID" : "INVALID");
    run.emit({{"command", "find"}, {"input", a.input}, {"certificate_file", a.verify}, {"valid", valid != 0}});
    return valid ? kOk : kFails;
  }
  if (a.pattern.empty()) throw Failure{kUsage, "find: -F/--pattern or --verify is required"};
  PatternPtr f = pattern(a.pattern);
  berge_search_status st;
  char* cert = nullptr;
  uint64_t nodes = 0;
  ok(berge_find_embedding(h.get(), f.get(), a.budget, &st, &cert, &nodes));
  json certificate = take_json(cert);
  if (st == BERGE_FOUND) {
    if (!a.certificate_out.empty()) {
      write_text(a.certificate_out, certificate.dump(2) + "\n");
      run.outputs.push_back(a.certificate_out);
    }
    run.say(certificate.dump());
  } else {
    run.say(st == BERGE_NOT_FOUND ? "not found" : "indeterminate (budget exhausted)");
  }
  run.summary = {{"status", search_word(st)}, {"nodes", nodes}};
  run.emit({{"command", "find"},
            {"input", a.input},
            {"pattern", berge_pattern_tag(f.get())},
            {"status", search_word(st)},
            {"nodes", nodes},
            {"certificate", certificate}});
  return search_exit(st);
}

struct PathArgs {
  std::string input;
  unsigned long long budget = 0;
};

int cmd_longest_path(Run& run, const PathArgs& a) {
  run.inputs = {a.input};
  HgPtr h = load(a.input);
  char* out = nullptr;
  ok(berge_longest_path(h.get(), a.budget, &out));
  json j = take_json(out);
  const bool exact = j["exact"].get<bool>();
  run.say("longest Berge path: " + std::to_string(j["length"].get<int>()) + (exact ? "" : " (lower bound)"));
  j["command"] = "longest-path";
  j["input"] = a.input;
  run.summary = {{"length", j["length"]}, {"exact", exact}};
  run.emit(j);
  return exact ? kOk : kTruncated;
}

struct CycleArgs {
  std::string input;
  int length = 0;
  unsigned long long budget = 0;
};

int cmd_cycle(Run& run, const CycleArgs& a) {
  run.inputs = {a.input};
  HgPtr h = load(a.input);
  berge_search_status st;
  char* cert = nullptr;
  uint64_t nodes = 0;
  ok(berge_find_cycle(h.get(), a.length, a.budget, &st, &cert, &nodes));
  json certificate = take_json(cert);
  run.say(st == BERGE_FOUND ? certificate.dump() : search_word(st));
  run.summary = {{"status", search_word(st)}, {"nodes", nodes}};
  run.emit({{"command", "cycle"},
            {"input", a.input},
            {"length", a.length},
            {"status", search_word(st)},
            {"nodes", nodes},
            {"certificate", certificate}});
  return search_exit(st);
}

struct GoodOrderArgs {
  std::string input;
  int first = 0;
};

int cmd_good_order(Run& run, const GoodOrderArgs& a) {
  run.inputs = {a.input};
  HgPtr h = load(a.input);
  std::size_t len = 0;
  ok(berge_good_order(h.get(), a.first, nullptr, 0, &len));
  std::vector<int> order(len);
  ok(berge_good_order(h.get(), a.first, order.data(), order.size(), &len));
  int good = 0;
  ok(berge_is_good_order(h.get(), order.data(), order.size(), &good));
  run.say(join(order));
  run.summary = {{"length", order.size()}, {"good", good != 0}};
  run.emit({{"command", "good-order"}, {"input", a.input}, {"first", a.first}, {"order", order}, {"good", good != 0}});
  return good ? kOk : kFails;
}

struct BcnArgs {
  std::string input;
  std::vector<int> v0;
};

int cmd_bcn(Run& run, const BcnArgs& a) {
  run.inputs = {a.input};
  HgPtr h = load(a.input);
  std::size_t len = 0;
  ok(berge_common_neighbours(h.get(), a.v0.data(), a.v0.size(), nullptr, 0, &len));
  std::vector<int> out(len);
  ok(berge_common_neighbours(h.get(), a.v0.data(), a.v0.size(), out.data(), out.size(), &len));
  run.say(out.empty() ? "(none)" : join(out));
  run.summary = {{"count", out.size()}};
  run.emit({{"command", "bcn"}, {"input", a.input}, {"v0", a.v0}, {"neighbours", out}});
  return kOk;
}

struct StarArgs {
  std::string input;
  int x = 0, l = 0;
};

int cmd_star(Run& run, const StarArgs& a) {
  run.inputs = {a.input};
  HgPtr h = load(a.input);
  char* out = nullptr;
  ok(berge_star(h.get(), a.x, a.l, &out));
  json j = take_json(out);
  const bool exists = j["exists"].get<bool>();
  run.say(std::string(exists ? "STAR" : "NO STAR") + " (degree " + std::to_string(j["degree"].get<int>()) + ")");
  j["command"] = "star";
  j["input"] = a.input;
  j["x"] = a.x;
  j["l"] = a.l;
  run.summary = {{"exists", exists}};
  run.emit(j);
  return exists ? kOk : kFails;
}

struct TuranArgs {
  int n = 0, r = 0, k = 0, l = 0;
  std::string pattern;
  bool connected = false;
  bool compare = false;
  bool no_symmetry = false;
  unsigned long long budget = 0;
  std::size_t witnesses = 1;
  std::size_t max_candidates = 64;
  std::string out_dir = ".";
};

int cmd_turan(Run& run, const TuranArgs& a) {
  berge_search_options o = search_options(run.threads);
  o.connected_only = a.connected;
  o.node_budget = a.budget;
  o.witness_limit = a.witnesses;
  o.symmetry_pruning = !a.no_symmetry;
  o.max_candidates = a.max_candidates;

  if (a.compare) {
    if (a.k < 1 || a.l < 1) throw Failure{kUsage, "turan --compare needs -k and -l"};
    char* out = nullptr;
    char* row = nullptr;
    ok(berge_compare_with_formula(a.n, a.r, a.k, a.l, &o, &out, &row));
    json c = take_json(out);
    const std::string csv_row = take(row);
    if (!a.out_dir.empty() && a.out_dir != ".") fs::create_directories(a.out_dir);
    if (!run.csv_path.empty()) {
      write_text(run.csv_path, std::string(berge_compare_csv_header()) + csv_row);
      run.outputs.push_back(run.csv_path);
    }
    const bool exact = c["search"]["exact"].get<bool>();
    const bool holds = c["lower_bound_holds"].get<bool>();
    run.say("search " + std::to_string(c["search"]["max_edges"].get<long long>()) + (exact ? "" : " (truncated)") +
            ", formula " + c["formula_value"].get<std::string>() + ", construction " +
            (c["construction_fits"].get<bool>() ? "fits" : "does not fit"));
    run.summary = {{"search_value", c["search"]["max_edges"]}, {"formula_value", c["formula_value"]}};
    run.emit({{"command", "turan"}, {"mode", "compare"}, {"comparison", c}});
    if (!exact) return kTruncated;
    return holds ? kOk : kFails;
  }

  if (a.pattern.empty()) throw Failure{kUsage, "turan: -F/--pattern is required (or use --compare)"};
  PatternPtr f = pattern(a.pattern);
  char* out = nullptr;
  ok(berge_exact_turan(a.n, a.r, f.get(), &o, &out));
  json j = take_json(out);

  fs::create_directories(a.out_dir);
  const std::string stem = "turan_n" + std::to_string(a.n) + "_r" + std::to_string(a.r) + "_" +
                           std::string(berge_pattern_tag(f.get())) + (a.connected ? "_con" : "");
  json files = json::array();
  std::size_t idx = 0;
  for (const auto& w : j["witnesses"]) {
    std::vector<int> flat;
    for (const auto& e : w)
      for (const auto& v : e) flat.push_back(v.get<int>());
    berge_hypergraph* raw = nullptr;
    ok(berge_hypergraph_create(a.r, a.n, flat.data(), w.size(), &raw));
    HgPtr h(raw);
    const std::string path = (fs::path(a.out_dir) / (stem + "_w" + std::to_string(idx++) + ".hg")).string();
    ok(berge_hypergraph_write_file(h.get(), path.c_str()));
    files.push_back(path);
    run.outputs.push_back(path);
  }
  j["command"] = "turan";
  j["mode"] = "search";
  j["witness_files"] = files;
  const std::string result_path = (fs::path(a.out_dir) / (stem + ".json")).string();
  write_text(result_path, j.dump(2) + "\n");
  run.outputs.insert(run.outputs.begin(), result_path);
  if (!run.csv_path.empty()) {
    std::string csv = "n,r,pattern,connected,max_edges,exact,feasible,nodes_explored\n";
    csv += std::to_string(a.n) + "," + std::to_string(a.r) + "," + berge_pattern_tag(f.get()) + "," +
           (a.connected ? "true" : "false") + "," + std::to_string(j["max_edges"].get<long long>()) + "," +
           (j["exact"].get<bool>() ? "true" : "false") + "," + (j["feasible"].get<bool>() ? "true" : "false") + "," +
           std::to_string(j["nodes_explored"].get<unsigned long long>()) + "\n";
    write_text(run.csv_path, csv);
    run.outputs.push_back(run.csv_path);
  }

  const bool exact = j["exact"].get<bool>();
  if (!exact)
    run.say("ex >= " + std::to_string(j["max_edges"].get<long long>()) + " (budget exhausted)");
  else if (!j["feasible"].get<bool>())
    run.say("no connected host exists");
  else
    run.say(std::string(exact ? "ex = " : "ex >= ") + std::to_string(j["max_edges"].get<long long>()));
  run.summary = {{"max_edges", j["max_edges"]}, {"exact", exact}, {"feasible", j["feasible"]}};
  run.emit(j);
  return exact ? kOk : kTruncated;
}

struct LemmaArgs {
  std::vector<std::string> lemmas;
  std::string grid = "default";
};

int cmd_verify_lemmas(Run& run, const LemmaArgs& a) {
  std::vector<std::string> names = a.lemmas;
  if (names.empty()) names = {"L2.2", "L2.3", "L2.4", "L2.5", "L2.6"};
  std::string grid_text;
  if (a.grid != "default") {
    run.inputs.push_back(a.grid);
    grid_text = read_text(a.grid);
  }
  json reports = json::array();
  std::string csv = "lemma,r,k,l,l_prime,lhs,rhs,slack,holds\n";
  long long violations = 0, cells = 0;
  for (const auto& name : names) {
    char* rep = nullptr;
    char* rows = nullptr;
    ok(berge_verify_lemma(name.c_str(), grid_text.empty() ? nullptr : grid_text.c_str(), &rep,
                          run.csv_path.empty() ? nullptr : &rows));
    json r = take_json(rep);
    csv += take(rows);
    violations += static_cast<long long>(r["violations"].size());
    cells += r["cells"].get<long long>();
    run.say(name + ": " + std::to_string(r["cells"].get<long long>()) + " cells, " +
            std::to_string(r["violations"].size()) + " violations, min slack " +
            (r["margin_min"].is_null() ? std::string("n/a") : r["margin_min"].get<std::string>()));
    reports.push_back(std::move(r));
  }
  if (!run.csv_path.empty()) {
    write_text(run.csv_path, csv);
    run.outputs.push_back(run.csv_path);
  }
  run.summary = {{"cells", cells}, {"violations", violations}};
  run.emit({{"command", "verify-lemmas"},
            {"grid", a.grid},
            {"cells", cells},
            {"violations", violations},
            {"lemmas", reports}});
  return violations == 0 ? kOk : kFails;
}

struct AuditArgs {
  std::string input, layout;
};

int cmd_audit(Run& run, const AuditArgs& a) {
  const std::string layout = a.layout.empty() ? a.input + ".layout.json" : a.layout;
  run.inputs = {a.input, layout};
  HgPtr h = load(a.input);
  const std::string text = read_text(layout);
  char* rep = nullptr;
  int pass = 0;
  ok(berge_construction_audit(h.get(), text.c_str(), &rep, &pass));
  json j = take_json(rep);
  for (const auto& c : j["classes"])
    run.say(c["class"].get<std::string>() + ": expected " + c["expected"].get<std::string>() + ", counted " +
            std::to_string(c["counted"].get<long long>()));
  run.say(pass ? "PASS" : "FAIL");
  j["command"] = "audit";
  j["input"] = a.input;
  j["layout_file"] = layout;
  run.summary = {{"pass", pass != 0}};
  run.emit(j);
  return pass ? kOk : kFails;
}

std::string default_manifest(const std::string& sub, const Run& run) {
  if (!run.outputs.empty()) return run.outputs.front() + ".manifest.json";
  if (!run.json_path.empty() && run.json_path != "-") return run.json_path + ".manifest.json";
  return "berge-" + sub + ".manifest.json";
}

void write_manifest(const std::string& sub, const std::vector<const CLI::App*>& apps, const Run& run,
                    const std::vector<std::string>& argv, double seconds, int code) {
  json args = json::object();
  for (const CLI::App* app : apps) {
    for (const CLI::Option* opt : app->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help") continue;
      const auto& res = opt->results();
      std::string key = opt->get_name();
      if (res.size() == 1)
        args[key] = res.front();
      else if (res.empty())
        args[key] = true;
      else
        args[key] = res;
    }
  }
  json digests = json::object();
  for (const auto& p : run.inputs) digests[p] = sha256_file(p);
  json out_digests = json::object();
  for (const auto& p : run.outputs) out_digests[p] = sha256_file(p);
  json m = {{"subcommand", sub},
            {"argv", argv},
            {"arguments", args},
            {"input_digests", digests},
            {"output_digests", out_digests},
            {"version", berge_version()},
            {"wall_time_seconds", seconds},
            {"exit_code", code},
            {"summary", run.summary}};
  const std::string path = run.manifest_path.empty() ? default_manifest(sub, run) : run.manifest_path;
  write_text(path, m.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::string> raw_args(argv + 1, argv + argc);

  CLI::App app{"Berge hypergraph Turán toolkit"};
  app.set_version_flag("--version", std::string(berge_version()));
  app.require_subcommand(1);
  app.fallthrough();

  Run run;
  run.threads = default_threads();
  auto* json_opt = app.add_option("--json", run.json_path, "Machine output as JSON (to FILE, or stdout when omitted)")
                       ->expected(0, 1);
  app.add_option("--csv", run.csv_path, "Write CSV rows to FILE (verify-lemmas, turan)");
  app.add_option("--manifest", run.manifest_path, "Run manifest path");
  app.add_option("--threads", run.threads, "Worker threads (default $BERGE_THREADS or 1)")
      ->check(CLI::PositiveNumber);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build the extremal construction for kP_l");
  construct->add_option("-n", ca.n, "Vertices")->required();
  construct->add_option("-r", ca.r, "Uniformity")->required();
  construct->add_option("-k", ca.k, "Number of paths")->required();
  construct->add_option("-l", ca.l, "Path length")->required();
  construct->add_option("-o,--output", ca.out, "Output .hg file")->required();
  construct->add_option("--layout", ca.layout, "Layout JSON path (default OUTPUT.layout.json)");
  construct->add_flag("--audit", ca.audit, "Audit edge classes after building");

  BlockArgs ba;
  auto* block = app.add_subcommand("block", "Disjoint K^(r)_l blocks");
  block->add_option("-n", ba.n, "Vertices")->required();
  block->add_option("-l", ba.l, "Block size")->required();
  block->add_option("-r", ba.r, "Uniformity")->required();
  block->add_option("-o,--output", ba.out, "Output .hg file")->required();

  FormulaArgs fa;
  long long fn = 0, fr = 0, fl = 0, fk = 0, fl1 = 0, fl2 = 0;
  auto* formula = app.add_subcommand("formula", "Evaluate a closed-form Turán value");
  formula->add_option("name", fa.name, "erdos_gallai|kpl_graph|path_bound|connected_path|two_path|kpl|conjecture")
      ->required()
      ->check(CLI::IsMember(
          {"erdos_gallai", "kpl_graph", "path_bound", "connected_path", "two_path", "kpl", "conjecture"}));
  auto* fn_opt = formula->add_option("-n", fn, "Vertices");
  auto* fr_opt = formula->add_option("-r", fr, "Uniformity");
  auto* fl_opt = formula->add_option("-l", fl, "Path length");
  auto* fk_opt = formula->add_option("-k", fk, "Number of paths");
  auto* fl1_opt = formula->add_option("--l1", fl1, "First path length (two_path)");
  auto* fl2_opt = formula->add_option("--l2", fl2, "Second path length (two_path)");
  formula->add_option("--lengths", fa.lengths, "Path lengths (conjecture)")->delimiter(',');

  CheckArgs cka;
  auto* check = app.add_subcommand("check", "Decide Berge-F freeness");
  check->add_option("input", cka.input, ".hg file")->required()->check(CLI::ExistingFile);
  check->add_option("-F,--pattern", cka.pattern, "Forbidden pattern, e.g. 2P5")->required();
  check->add_option("--budget", cka.budget, "Node budget (0 = exhaustive)");
  check->add_option("--certificate", cka.certificate_out, "Write the certificate when a copy is found");
  check->add_flag("--maximal", cka.maximal, "Also test maximality when free");

  FindArgs fda;
  auto* find = app.add_subcommand("find", "Find a Berge copy, or verify a certificate");
  find->add_option("input", fda.input, ".hg file")->required()->check(CLI::ExistingFile);
  auto* find_pattern = find->add_option("-F,--pattern", fda.pattern, "Pattern");
  find->add_option("--budget", fda.budget, "Node budget (0 = exhaustive)");
  find->add_option("--certificate", fda.certificate_out, "Write the certificate to FILE");
  find->add_option("--verify", fda.verify, "Certificate JSON to verify")->check(CLI::ExistingFile)->excludes(find_pattern);

  PathArgs pa;
  auto* lp = app.add_subcommand("longest-path", "Longest Berge path");
  lp->add_option("input", pa.input, ".hg file")->required()->check(CLI::ExistingFile);
  lp->add_option("--budget", pa.budget, "Node budget (0 = exhaustive)");

  CycleArgs cya;
  auto* cycle = app.add_subcommand("cycle", "Find a Berge cycle of given length");
  cycle->add_option("input", cya.input, ".hg file")->required()->check(CLI::ExistingFile);
  cycle->add_option("-l,--length", cya.length, "Cycle length (>= 3)")->required();
  cycle->add_option("--budget", cya.budget, "Node budget (0 = exhaustive)");

  GoodOrderArgs ga;
  auto* good = app.add_subcommand("good-order", "Good ordering of the non-isolated vertices");
  good->add_option("input", ga.input, ".hg file")->required()->check(CLI::ExistingFile);
  good->add_option("--first", ga.first, "First vertex")->required();

  BcnArgs bca;
  auto* bcn = app.add_subcommand("bcn", "Berge common neighbours of a vertex set");
  bcn->add_option("input", bca.input, ".hg file")->required()->check(CLI::ExistingFile);
  bcn->add_option("--v0", bca.v0, "Vertex set, comma separated")->required()->delimiter(',');

  StarArgs sa;
  auto* star = app.add_subcommand("star", "Berge star with l edges at a vertex");
  star->add_option("input", sa.input, ".hg file")->required()->check(CLI::ExistingFile);
  star->add_option("-x,--centre", sa.x, "Centre vertex")->required();
  star->add_option("-l", sa.l, "Number of edges")->required();

  TuranArgs ta;
  auto* turan = app.add_subcommand("turan", "Exact Turán number by branch and bound");
  turan->add_option("-n", ta.n, "Vertices")->required();
  turan->add_option("-r", ta.r, "Uniformity")->required();
  auto* t_pattern = turan->add_option("-F,--pattern", ta.pattern, "Forbidden pattern");
  auto* t_compare = turan->add_flag("--compare", ta.compare, "Compare with the kP_l formula (needs -k, -l)");
  t_compare->excludes(t_pattern);
  turan->add_option("-k", ta.k, "Number of paths (--compare)")->needs(t_compare);
  turan->add_option("-l", ta.l, "Path length (--compare)")->needs(t_compare);
  turan->add_flag("--connected", ta.connected, "Connected hosts only");
  turan->add_option("--budget", ta.budget, "Search-node budget (0 = exhaustive)");
  turan->add_option("--witnesses", ta.witnesses, "Witnesses to keep")->check(CLI::PositiveNumber);
  turan->add_flag("--no-symmetry", ta.no_symmetry, "Disable symmetry pruning");
  turan->add_option("--max-candidates", ta.max_candidates, "Scale guard on C(n, r)");
  turan->add_option("-o,--out-dir", ta.out_dir, "Directory for result JSON and witness .hg files");

  LemmaArgs la;
  auto* lemmas = app.add_subcommand("verify-lemmas", "Check the binomial lemmas on a parameter grid");
  lemmas->add_option("--lemma", la.lemmas, "L2.2..L2.6 (default all)")
      ->check(CLI::IsMember({"L2.2", "L2.3", "L2.4", "L2.5", "L2.6"}));
  lemmas->add_option("--grid", la.grid, "default, or a JSON file with r/k/l bounds");

  AuditArgs aa;
  auto* audit = app.add_subcommand("audit", "Audit a construction against its layout");
  audit->add_option("input", aa.input, ".hg file")->required()->check(CLI::ExistingFile);
  audit->add_option("--layout", aa.layout, "Layout JSON (default INPUT.layout.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  run.json_requested = json_opt->count() > 0;

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  int code = kUsage;
  try {
    if (name == "formula") {
      const std::pair<const char*, std::pair<CLI::Option*, long long>> known[] = {
          {"n", {fn_opt, fn}}, {"r", {fr_opt, fr}}, {"l", {fl_opt, fl}},
          {"k", {fk_opt, fk}}, {"l1", {fl1_opt, fl1}}, {"l2", {fl2_opt, fl2}}};
      for (const auto& [key, v] : known)
        if (v.first->count() > 0) fa.ints[key] = v.second;
    }
    if (name == "construct") code = cmd_construct(run, ca);
    else if (name == "block") code = cmd_block(run, ba);
    else if (name == "formula") code = cmd_formula(run, fa);
    else if (name == "check") code = cmd_check(run, cka);
    else if (name == "find") code = cmd_find(run, fda);
    else if (name == "longest-path") code = cmd_longest_path(run, pa);
    else if (name == "cycle") code = cmd_cycle(run, cya);
    else if (name == "good-order") code = cmd_good_order(run, ga);
    else if (name == "bcn") code = cmd_bcn(run, bca);
    else if (name == "star") code = cmd_star(run, sa);
    else if (name == "turan") code = cmd_turan(run, ta);
    else if (name == "verify-lemmas") code = cmd_verify_lemmas(run, la);
    else if (name == "audit") code = cmd_audit(run, aa);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    code = f.code;
    run.summary = {{"error", f.message}};
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = kUsage;
    run.summary = {{"error", e.what()}};
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    write_manifest(name, {&app, sub}, run, raw_args, seconds, code);
  } catch (const std::exception& e) {
    std::cerr << "warning: manifest not written: " << e.what() << "\n";
  } catch (const Failure& f) {
    std::cerr << "warning: manifest not written: " << f.message << "\n";
  }
  return code;
}
