#include "berge/berge.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "berge/bergematch.hpp"
#include "berge/constructions.hpp"
#include "berge/formulas.hpp"
#include "berge/hypercore.hpp"
#include "berge/turansearch.hpp"

#ifndef BERGE_VERSION
#define BERGE_VERSION "0.0.0"
#endif

struct berge_hypergraph {
  berge::Hypergraph h;
};

struct berge_pattern {
  berge::PatternGraph p;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;
thread_local std::int64_t last_position = -1;

berge_status to_status(berge::ErrorCode c) {
  return static_cast<berge_status>(static_cast<int>(c) + 1);
}

template <class F>
berge_status guard(F&& fn) noexcept {
  try {
    fn();
    last_error.clear();
    last_position = -1;
    return BERGE_OK;
  } catch (const berge::Error& e) {
    last_error = e.what();
    last_position = e.position();
    return to_status(e.code());
  } catch (const json::exception& e) {
    last_error = e.what();
    last_position = -1;
    return BERGE_E_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    last_position = -1;
    return BERGE_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    last_position = -1;
    return BERGE_E_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    last_position = -1;
    return BERGE_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw berge::Error(berge::ErrorCode::InvalidArgument, what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void put(char** dst, const std::string& s) {
  if (dst) *dst = dup(s);
}

berge_search_status to_search_status(berge::SearchStatus s) {
  switch (s) {
    case berge::SearchStatus::Found: return BERGE_FOUND;
    case berge::SearchStatus::NotFound: return BERGE_NOT_FOUND;
    case berge::SearchStatus::Indeterminate: return BERGE_INDETERMINATE;
  }
  return BERGE_INDETERMINATE;
}

std::string frac(const berge::Rational& q) { return berge::fraction_string(q); }

berge::SearchOptions to_options(const berge_search_options* o) {
  berge::SearchOptions s;
  if (!o) return s;
  s.connected_only = o->connected_only != 0;
  s.node_budget = o->node_budget;
  s.witness_limit = o->witness_limit;
  s.symmetry_pruning = o->symmetry_pruning != 0;
  s.threads = o->threads;
  s.max_candidates = o->max_candidates;
  return s;
}

void report_embedding(const berge::EmbeddingResult& r, berge_search_status* status, char** cert, std::uint64_t* nodes) {
  if (status) *status = to_search_status(r.status);
  if (nodes) *nodes = r.nodes;
  if (cert) *cert = r.certificate ? dup(berge::certificate_to_json(*r.certificate)) : nullptr;
}

void copy_out(const std::vector<berge::Vertex>& v, int* out, std::size_t capacity, std::size_t* length) {
  if (length) *length = v.size();
  if (out)
    for (std::size_t i = 0; i < v.size() && i < capacity; ++i) out[i] = v[i];
}

std::int64_t get_int(const json& j, const char* key) {
  if (!j.contains(key)) throw berge::Error(berge::ErrorCode::InvalidArgument, std::string("missing parameter ") + key);
  return j.at(key).get<std::int64_t>();
}

json formula_json(const std::string& name, const json& p) {
  json out;
  out["formula"] = name;
  out["params"] = p;
  if (name == "erdos_gallai") {
    out["value"] = frac(berge::erdos_gallai_bound(get_int(p, "n"), get_int(p, "l")));
  } else if (name == "kpl_graph") {
    auto v = berge::kpl_graph_turan(get_int(p, "n"), get_int(p, "k"), get_int(p, "l"));
    out["value"] = v.value.str();
    out["threshold_n0"] = v.threshold_n0.str();
    out["valid"] = v.valid;
  } else if (name == "path_bound") {
    auto v = berge::berge_path_bound(get_int(p, "n"), get_int(p, "r"), get_int(p, "l"));
    out["value"] = frac(v.value);
    out["case"] = v.theorem_case;
  } else if (name == "connected_path") {
    auto v = berge::connected_berge_path_turan(get_int(p, "n"), get_int(p, "r"), get_int(p, "l"));
    out["value"] = v.value.str();
    out["threshold_known"] = v.threshold_known;
  } else if (name == "two_path") {
    auto v = berge::two_path_turan(get_int(p, "n"), get_int(p, "r"), get_int(p, "l1"), get_int(p, "l2"));
    out["value"] = v.value.str();
    out["path_term"] = v.path_term.str();
    out["construction_term"] = v.construction_term.str();
    out["case"] = v.theorem_case;
  } else if (name == "kpl") {
    auto v = berge::berge_kpl_turan(berge::FormulaParams{get_int(p, "n"), get_int(p, "r"), get_int(p, "l"),
                                                         get_int(p, "k")});
    out["value"] = v.value.str();
    out["within_hypotheses"] = v.within_hypotheses;
  } else if (name == "conjecture") {
    if (!p.contains("lengths")) throw berge::Error(berge::ErrorCode::InvalidArgument, "missing parameter lengths");
    auto v = berge::conjecture_values(get_int(p, "n"), get_int(p, "r"), p.at("lengths").get<std::vector<std::int64_t>>());
    out["forest_value"] = v.forest_value.str();
    out["forest_value_with_core_index"] = v.forest_value_with_core_index.str();
    out["parity_term_present"] = v.parity_term_present;
    out["longest_path_bound"] = v.longest_path_bound ? json(frac(*v.longest_path_bound)) : json(nullptr);
    out["conjectured_value"] = v.conjectured_value.str();
    out["r_in_conjectured_range"] = v.r_in_conjectured_range;
    out["uniform_value"] = v.uniform_value ? json(v.uniform_value->str()) : json(nullptr);
  } else {
    throw berge::Error(berge::ErrorCode::InvalidArgument, "unknown formula " + name);
  }
  return out;
}

json row_json(const berge::LemmaRow& row) {
  json j;
  j["r"] = row.r;
  j["k"] = row.k ? json(*row.k) : json(nullptr);
  j["l"] = row.l ? json(*row.l) : json(nullptr);
  j["l_prime"] = row.l_prime;
  j["lhs"] = frac(row.lhs);
  j["rhs"] = frac(row.rhs);
  j["slack"] = frac(row.slack);
  j["holds"] = row.holds;
  return j;
}

json search_json(const berge::SearchResult& r) {
  json j;
  j["max_edges"] = r.max_edges;
  j["exact"] = r.exact;
  j["feasible"] = r.feasible;
  j["nodes_explored"] = r.nodes_explored;
  j["embedding_nodes"] = r.embedding_nodes;
  j["elapsed_seconds"] = r.elapsed.count();
  json w = json::array();
  for (const auto& h : r.witnesses) w.push_back(h.edge_lists());
  j["witnesses"] = std::move(w);
  return j;
}

}  // namespace

extern "C" {

const char* berge_version(void) { return BERGE_VERSION; }

const char* berge_status_name(berge_status status) {
  if (status == BERGE_OK) return "OK";
  if (status == BERGE_E_INTERNAL) return "Internal";
  if (status >= BERGE_E_INVALID_ARGUMENT && status <= BERGE_E_IO)
    return berge::error_code_name(static_cast<berge::ErrorCode>(static_cast<int>(status) - 1));
  return "Unknown";
}

const char* berge_last_error(void) { return last_error.c_str(); }
int64_t berge_last_error_position(void) { return last_position; }
void berge_string_free(char* s) { std::free(s); }

berge_status berge_hypergraph_create(int r, int n, const int* flat, size_t num_edges, berge_hypergraph** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    require(flat != nullptr || num_edges == 0, "null edge buffer");
    std::vector<berge::Vertex> v;
    if (r > 0) v.assign(flat, flat + num_edges * static_cast<std::size_t>(r));
    *out = new berge_hypergraph{berge::Hypergraph::from_flat(r, n, std::move(v))};
  });
}

berge_status berge_hypergraph_read_text(const char* text, berge_hypergraph** out) {
  return guard([&] {
    require(text && out, "null argument");
    *out = new berge_hypergraph{berge::read_hypergraph_text(text)};
  });
}

berge_status berge_hypergraph_read_file(const char* path, berge_hypergraph** out) {
  return guard([&] {
    require(path && out, "null argument");
    *out = new berge_hypergraph{berge::read_hypergraph_file(path)};
  });
}

berge_status berge_hypergraph_write_file(const berge_hypergraph* h, const char* path) {
  return guard([&] {
    require(h && path, "null argument");
    berge::write_hypergraph_file(h->h, path);
  });
}

berge_status berge_hypergraph_to_text(const berge_hypergraph* h, char** out) {
  return guard([&] {
    require(h && out, "null argument");
    *out = dup(berge::write_hypergraph(h->h));
  });
}

void berge_hypergraph_free(berge_hypergraph* h) { delete h; }

int berge_hypergraph_order(const berge_hypergraph* h) { return h ? h->h.order() : 0; }
int berge_hypergraph_uniformity(const berge_hypergraph* h) { return h ? h->h.uniformity() : 0; }
size_t berge_hypergraph_size(const berge_hypergraph* h) { return h ? h->h.size() : 0; }
int berge_hypergraph_duplicates_collapsed(const berge_hypergraph* h) { return h && h->h.duplicates_collapsed(); }

berge_status berge_hypergraph_edge(const berge_hypergraph* h, size_t i, int* out) {
  return guard([&] {
    require(h && out, "null argument");
    if (i >= h->h.size())
      throw berge::Error(berge::ErrorCode::IndexOutOfRange, "edge index " + std::to_string(i) + " out of range");
    auto e = h->h.edge(i);
    std::copy(e.begin(), e.end(), out);
  });
}

berge_status berge_pattern_parse(const char* expr, berge_pattern** out) {
  return guard([&] {
    require(expr && out, "null argument");
    *out = new berge_pattern{berge::parse_pattern(expr)};
  });
}

void berge_pattern_free(berge_pattern* p) { delete p; }
int berge_pattern_num_vertices(const berge_pattern* p) { return p ? p->p.num_vertices : 0; }
size_t berge_pattern_num_edges(const berge_pattern* p) { return p ? p->p.num_edges() : 0; }
const char* berge_pattern_tag(const berge_pattern* p) { return p ? p->p.kind_tag.c_str() : ""; }

berge_status berge_find_embedding(const berge_hypergraph* h, const berge_pattern* f, uint64_t budget,
                                  berge_search_status* status, char** certificate_json, uint64_t* nodes) {
  return guard([&] {
    require(h && f, "null argument");
    report_embedding(berge::find_berge_embedding(h->h, f->p, budget), status, certificate_json, nodes);
  });
}

berge_status berge_find_cycle(const berge_hypergraph* h, int length, uint64_t budget, berge_search_status* status,
                              char** certificate_json, uint64_t* nodes) {
  return guard([&] {
    require(h != nullptr, "null argument");
    report_embedding(berge::find_berge_cycle(h->h, length, budget), status, certificate_json, nodes);
  });
}

berge_status berge_verify_certificate(const berge_hypergraph* h, const char* certificate_json, int* valid) {
  return guard([&] {
    require(h && certificate_json && valid, "null argument");
    *valid = berge::verify_certificate(h->h, berge::certificate_from_json(certificate_json)) ? 1 : 0;
  });
}

berge_status berge_longest_path(const berge_hypergraph* h, uint64_t budget, char** result_json) {
  return guard([&] {
    require(h && result_json, "null argument");
    auto r = berge::longest_berge_path(h->h, budget);
    json j;
    j["length"] = r.length;
    j["exact"] = r.exact;
    j["nodes"] = r.nodes;
    j["certificate"] = r.length > 0 ? json::parse(berge::certificate_to_json(r.witness)) : json(nullptr);
    *result_json = dup(j.dump());
  });
}

berge_status berge_good_order(const berge_hypergraph* h, int first, int* out, size_t capacity, size_t* length) {
  return guard([&] {
    require(h != nullptr, "null argument");
    copy_out(berge::good_order(h->h, first).ordering, out, capacity, length);
  });
}

berge_status berge_is_good_order(const berge_hypergraph* h, const int* order, size_t length, int* good) {
  return guard([&] {
    require(h && good && (order || length == 0), "null argument");
    *good = berge::is_good_order(h->h, std::vector<berge::Vertex>(order, order + length)) ? 1 : 0;
  });
}

berge_status berge_common_neighbours(const berge_hypergraph* h, const int* v0, size_t v0_length, int* out,
                                     size_t capacity, size_t* length) {
  return guard([&] {
    require(h && (v0 || v0_length == 0), "null argument");
    copy_out(berge::berge_common_neighbours(h->h, std::vector<berge::Vertex>(v0, v0 + v0_length)), out, capacity,
             length);
  });
}

berge_status berge_star(const berge_hypergraph* h, int x, int l, char** result_json) {
  return guard([&] {
    require(h && result_json, "null argument");
    auto s = berge::berge_star_exists(h->h, x, l);
    json j;
    j["exists"] = s.exists;
    j["degree"] = s.degree;
    j["degree_condition"] = s.degree_condition;
    j["certificate"] = s.certificate ? json::parse(berge::certificate_to_json(*s.certificate)) : json(nullptr);
    *result_json = dup(j.dump());
  });
}

berge_status berge_extremal_construction(int64_t n, int64_t r, int64_t l, int64_t k, berge_hypergraph** out,
                                         char** layout_json) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    auto c = berge::extremal_construction(berge::FormulaParams{n, r, l, k});
    std::string layout = berge::layout_to_json(c.layout);
    char* layout_copy = layout_json ? dup(layout) : nullptr;
    *out = new berge_hypergraph{std::move(c.hypergraph)};
    if (layout_json) *layout_json = layout_copy;
  });
}

berge_status berge_block_construction(int n, int l, int r, berge_hypergraph** out) {
  return guard([&] {
    require(out != nullptr, "null output handle");
    *out = new berge_hypergraph{berge::block_construction(n, l, r)};
  });
}

berge_status berge_construction_audit(const berge_hypergraph* h, const char* layout_json, char** report_json,
                                      int* pass) {
  return guard([&] {
    require(h && layout_json, "null argument");
    auto report = berge::construction_audit(h->h, berge::layout_from_json(layout_json));
    if (pass) *pass = report.pass ? 1 : 0;
    put(report_json, berge::audit_to_json(report));
  });
}

berge_status berge_formula(const char* name, const char* params_json, char** result_json) {
  return guard([&] {
    require(name && params_json && result_json, "null argument");
    *result_json = dup(formula_json(name, json::parse(params_json)).dump());
  });
}

berge_status berge_verify_lemma(const char* lemma, const char* grid_json, char** report_json, char** csv) {
  return guard([&] {
    require(lemma != nullptr, "null argument");
    auto id = berge::lemma_from_name(lemma);
    if (!id) throw berge::Error(berge::ErrorCode::InvalidArgument, std::string("unknown lemma ") + lemma);
    berge::LemmaGrid grid = berge::default_grid(*id);
    if (grid_json) {
      const json g = json::parse(grid_json);
      grid.r_min = g.value("r_min", grid.r_min);
      grid.r_max = g.value("r_max", grid.r_max);
      grid.k_min = g.value("k_min", grid.k_min);
      grid.k_max = g.value("k_max", grid.k_max);
      grid.l_min = g.value("l_min", grid.l_min);
      grid.l_max = g.value("l_max", grid.l_max);
    }
    auto rep = berge::verify_lemma(*id, grid);
    json j;
    j["lemma"] = berge::lemma_name(rep.lemma);
    j["strict"] = rep.strict;
    j["cells"] = rep.cells;
    j["grid"] = {{"r_min", grid.r_min}, {"r_max", grid.r_max}, {"k_min", grid.k_min},
                 {"k_max", grid.k_max}, {"l_min", grid.l_min}, {"l_max", grid.l_max}};
    json v = json::array();
    for (const auto& row : rep.violations) v.push_back(row_json(row));
    j["violations"] = std::move(v);
    j["margin_min"] = rep.margin_min ? json(frac(*rep.margin_min)) : json(nullptr);
    j["holds"] = rep.violations.empty();
    put(report_json, j.dump());
    put(csv, berge::lemma_csv_rows(rep));
  });
}

void berge_search_options_init(berge_search_options* opts) {
  if (!opts) return;
  const berge::SearchOptions d;
  opts->connected_only = d.connected_only;
  opts->node_budget = d.node_budget;
  opts->witness_limit = d.witness_limit;
  opts->symmetry_pruning = d.symmetry_pruning;
  opts->threads = d.threads;
  opts->max_candidates = d.max_candidates;
}

berge_status berge_exact_turan(int n, int r, const berge_pattern* f, const berge_search_options* opts,
                               char** result_json) {
  return guard([&] {
    require(f && result_json, "null argument");
    const berge::SearchOptions o = to_options(opts);
    json j = search_json(berge::exact_turan(n, r, f->p, o));
    j["n"] = n;
    j["r"] = r;
    j["pattern"] = f->p.kind_tag;
    j["connected_only"] = o.connected_only;
    *result_json = dup(j.dump());
  });
}

berge_status berge_is_maximal_free(const berge_hypergraph* h, const berge_pattern* f, int* maximal) {
  return guard([&] {
    require(h && f && maximal, "null argument");
    *maximal = berge::is_maximal_free(h->h, f->p) ? 1 : 0;
  });
}

berge_status berge_compare_with_formula(int n, int r, int k, int l, const berge_search_options* opts,
                                        char** result_json, char** csv_row) {
  return guard([&] {
    auto c = berge::compare_with_formula(n, r, k, l, to_options(opts));
    json j;
    j["n"] = n;
    j["r"] = r;
    j["k"] = k;
    j["l"] = l;
    j["search"] = search_json(c.search);
    j["formula_value"] = c.formula_value.str();
    j["within_hypotheses"] = c.within_hypotheses;
    j["construction_fits"] = c.construction_fits;
    j["lower_bound_holds"] = c.lower_bound_holds;
    j["difference"] = c.difference.str();
    put(result_json, j.dump());
    put(csv_row, berge::comparison_csv_row(c));
  });
}

const char* berge_compare_csv_header(void) {
  static const std::string header = berge::comparison_csv_header();
  return header.c_str();
}

}  // extern "C"
