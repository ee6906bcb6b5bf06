#include "berge/hypercore.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <numeric>
#include <sstream>

namespace berge {

namespace {

constexpr std::int64_t kMaxPatternNumber = 1'000'000;
constexpr std::int64_t kMaxPatternVertices = 10'000'000;

}  // namespace

Hypergraph Hypergraph::from_flat(int r, int n, std::vector<Vertex> flat) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "uniformity must be at least 2, got " + std::to_string(r));
  if (n < r)
    throw Error(ErrorCode::InvalidArgument,
                "vertex count " + std::to_string(n) + " is smaller than uniformity " + std::to_string(r));
  if (flat.size() % static_cast<std::size_t>(r) != 0)
    throw Error(ErrorCode::NonUniformEdge, "flat edge buffer is not a multiple of r");

  const std::size_t ur = static_cast<std::size_t>(r);
  const std::size_t m = flat.size() / ur;
  for (std::size_t i = 0; i < m; ++i) {
    auto first = flat.begin() + static_cast<std::ptrdiff_t>(i * ur);
    auto last = first + r;
    std::sort(first, last);
    for (auto it = first; it != last; ++it) {
      if (*it < 1 || *it > n)
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(*it) + " outside 1.." + std::to_string(n) + " in edge " + std::to_string(i));
    }
    if (std::adjacent_find(first, last) != last)
      throw Error(ErrorCode::NonUniformEdge, "edge " + std::to_string(i) + " has a repeated vertex");
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(flat.begin() + static_cast<std::ptrdiff_t>(a * ur),
                                        flat.begin() + static_cast<std::ptrdiff_t>((a + 1) * ur),
                                        flat.begin() + static_cast<std::ptrdiff_t>(b * ur),
                                        flat.begin() + static_cast<std::ptrdiff_t>((b + 1) * ur));
  };
  if (!std::is_sorted(order.begin(), order.end(), less)) std::sort(order.begin(), order.end(), less);

  Hypergraph h;
  h.n_ = n;
  h.r_ = r;
  h.flat_.reserve(flat.size());
  for (std::size_t idx = 0; idx < m; ++idx) {
    const std::size_t e = order[idx];
    auto first = flat.begin() + static_cast<std::ptrdiff_t>(e * ur);
    if (idx > 0 && std::equal(first, first + r, h.flat_.end() - r)) {
      h.duplicates_collapsed_ = true;
      continue;
    }
    h.flat_.insert(h.flat_.end(), first, first + r);
  }
  return h;
}

Hypergraph make_hypergraph(int r, int n, const std::vector<std::vector<Vertex>>& raw_edges) {
  if (r < 2) throw Error(ErrorCode::InvalidArgument, "uniformity must be at least 2, got " + std::to_string(r));
  std::vector<Vertex> flat;
  flat.reserve(raw_edges.size() * static_cast<std::size_t>(r));
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    const auto& e = raw_edges[i];
    for (Vertex v : e)
      if (v < 1 || v > n)
        throw Error(ErrorCode::VertexOutOfRange,
                    "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n) + " in edge " + std::to_string(i));
    std::vector<Vertex> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() != static_cast<std::size_t>(r))
      throw Error(ErrorCode::NonUniformEdge, "edge " + std::to_string(i) + " has " + std::to_string(sorted.size()) +
                                                 " distinct vertices, expected " + std::to_string(r));
    flat.insert(flat.end(), sorted.begin(), sorted.end());
  }
  return Hypergraph::from_flat(r, n, std::move(flat));
}

Hypergraph canonical(const Hypergraph& h) {
  std::vector<Vertex> flat;
  flat.reserve(h.size() * static_cast<std::size_t>(h.uniformity()));
  for (std::size_t i = 0; i < h.size(); ++i) flat.insert(flat.end(), h.edge(i).begin(), h.edge(i).end());
  return Hypergraph::from_flat(h.uniformity(), h.order(), std::move(flat));
}

std::vector<std::vector<Vertex>> Hypergraph::edge_lists() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.emplace_back(edge(i).begin(), edge(i).end());
  return out;
}

std::optional<std::size_t> Hypergraph::find_edge(std::span<const Vertex> sorted_edge) const {
  if (sorted_edge.size() != static_cast<std::size_t>(r_)) return std::nullopt;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    auto e = edge(mid);
    if (std::lexicographical_compare(e.begin(), e.end(), sorted_edge.begin(), sorted_edge.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < size() && std::equal(sorted_edge.begin(), sorted_edge.end(), edge(lo).begin())) return lo;
  return std::nullopt;
}

int Hypergraph::degree(Vertex v) const noexcept { return static_cast<int>(std::count(flat_.begin(), flat_.end(), v)); }

std::vector<Vertex> Hypergraph::incident_vertices() const {
  std::vector<char> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (Vertex v : flat_) seen[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> out;
  for (Vertex v = 1; v <= n_; ++v)
    if (seen[static_cast<std::size_t>(v)]) out.push_back(v);
  return out;
}

Hypergraph Hypergraph::subhypergraph(const std::vector<std::size_t>& keep) const {
  std::vector<Vertex> flat;
  flat.reserve(keep.size() * static_cast<std::size_t>(r_));
  for (std::size_t i : keep) {
    if (i >= size()) throw Error(ErrorCode::IndexOutOfRange, "edge index " + std::to_string(i) + " out of range");
    flat.insert(flat.end(), edge(i).begin(), edge(i).end());
  }
  return from_flat(r_, n_, std::move(flat));
}

Hypergraph Hypergraph::without_edge(std::size_t index) const {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < size(); ++i)
    if (i != index) keep.push_back(i);
  return subhypergraph(keep);
}

Hypergraph Hypergraph::with_edge(std::vector<Vertex> e) const {
  auto lists = edge_lists();
  lists.push_back(std::move(e));
  return make_hypergraph(r_, n_, lists);
}

// --- patterns --------------------------------------------------------------

std::optional<std::size_t> PatternGraph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == u && edges[i].second == v) return i;
  return std::nullopt;
}

std::vector<int> PatternGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(num_vertices), 0);
  for (auto [u, v] : edges) {
    ++deg[static_cast<std::size_t>(u - 1)];
    ++deg[static_cast<std::size_t>(v - 1)];
  }
  return deg;
}

namespace {

void append_component(PatternGraph& g, ComponentKind kind, int length) {
  const int base = g.num_vertices;
  int nv = 0;
  switch (kind) {
    case ComponentKind::Path:
    case ComponentKind::Matching:
      nv = length + 1;
      for (int i = 1; i <= length; ++i) g.edges.emplace_back(base + i, base + i + 1);
      break;
    case ComponentKind::Cycle:
      nv = length;
      for (int i = 1; i < length; ++i) g.edges.emplace_back(base + i, base + i + 1);
      g.edges.emplace_back(base + 1, base + length);
      break;
    case ComponentKind::Star:
      nv = length + 1;
      for (int i = 1; i <= length; ++i) g.edges.emplace_back(base + 1, base + 1 + i);
      break;
  }
  g.components.push_back({kind, length, base + 1, nv});
  g.num_vertices += nv;
}

class PatternParser {
 public:
  explicit PatternParser(std::string_view s) : s_(s) {}

  PatternGraph parse() {
    PatternGraph g;
    skip_ws();
    if (pos_ == s_.size()) fail("empty pattern expression");
    while (true) {
      term(g);
      skip_ws();
      if (pos_ == s_.size()) break;
      if (s_[pos_] != '+') fail(std::string("expected '+' but found '") + s_[pos_] + "'");
      ++pos_;
      skip_ws();
      if (pos_ == s_.size()) fail("expected a term after '+'");
    }
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError, "pattern parse error at offset " + std::to_string(pos_) + ": " + msg,
                static_cast<std::int64_t>(pos_));
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' || s_[pos_] == '\r')) ++pos_;
  }

  bool at_digit() const { return pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9'; }

  std::int64_t number() {
    const std::size_t start = pos_;
    if (!at_digit()) fail("expected a positive integer");
    std::int64_t value = 0;
    while (at_digit()) {
      value = value * 10 + (s_[pos_] - '0');
      if (value > kMaxPatternNumber) {
        pos_ = start;
        fail("integer exceeds " + std::to_string(kMaxPatternNumber));
      }
      ++pos_;
    }
    if (value == 0) {
      pos_ = start;
      fail("integers must be positive");
    }
    return value;
  }

  void term(PatternGraph& g) {
    std::int64_t copies = 1;
    bool has_multiplier = false;
    if (at_digit()) {
      copies = number();
      has_multiplier = true;
      skip_ws();
    }
    if (pos_ == s_.size()) fail("expected one of P, C, S, M");
    const char kind = s_[pos_];
    const std::size_t kind_pos = pos_;
    if (kind != 'P' && kind != 'C' && kind != 'S' && kind != 'M') fail(std::string("unknown term letter '") + kind + "'");
    if (has_multiplier && kind != 'P') fail("a multiplier is only allowed before P");
    ++pos_;
    skip_ws();
    const std::int64_t len = number();

    std::int64_t added_vertices = 0;
    switch (kind) {
      case 'P': added_vertices = copies * (len + 1); break;
      case 'C': added_vertices = len; break;
      case 'S': added_vertices = len + 1; break;
      case 'M': added_vertices = 2 * len; break;
    }
    if (g.num_vertices + added_vertices > kMaxPatternVertices) fail("pattern too large");

    if (!g.kind_tag.empty()) g.kind_tag += '+';
    switch (kind) {
      case 'P':
        for (std::int64_t i = 0; i < copies; ++i) append_component(g, ComponentKind::Path, static_cast<int>(len));
        g.kind_tag += (copies > 1 ? std::to_string(copies) : std::string()) + "P" + std::to_string(len);
        break;
      case 'C':
        if (len < 3)
          throw Error(ErrorCode::InvalidCycleLength,
                      "cycle length must be at least 3, got " + std::to_string(len) + " at offset " +
                          std::to_string(kind_pos),
                      static_cast<std::int64_t>(kind_pos));
        append_component(g, ComponentKind::Cycle, static_cast<int>(len));
        g.kind_tag += "C" + std::to_string(len);
        break;
      case 'S':
        append_component(g, ComponentKind::Star, static_cast<int>(len));
        g.kind_tag += "S" + std::to_string(len);
        break;
      case 'M':
        for (std::int64_t i = 0; i < len; ++i) append_component(g, ComponentKind::Matching, 1);
        g.kind_tag += "M" + std::to_string(len);
        break;
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

PatternGraph parse_pattern(std::string_view expr) { return PatternParser(expr).parse(); }

PatternGraph path_pattern(int length, int copies) {
  if (length < 1 || copies < 1) throw Error(ErrorCode::InvalidArgument, "path length and copies must be positive");
  PatternGraph g;
  for (int i = 0; i < copies; ++i) append_component(g, ComponentKind::Path, length);
  g.kind_tag = (copies > 1 ? std::to_string(copies) : std::string()) + "P" + std::to_string(length);
  return g;
}

PatternGraph cycle_pattern(int length) {
  if (length < 3)
    throw Error(ErrorCode::InvalidCycleLength, "cycle length must be at least 3, got " + std::to_string(length));
  PatternGraph g;
  append_component(g, ComponentKind::Cycle, length);
  g.kind_tag = "C" + std::to_string(length);
  return g;
}

PatternGraph star_pattern(int leaves) {
  if (leaves < 1) throw Error(ErrorCode::InvalidArgument, "star needs at least one leaf");
  PatternGraph g;
  append_component(g, ComponentKind::Star, leaves);
  g.kind_tag = "S" + std::to_string(leaves);
  return g;
}

// --- .hg format ------------------------------------------------------------

namespace {

[[noreturn]] void format_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::FormatError, "line " + std::to_string(line) + ": " + msg, static_cast<std::int64_t>(line));
}

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t'))
      format_error(line_no, "expected an integer");
    out.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

Hypergraph read_hypergraph_text(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      format_error(lines.size(), "missing trailing newline");
    }
    std::string_view line = text.substr(start, nl - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = nl + 1;
  }

  std::size_t idx = 0;
  auto next_content = [&]() -> std::optional<std::size_t> {
    while (idx < lines.size() && !lines[idx].empty() && lines[idx].front() == '#') ++idx;
    if (idx == lines.size()) return std::nullopt;
    return idx++;
  };

  auto header_idx = next_content();
  if (!header_idx) format_error(lines.size() + 1, "missing header line \"r n m\"");
  const std::size_t header_line = *header_idx + 1;
  auto header = parse_ints(lines[*header_idx], header_line);
  if (header.size() != 3) format_error(header_line, "header must contain exactly three integers \"r n m\"");
  const long long r = header[0], n = header[1], m = header[2];
  if (r < 2) format_error(header_line, "uniformity must be at least 2");
  if (n < r) format_error(header_line, "vertex count smaller than uniformity");
  if (m < 0) format_error(header_line, "negative edge count");
  if (n > 100'000'000 || r > 1'000'000) format_error(header_line, "header values too large");

  std::vector<Vertex> flat;
  for (long long e = 0; e < m; ++e) {
    auto li = next_content();
    if (!li) format_error(lines.size() + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(e));
    const std::size_t line_no = *li + 1;
    auto vs = parse_ints(lines[*li], line_no);
    if (vs.size() != static_cast<std::size_t>(r))
      format_error(line_no, "edge has " + std::to_string(vs.size()) + " vertices, expected " + std::to_string(r));
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (vs[j] < 1 || vs[j] > n) format_error(line_no, "vertex " + std::to_string(vs[j]) + " out of range");
      if (j > 0 && vs[j] <= vs[j - 1]) format_error(line_no, "edge vertices must be strictly ascending");
      flat.push_back(static_cast<Vertex>(vs[j]));
    }
  }
  if (auto extra = next_content()) format_error(*extra + 1, "unexpected content after the last edge");
  return Hypergraph::from_flat(static_cast<int>(r), static_cast<int>(n), std::move(flat));
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_hypergraph_text(text);
}

Hypergraph read_hypergraph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_hypergraph(in);
}

std::string write_hypergraph(const Hypergraph& h) {
  std::string out = std::to_string(h.uniformity()) + " " + std::to_string(h.order()) + " " + std::to_string(h.size()) + "\n";
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto e = h.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(e[j]);
    }
    out += '\n';
  }
  return out;
}

void write_hypergraph_file(const Hypergraph& h, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << write_hypergraph(h);
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

}  // namespace berge
