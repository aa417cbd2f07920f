#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "odiam/error.hpp"
#include "odiam/io.hpp"

namespace odiam {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> fields;
};

// Non-empty lines split on single-space/tab runs; CR is tolerated.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
      if (j > i) l.fields.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.fields.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

template <typename T>
T to_number(std::string_view s, int line) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) parse_fail(line, "expected a number, got '" + std::string(s) + "'");
  return value;
}

void expect_fields(const Line& l, std::size_t k) {
  if (l.fields.size() != k)
    parse_fail(l.number, "expected " + std::to_string(k) + " fields, got " + std::to_string(l.fields.size()));
}

}  // namespace

Multigraph parse_edge_list(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) parse_fail(1, "empty input");
  expect_fields(lines[0], 2);
  int n = to_number<int>(lines[0].fields[0], lines[0].number);
  int m = to_number<int>(lines[0].fields[1], lines[0].number);
  if (n < 0 || m < 0) parse_fail(lines[0].number, "negative size");
  if (static_cast<int>(lines.size()) - 1 != m)
    parse_fail(lines.back().number, "header announces " + std::to_string(m) + " edges, found " +
                                        std::to_string(lines.size() - 1));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_fields(l, 2);
    VertexId a = to_number<int>(l.fields[0], l.number);
    VertexId b = to_number<int>(l.fields[1], l.number);
    std::string where = "line " + std::to_string(l.number);
    if (a == b) throw Error(ErrorCode::kLoopEdge, where + ": loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n) throw Error(ErrorCode::kVertexOutOfRange, where + ": vertex out of range");
    edges.emplace_back(a, b);
  }
  return build_graph(n, edges);
}

std::string write_edge_list(const Multigraph& g) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.ends(e);
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::stable_sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : edges) out << a << ' ' << b << '\n';
  return out.str();
}

Multigraph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::kParseError, "graph6: empty input");
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw Error(ErrorCode::kParseError, "graph6: truncated input");
    int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw Error(ErrorCode::kParseError, "graph6: byte out of range at " + std::to_string(pos));
    return c - 63;
  };
  long long n = 0;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int width = 3;
    if (pos < text.size() && text[pos] == 126) {
      ++pos;
      width = 6;
    }
    for (int i = 0; i < width; ++i) n = (n << 6) | next();
  }
  if (n > 100000) throw Error(ErrorCode::kParseError, "graph6: vertex count too large");
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes)
    throw Error(ErrorCode::kParseError, "graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                                            std::to_string(text.size() - pos));
  std::vector<std::pair<VertexId, VertexId>> edges;
  long long k = 0;
  int chunk = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) chunk = next();
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  if (k % 6 != 0 && (chunk & ((1 << (6 - k % 6)) - 1)) != 0)
    throw Error(ErrorCode::kParseError, "graph6: non-zero padding bits");
  return build_graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Multigraph& g) {
  const long long n = g.vertex_count();
  std::vector<bool> bit(static_cast<std::size_t>(n * (n - 1) / 2));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (g.has_parallel_twin(e)) throw Error(ErrorCode::kUnsupported, "graph6 cannot hold parallel edges");
    long long i = std::min(g.ends(e).a, g.ends(e).b);
    long long j = std::max(g.ends(e).a, g.ends(e).b);
    bit[static_cast<std::size_t>(j * (j - 1) / 2 + i)] = true;
  }
  std::string out;
  auto put = [&](long long v) { out.push_back(static_cast<char>(63 + v)); };
  if (n < 63) {
    put(n);
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) put((n >> s) & 63);
  } else {
    out.append(2, 126);
    for (int s = 30; s >= 0; s -= 6) put((n >> s) & 63);
  }
  for (std::size_t k = 0; k < bit.size(); k += 6) {
    int chunk = 0;
    for (std::size_t t = 0; t < 6; ++t) chunk = (chunk << 1) | (k + t < bit.size() && bit[k + t] ? 1 : 0);
    put(chunk);
  }
  out.push_back('\n');
  return out;
}

std::string write_orientation(const Digraph& d) {
  std::ostringstream out;
  out << "orientation " << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (EdgeId e = 0; e < d.arc_count(); ++e) out << e << ' ' << d.arc(e).tail << ' ' << d.arc(e).head << '\n';
  return out.str();
}

Digraph parse_orientation(std::string_view text, const Multigraph& g) {
  auto lines = split_lines(text);
  if (lines.empty()) parse_fail(1, "empty orientation");
  const Line& h = lines[0];
  expect_fields(h, 3);
  if (h.fields[0] != "orientation") parse_fail(h.number, "missing 'orientation' header");
  int n = to_number<int>(h.fields[1], h.number);
  int m = to_number<int>(h.fields[2], h.number);
  if (n != g.vertex_count() || m != g.edge_count())
    throw Error(ErrorCode::kEndpointMismatch, "orientation header does not match the graph");
  std::vector<std::optional<Arc>> arcs(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& l = lines[i];
    expect_fields(l, 3);
    EdgeId e = to_number<int>(l.fields[0], l.number);
    VertexId t = to_number<int>(l.fields[1], l.number);
    VertexId hd = to_number<int>(l.fields[2], l.number);
    if (e < 0 || e >= m) parse_fail(l.number, "edge id out of range");
    const EdgeEnds& en = g.ends(e);
    if (!((t == en.a && hd == en.b) || (t == en.b && hd == en.a)))
      throw Error(ErrorCode::kEndpointMismatch, "line " + std::to_string(l.number) + ": edge " + std::to_string(e) +
                                                    " does not join " + std::to_string(t) + " and " + std::to_string(hd));
    if (arcs[static_cast<std::size_t>(e)] && !(*arcs[static_cast<std::size_t>(e)] == Arc{t, hd}))
      throw Error(ErrorCode::kConflictingDirection, "line " + std::to_string(l.number) + ": edge given twice");
    arcs[static_cast<std::size_t>(e)] = Arc{t, hd};
  }
  std::vector<Arc> out;
  for (EdgeId e = 0; e < m; ++e) {
    if (!arcs[static_cast<std::size_t>(e)])
      throw Error(ErrorCode::kIncompleteOrientation, "edge " + std::to_string(e) + " has no direction");
    out.push_back(*arcs[static_cast<std::size_t>(e)]);
  }
  return Digraph(n, std::move(out));
}

namespace {

const std::string& family_color(const std::string& family) {
  static const std::map<std::string, std::string> kPalette{
      {"u", "#e41a1c"},   {"v", "#377eb8"},   {"A", "#fbb4ae"},  {"A'", "#fddaec"}, {"B", "#b3cde3"},
      {"B'", "#dbe9f6"},  {"I", "#ccebc5"},   {"I'", "#e5f5e0"}, {"J", "#decbe4"},  {"J'", "#efe3f2"},
      {"K", "#fed9a6"},   {"K'", "#fff2e0"},  {"L", "#ffffcc"},  {"L'", "#ffffe8"}, {"S33", "#e5d8bd"},
      {"M", "#d9d9d9"},   {"M'", "#f0f0f0"},
  };
  static const std::string kOther = "#ffffff";
  auto it = kPalette.find(family);
  return it == kPalette.end() ? kOther : it->second;
}

void dot_vertices(std::ostringstream& out, int n, const FinePartition* fine) {
  for (VertexId x = 0; x < n; ++x) {
    out << "  " << x;
    if (fine && x < fine->vertex_count()) {
      const std::string& leaf = fine->leaf[static_cast<std::size_t>(x)];
      out << " [label=\"" << x << "\\n" << leaf << "\", style=filled, fillcolor=\"" << family_color(class_family(leaf))
          << "\"]";
    }
    out << ";\n";
  }
}

}  // namespace

std::string write_dot(const Multigraph& g, const FinePartition* fine) {
  std::ostringstream out;
  out << "graph G {\n";
  dot_vertices(out, g.vertex_count(), fine);
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    out << "  " << g.ends(e).a << " -- " << g.ends(e).b << " [id=\"e" << e << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string write_dot(const Digraph& d, const FinePartition* fine) {
  std::ostringstream out;
  out << "digraph G {\n";
  dot_vertices(out, d.vertex_count(), fine);
  for (EdgeId e = 0; e < d.arc_count(); ++e)
    out << "  " << d.arc(e).tail << " -> " << d.arc(e).head << " [id=\"e" << e << "\"];\n";
  out << "}\n";
  return out.str();
}

std::vector<ManifestEntry> parse_manifest(std::string_view text) {
  std::vector<ManifestEntry> out;
  for (const Line& l : split_lines(text)) {
    if (l.fields[0].front() == '#') continue;
    expect_fields(l, 5);
    std::string spec_text(l.fields[0]);
    if (l.fields[1] != "-") spec_text += ":" + std::string(l.fields[1]);
    ManifestEntry entry;
    try {
      entry.spec = parse_family_spec(spec_text, to_number<std::uint64_t>(l.fields[2], l.number));
    } catch (const Error& e) {
      parse_fail(l.number, e.what());
    }
    entry.expected_d = to_number<int>(l.fields[3], l.number);
    entry.expected_gstar = to_number<int>(l.fields[4], l.number);
    out.push_back(std::move(entry));
  }
  return out;
}

std::string write_manifest(const std::vector<ManifestEntry>& entries) {
  std::ostringstream out;
  for (const ManifestEntry& e : entries) {
    out << e.spec.tag << ' ';
    if (e.spec.params.empty()) out << '-';
    for (std::size_t i = 0; i < e.spec.params.size(); ++i) out << (i ? "," : "") << e.spec.params[i];
    out << ' ' << e.spec.seed << ' ' << e.expected_d << ' ' << e.expected_gstar << '\n';
  }
  return out.str();
}

}  // namespace odiam
