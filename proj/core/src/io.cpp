#include "pvc/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "pvc/errors.hpp"

namespace pvc {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

int parse_int(std::string_view tok, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(line_no, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

struct Header {
  int n = 0;
  int m = 0;
};

// Shared line loop for the three formats. `on_header` sees `p <kind> a b`,
// `on_record` sees every other non-comment line.
template <typename OnRecord>
std::optional<Header> scan(std::istream& in, std::string_view kind, std::string* first_comment,
                           OnRecord&& on_record) {
  std::optional<Header> header;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") {
      if (first_comment && first_comment->empty()) {
        const auto pos = line.find('c');
        std::string rest = line.substr(pos + 1);
        const auto start = rest.find_first_not_of(" \t");
        rest = start == std::string::npos ? std::string{} : rest.substr(start);
        while (!rest.empty() && (rest.back() == '\r' || rest.back() == ' ')) rest.pop_back();
        *first_comment = rest;
      }
      continue;
    }
    if (tok[0] == "p") {
      if (header) fail(line_no, "duplicate header");
      if (tok.size() != 4 || tok[1] != kind) {
        fail(line_no, "expected header 'p " + std::string(kind) + " <n> <m>'");
      }
      header = Header{parse_int(tok[2], line_no), parse_int(tok[3], line_no)};
      if (header->n < 0 || header->m < 0) fail(line_no, "negative count in header");
      if (header->n > kMaxVertices) {
        throw CapacityError("line " + std::to_string(line_no) + ": " + std::to_string(header->n) +
                            " vertices exceeds the limit of " + std::to_string(kMaxVertices));
      }
      continue;
    }
    if (!header && kind != "lvl") fail(line_no, "record before header");
    on_record(tok, line_no);
  }
  return header;
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

}  // namespace

Hypergraph read_phg(std::istream& in) {
  std::string name;
  std::vector<std::vector<int>> edges;
  int n = 0;
  const auto header = scan(in, "phg", &name, [&](const auto& tok, std::size_t line_no) {
    if (tok[0] != "e") fail(line_no, "unknown record '" + std::string(tok[0]) + "'");
    std::vector<int> e;
    for (std::size_t i = 1; i < tok.size(); ++i) e.push_back(parse_int(tok[i], line_no));
    edges.push_back(std::move(e));
  });
  if (!header) throw InputError("missing 'p phg' header");
  n = header->n;
  if (static_cast<int>(edges.size()) != header->m) {
    throw InputError("header declares " + std::to_string(header->m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return build_hypergraph(n, edges, name);
}

Hypergraph read_phg_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_phg(in);
}

void write_phg(std::ostream& out, const Hypergraph& h) {
  if (!h.name().empty()) out << "c " << h.name() << '\n';
  out << "p phg " << h.num_vertices() << ' ' << h.num_edges() << '\n';
  for (const auto& e : h.edges()) {
    out << 'e';
    for (int v : members(e)) out << ' ' << v + 1;
    out << '\n';
  }
}

std::string to_phg_string(const Hypergraph& h) {
  std::ostringstream out;
  write_phg(out, h);
  return out.str();
}

Graph read_edge_graph(std::istream& in) {
  std::vector<Edge> edges;
  const auto header = scan(in, "edge", nullptr, [&](const auto& tok, std::size_t line_no) {
    if (tok[0] != "e" || tok.size() != 3) fail(line_no, "expected 'e <u> <v>'");
    edges.emplace_back(parse_int(tok[1], line_no) - 1, parse_int(tok[2], line_no) - 1);
  });
  if (!header) throw InputError("missing 'p edge' header");
  if (static_cast<int>(edges.size()) != header->m) {
    throw InputError("header declares " + std::to_string(header->m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph::from_edges(header->n, edges);
}

Graph read_edge_graph_file(const std::filesystem::path& path) {
  auto in = open(path);
  return read_edge_graph(in);
}

void write_edge_graph(std::ostream& out, const Graph& g) {
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::vector<int> read_levels(std::istream& in, int num_vertices) {
  std::vector<int> levels(static_cast<std::size_t>(num_vertices), 0);
  scan(in, "lvl", nullptr, [&](const auto& tok, std::size_t line_no) {
    if (tok[0] != "l" || tok.size() != 3) fail(line_no, "expected 'l <vertex> <level>'");
    const int v = parse_int(tok[1], line_no);
    const int level = parse_int(tok[2], line_no);
    if (v < 1 || v > num_vertices) fail(line_no, "vertex " + std::to_string(v) + " out of range");
    if (level < 1) fail(line_no, "levels start at 1");
    auto& slot = levels[static_cast<std::size_t>(v - 1)];
    if (slot != 0) fail(line_no, "vertex " + std::to_string(v) + " listed twice");
    slot = level;
  });
  for (int v = 0; v < num_vertices; ++v) {
    if (levels[static_cast<std::size_t>(v)] == 0) {
      throw InputError("no level given for vertex " + std::to_string(v + 1));
    }
  }
  return levels;
}

std::vector<int> read_levels_file(const std::filesystem::path& path, int num_vertices) {
  auto in = open(path);
  return read_levels(in, num_vertices);
}

void write_levels(std::ostream& out, const std::vector<int>& levels) {
  for (std::size_t v = 0; v < levels.size(); ++v) out << "l " << v + 1 << ' ' << levels[v] << '\n';
}

std::string read_text_file(const std::filesystem::path& path) {
  auto in = open(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace pvc
