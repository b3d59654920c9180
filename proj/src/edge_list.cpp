#include <algorithm>
#include "starsat/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <vector>

#include "starsat/error.hpp"

namespace starsat {

namespace {

// Parses a line of exactly two nonnegative decimal integers separated by blanks.
bool parse_pair(std::string_view line, std::int64_t& a, std::int64_t& b) {
  auto skip = [&](std::size_t i) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    return i;
  };
  std::size_t i = skip(0);
  auto [p1, ec1] = std::from_chars(line.data() + i, line.data() + line.size(), a);
  if (ec1 != std::errc{} || p1 == line.data() + i) return false;
  std::size_t j = static_cast<std::size_t>(p1 - line.data());
  std::size_t k = skip(j);
  if (k == j) return false;
  auto [p2, ec2] = std::from_chars(line.data() + k, line.data() + line.size(), b);
  if (ec2 != std::errc{} || p2 == line.data() + k) return false;
  return skip(static_cast<std::size_t>(p2 - line.data())) == line.size();
}

bool blank(std::string_view line) { return line.find_first_not_of(" \t\r") == std::string_view::npos; }

}  // namespace

void write_edge_list(const Graph& g, std::ostream& out) { out << write_edge_list(g); }

std::string write_edge_list(const Graph& g) {
  std::string s = std::to_string(g.order()) + ' ' + std::to_string(g.size()) + '\n';
  for (const Edge& e : g.edges()) {
    s += std::to_string(e.u);
    s += ' ';
    s += std::to_string(e.v);
    s += '\n';
  }
  return s;
}

Graph read_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && blank(lines.back())) lines.pop_back();
  if (lines.empty()) throw ParseError(1, "missing header \"n m\"");

  std::int64_t n = 0, m = 0;
  if (!parse_pair(lines[0], n, m) || n < 0 || m < 0) throw ParseError(1, "malformed header, expected \"n m\"");
  if (n > (1 << 30)) throw ParseError(1, "vertex count too large");
  if (static_cast<std::int64_t>(lines.size()) - 1 != m)
    throw ParseError(static_cast<std::size_t>(std::min<std::int64_t>(m + 1, static_cast<std::int64_t>(lines.size()))) + 1,
                     "header announces " + std::to_string(m) + " edges but " +
                                       std::to_string(lines.size() - 1) + " edge lines follow");

  EdgeList edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::int64_t a = 0, b = 0;
    if (!parse_pair(lines[i], a, b)) throw ParseError(i + 1, "malformed edge line, expected \"u v\"");
    if (a >= n || b >= n)
      throw ParseError(i + 1, "vertex id " + std::to_string(a >= n ? a : b) + " >= n=" + std::to_string(n));
    if (a == b) throw ParseError(i + 1, "self-loop at vertex " + std::to_string(a));
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second)
      throw ParseError(i + 1, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    edges.push_back(e);
  }
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

Graph read_edge_list(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return read_edge_list(text);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_edge_list(in);
}

std::uint64_t graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : write_edge_list(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace starsat
