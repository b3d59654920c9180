#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "starsat/graph.hpp"

namespace starsat {

// Text format: header "n m", then m lines "u v" with u < v, lexicographic order.
std::string write_edge_list(const Graph& g);
void write_edge_list(const Graph& g, std::ostream& out);

// Accepts either orientation of each edge line and blank trailing lines.
// Throws ParseError naming the offending line.
Graph read_edge_list(std::string_view text);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& path);

// FNV-1a 64 over write_edge_list(g); identifies the host of a certificate.
std::uint64_t graph_hash(const Graph& g);

}  // namespace starsat
