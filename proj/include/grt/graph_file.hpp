#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "grt/colouring.hpp"
#include "grt/error.hpp"

namespace grt {

/// Text serialisation of a coloured graph. Header "n q"; one line "u v c"
/// per edge-colour incidence with u < v and 0 <= c <= q (0 = uncoloured);
/// lines strictly ascending by (u, v, c); '#' starts a comment line.
inline std::string write_graph_file(const ColouredGraph& cg) {
  std::ostringstream out;
  out << cg.order() << ' ' << cg.colours() << '\n';
  for (int u = 0; u < cg.order(); ++u)
    for (int v = u + 1; v < cg.order(); ++v)
      for (int c = 0; c <= cg.colours(); ++c)
        if (cg.layer(c).has_edge(u, v)) out << u << ' ' << v << ' ' << c << '\n';
  return out.str();
}

inline ColouredGraph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) -> void {
    throw parse_error("graph file, line " + std::to_string(line_no) + ": " + what);
  };

  auto next_line = [&]() -> std::optional<std::string> {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos) continue;  // blank
      if (line[start] == '#') continue;          // comment
      return line;
    }
    return std::nullopt;
  };

  auto header = next_line();
  if (!header) {
    line_no = 0;
    fail("missing header");
  }
  int n = -1, q = -1;
  {
    std::istringstream h(*header);
    std::string extra;
    if (!(h >> n >> q) || (h >> extra)) fail("header must be exactly \"n q\"");
    if (n < 0 || n > kMaxVertices) fail("vertex count out of range");
    if (q < 1) fail("need at least one colour");
  }

  std::vector<Graph> layers(static_cast<std::size_t>(q) + 1, Graph(n));
  std::tuple<int, int, int> previous{-1, -1, -1};
  bool first = true;
  while (auto body = next_line()) {
    std::istringstream b(*body);
    int u = 0, v = 0, c = 0;
    std::string extra;
    if (!(b >> u >> v >> c) || (b >> extra)) fail("edge line must be exactly \"u v c\"");
    if (u < 0 || v < 0 || u >= n || v >= n) fail("vertex out of range");
    if (u >= v) fail("edges need u < v");
    if (c < 0 || c > q) fail("colour out of range");
    std::tuple<int, int, int> key{u, v, c};
    if (!first && key == previous) fail("duplicate edge line");
    if (!first && key < previous) fail("edge lines must be sorted by (u, v, c)");
    previous = key;
    first = false;
    layers[static_cast<std::size_t>(c)].add_edge(u, v);
  }
  return ColouredGraph(std::move(layers));
}

inline void save_graph_file(const ColouredGraph& cg, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
  if (!out) throw parse_error("cannot open for writing: " + path);
  out << write_graph_file(cg);
}

inline ColouredGraph load_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph_file(buffer.str());
}

}  // namespace grt
