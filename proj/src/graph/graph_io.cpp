#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include "planted/error.hpp"
#include "planted/graph.hpp"

namespace planted {

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> vertex_count;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    std::istringstream fields(body);
    if (!vertex_count) {
      std::string tag;
      long long n = -1;
      fields >> tag >> n;
      std::string extra;
      if (tag != "n" || fields.fail() || n < 0 || (fields >> extra)) {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'n <vertex_count>'");
      }
      vertex_count = static_cast<std::size_t>(n);
      continue;
    }
    long long u = -1;
    long long v = -1;
    fields >> u >> v;
    std::string extra;
    if (fields.fail() || (fields >> extra)) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    if (u < 0 || v < 0) {
      fail(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": negative vertex");
    }
    pairs.emplace_back(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  if (!vertex_count) fail(ErrorCode::ParseError, "missing 'n <vertex_count>' header");
  return from_edge_list(*vertex_count, pairs);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace planted
