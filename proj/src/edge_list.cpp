#include "kegraph/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "kegraph/errors.hpp"

namespace kegraph {

namespace {

struct Token {
  std::string_view text;
  int line = 0;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && text[i] != '\n' && text[i] != '#' && text[i] != ' ' && text[i] != '\t' &&
             text[i] != '\r') {
        ++i;
      }
      out.push_back(Token{text.substr(start, i - start), line});
    }
  }
  return out;
}

long long to_int(const Token& t) {
  long long value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw InputError("line " + std::to_string(t.line) + ": expected an integer, got '" + std::string(t.text) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const auto tokens = tokenize(text);
  if (tokens.size() < 2) throw InputError("edge list: missing 'n m' header");
  const long long n = to_int(tokens[0]);
  const long long m = to_int(tokens[1]);
  if (n < 0 || m < 0) throw InputError("edge list: negative n or m in header");
  if (n > 1'000'000) throw InputError("edge list: vertex count too large");
  const auto expected = static_cast<std::size_t>(2 + 2 * m);
  if (tokens.size() != expected) {
    throw InputError("edge list: header announces " + std::to_string(m) + " edges but found " +
                     std::to_string((tokens.size() - 2) / 2) + (tokens.size() % 2 ? " and a dangling token" : ""));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 2; i < tokens.size(); i += 2) {
    const long long u = to_int(tokens[i]);
    const long long v = to_int(tokens[i + 1]);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw InputError("line " + std::to_string(tokens[i].line) + ": vertex out of range (n=" + std::to_string(n) +
                       ")");
    }
    if (u == v) throw InputError("line " + std::to_string(tokens[i].line) + ": self-loop");
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string format_edge_list(const Graph& g, std::string_view comment) {
  std::ostringstream out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
  }
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace kegraph
