#include "rcm/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "rcm/errors.hpp"

namespace rcm {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

bool is_graph6_byte(char c) {
  auto b = static_cast<unsigned char>(c);
  return b >= 63 && b <= 126;
}

std::string_view trim_line_end(std::string_view s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim_line_end(text);
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();

  auto next = [&]() -> std::uint64_t {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    if (!is_graph6_byte(text[pos])) throw ParseError("graph6: byte outside 63..126", pos);
    return static_cast<unsigned char>(text[pos++]) - 63U;
  };

  std::uint64_t n = next();
  if (n == 63) {
    if (pos < text.size() && text[pos] == '~') {
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
  }
  if (n > 100000) throw ParseError("graph6: vertex count too large", 0);

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t bits = 0;
  int avail = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      if (avail == 0) {
        bits = next();
        avail = 6;
      }
      --avail;
      if ((bits >> avail) & 1U) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  if (pos != text.size()) throw ParseError("graph6: trailing bytes", pos);
  return g;
}

std::string to_graph6(const Graph& g) {
  std::vector<VertexId> ids = g.vertices().to_vector();
  std::uint64_t n = ids.size();

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }

  unsigned bits = 0;
  int used = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      bits = (bits << 1) | (g.adjacent(ids[i], ids[j]) ? 1U : 0U);
      if (++used == 6) {
        out.push_back(static_cast<char>(bits + 63));
        bits = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((bits << (6 - used)) + 63));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    if (trim_line_end(line).empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

Graph parse_edge_list(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t line_start = offset;
    offset += line.size() + 1;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::vector<long long> ids;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long value = -1;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || value < 0 || value > 1000000)
        throw ParseError("edge list: bad vertex id '" + tok + "'", line_start + line.find(tok));
      ids.push_back(value);
    }
    if (ids.empty()) continue;
    if (ids.size() > 2) throw ParseError("edge list: more than two ids on a line", line_start);
    if (ids.size() == 1) {
      g.add_vertex(static_cast<VertexId>(ids[0]));
    } else {
      if (ids[0] == ids[1]) throw ParseError("edge list: loop", line_start);
      g.add_edge(static_cast<VertexId>(ids[0]), static_cast<VertexId>(ids[1]));
    }
  }
  return g;
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path);
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::string_view first(content);
  std::size_t lead = first.find_first_not_of(" \t\r\n");
  if (lead == std::string_view::npos) return Graph{};
  first.remove_prefix(lead);
  first = first.substr(0, first.find('\n'));
  first = trim_line_end(first);

  bool graph6 = path.ends_with(".g6") || first.starts_with(kHeader);
  if (!graph6) {
    graph6 = true;
    for (char c : first)
      if (!is_graph6_byte(c)) graph6 = false;
  }
  if (graph6) {
    try {
      return parse_graph6(first);
    } catch (const ParseError& e) {
      // Report offsets relative to the file, not the trimmed line.
      throw ParseError(e.message(), e.offset() + lead);
    }
  }
  std::istringstream stream(content);
  return parse_edge_list(stream);
}

}  // namespace rcm
