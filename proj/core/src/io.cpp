#include "hrlb/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hrlb/error.hpp"
#include "json.hpp"

namespace hrlb {

namespace {

using ojson = nlohmann::ordered_json;

std::vector<long long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc() || value < 0)
      throw ParseError("line " + std::to_string(line_no) + ": expected a non-negative integer");
    i = static_cast<std::size_t>(ptr - line.data());
    out.push_back(value);
  }
  return out;
}

}  // namespace

std::string to_text(const KGraph& f) {
  std::ostringstream os;
  os << f.k() << ' ' << f.num_vertices() << '\n';
  for (auto e : f.edge_range()) {
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
    os << '\n';
  }
  return os.str();
}

KGraph kgraph_from_text(std::string_view text) {
  std::size_t pos = 0, line_no = 0;
  bool have_header = false;
  unsigned k = 0;
  Vertex v = 0;
  std::vector<Edge> edges;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    auto ints = parse_ints(line, line_no);
    if (!ints.empty()) {
      if (!have_header) {
        if (ints.size() != 2) throw ParseError("header must be `k v`");
        k = static_cast<unsigned>(ints[0]);
        v = static_cast<Vertex>(ints[1]);
        have_header = true;
      } else {
        Edge e;
        for (auto x : ints) e.push_back(static_cast<Vertex>(x));
        edges.push_back(std::move(e));
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (!have_header) throw ParseError("empty hypergraph file");
  try {
    return KGraph(k, v, std::move(edges));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

std::string to_json(const KGraph& f) {
  ojson j;
  j["k"] = f.k();
  j["v"] = f.num_vertices();
  j["edges"] = f.edges();
  return j.dump();
}

KGraph kgraph_from_json(std::string_view json) {
  try {
    auto j = ojson::parse(json);
    return KGraph(j.at("k").get<unsigned>(), j.at("v").get<Vertex>(),
                  j.at("edges").get<std::vector<Edge>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("hypergraph JSON: ") + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

KGraph parse_kgraph(std::string_view content) {
  auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') return kgraph_from_json(content);
  return kgraph_from_text(content);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

KGraph read_kgraph_file(const std::filesystem::path& path) { return parse_kgraph(read_file(path)); }

}  // namespace hrlb
