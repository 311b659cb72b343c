#include "format.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace icfd {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

// Significant lines only: comments stripped, whitespace trimmed.
std::vector<Line> significant_lines(const std::string& text) {
  std::vector<Line> out;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string line = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!line.empty() && is_space(line.back())) line.pop_back();
    size_t start = 0;
    while (start < line.size() && is_space(line[start])) ++start;
    line.erase(0, start);
    if (!line.empty()) out.push_back({number, line});
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, int line) {
  if (tok.empty() || tok.size() > 9 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, "expected a small non-negative integer, got '" + tok + "'");
  return std::stoi(tok);
}

Value parse_value(const std::string& tok, int line) {
  if (tok.empty() ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, "expected a non-negative integer value, got '" + tok + "'");
  return Value(tok);
}

int parse_keyed(const std::string& tok, const char* key, int line) {
  std::string prefix = std::string(key) + "=";
  if (tok.rfind(prefix, 0) != 0)
    throw ParseError(line, std::string("expected ") + key + "=<int>, got '" + tok + "'");
  return parse_int(tok.substr(prefix.size()), line);
}

}  // namespace

Instance parse_instance(const std::string& text) {
  auto lines = significant_lines(text);
  size_t i = 0;
  auto need = [&](const char* what) -> const Line& {
    if (i >= lines.size()) throw ParseError("unexpected end of input, expected " + std::string(what));
    return lines[i];
  };

  {
    const Line& l = need("header 'icfd/1'");
    if (l.text != "icfd/1") throw ParseError(l.number, "expected header 'icfd/1'");
    ++i;
  }
  int m = 0, n = 0, p = 0;
  {
    const Line& l = need("'m=<int> n=<int> p=<int>'");
    auto toks = split_ws(l.text);
    if (toks.size() != 3) throw ParseError(l.number, "expected 'm=<int> n=<int> p=<int>'");
    m = parse_keyed(toks[0], "m", l.number);
    n = parse_keyed(toks[1], "n", l.number);
    p = parse_keyed(toks[2], "p", l.number);
    ++i;
  }
  {
    const Line& l = need("'edges:'");
    if (l.text != "edges:") throw ParseError(l.number, "expected 'edges:'");
    ++i;
  }
  std::vector<std::pair<int, int>> edges;
  std::vector<char> seen_edge;
  while (true) {
    const Line& l = need("edge line or 'end'");
    if (l.text == "end") {
      ++i;
      break;
    }
    auto toks = split_ws(l.text);
    if (toks.size() != 2) throw ParseError(l.number, "expected an edge '<u> <v>'");
    int u = parse_int(toks[0], l.number);
    int v = parse_int(toks[1], l.number);
    if (u >= m || v >= m) throw ParseError(l.number, "edge endpoint out of range");
    if (u == v) throw ParseError(l.number, "self-loop is not allowed");
    if (u > v) std::swap(u, v);
    if (seen_edge.empty()) seen_edge.assign(static_cast<size_t>(m) * m, 0);
    if (seen_edge[static_cast<size_t>(u) * m + v]) throw ParseError(l.number, "duplicate edge");
    seen_edge[static_cast<size_t>(u) * m + v] = 1;
    edges.emplace_back(u, v);
    ++i;
  }
  {
    const Line& l = need("'valuations:'");
    if (l.text != "valuations:") throw ParseError(l.number, "expected 'valuations:'");
    ++i;
  }
  std::vector<std::vector<Value>> rows;
  for (int r = 0; r < n; ++r) {
    const Line& l = need("valuation row");
    if (l.text == "end")
      throw ParseError(l.number, "expected " + std::to_string(n) + " valuation rows");
    auto toks = split_ws(l.text);
    if (static_cast<int>(toks.size()) != m)
      throw ParseError(l.number, "valuation row has " + std::to_string(toks.size()) +
                                     " entries, expected " + std::to_string(m));
    std::vector<Value> row;
    row.reserve(m);
    for (const auto& t : toks) row.push_back(parse_value(t, l.number));
    rows.push_back(std::move(row));
    ++i;
  }
  {
    const Line& l = need("'end'");
    if (l.text != "end") throw ParseError(l.number, "expected 'end' after valuation rows");
    ++i;
  }
  if (i < lines.size())
    throw ParseError(lines[i].number, "unexpected trailing content");

  Instance inst{Graph(m, std::move(edges)), std::move(rows), p};
  validate_instance(inst);
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << "icfd/1\n";
  out << "m=" << inst.m() << " n=" << inst.n() << " p=" << inst.p << "\n";
  out << "edges:\n";
  for (auto [u, v] : inst.graph.edges()) out << u << " " << v << "\n";
  out << "end\n";
  out << "valuations:\n";
  for (const auto& row : inst.valuations) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out << " ";
      out << row[j];
    }
    out << "\n";
  }
  out << "end\n";
  return out.str();
}

Allocation parse_allocation(const std::string& text, const Instance& inst) {
  auto lines = significant_lines(text);
  size_t i = 0;
  auto need = [&](const char* what) -> const Line& {
    if (i >= lines.size()) throw ParseError("unexpected end of input, expected " + std::string(what));
    return lines[i];
  };

  {
    const Line& l = need("header 'alloc/1'");
    if (l.text != "alloc/1") throw ParseError(l.number, "expected header 'alloc/1'");
    ++i;
  }
  int n = 0;
  {
    const Line& l = need("'n=<int>'");
    auto toks = split_ws(l.text);
    if (toks.size() != 1) throw ParseError(l.number, "expected 'n=<int>'");
    n = parse_keyed(toks[0], "n", l.number);
    ++i;
  }
  if (n != inst.n())
    throw ValidationError("allocation declares n=" + std::to_string(n) +
                          ", instance has " + std::to_string(inst.n()) + " agents");
  Allocation alloc;
  for (int a = 0; a < n; ++a) {
    const Line& l = need("bundle line");
    auto colon = l.text.find(':');
    if (colon == std::string::npos)
      throw ParseError(l.number, "expected '<agent>: <v> <v> ...'");
    int agent = parse_int(l.text.substr(0, colon), l.number);
    if (agent != a)
      throw ParseError(l.number, "bundle lines must list agents 0.." +
                                     std::to_string(n - 1) + " in order");
    auto toks = split_ws(l.text.substr(colon + 1));
    std::vector<int> bundle;
    for (const auto& t : toks) bundle.push_back(parse_int(t, l.number));
    std::sort(bundle.begin(), bundle.end());
    alloc.bundles.push_back(std::move(bundle));
    ++i;
  }
  if (i < lines.size())
    throw ParseError(lines[i].number, "unexpected trailing content");
  return alloc;
}

std::string serialize_allocation(const Allocation& alloc) {
  std::ostringstream out;
  out << "alloc/1\n";
  out << "n=" << alloc.n() << "\n";
  for (int i = 0; i < alloc.n(); ++i) {
    out << i << ":";
    for (int v : alloc.bundles[i]) out << " " << v;
    out << "\n";
  }
  return out.str();
}

}  // namespace icfd
