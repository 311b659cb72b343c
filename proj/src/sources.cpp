#include "sources.hpp"

#include <algorithm>
#include <sstream>

#include "errors.hpp"

namespace icfd {

namespace {

Value parse_value_token(const std::string& tok) {
  if (tok.empty() ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("expected a non-negative integer, got '" + tok + "'");
  return Value(tok);
}

int parse_int_token(const std::string& tok) {
  Value v = parse_value_token(tok);
  if (v > 1000000000) throw ParseError("value too large for a count: '" + tok + "'");
  return static_cast<int>(v);
}

std::string strip_comments(const std::string& text) {
  std::string out;
  bool in_comment = false;
  for (char c : text) {
    if (c == '#') in_comment = true;
    if (c == '\n') in_comment = false;
    if (!in_comment) out.push_back(c);
  }
  return out;
}

}  // namespace

KSumInstance parse_ksum(const std::string& text) {
  std::istringstream in(strip_comments(text));
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  if (toks.size() < 2) throw ParseError("expected 'k t a1 a2 ...'");
  KSumInstance ks;
  ks.k = parse_int_token(toks[0]);
  ks.target = parse_value_token(toks[1]);
  for (size_t i = 2; i < toks.size(); ++i) ks.values.push_back(parse_value_token(toks[i]));
  if (ks.values.empty()) throw ParseError("expected at least one value");
  return ks;
}

RbdsInstance parse_rbds(const std::string& text) {
  std::istringstream in(strip_comments(text));
  std::vector<std::string> toks;
  std::string t;
  while (in >> t) toks.push_back(t);
  if (toks.size() < 3) throw ParseError("expected '|T| |N| k' and optional edge pairs");
  RbdsInstance rb;
  rb.t_count = parse_int_token(toks[0]);
  rb.n_count = parse_int_token(toks[1]);
  rb.k = parse_int_token(toks[2]);
  if ((toks.size() - 3) % 2 != 0) throw ParseError("edge list has an odd number of endpoints");
  for (size_t i = 3; i + 1 < toks.size(); i += 2)
    rb.edges.emplace_back(parse_int_token(toks[i]), parse_int_token(toks[i + 1]));
  validate_rbds(rb);
  return rb;
}

void validate_rbds(const RbdsInstance& rb) {
  if (rb.t_count < 0 || rb.n_count < 0 || rb.k < 0)
    throw ValidationError("side sizes and budget must be non-negative");
  std::vector<std::pair<int, int>> seen = rb.edges;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw ValidationError("duplicate cross edge");
  for (auto [ti, nj] : rb.edges) {
    if (ti < 0 || ti >= rb.t_count) throw ValidationError("edge endpoint out of the T side");
    if (nj < 0 || nj >= rb.n_count) throw ValidationError("edge endpoint out of the N side");
  }
}

}  // namespace icfd
