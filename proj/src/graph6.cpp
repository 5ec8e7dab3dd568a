#include "alphafactor/graph6.hpp"

#include <istream>

#include "alphafactor/errors.hpp"

namespace alphafactor {

namespace {

constexpr unsigned char kBias = 63;
constexpr unsigned char kMaxByte = 126;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t pair_bits(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("empty graph6 record", 0);
  const auto head = static_cast<unsigned char>(text[0]);
  if (head < kBias || head > kMaxByte) throw ParseError("order byte out of range [63,126]", 0);
  if (head == kMaxByte) throw ParseError("orders above 62 are not supported", 0);
  const int n = head - kBias;

  const std::size_t bits = n > 0 ? pair_bits(n) : 0;
  const std::size_t body = (bits + 5) / 6;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (i > body) throw ParseError("trailing bytes after graph6 record", i);
    if (c < kBias || c > kMaxByte) throw ParseError("byte out of range [63,126]", i);
  }
  if (text.size() < body + 1) throw ParseError("truncated graph6 record", text.size());

  Graph g(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const unsigned value = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((value >> (5 - k % 6)) & 1U) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const unsigned last = static_cast<unsigned char>(text[body]) - kBias;
    const unsigned pad_mask = (1U << (6 - bits % 6)) - 1U;
    if (last & pad_mask) throw ParseError("nonzero padding bits", body);
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) throw SizeError("graph6 output supports at most 62 vertices");
  std::string out(1, static_cast<char>(kBias + n));
  const std::size_t bits = n > 0 ? pair_bits(n) : 0;
  std::string body((bits + 5) / 6, static_cast<char>(0));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (g.has_edge(i, j)) body[k / 6] = static_cast<char>(body[k / 6] | (1 << (5 - k % 6)));
  for (char& c : body) c = static_cast<char>(c + kBias);
  return out + body;
}

std::vector<Graph6Record> read_graph6(std::istream& in) {
  std::vector<Graph6Record> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view view = line;
    if (view.starts_with(kHeader)) view.remove_prefix(kHeader.size());
    if (view.empty()) continue;
    Graph6Record rec;
    rec.line = number;
    rec.text = std::string(view);
    try {
      rec.graph = parse_graph6(view);
    } catch (const ParseError& e) {
      rec.error = e.what();
    }
    out.push_back(std::move(rec));
  }
  return out;
}

}  // namespace alphafactor
