#include "satgraph/graph6.hpp"

namespace satgraph {

std::string encode_graph6(const Subgraph& g) {
  long long v_count = g.host().vertex_count();
  std::string out;
  if (v_count <= 62) {
    out += static_cast<char>(63 + v_count);
  } else if (v_count <= 258047) {
    out += static_cast<char>(126);
    out += static_cast<char>(63 + ((v_count >> 12) & 63));
    out += static_cast<char>(63 + ((v_count >> 6) & 63));
    out += static_cast<char>(63 + (v_count & 63));
  } else {
    out += static_cast<char>(126);
    out += static_cast<char>(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out += static_cast<char>(63 + ((v_count >> shift) & 63));
  }

  int acc = 0, bits = 0;
  for (int j = 1; j < v_count; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.neighbors(j).test(i) ? 1 : 0);
      if (++bits == 6) {
        out += static_cast<char>(63 + acc);
        acc = 0;
        bits = 0;
      }
    }
  if (bits) out += static_cast<char>(63 + (acc << (6 - bits)));
  return out;
}

Subgraph decode_graph6(std::string_view text, const Host& host) {
  while (!text.empty() &&
         (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' ||
          text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 input", 0);

  auto value_at = [&](std::size_t i) -> long long {
    if (i >= text.size()) throw ParseError("truncated graph6 input", i);
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      throw ParseError("byte outside the graph6 alphabet", i);
    return c - 63;
  };

  std::size_t pos;
  long long v_count;
  if (value_at(0) == 63) {  // '~'
    if (text.size() > 1 && value_at(1) == 63) {
      v_count = 0;
      for (std::size_t i = 2; i < 8; ++i) v_count = (v_count << 6) | value_at(i);
      pos = 8;
    } else {
      v_count = (value_at(1) << 12) | (value_at(2) << 6) | value_at(3);
      pos = 4;
    }
  } else {
    v_count = value_at(0);
    pos = 1;
  }

  if (v_count > host.vertex_count())
    throw IndexDomainError("graph6 vertex count " + std::to_string(v_count) +
                           " exceeds the host's " +
                           std::to_string(host.vertex_count()));

  long long pair_bits = v_count * (v_count - 1) / 2;
  std::size_t body_chars = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (text.size() != pos + body_chars)
    throw ParseError("graph6 body length mismatch: expected " +
                         std::to_string(body_chars) + " data bytes",
                     text.size());

  Subgraph g(host);
  long long bit_index = 0;
  for (int j = 1; j < v_count; ++j)
    for (int i = 0; i < j; ++i, ++bit_index) {
      long long group = value_at(pos + bit_index / 6);
      if ((group >> (5 - bit_index % 6)) & 1) g.add_edge(i, j);
    }
  // zero padding is part of the format; a stray bit means corruption
  if (pair_bits % 6) {
    long long tail = value_at(pos + body_chars - 1);
    int used = static_cast<int>(pair_bits % 6);
    if (tail & ((1 << (6 - used)) - 1))
      throw ParseError("nonzero padding bits", pos + body_chars - 1);
  }
  return g;
}

}  // namespace satgraph
