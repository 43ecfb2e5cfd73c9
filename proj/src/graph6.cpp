#include "packcol/graph6.hpp"

#include <vector>

namespace packcol {

namespace {

constexpr long long kMaxOrder = 68719476735LL;  // 2^36 - 1
constexpr std::string_view kHeader = ">>graph6<<";

int checked_byte(std::string_view s, std::size_t i, std::size_t base) {
  if (i >= s.size()) throw graph6_error("graph6: truncated input", base + s.size());
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) throw graph6_error("graph6: non-printable byte", base + i);
  return c - 63;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (line.empty()) throw graph6_error("graph6: empty input", base);

  std::size_t pos = 0;
  long long n = 0;
  if (checked_byte(line, 0, base) < 63) {
    n = checked_byte(line, 0, base);
    pos = 1;
  } else if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | checked_byte(line, i, base);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | checked_byte(line, i, base);
    pos = 4;
  }
  if (n > kMaxOrder) throw graph6_error("graph6: order out of range", base);

  __int128 bits = static_cast<__int128>(n) * (n - 1) / 2;
  __int128 body = (bits + 5) / 6;
  if (static_cast<__int128>(line.size()) - pos < body) {
    throw graph6_error("graph6: truncated input", base + line.size());
  }
  if (static_cast<__int128>(line.size()) - pos > body) {
    throw graph6_error("graph6: trailing garbage", base + pos + static_cast<std::size_t>(body));
  }

  std::vector<std::pair<int, int>> edges;
  long long k = 0;  // bit index in x_{0,1}, x_{0,2}, x_{1,2}, x_{0,3}, ... order
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i, ++k) {
      int value = checked_byte(line, pos + k / 6, base);
      if ((value >> (5 - k % 6)) & 1) {
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  // Padding bits of the last body byte must be zero.
  if (k % 6 != 0) {
    int value = checked_byte(line, pos + k / 6, base);
    if (value & ((1 << (6 - k % 6)) - 1)) {
      throw graph6_error("graph6: nonzero padding", base + pos + k / 6);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
    }
  }
  long long bits = n * (n - 1) / 2;
  std::vector<int> body((bits + 5) / 6, 0);
  long long k = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i, ++k) {
      if (g.adjacent(static_cast<int>(i), static_cast<int>(j))) {
        body[k / 6] |= 1 << (5 - k % 6);
      }
    }
  }
  for (int value : body) out.push_back(static_cast<char>(63 + value));
  return out;
}

}  // namespace packcol
