#include "centext/root_data.hpp"

#include <cctype>

#include "centext/error.hpp"

namespace centext {

namespace {

bool valid(char t, std::size_t n) {
  switch (t) {
    case 'A': return n >= 1;
    case 'B': return n >= 2;
    case 'C': return n >= 3;
    case 'D': return n >= 4;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

}  // namespace

CartanMatrix cartan_matrix(char type, std::size_t rank) {
  const char t = char(std::toupper(static_cast<unsigned char>(type)));
  if (!valid(t, rank)) throw InvalidInput(std::string("no root system of type ") + t + std::to_string(rank));
  CartanMatrix c;
  c.type = t;
  c.rank = rank;
  auto& a = c.entries;
  a.assign(rank, std::vector<std::int64_t>(rank, 0));
  for (std::size_t i = 0; i < rank; ++i) a[i][i] = 2;
  // 1-based edges i - j (simply laced unless overridden)
  auto edge = [&](std::size_t i, std::size_t j) { a[i - 1][j - 1] = a[j - 1][i - 1] = -1; };
  switch (t) {
    case 'A':
    case 'B':
    case 'C':
      for (std::size_t i = 1; i < rank; ++i) edge(i, i + 1);
      if (t == 'B') a[rank - 2][rank - 1] = -2;
      if (t == 'C') a[rank - 1][rank - 2] = -2;
      break;
    case 'D':
      for (std::size_t i = 1; i + 1 < rank; ++i) edge(i, i + 1);
      edge(rank - 2, rank);
      break;
    case 'E':
      edge(1, 3);
      edge(2, 4);
      for (std::size_t i = 3; i < rank; ++i) edge(i, i + 1);
      break;
    case 'F':
      edge(1, 2);
      edge(2, 3);
      edge(3, 4);
      a[1][2] = -2;
      break;
    case 'G':
      a[0][1] = -1;
      a[1][0] = -3;
      break;
  }
  return c;
}

std::pair<char, std::size_t> parse_root_type(const std::string& text) {
  if (text.size() < 2 || !std::isalpha(static_cast<unsigned char>(text[0])))
    throw InvalidInput("root type must look like A3 or E8");
  std::size_t rank = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw InvalidInput("bad rank in root type " + text);
    rank = rank * 10 + std::size_t(text[i] - '0');
    if (rank > 64) throw InvalidInput("rank too large in " + text);
  }
  const char t = char(std::toupper(static_cast<unsigned char>(text[0])));
  if (!valid(t, rank)) throw InvalidInput("no root system of type " + text);
  return {t, rank};
}

FiniteAbelian fundamental_group_ss(char type, std::size_t rank) {
  auto c = cartan_matrix(type, rank);
  SNFOptions opt;
  opt.want_left = opt.want_right = false;
  auto snf = smith_normal_form(to_int_matrix(c.entries), opt);
  std::vector<std::int64_t> f;
  for (const auto& d : snf.invariants)
    if (d != 1) f.push_back(static_cast<std::int64_t>(d));
  return FiniteAbelian(f);
}

bool SimplyConnectedReport::ok() const {
  if (!simply_connected()) return true;
  for (const auto& k : kernels)
    if (k.homs != 1) return false;
  return true;
}

SimplyConnectedReport simply_connected_check(char type, std::size_t rank,
                                             const std::vector<FiniteAbelian>& kernels) {
  SimplyConnectedReport r;
  r.pi1 = fundamental_group_ss(type, rank);
  for (const auto& k : kernels) r.kernels.push_back({k, hom_count(r.pi1, k)});
  return r;
}

}  // namespace centext
