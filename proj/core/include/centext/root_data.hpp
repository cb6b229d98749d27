#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "centext/abelian.hpp"
#include "centext/smith.hpp"

namespace centext {

/// Bourbaki-numbered Cartan matrix, a_ij = <alpha_i, alpha_j^vee>.
struct CartanMatrix {
  char type = 'A';
  std::size_t rank = 1;
  std::vector<std::vector<std::int64_t>> entries;

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
};

/// Valid pairs: A_n (n >= 1), B_n (n >= 2), C_n (n >= 3), D_n (n >= 4),
/// E_6..E_8, F_4, G_2. Throws InvalidInput otherwise.
CartanMatrix cartan_matrix(char type, std::size_t rank);

/// "A3", "e8", "G2" -> (type, rank)
std::pair<char, std::size_t> parse_root_type(const std::string& text);

/// Weight lattice modulo root lattice: the cokernel of the Cartan matrix.
FiniteAbelian fundamental_group_ss(char type, std::size_t rank);

struct KernelVerdict {
  FiniteAbelian kernel;
  std::int64_t homs = 1;  // |Hom(pi1, kernel)|
};

struct SimplyConnectedReport {
  FiniteAbelian pi1;
  std::vector<KernelVerdict> kernels;

  bool simply_connected() const { return pi1.is_trivial(); }
  /// Trivial pi1 forces only the zero homomorphism into every kernel.
  bool ok() const;
};

SimplyConnectedReport simply_connected_check(char type, std::size_t rank,
                                             const std::vector<FiniteAbelian>& kernels);

}  // namespace centext
