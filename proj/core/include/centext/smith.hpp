#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace centext {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Exact Smith normal form with unimodular certificates:
/// left * input * right == diagonal, diagonal entries d_1 | d_2 | ... (>= 0).
struct SNFResult {
  IntMatrix diagonal;
  IntMatrix left;
  IntMatrix right;
  std::vector<BigInt> invariants;  // the min(rows, cols) diagonal entries
};

struct SNFOptions {
  std::size_t max_dimension = 64;
  bool want_left = true;
  bool want_right = true;
};

/// Throws CapExceeded when either dimension exceeds options.max_dimension.
SNFResult smith_normal_form(const IntMatrix& m, const SNFOptions& options = {});

IntMatrix to_int_matrix(const std::vector<std::vector<std::int64_t>>& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);
BigInt determinant(const IntMatrix& m);

}  // namespace centext
