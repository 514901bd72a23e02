#ifndef ISINGX_BELL_HPP
#define ISINGX_BELL_HPP

#include <span>
#include <utility>
#include <vector>

#include "isingx/rational.hpp"

namespace isingx {
namespace bell {

// One admissible multi-index (c_1, ..., c_n) with sum c_j = k and
// sum j*c_j = n, stored sparsely as (part size j, multiplicity c_j) pairs.
using PartitionIndex = std::vector<std::pair<int, int>>;

// All multi-indices for (n, k).  Memoized behind a synchronized map.
const std::vector<PartitionIndex>& partition_indices(int n, int k);

// Partial (incomplete) Bell polynomial B_{n,k}(f_1, ..., f_{n-k+1}).
// f[j-1] holds f_j; at least n-k+1 entries are required.
Rational partial_bell(int n, int k, std::span<const Rational> f);

// Complete Bell polynomial Y_N = sum_{k=1..N} B_{N,k}.
Rational complete_bell(int N, std::span<const Rational> f);

// Logarithmic Bell polynomial L_n = sum_k (-1)^{k-1} (k-1)! B_{n,k}.
Rational log_bell(int n, std::span<const Rational> f);

// Lah number L(r,k) = (r!/k!) C(r-1,k-1) = B_{r,k}(1!, 2!, 3!, ...).
Rational lah(int r, int k);

}  // namespace bell
}  // namespace isingx

#endif
