#include "isingx/bell.hpp"

#include <map>
#include <mutex>

#include "isingx/combinatorics.hpp"
#include "isingx/errors.hpp"

namespace isingx {
namespace bell {

namespace {

// Descend over part sizes j = jmax..1 choosing the multiplicity c_j, pruning
// with k_rem <= n_rem <= j * k_rem.
void descend(int j, int n_rem, int k_rem, PartitionIndex& current,
             std::vector<PartitionIndex>& out) {
    if (n_rem == 0 && k_rem == 0) {
        out.push_back(current);
        return;
    }
    if (j <= 0 || k_rem <= 0 || n_rem < k_rem || n_rem > j * k_rem) return;
    int c_max = std::min(k_rem, n_rem / j);
    for (int c = c_max; c >= 0; --c) {
        if (c > 0) current.emplace_back(j, c);
        descend(j - 1, n_rem - j * c, k_rem - c, current, out);
        if (c > 0) current.pop_back();
    }
}

}  // namespace

const std::vector<PartitionIndex>& partition_indices(int n, int k) {
    static std::map<std::pair<int, int>, std::vector<PartitionIndex>> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, k);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<PartitionIndex> out;
    PartitionIndex current;
    descend(n - k + 1, n, k, current, out);
    return memo.emplace(key, std::move(out)).first->second;
}

Rational partial_bell(int n, int k, std::span<const Rational> f) {
    if (n < 1 || k < 1 || k > n) throw spec_error("partial_bell: need 1 <= k <= n");
    if (static_cast<int>(f.size()) < n - k + 1) {
        throw spec_error("partial_bell: needs f_1..f_{n-k+1}");
    }
    Rational sum(0);
    const Rational n_fact = rat(factorial(n));
    for (const PartitionIndex& part : partition_indices(n, k)) {
        Rational term = n_fact;
        for (const auto& [j, c] : part) {
            term /= rat(factorial(c));
            term *= (f[static_cast<size_t>(j) - 1] / rat(factorial(j))).pow(c);
        }
        sum += term;
    }
    return sum;
}

Rational complete_bell(int N, std::span<const Rational> f) {
    if (N < 1) throw spec_error("complete_bell: N must be positive");
    if (static_cast<int>(f.size()) < N) throw spec_error("complete_bell: needs f_1..f_N");
    Rational sum(0);
    for (int k = 1; k <= N; ++k) sum += partial_bell(N, k, f);
    return sum;
}

Rational log_bell(int n, std::span<const Rational> f) {
    if (n < 1) throw spec_error("log_bell: n must be positive");
    if (static_cast<int>(f.size()) < n) throw spec_error("log_bell: needs f_1..f_n");
    Rational sum(0);
    for (int k = 1; k <= n; ++k) {
        Rational term = rat(factorial(k - 1)) * partial_bell(n, k, f);
        if (k % 2 == 0) term = -term;
        sum += term;
    }
    return sum;
}

Rational lah(int r, int k) {
    if (r < 1 || k < 1 || k > r) throw spec_error("lah: need 1 <= k <= r");
    return rat(factorial(r)) / rat(factorial(k)) * rat(binomial(r - 1, k - 1));
}

}  // namespace bell
}  // namespace isingx
