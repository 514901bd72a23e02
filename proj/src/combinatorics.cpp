#include "isingx/combinatorics.hpp"

#include <mutex>
#include <vector>

#include "isingx/errors.hpp"

namespace isingx {

mpz_class factorial(int n) {
    if (n < 0) throw spec_error("factorial: negative argument");
    static std::vector<mpz_class> table = {1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(table.size()) <= n) {
        table.push_back(table.back() * static_cast<long>(table.size()));
    }
    return table[static_cast<size_t>(n)];
}

mpz_class binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class pow_int(long base, int e) {
    if (e < 0) throw spec_error("pow_int: negative exponent");
    mpz_class r;
    mpz_class b(base);
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

}  // namespace isingx
