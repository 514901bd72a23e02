#include "isingx/walks.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "isingx/combinatorics.hpp"
#include "isingx/errors.hpp"
#include "isingx/trigpoly.hpp"

namespace isingx {
namespace walks {

namespace {

void require_even(int length, const char* who) {
    if (length % 2 != 0) {
        throw spec_error(std::string(who) + ": walk length must be even, got " +
                         std::to_string(length));
    }
}

void require_nonnegative(int length, const char* who) {
    if (length < 0) throw spec_error(std::string(who) + ": negative length");
}

}  // namespace

mpz_class s_square(int length) {
    require_nonnegative(length, "s_square");
    require_even(length, "s_square");
    mpz_class b = binomial(length, length / 2);
    return b * b;
}

mpz_class s_triangular(int length) {
    require_nonnegative(length, "s_triangular");
    static std::map<int, mpz_class> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(length);
    if (it != memo.end()) return it->second;

    mpz_class sum = 0;
    for (int i = 0; i <= length; ++i) {
        mpz_class inner = 0;
        for (int j = 0; j <= i; ++j) {
            mpz_class b = binomial(i, j);
            inner += b * b * b;
        }
        mpz_class term = binomial(length, i) * inner;
        // (-2)^(l-i)
        mpz_class p = pow_int(2, length - i);
        if ((length - i) % 2 == 1) p = -p;
        sum += term * p;
    }
    memo[length] = sum;
    return sum;
}

mpz_class s_hexagonal(int length) {
    require_nonnegative(length, "s_hexagonal");
    require_even(length, "s_hexagonal");
    // S_hex(2l) = sum_j C(l,j) 3^(l-j) S_tri(j), from p_hex = 3/2 + p_tri.
    const int l = length / 2;
    mpz_class sum = 0;
    for (int j = 0; j <= l; ++j) {
        sum += binomial(l, j) * pow_int(3, l - j) * s_triangular(j);
    }
    return sum;
}

mpz_class s_by_constant_term(Preset p, int length) {
    require_nonnegative(length, "s_by_constant_term");
    TrigPoly structure;
    int l = length;
    switch (p) {
        case Preset::Square:
            require_even(length, "s_by_constant_term(square)");
            structure = p_square();
            break;
        case Preset::Triangular:
            structure = p_triangular();
            break;
        case Preset::Hexagonal:
            require_even(length, "s_by_constant_term(hexagonal)");
            structure = p_hexagonal();
            l = length / 2;
            break;
        case Preset::Kagome:
            throw spec_error("s_by_constant_term: no kagome walk sequence");
    }
    TrigPoly power(Rational(1));
    for (int i = 0; i < l; ++i) power = power * structure;
    Rational v = power.constant_term() * Rational(pow_int(2, l));
    if (!v.is_integer()) throw spec_error("s_by_constant_term: non-integer count");
    return v.num();
}

namespace {

constexpr int kMaxOracleLength = 12;

// Displacement-indexed walk counts; offsets fit in [-L, L]^2.
class Grid {
public:
    explicit Grid(int L) : L_(L), side_(2 * L + 1), v_(static_cast<size_t>(side_) * side_, 0) {}
    long long& at(int x, int y) { return v_[static_cast<size_t>(x + L_) * side_ + (y + L_)]; }
    long long get(int x, int y) const {
        if (x < -L_ || x > L_ || y < -L_ || y > L_) return 0;
        return v_[static_cast<size_t>(x + L_) * side_ + (y + L_)];
    }
    int L() const { return L_; }

private:
    int L_, side_;
    std::vector<long long> v_;
};

mpz_class closed_walks_offsets(const std::vector<std::pair<int, int>>& steps, int length) {
    Grid cur(length);
    cur.at(0, 0) = 1;
    for (int s = 0; s < length; ++s) {
        Grid next(length);
        for (int x = -length; x <= length; ++x) {
            for (int y = -length; y <= length; ++y) {
                long long c = cur.get(x, y);
                if (c == 0) continue;
                for (auto [dx, dy] : steps) next.at(x + dx, y + dy) += c;
            }
        }
        cur = std::move(next);
    }
    return mpz_class(static_cast<long>(cur.get(0, 0)));
}

// Honeycomb walks on two interleaved sublattices: from A(i,j) the three
// neighbours are B(i,j), B(i-1,j), B(i,j-1); from B(i,j) they are A(i,j),
// A(i+1,j), A(i,j+1).
mpz_class closed_walks_honeycomb(int length) {
    Grid a(length), b(length);
    a.at(0, 0) = 1;
    for (int s = 0; s < length; ++s) {
        Grid na(length), nb(length);
        for (int x = -length; x <= length; ++x) {
            for (int y = -length; y <= length; ++y) {
                long long ca = a.get(x, y);
                if (ca != 0) {
                    nb.at(x, y) += ca;
                    nb.at(x - 1, y) += ca;
                    nb.at(x, y - 1) += ca;
                }
                long long cb = b.get(x, y);
                if (cb != 0) {
                    na.at(x, y) += cb;
                    na.at(x + 1, y) += cb;
                    na.at(x, y + 1) += cb;
                }
            }
        }
        a = std::move(na);
        b = std::move(nb);
    }
    return mpz_class(static_cast<long>(a.get(0, 0)));
}

}  // namespace

mpz_class walk_oracle(Preset p, int length) {
    require_nonnegative(length, "walk_oracle");
    if (length > kMaxOracleLength) {
        throw budget_error("walk_oracle: length " + std::to_string(length) +
                           " exceeds the exhaustive budget of " +
                           std::to_string(kMaxOracleLength));
    }
    switch (p) {
        case Preset::Square:
            return closed_walks_offsets({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, length);
        case Preset::Triangular:
            return closed_walks_offsets(
                {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}}, length);
        case Preset::Hexagonal:
            return closed_walks_honeycomb(length);
        case Preset::Kagome:
            throw spec_error("walk_oracle: no kagome walk sequence");
    }
    throw spec_error("walk_oracle: unknown preset");
}

}  // namespace walks
}  // namespace isingx
