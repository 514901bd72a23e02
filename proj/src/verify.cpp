#include "isingx/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "isingx/asympt.hpp"
#include "isingx/bell.hpp"
#include "isingx/combinatorics.hpp"
#include "isingx/errors.hpp"
#include "isingx/expansion.hpp"
#include "isingx/oracle.hpp"
#include "isingx/series.hpp"
#include "isingx/states.hpp"
#include "isingx/walks.hpp"

namespace isingx {
namespace verify {

namespace {

using Clock = std::chrono::steady_clock;

struct Ctx {
    std::ostringstream log;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "FAIL " << what << "; ";
        }
    }
    template <class T>
    void expect_eq(const T& actual, const T& expected, const std::string& what) {
        if (!(actual == expected)) {
            ok = false;
            log << "FAIL " << what << ": expected " << str_of(expected) << ", got "
                << str_of(actual) << "; ";
        }
    }
    void expect_close(double actual, double expected, double tol, const std::string& what) {
        if (!(std::abs(actual - expected) < tol)) {
            ok = false;
            log << "FAIL " << what << ": |" << actual << " - " << expected
                << "| >= " << tol << "; ";
        }
    }
    void note(const std::string& s) { log << s << "; "; }

    static std::string str_of(const Rational& r) { return r.str(); }
    static std::string str_of(const mpz_class& z) { return z.get_str(); }
    static std::string str_of(const VPoly& p) { return p.str(); }
    template <class T>
    static std::string str_of(const T& v) {
        std::ostringstream os;
        os << v;
        return os.str();
    }
};

struct Check {
    int criterion;
    std::string id;
    bool heavy;  // only in the "all" suite
    std::function<void(Ctx&)> run;
};

std::vector<Rational> parse_list(const std::vector<std::string>& strs) {
    std::vector<Rational> out;
    out.reserve(strs.size());
    for (const auto& s : strs) out.push_back(Rational::parse(s));
    return out;
}

// ---- criterion 1 & 2: square lattice ----------------------------------

void check_square_free_energy(Ctx& c) {
    const auto t0 = Clock::now();
    const std::vector<Rational> expected = parse_list(
        {"0", "0", "0", "1", "0", "2", "0", "9/2", "0", "12", "0", "112/3", "0", "130", "0",
         "1961/4"});
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Square), 16);
    for (int n = 1; n <= 16; ++n) {
        c.expect_eq(fes.term(n), expected[static_cast<size_t>(n - 1)],
                    "a_square(" + std::to_string(n) + ")/n!");
    }
    for (int n = 1; n <= 16; ++n) {
        Rational closed = a_square_closed(n) / Rational(factorial(n));
        c.expect_eq(closed, fes.term(n), "closed form vs engine at n=" + std::to_string(n));
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(secs < 10.0, "criterion 1 runtime " + std::to_string(secs) + "s < 10s");
}

void check_square_states(Ctx& c) {
    const std::vector<Rational> expected = parse_list(
        {"1", "0", "0", "0", "1", "0", "2", "0", "5", "0", "14", "0", "44", "0", "152", "0",
         "566"});
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Square), 17);
    DOSTable g = bulk_states(fes, 17);
    for (int N = 0; N <= 16; ++N) {
        c.expect_eq(g.entry_rational(N), expected[static_cast<size_t>(N)],
                    "g_square(" + std::to_string(N) + ")");
    }
    c.expect_eq(g.entry_rational(17), Rational(0), "g_square(17)");
}

// ---- criterion 3: triangular -------------------------------------------

void check_triangular(Ctx& c) {
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 20);
    c.expect_eq(fes.term(6), Rational(1), "a_tri(6)/6!");
    c.expect_eq(fes.term(10), Rational(3), "a_tri(10)/10!");
    c.expect_eq(fes.term(12), Rational(-3, 2), "a_tri(12)/12!");
    c.expect_eq(fes.term(14), Rational(12), "a_tri(14)/14!");
    for (int n : {6, 10, 12, 14, 16, 18, 20}) {
        Rational closed = a_triangular_closed(n) / Rational(factorial(n));
        c.expect_eq(closed, fes.term(n), "closed form vs engine at n=" + std::to_string(n));
    }

    // Two mutually inconsistent sign conventions are in circulation for
    // n = 16, 18, 20: the published coefficient list says
    // (-12, +181/3, -165/2) while the published expansion display says
    // (-12, -181/3, -165/2).  Report which one the exact computation matches.
    const std::vector<Rational> list_version = parse_list({"-12", "181/3", "-165/2"});
    const std::vector<Rational> display_version = parse_list({"-12", "-181/3", "-165/2"});
    std::vector<Rational> computed = {fes.term(16), fes.term(18), fes.term(20)};
    const bool matches_list = computed == list_version;
    const bool matches_display = computed == display_version;
    c.expect(matches_list || matches_display,
             "a_tri(16,18,20) matches one of the published conventions");
    if (matches_list) {
        c.note("a_tri(16,18,20)/n! = (-12, 181/3, -165/2): matches the published coefficient "
               "list; the published expansion display (-181/3 at x^18) carries the misprint, "
               "since only +181/3 reproduces the state count g(18) = 59");
    } else if (matches_display) {
        c.note("a_tri(16,18,20) matches the published expansion display, not the list");
    }

    DOSTable g = bulk_states(fes, 14);
    c.expect_eq(g.entry_rational(6), Rational(1), "g_tri(6)");
    c.expect_eq(g.entry_rational(10), Rational(3), "g_tri(10)");
    c.expect_eq(g.entry_rational(12), Rational(-1), "g_tri(12)");
    c.expect_eq(g.entry_rational(14), Rational(12), "g_tri(14)");
}

// Independent confirmation of the n=18 sign through the exact 5x5
// enumeration: g_25(18) is inside the wrap-around horizon 4*sqrt(V) = 20,
// and its V-polynomial has a(18)/18! as the linear coefficient.
void check_triangular_sign_oracle(Ctx& c) {
    auto lat = oracle::FiniteLattice::make(Preset::Triangular, 5, 5);
    auto counts = oracle::enumerate_dos(lat);
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 18);
    DOSTable pred = finite_states_at(fes, 25, 18);
    c.expect_eq(Rational(static_cast<long>(counts[18])),
                pred.entry_rational(18) * Rational(2), "enumeration vs prediction at r=18, V=25");
    // Solve for a(18)/18! from the measured count and the known lower terms.
    Rational v(25);
    Rational two_cluster = fes.term(6) * fes.term(12) * v * v;        // {6,12}
    Rational three_cluster = fes.term(6).pow(3) * v * v * v / Rational(6);  // {6,6,6}
    Rational linear = (Rational(static_cast<long>(counts[18])) / Rational(2) - two_cluster -
                       three_cluster) / v;
    c.expect_eq(linear, Rational(181, 3), "a_tri(18)/18! recovered from the V=25 enumeration");
}

// ---- criterion 4: hexagonal --------------------------------------------

void check_hexagonal(Ctx& c) {
    const std::vector<Rational> expected_a = parse_list(
        {"0", "0", "1", "3/2", "3", "11/2", "12", "111/4", "208/3", "363/2", "495"});
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Hexagonal), 11);
    for (int n = 1; n <= 11; ++n) {
        c.expect_eq(fes.term(n), expected_a[static_cast<size_t>(n - 1)],
                    "a_hex(" + std::to_string(n) + ")/n!");
        Rational closed = a_hexagonal_closed(n) / Rational(factorial(n));
        c.expect_eq(closed, fes.term(n), "closed form vs engine at n=" + std::to_string(n));
    }
    const std::vector<Rational> expected_g =
        parse_list({"1", "0", "0", "2", "3", "6", "13", "30", "72", "180"});
    DOSTable g = bulk_states(fes, 9);
    for (int N = 0; N <= 9; ++N) {
        c.expect_eq(g.entry_rational(N), expected_g[static_cast<size_t>(N)],
                    "g_hex(" + std::to_string(N) + ")");
    }
}

// ---- criterion 5: walk sequences ----------------------------------------

void check_walks(Ctx& c) {
    const auto t0 = Clock::now();
    const std::vector<long> sq = {1, 4, 36, 400, 4900, 63504, 853776};
    for (size_t n = 0; n < sq.size(); ++n) {
        c.expect_eq(walks::s_square(static_cast<int>(2 * n)), mpz_class(sq[n]),
                    "S_square(" + std::to_string(2 * n) + ")");
    }
    const std::vector<long> tri = {1, 0, 6, 12, 90, 360, 2040, 10080, 54810, 290640};
    for (size_t l = 0; l < tri.size(); ++l) {
        c.expect_eq(walks::s_triangular(static_cast<int>(l)), mpz_class(tri[l]),
                    "S_tri(" + std::to_string(l) + ")");
    }
    const std::vector<long> hex = {1, 3, 15, 93, 639, 4653, 35169, 272835};
    for (size_t l = 0; l < hex.size(); ++l) {
        c.expect_eq(walks::s_hexagonal(static_cast<int>(2 * l)), mpz_class(hex[l]),
                    "S_hex(" + std::to_string(2 * l) + ")");
    }
    // Three independent routes agree for every length <= 12.
    for (int l = 0; l <= 12; l += 2) {
        c.expect_eq(walks::s_square(l), walks::s_by_constant_term(Preset::Square, l),
                    "square constant-term route, l=" + std::to_string(l));
        c.expect_eq(walks::s_square(l), walks::walk_oracle(Preset::Square, l),
                    "square walk oracle, l=" + std::to_string(l));
        c.expect_eq(walks::s_hexagonal(l), walks::s_by_constant_term(Preset::Hexagonal, l),
                    "hexagonal constant-term route, l=" + std::to_string(l));
        c.expect_eq(walks::s_hexagonal(l), walks::walk_oracle(Preset::Hexagonal, l),
                    "hexagonal walk oracle, l=" + std::to_string(l));
    }
    for (int l = 0; l <= 12; ++l) {
        c.expect_eq(walks::s_triangular(l), walks::s_by_constant_term(Preset::Triangular, l),
                    "triangular constant-term route, l=" + std::to_string(l));
        c.expect_eq(walks::s_triangular(l), walks::walk_oracle(Preset::Triangular, l),
                    "triangular walk oracle, l=" + std::to_string(l));
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(secs < 30.0, "criterion 5 runtime " + std::to_string(secs) + "s < 30s");
}

// ---- criterion 6: finite lattices ----------------------------------------

int measured_horizon(const std::vector<std::uint64_t>& counts, const DOSTable& pred) {
    int r = 0;
    while (r < static_cast<int>(counts.size()) && r <= pred.order) {
        Rational expected = pred.entry_rational(r) * Rational(2);
        if (!(Rational(static_cast<long>(counts[static_cast<size_t>(r)])) == expected)) break;
        ++r;
    }
    return r;  // exact for all r' < r
}

void check_finite_square(Ctx& c, int m) {
    auto lat = oracle::FiniteLattice::make(Preset::Square, m, m);
    const auto t0 = Clock::now();
    auto counts = oracle::enumerate_dos(lat);
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (lat.V >= 25) {
        c.expect(secs < 300.0, "V=" + std::to_string(lat.V) + " enumeration " +
                                   std::to_string(secs) + "s < 5min");
    }
    mpz_class total = 0;
    for (auto n : counts) total += mpz_class(static_cast<unsigned long>(n));
    c.expect_eq(total, pow_int(2, lat.V), "histogram total = 2^V");

    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Square), 2 * m);
    PartitionPolynomial z = partition_polynomial(finite_states_at(fes, lat.V, 2 * m - 1));
    for (int r = 0; r < 2 * m; ++r) {
        Rational predicted = z.coeffs[static_cast<size_t>(r)].coefficient(0);
        c.expect_eq(Rational(static_cast<long>(counts[static_cast<size_t>(r)])), predicted,
                    "square " + std::to_string(m) + "x" + std::to_string(m) + " r=" +
                        std::to_string(r));
    }
}

void check_finite_triangular(Ctx& c) {
    auto lat = oracle::FiniteLattice::make(Preset::Triangular, 4, 4);
    auto counts = oracle::enumerate_dos(lat);
    const long V = lat.V;
    FreeEnergySeries fes = expand_free_energy(LatticeSpec::preset(Preset::Triangular), 15);
    DOSTable pred = finite_states_at(fes, V, 15);
    int horizon = measured_horizon(counts, pred);
    c.note("triangular 4x4 measured exactness horizon: r < " + std::to_string(horizon));
    c.expect(horizon > 12, "horizon covers r = 6, 10, 12");
    c.expect_eq(Rational(static_cast<long>(counts[6])), Rational(2 * V), "count(6) = 2V");
    c.expect_eq(Rational(static_cast<long>(counts[10])), Rational(6 * V), "count(10) = 6V");
    c.expect_eq(Rational(static_cast<long>(counts[12])), Rational(V * V - 3 * V),
                "count(12) = V^2 - 3V");

    DOSTable sym = finite_states(fes, 12);
    VPoly expected;
    expected += VPoly::variable(Rational(-3, 2));
    VPoly v2 = VPoly::variable(Rational(1)) * VPoly::variable(Rational(1, 2));
    expected += v2;
    c.expect_eq(sym.entry(12), expected, "symbolic g_V(12) = V^2/2 - 3V/2");
}

// ---- criterion 7: quadrature cross-checks --------------------------------

void check_quadrature(Ctx& c) {
    for (Preset p : {Preset::Square, Preset::Triangular, Preset::Hexagonal, Preset::Kagome}) {
        LatticeSpec spec = LatticeSpec::preset(p);
        FreeEnergySeries fes = expand_free_energy(spec, 30);
        const double x = 0.05;
        double series = fes.value_at(x);
        double quad = oracle::quadrature_free_energy(spec, x, 512).value;
        c.expect_close(series, quad, 1e-8, preset_name(p) + " series(30) vs quadrature at x=0.05");
    }
    for (double x : {0.05, 0.1, 0.2}) {
        double wannier = oracle::wannier_triangular_value(x, 512);
        double product =
            oracle::quadrature_free_energy(LatticeSpec::preset(Preset::Triangular), x, 512).value;
        c.expect_close(wannier, product, 1e-10,
                       "Wannier form vs product form at x=" + std::to_string(x));
    }
}

// ---- criterion 8: hypergeometrics ----------------------------------------

void check_hypergeometric(Ctx& c) {
    const std::vector<long> a000262 = {1, 3, 13, 73, 501, 4051, 37633, 394353};
    for (size_t l = 1; l <= a000262.size(); ++l) {
        Rational v = Rational(factorial(static_cast<int>(l))) *
                     asympt::hyp1f1_unit(static_cast<int>(l));
        c.expect_eq(v, Rational(a000262[l - 1]), "l!*1F1(1-l;2;-1) at l=" + std::to_string(l));
    }
    // Lah-sum identity chain: 1F1(1-N/2;2;-1) = sum_k L(N/2,k) / (N/2)!.
    for (int N = 2; N <= 24; N += 2) {
        const int m = N / 2;
        Rational lah_sum(0);
        for (int k = 1; k <= m; ++k) lah_sum += bell::lah(m, k);
        lah_sum /= Rational(factorial(m));
        c.expect_eq(asympt::hyp1f1_unit(m), lah_sum, "Lah identity at N=" + std::to_string(N));
    }
    for (double betaJ : {0.1, 0.2}) {
        auto cmp = asympt::onsager_kappa_check(betaJ, 512);
        c.expect_close(cmp.series_value, cmp.quadrature_value, 1e-8,
                       "Onsager kappa form vs quadrature at betaJ=" + std::to_string(betaJ));
    }
}

// ---- criterion 9: high-temperature coefficients ---------------------------

void check_high_temperature(Ctx& c) {
    struct Case {
        Preset p;
        int rows, cols;
    };
    for (const Case& tc : {Case{Preset::Square, 4, 4}, Case{Preset::Triangular, 3, 3},
                           Case{Preset::Hexagonal, 4, 4}}) {
        auto lat = oracle::FiniteLattice::make(tc.p, tc.rows, tc.cols);
        auto counts = oracle::enumerate_dos(lat);
        std::vector<mpz_class> q;
        try {
            q = oracle::high_temp_coefficients(lat, counts);  // asserts integrality, q(0..2)
        } catch (const std::exception& e) {
            c.expect(false, std::string("high_temp_coefficients threw: ") + e.what());
            continue;
        }
        auto sap = oracle::even_subgraph_counts(lat);
        c.expect_eq(q.size(), sap.size(), preset_name(tc.p) + " histogram sizes");
        for (size_t r = 0; r < q.size() && r < sap.size(); ++r) {
            c.expect_eq(q[r], mpz_class(static_cast<unsigned long>(sap[r])),
                        preset_name(tc.p) + " q(" + std::to_string(r) + ") vs even subgraphs");
        }
        if (tc.p == Preset::Square) {
            // On the 4x4 torus the wrapping rows and columns are 4-cycles as
            // well, so both routes give V plaquettes + 8 wraps.
            c.expect_eq(q[4], mpz_class(24), "square 4x4 q(4) = V + 8 wrapping cycles");
            c.note("square 4x4 q(4) = 24 = 16 plaquettes + 8 wrapping cycles, confirmed by "
                   "the even-subgraph enumeration; the clean q(4) = V identity is checked "
                   "on the 5x5 torus");
        }
        if (tc.p == Preset::Triangular) {
            c.expect_eq(q[3], mpz_class(27), "triangular 3x3 q(3) = 2V + 9 wrapping cycles");
        }
    }
    // Tori whose wrapping cycles are longer than the elementary faces: the
    // face counts come out exactly.
    {
        auto sq5 = oracle::FiniteLattice::make(Preset::Square, 5, 5);
        auto q5 = oracle::high_temp_coefficients(sq5, oracle::enumerate_dos(sq5));
        c.expect_eq(q5[4], mpz_class(25), "square 5x5 q(4) = V plaquettes");
        auto tri4 = oracle::FiniteLattice::make(Preset::Triangular, 4, 4);
        auto q4 = oracle::high_temp_coefficients(tri4, oracle::enumerate_dos(tri4));
        c.expect_eq(q4[3], mpz_class(32), "triangular 4x4 q(3) = 2V triangles");
    }
}

// ---- criterion 10: property suites ----------------------------------------

void check_properties(Ctx& c) {
    const auto t0 = Clock::now();
    std::mt19937 rng(20260808u);
    auto small_rational = [&rng]() {
        std::uniform_int_distribution<int> num(-6, 6);
        std::uniform_int_distribution<int> den(1, 4);
        return Rational(num(rng), den(rng));
    };

    // exp(log f) = f and log(exp g) = g exactly, order 16.
    for (int trial = 0; trial < 4; ++trial) {
        const int N = 16;
        XSeries<Rational> f(N);
        f.set_coeff(0, Rational(1));
        for (int n = 1; n <= N; ++n) f.set_coeff(n, small_rational());
        c.expect(series_exp(series_log(f)) == f, "exp(log f) == f");
        XSeries<Rational> g(N);
        for (int n = 1; n <= N; ++n) g.set_coeff(n, small_rational());
        c.expect(series_log(series_exp(g)) == g, "log(exp g) == g");
    }

    // Bell scaling identity B_{N,k}({c b^n f_n}) = c^k b^N B_{N,k}({f_n}).
    for (int trial = 0; trial < 3; ++trial) {
        const int N = 10;
        std::vector<Rational> f, scaled;
        Rational cc = small_rational(), bb = small_rational();
        if (cc.is_zero()) cc = Rational(2);
        if (bb.is_zero()) bb = Rational(3, 2);
        Rational bn(1);
        for (int n = 1; n <= N; ++n) {
            Rational fn = small_rational();
            f.push_back(fn);
            bn *= bb;
            scaled.push_back(cc * bn * fn);
        }
        for (int k = 1; k <= N; ++k) {
            Rational lhs = bell::partial_bell(N, k, scaled);
            Rational rhs = cc.pow(k) * bb.pow(N) * bell::partial_bell(N, k, f);
            c.expect(lhs == rhs, "Bell scaling at k=" + std::to_string(k));
        }
    }

    // Composition identity: sum_k g_k B_{n,k}(f) = n! [x^n] (g o f).
    for (int trial = 0; trial < 3; ++trial) {
        const int N = 8;
        std::uniform_int_distribution<int> small(-3, 3);
        XSeries<Rational> f(N), g(N);
        std::vector<Rational> f_egf(static_cast<size_t>(N));
        std::vector<Rational> g_egf(static_cast<size_t>(N) + 1);
        for (int n = 1; n <= N; ++n) {
            int v = small(rng);
            f.set_coeff(n, Rational(v, 1) / Rational(factorial(n)));
            f_egf[static_cast<size_t>(n - 1)] = Rational(v);
        }
        g_egf[0] = Rational(small(rng));
        g.set_coeff(0, g_egf[0]);
        for (int k = 1; k <= N; ++k) {
            int v = small(rng);
            g.set_coeff(k, Rational(v, 1) / Rational(factorial(k)));
            g_egf[static_cast<size_t>(k)] = Rational(v);
        }
        XSeries<Rational> h = series_compose(g, f);
        for (int n = 1; n <= N; ++n) {
            Rational via_bell(0);
            for (int k = 1; k <= n; ++k) {
                via_bell += g_egf[static_cast<size_t>(k)] * bell::partial_bell(n, k, f_egf);
            }
            Rational via_compose = h.coeff(n) * Rational(factorial(n));
            c.expect(via_bell == via_compose, "composition identity at n=" + std::to_string(n));
        }
    }

    c.expect(oracle::sign_invariance_check(12), "sign invariance up to n=12");

    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    c.expect(secs < 60.0, "criterion 10 runtime " + std::to_string(secs) + "s < 60s");
}

}  // namespace

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["schema"] = "1";
    j["suite"] = suite;
    j["pass"] = all_pass;
    j["total_seconds"] = total_seconds;
    nlohmann::json arr = nlohmann::json::array();
    for (const CheckResult& r : checks) {
        nlohmann::json e;
        e["criterion"] = r.criterion;
        e["id"] = r.id;
        e["pass"] = r.pass;
        e["detail"] = r.detail;
        e["seconds"] = r.seconds;
        arr.push_back(e);
    }
    j["checks"] = arr;
    return j;
}

std::string VerifyReport::summary() const {
    std::map<int, std::pair<bool, std::string>> per_criterion;
    for (const CheckResult& r : checks) {
        auto [it, inserted] = per_criterion.try_emplace(r.criterion, std::make_pair(true, ""));
        it->second.first = it->second.first && r.pass;
        if (!r.pass) it->second.second += r.id + ": " + r.detail + " ";
    }
    std::ostringstream os;
    for (const auto& [criterion, state] : per_criterion) {
        os << (state.first ? "[PASS]" : "[FAIL]") << " criterion " << criterion;
        if (!state.first) os << " -- " << state.second;
        os << "\n";
    }
    os << (all_pass ? "ALL CRITERIA PASS" : "VERIFICATION FAILED") << "\n";
    return os.str();
}

VerifyReport run_verification(const std::string& suite) {
    if (suite != "fast" && suite != "all") {
        throw spec_error("verify: suite must be 'fast' or 'all'");
    }
    const bool heavy_too = suite == "all";

    std::vector<Check> checks;
    checks.push_back({1, "square-free-energy", false, check_square_free_energy});
    checks.push_back({2, "square-states", false, check_square_states});
    checks.push_back({3, "triangular-series", false, check_triangular});
    checks.push_back({3, "triangular-sign-oracle", true, check_triangular_sign_oracle});
    checks.push_back({4, "hexagonal", false, check_hexagonal});
    checks.push_back({5, "walks", false, check_walks});
    checks.push_back({6, "finite-square-4x4", false, [](Ctx& c) { check_finite_square(c, 4); }});
    checks.push_back({6, "finite-square-5x5", true, [](Ctx& c) { check_finite_square(c, 5); }});
    checks.push_back({6, "finite-triangular", false, check_finite_triangular});
    checks.push_back({7, "quadrature", false, check_quadrature});
    checks.push_back({8, "hypergeometric", false, check_hypergeometric});
    checks.push_back({9, "high-temperature", false, check_high_temperature});
    checks.push_back({10, "properties", false, check_properties});

    VerifyReport report;
    report.suite = suite;
    report.all_pass = true;
    const auto t0 = Clock::now();
    for (const Check& ch : checks) {
        if (ch.heavy && !heavy_too) continue;
        Ctx ctx;
        const auto c0 = Clock::now();
        try {
            ch.run(ctx);
        } catch (const std::exception& e) {
            ctx.ok = false;
            ctx.log << "exception: " << e.what();
        }
        CheckResult r;
        r.criterion = ch.criterion;
        r.id = ch.id;
        r.pass = ctx.ok;
        r.detail = ctx.log.str();
        if (r.pass && r.detail.empty()) r.detail = "ok";
        r.seconds = std::chrono::duration<double>(Clock::now() - c0).count();
        report.all_pass = report.all_pass && r.pass;
        report.checks.push_back(std::move(r));
    }
    report.total_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
}

}  // namespace verify
}  // namespace isingx
