#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "linforest/forest.hpp"
#include "linforest/graph.hpp"

namespace linf {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// C(a,b) with C(a,b) = 0 for b < 0 or b > a and C(a,0) = 1.
inline BigInt binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

namespace detail {

inline std::uint64_t clique_rec(const Graph& g, Mask cand, int s) {
    if (s == 1) return static_cast<std::uint64_t>(popcount(cand));
    std::uint64_t total = 0;
    while (cand) {
        int v = lowest_bit(cand);
        cand &= cand - 1;
        Mask next = cand & g.neighbors(v);
        if (popcount(next) >= s - 1) total += clique_rec(g, next, s - 1);
    }
    return total;
}

}  // namespace detail

// Exact number of s-vertex subsets inducing complete graphs. Counts fit in 64
// bits for any graph on at most 64 vertices; the API returns BigInt so the
// formula layer composes without overflow concerns.
inline BigInt count_cliques(const Graph& g, int s, int threads = 1) {
    if (s < 1) throw std::invalid_argument("clique order must be >= 1");
    if (s > g.order()) return 0;
    if (threads <= 1) return detail::clique_rec(g, g.vertices(), s);
    if (s == 1) return g.order();
    // split the top-level vertex branches across threads; sum is order-free
    std::vector<std::uint64_t> part(threads, 0);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            std::uint64_t acc = 0;
            for (int v = t; v < g.order(); v += threads) {
                Mask next = g.neighbors(v) & ~((Mask{2} << v) - 1);
                if (popcount(next) >= s - 1) acc += detail::clique_rec(g, next, s - 1);
            }
            part[t] = acc;
        });
    for (auto& th : pool) th.join();
    std::uint64_t total = 0;
    for (auto p : part) total += p;
    return total;
}

// Closed-form clique count of the extremal construction G_F(n):
// C(d,s) + (n-d) C(d,s-1) + [all components odd] C(d,s-2), d = delta_F.
inline BigInt gf_formula(const LinearForest& f, long long n, int s) {
    const int d = f.delta_f();
    if (n < d + 2) throw std::invalid_argument("gf_formula needs n >= delta_F + 2");
    BigInt v = binomial(d, s) + BigInt(n - d) * binomial(d, s - 1);
    if (f.all_odd()) v += binomial(d, s - 2);
    return v;
}

// Upper bound n/(l-1) * C(l-1,s) on ex(n,K_s,P_l), as an exact rational.
inline BigRat luo_bound(int ell, int s, long long n) {
    if (ell < 2 || s < 1) throw std::invalid_argument("luo_bound needs ell >= 2, s >= 1");
    return BigRat(BigInt(n) * binomial(ell - 1, s), ell - 1);
}

// Clique count of floor(n/(l-1)) K_{l-1} plus one K_{n mod (l-1)}; attains
// Luo's bound exactly when (l-1) | n.
inline BigInt path_turan_lower(int ell, int s, long long n) {
    if (ell < 2 || s < 1) throw std::invalid_argument("path_turan_lower needs ell >= 2, s >= 1");
    return BigInt(n / (ell - 1)) * binomial(ell - 1, s) + binomial(n % (ell - 1), s);
}

// True when F = 2P_l with l odd, the branch with its own closed form.
inline bool is_two_odd_paths(const LinearForest& f) {
    const auto& o = f.orders();
    return o.size() == 2 && o[0] == o[1] && o[0] % 2 == 1;
}

// The asserted value of ex(n,K_s,F). `path_turan` must be the exact
// ex(n,K_s,P_{l_1}); it is an input because no closed form covers all n.
inline BigInt theorem_value(const LinearForest& f, long long n, int s, const BigInt& path_turan) {
    f.require_theorem_valid();
    const int d = f.delta_f();
    if (s < 1 || s > d + 1) throw std::invalid_argument("theorem_value needs 1 <= s <= delta_F + 1");
    if (is_two_odd_paths(f)) {
        const int ell = f.orders()[0];
        if (s <= d) return gf_formula(f, n, s);
        BigInt v = BigInt((n - 1) / (ell - 1)) * ell;
        if ((n - 1) % (ell - 1) == ell - 2) v += 1;
        return v;
    }
    BigInt gf = gf_formula(f, n, s);
    return std::max(gf, path_turan);
}

// Smallest n with n >= 5 C(|F|-1,s)^2 / ((|F|-1) C(d,s-1)) + d, exactly.
inline long long threshold_n(const LinearForest& f, int s) {
    const int d = f.delta_f();
    if (s < 1 || s > d + 1) throw std::invalid_argument("threshold_n needs 1 <= s <= delta_F + 1");
    const long long total = f.total_order();
    BigInt a = binomial(total - 1, s);
    if (a == 0) return d;
    BigInt num = 5 * a * a;
    BigInt den = BigInt(total - 1) * binomial(d, s - 1);
    BigInt n = (num + den - 1) / den + d;
    if (n > (BigInt(1) << 62)) throw std::overflow_error("threshold does not fit in 64 bits");
    return static_cast<long long>(n);
}

}  // namespace linf
