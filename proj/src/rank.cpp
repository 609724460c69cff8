#include "novbott/rank.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "novbott/errors.hpp"
#include "novbott/rng.hpp"

namespace novbott {

namespace {

// Exact quotient a / b in the Laurent ring; the caller guarantees b | a.
// Cancels lex-leading terms; each step strictly lowers the leading monomial
// of the residue, and exactness bounds the step count by the quotient's
// term count.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = a;
    LaurentPoly quot(a.num_vars());
    const auto& lead_b = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& lead_r = *rem.terms().rbegin();
        const ExpVec e = exp_sub(lead_r.first, lead_b.first);
        const Rational c = lead_r.second / lead_b.second;
        const LaurentPoly mono = LaurentPoly::monomial(e, c);
        quot = quot + mono;
        rem = rem - mono * b;
        if (!rem.is_zero() && !(rem.terms().rbegin()->first < lead_r.first)) {
            throw std::logic_error("inexact polynomial division in elimination");
        }
    }
    return quot;
}

std::size_t rank_exact(const LaurentMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    // Row scaling by unit monomials leaves rank unchanged and makes every
    // entry a polynomial, the domain fraction-free elimination works in.
    std::vector<std::vector<LaurentPoly>> w(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        const ExpVec shift = m.row_clear_shift(i);
        ExpVec neg(shift.size());
        for (std::size_t v = 0; v < shift.size(); ++v) neg[v] = checked_mul(shift[v], -1);
        w[i].reserve(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            w[i].push_back(m.at(i, j).shifted(neg));
        }
    }
    LaurentPoly prev = LaurentPoly::constant(m.num_vars(), Rational(1));
    std::size_t rank = 0;
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t k = 0; k < steps; ++k) {
        // Full pivoting; the sparsest nonzero entry keeps growth down, and
        // the (row, col) tie-break keeps the run deterministic.
        std::size_t pi = rows, pj = cols;
        std::size_t best_terms = SIZE_MAX;
        for (std::size_t i = k; i < rows; ++i) {
            for (std::size_t j = k; j < cols; ++j) {
                if (w[i][j].is_zero()) continue;
                if (w[i][j].term_count() < best_terms) {
                    best_terms = w[i][j].term_count();
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi == rows) break;
        std::swap(w[pi], w[k]);
        if (pj != k) {
            for (std::size_t i = 0; i < rows; ++i) std::swap(w[i][pj], w[i][k]);
        }
        for (std::size_t i = k + 1; i < rows; ++i) {
            for (std::size_t j = k + 1; j < cols; ++j) {
                w[i][j] = exact_div(w[i][j] * w[k][k] - w[i][k] * w[k][j], prev);
            }
            w[i][k] = LaurentPoly(m.num_vars());
        }
        prev = w[k][k];
        ++rank;
    }
    return rank;
}

double schwartz_zippel_bound(const LaurentMatrix& m, const RankOptions& opts) {
    std::vector<std::int64_t> degrees;
    degrees.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const std::int64_t d = m.cleared_row_degree(i);
        if (d > 0) degrees.push_back(d);
    }
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
    const std::size_t take = std::min(degrees.size(), std::min(m.rows(), m.cols()));
    double total = 0.0;
    for (std::size_t i = 0; i < take; ++i) total += static_cast<double>(degrees[i]);
    const double per_trial =
        std::min(1.0, total / static_cast<double>(opts.prime - 1));
    return std::pow(per_trial, static_cast<double>(opts.trials));
}

}  // namespace

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t sel = rank;
        while (sel < rows && m[sel][col] % p == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[rank]);
        const std::uint64_t inv = mod_inv(m[rank][col], p);
        for (std::size_t j = col; j < cols; ++j) m[rank][j] = mod_mul(m[rank][j], inv, p);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            const std::uint64_t f = m[i][col] % p;
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                const std::uint64_t sub = mod_mul(f, m[rank][j], p);
                m[i][j] = (m[i][j] % p + p - sub) % p;
            }
        }
        ++rank;
    }
    return rank;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    // Deterministic witness set for all 64-bit integers.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                            19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = mod_pow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

GenericRankResult rank_generic(const LaurentMatrix& m, const RankOptions& opts) {
    if (m.rows() == 0 || m.cols() == 0) return {0, 0.0};
    if (opts.strategy == RankStrategy::exact) {
        return {rank_exact(m), 0.0};
    }
    if (opts.trials == 0) throw invalid_input("randomized rank needs at least one trial");
    if (opts.prime < (1ULL << 30) || !is_prime_u64(opts.prime)) {
        throw invalid_input("evaluation modulus must be a prime >= 2^30");
    }
    std::size_t best = 0;
    for (unsigned trial = 0; trial < opts.trials; ++trial) {
        Rng rng = Rng::forked(opts.seed, trial);
        std::vector<std::uint64_t> point(m.num_vars());
        for (std::size_t v = 0; v < point.size(); ++v) {
            point[v] = 1 + rng.below(opts.prime - 1);
        }
        best = std::max(best, rank_mod(m.evaluate_mod(point, opts.prime), opts.prime));
    }
    return {best, schwartz_zippel_bound(m, opts)};
}

std::size_t rank_at_point(const LaurentMatrix& m, const std::vector<Rational>& point) {
    return m.evaluate(point).rank();
}

}  // namespace novbott
