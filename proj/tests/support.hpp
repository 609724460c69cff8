#ifndef NOVBOTT_TESTS_SUPPORT_HPP
#define NOVBOTT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <vector>

#include "novbott/laurent.hpp"
#include "novbott/laurent_matrix.hpp"
#include "novbott/rng.hpp"
#include "novbott/twisted.hpp"

namespace novbott::testsupport {

// Cofactor-expansion determinant; exponential, for oracle use on small
// matrices only.
inline LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly::constant(0, Rational(1));
    const std::size_t vars = m[0][0].num_vars();
    if (n == 1) return m[0][0];
    LaurentPoly det(vars);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<LaurentPoly>> minor;
        minor.reserve(n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            row.reserve(n - 1);
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j) row.push_back(m[i][k]);
            }
            minor.push_back(std::move(row));
        }
        LaurentPoly contrib = m[0][j] * cofactor_det(minor);
        if (j % 2 == 1) contrib = -contrib;
        det = det + contrib;
    }
    return det;
}

// Generic rank as the largest k with a nonzero k x k minor. Exhaustive over
// all row and column subsets, so keep the inputs at 4x4 or smaller.
inline std::size_t minor_rank(const LaurentMatrix& m) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    const std::size_t bound = rows < cols ? rows : cols;
    for (std::size_t k = bound; k >= 1; --k) {
        for (std::uint64_t rmask = 0; rmask < (1ULL << rows); ++rmask) {
            if (static_cast<std::size_t>(__builtin_popcountll(rmask)) != k) continue;
            for (std::uint64_t cmask = 0; cmask < (1ULL << cols); ++cmask) {
                if (static_cast<std::size_t>(__builtin_popcountll(cmask)) != k) continue;
                std::vector<std::vector<LaurentPoly>> sub;
                for (std::size_t i = 0; i < rows; ++i) {
                    if (!(rmask >> i & 1)) continue;
                    std::vector<LaurentPoly> row;
                    for (std::size_t j = 0; j < cols; ++j) {
                        if (cmask >> j & 1) row.push_back(m.at(i, j));
                    }
                    sub.push_back(std::move(row));
                }
                if (!cofactor_det(sub).is_zero()) return k;
            }
        }
    }
    return 0;
}

// Betti numbers straight from the definition, with minor-expansion ranks.
inline std::vector<std::size_t> oracle_betti(const TwistedComplex& c) {
    std::vector<std::size_t> ranks(c.coboundaries.size(), 0);
    for (std::size_t p = 0; p < c.coboundaries.size(); ++p) {
        ranks[p] = minor_rank(c.coboundaries[p]);
    }
    std::vector<std::size_t> betti(c.cochain_ranks.size(), 0);
    for (std::size_t p = 0; p < betti.size(); ++p) {
        std::size_t cut = 0;
        if (p < ranks.size()) cut += ranks[p];
        if (p >= 1) cut += ranks[p - 1];
        betti[p] = c.cochain_ranks[p] - cut;
    }
    return betti;
}

inline LaurentPoly random_poly(Rng& rng, std::size_t num_vars, std::size_t max_terms,
                               std::int64_t exp_range, long coeff_range) {
    LaurentPoly p(num_vars);
    const std::size_t terms = rng.below(max_terms + 1);
    for (std::size_t t = 0; t < terms; ++t) {
        ExpVec e(num_vars);
        for (std::size_t v = 0; v < num_vars; ++v) {
            e[v] = static_cast<std::int64_t>(rng.below(2 * exp_range + 1)) - exp_range;
        }
        const long c = static_cast<long>(rng.below(2 * coeff_range + 1)) - coeff_range;
        p.add_term(e, Rational(c));
    }
    return p;
}

inline LaurentMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                   std::size_t num_vars, std::size_t max_terms,
                                   std::int64_t exp_range, long coeff_range) {
    LaurentMatrix m(rows, cols, num_vars);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            m.set(i, j, random_poly(rng, num_vars, max_terms, exp_range, coeff_range));
        }
    }
    return m;
}

}  // namespace novbott::testsupport

#endif
