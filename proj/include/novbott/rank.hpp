#ifndef NOVBOTT_RANK_HPP
#define NOVBOTT_RANK_HPP

#include <cstdint>

#include "novbott/laurent_matrix.hpp"

namespace novbott {

enum class RankStrategy { randomized, exact };

struct RankOptions {
    RankStrategy strategy = RankStrategy::randomized;
    // Evaluation prime; must be a prime >= 2^30 so the failure bound stays
    // small.
    std::uint64_t prime = 2147483647ULL;
    unsigned trials = 3;
    std::uint64_t seed = 0;
};

struct GenericRankResult {
    std::size_t rank = 0;
    // Probability that `rank` under-reports the generic rank; 0 for the
    // exact strategy. Never an under-estimate by more than this with the
    // randomized one: each trial evaluates at a uniform nonzero point, and
    // a maximal minor vanishes there with probability at most
    // degree/(prime-1), independently per trial.
    double failure_bound = 0.0;
};

// Rank over the fraction field of the Laurent ring (the generic value).
GenericRankResult rank_generic(const LaurentMatrix& m, const RankOptions& opts = {});

// Exact rank of the rational matrix obtained by substituting the point.
std::size_t rank_at_point(const LaurentMatrix& m, const std::vector<Rational>& point);

// Rank of a matrix over Z/p by elimination.
std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

bool is_prime_u64(std::uint64_t n);

}  // namespace novbott

#endif
