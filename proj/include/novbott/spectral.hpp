#ifndef NOVBOTT_SPECTRAL_HPP
#define NOVBOTT_SPECTRAL_HPP

#include <string>
#include <vector>

#include "novbott/qlinalg.hpp"
#include "novbott/twisted.hpp"

namespace novbott {

// Polynomial deformation of differentials D(t) = sum_k (t-t0)^k D_k,
// truncated at order K. Flatness is only required as a congruence
// mod (t-t0)^{K+1}.
struct DeformationFamily {
    std::string name;
    Rational base_point;  // t0; the computation recenters, so this is metadata
    std::size_t order = 0;  // K
    std::vector<std::size_t> cochain_ranks;  // c_0..c_n
    // terms[p][k] = D_k in degree p (shape c_{p+1} x c_p), k = 0..K.
    std::vector<std::vector<QMatrix>> terms;
};

// Shape and flatness-congruence validation; throws invalid_input naming the
// first offending degree and order.
void validate_family(const DeformationFamily& f);

// Basis of Z^p_r: coefficient vectors (f_0..f_{r-1}) in Q^{r c_p} with
// D(t) f(t) divisible by (t-t0)^r. Needs r >= 1 and r <= K+1.
std::vector<std::vector<Rational>> cycle_space(const DeformationFamily& f,
                                               std::size_t degree, std::size_t r);

struct SpectralPage {
    std::size_t r = 1;
    std::vector<std::size_t> dims;  // per degree 0..n
    // d_r on the chosen representatives; differentials[p]: E^p -> E^{p+1}.
    std::vector<QMatrix> differentials;
    // representatives[p]: basis vectors of Z^p_r spanning E^p_r modulo the
    // boundary-plus-lower subspace; coordinates of d_r refer to these.
    std::vector<std::vector<std::vector<Rational>>> representatives;
};

// Page r of the deformation spectral sequence; needs 1 <= r <= K.
SpectralPage page(const DeformationFamily& f, std::size_t r);

struct LimitResult {
    std::vector<std::size_t> dims;
    bool stabilized = false;
    // First page index from which dims repeat through page K; meaningful
    // only when stabilized.
    std::size_t stabilized_at = 0;
    std::vector<SpectralPage> pages;  // pages 1..K in order
};

// Dims of the first repeated page within the truncation window; a sequence
// that never repeats before page K is reported as not stabilized.
LimitResult limit_page(const DeformationFamily& f);

// Taylor family of a twisted complex along x_j = q_j (1+s)^{w_j}: monomial
// coefficients expand through generalized binomials, truncated at `order`.
DeformationFamily linearize(const TwistedComplex& c,
                            const std::vector<Rational>& point,
                            const std::vector<std::int64_t>& weights,
                            std::size_t order);

}  // namespace novbott

#endif
