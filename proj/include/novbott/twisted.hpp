#ifndef NOVBOTT_TWISTED_HPP
#define NOVBOTT_TWISTED_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "novbott/laurent_matrix.hpp"
#include "novbott/qlinalg.hpp"
#include "novbott/rank.hpp"

namespace novbott {

// Cochain complex twisted by a multiplicative deformation: coboundary
// entries live in the Laurent ring, one variable per independent period.
// Immutable once built.
struct TwistedComplex {
    std::string name;
    std::size_t top_degree = 0;  // n
    std::size_t fiber_dim = 1;   // d
    std::size_t num_vars = 0;    // l
    std::vector<std::size_t> cochain_ranks;   // c_0..c_n, each divisible by d
    std::vector<LaurentMatrix> coboundaries;  // D^p: c_{p+1} x c_p, p = 0..n-1
    std::vector<double> period_basis;         // length l, numeric curve data
};

// One signed group-ring word contributing to a boundary incidence.
struct WordFactor {
    std::string generator;
    bool inverse = false;
};

struct BoundaryTerm {
    int sign = 1;  // +1 or -1
    std::vector<WordFactor> word;
};

// Contribution to the block of D^degree at ((degree+1)-cell, degree-cell).
struct BoundaryIncidence {
    std::size_t degree = 0;
    std::size_t cell = 0;
    std::size_t face = 0;
    std::vector<BoundaryTerm> terms;
};

struct GeneratorData {
    std::string name;
    QMatrix matrix;   // d x d, invertible
    ExpVec exponents; // length l
};

struct ComplexDescription {
    std::string name;
    std::size_t top_degree = 0;
    std::size_t fiber_dim = 1;
    std::size_t num_vars = 0;
    std::vector<std::size_t> cell_counts;  // per degree 0..n
    std::vector<double> period_basis;
    std::vector<GeneratorData> generators;
    std::vector<BoundaryIncidence> incidences;
    // Raw mode: coboundaries given directly, one matrix per degree 0..n-1;
    // ignored unless `raw` is set.
    bool raw = false;
    std::vector<LaurentMatrix> raw_coboundaries;
};

// Assembles blocks sum(sign * x^{e(word)} * phi(word)) and validates shapes
// and flatness D^{p+1} D^p = 0. Throws invalid_input naming the first
// offending entry.
TwistedComplex build_complex(const ComplexDescription& desc);

struct NovikovResult {
    std::vector<std::size_t> betti;  // beta_0..beta_n
    // Union bound over the per-coboundary randomized failures; 0 when exact.
    double failure_bound = 0.0;
};

// Background (generic) cohomology dimensions over the fraction field.
NovikovResult novikov_numbers(const TwistedComplex& c, const RankOptions& opts = {});

// Exact dimensions at one point of the rational torus.
std::vector<std::size_t> dimensions_at(const TwistedComplex& c,
                                       const std::vector<Rational>& point);

struct JumpProbe {
    std::vector<Rational> point;
    std::vector<std::size_t> dims;
    std::vector<bool> is_jump;  // strict excess over background, per degree
};

struct JumpScanReport {
    std::vector<std::size_t> background;
    double failure_bound = 0.0;
    std::vector<JumpProbe> probes;
};

JumpScanReport jump_scan(const TwistedComplex& c,
                         const std::vector<std::vector<Rational>>& probe_points,
                         const RankOptions& opts = {});

// Alternating sum of cochain ranks = d * Euler characteristic of the base.
long long euler_characteristic(const TwistedComplex& c);

}  // namespace novbott

#endif
