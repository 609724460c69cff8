#ifndef NOVBOTT_HODGE_HPP
#define NOVBOTT_HODGE_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "novbott/rng.hpp"
#include "novbott/twisted.hpp"

namespace novbott {

// Floating-point shadow of a twisted complex at one parameter value.
struct NumericComplex {
    double s = 0.0;
    std::vector<std::size_t> ranks;             // c_p
    std::vector<Eigen::MatrixXd> coboundaries;  // D^p: c_{p+1} x c_p
    std::vector<Eigen::VectorXd> weights;       // positive, one per degree
    // Largest Frobenius norm among the composites D^{p+1} D^p; reported,
    // not enforced.
    double flatness_residual = 0.0;
};

// Substitutes the twisting curve at s = t * alpha; unit weights.
NumericComplex evaluate_complex(const TwistedComplex& c, double t, double alpha);

/// Eigenvalues (ascending) of the weighted Laplacian in the given degree:
// A_p^T A_p + A_{p-1} A_{p-1}^T with A_p = W_{p+1}^{1/2} D^p W_p^{-1/2}.
std::vector<double> laplacian_spectrum(const NumericComplex& nc, std::size_t degree);

// Eigenvalues not exceeding lambda, with multiplicity.
std::size_t counting_function(const std::vector<double>& eigenvalues, double lambda);

struct KernelCell {
    double s = 0.0;
    std::size_t degree = 0;
    std::vector<double> eigenvalues;  // full ascending spectrum at (s, degree)
    std::size_t numeric_kernel = 0;
    std::size_t exact_background = 0;
    // Smallest eigenvalue above the threshold (infinity when none); the
    // cell is conclusive only when this clears 10x the threshold.
    double separation = 0.0;
    bool conclusive = false;
    bool match = false;
};

struct KernelComparison {
    std::vector<std::size_t> background;
    double failure_bound = 0.0;
    std::vector<KernelCell> cells;  // ordered by (s, degree)
};

// Numeric kernel dimensions along the curve against the exact background.
KernelComparison kernel_vs_exact(const TwistedComplex& c,
                                 const std::vector<double>& s_values,
                                 double epsilon, const RankOptions& opts = {});

// Operator norm (largest singular value).
double operator_norm(const Eigen::MatrixXd& m);

// Norm of H - (Jb H Jb + J H J + [Jb,[Jb,H]]/2 + [J,[J,H]]/2) with
// J = diag(j), Jb = diag(sqrt(1-j^2)); exactly zero in real arithmetic.
double ims_identity_residual(const Eigen::MatrixXd& h, const Eigen::VectorXd& j);

struct RankPerturbationReport {
    bool hypothesis_met = false;  // lambda_min(A+B) >= mu, up to fp slack
    double lambda_min = 0.0;
    std::size_t small_count = 0;  // N(mu - eps, A)
    std::size_t rank_bound = 0;   // numerical rank of B
    bool bound_holds = false;     // small_count <= rank_bound
};

// Checks N(mu - eps, A) <= rank(B) under the hypothesis A + B >= mu.
RankPerturbationReport rank_perturbation_check(const Eigen::MatrixXd& a,
                                               const Eigen::MatrixXd& b,
                                               double mu, double eps);

struct PlantedInstance {
    Eigen::MatrixXd a;
    Eigen::MatrixXd b;
    double mu = 0.0;
    double eps = 0.0;
    std::size_t planted_rank = 0;
};

// Random instance with known rank and spectral margins; always satisfies
// the hypothesis with margin well above fp slack.
PlantedInstance plant_rank_perturbation(Rng& rng, std::size_t dim);

}  // namespace novbott

#endif
