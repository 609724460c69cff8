#include "novbott/hodge.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "novbott/errors.hpp"

namespace novbott {

namespace {

Eigen::MatrixXd to_eigen(const std::vector<std::vector<double>>& rows,
                         std::size_t nrows, std::size_t ncols) {
    Eigen::MatrixXd out = Eigen::MatrixXd::Zero(
        static_cast<Eigen::Index>(nrows), static_cast<Eigen::Index>(ncols));
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) {
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
        }
    }
    return out;
}

// D^p conjugated into the weighted inner products.
Eigen::MatrixXd weighted_map(const NumericComplex& nc, std::size_t p) {
    const Eigen::VectorXd& wlow = nc.weights[p];
    const Eigen::VectorXd& whigh = nc.weights[p + 1];
    return whigh.cwiseSqrt().asDiagonal() * nc.coboundaries[p] *
           wlow.cwiseSqrt().cwiseInverse().asDiagonal();
}

}  // namespace

NumericComplex evaluate_complex(const TwistedComplex& c, double t, double alpha) {
    NumericComplex nc;
    nc.s = t * alpha;
    nc.ranks = c.cochain_ranks;
    nc.weights.reserve(c.cochain_ranks.size());
    for (std::size_t rank : c.cochain_ranks) {
        nc.weights.push_back(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(rank)));
    }
    nc.coboundaries.reserve(c.top_degree);
    for (std::size_t p = 0; p < c.top_degree; ++p) {
        const auto rows = c.coboundaries[p].evaluate_numeric(nc.s, c.period_basis);
        nc.coboundaries.push_back(
            to_eigen(rows, c.cochain_ranks[p + 1], c.cochain_ranks[p]));
    }
    for (std::size_t p = 0; p + 1 < c.top_degree; ++p) {
        const double res = (nc.coboundaries[p + 1] * nc.coboundaries[p]).norm();
        if (res > nc.flatness_residual) nc.flatness_residual = res;
    }
    return nc;
}

std::vector<double> laplacian_spectrum(const NumericComplex& nc, std::size_t degree) {
    if (degree >= nc.ranks.size()) throw invalid_input("degree out of range");
    for (std::size_t p = 0; p < nc.weights.size(); ++p) {
        if ((nc.weights[p].array() <= 0.0).any()) {
            throw invalid_input("weights must be strictly positive");
        }
    }
    const Eigen::Index n = static_cast<Eigen::Index>(nc.ranks[degree]);
    Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
    if (degree < nc.coboundaries.size()) {
        const Eigen::MatrixXd a = weighted_map(nc, degree);
        s += a.transpose() * a;
    }
    if (degree >= 1) {
        const Eigen::MatrixXd a = weighted_map(nc, degree - 1);
        s += a * a.transpose();
    }
    const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-10 * (1.0 + s.cwiseAbs().maxCoeff())) {
        throw std::runtime_error("laplacian assembly lost symmetry");
    }
    const Eigen::MatrixXd sym = 0.5 * (s + s.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::size_t counting_function(const std::vector<double>& eigenvalues, double lambda) {
    std::size_t count = 0;
    for (double e : eigenvalues) {
        if (e <= lambda) ++count;
    }
    return count;
}

KernelComparison kernel_vs_exact(const TwistedComplex& c,
                                 const std::vector<double>& s_values,
                                 double epsilon, const RankOptions& opts) {
    if (epsilon <= 0.0) throw invalid_input("kernel threshold must be positive");
    KernelComparison out;
    const NovikovResult background = novikov_numbers(c, opts);
    out.background = background.betti;
    out.failure_bound = background.failure_bound;
    for (double s : s_values) {
        const NumericComplex nc = evaluate_complex(c, s, 1.0);
        for (std::size_t p = 0; p <= c.top_degree; ++p) {
            const std::vector<double> spectrum = laplacian_spectrum(nc, p);
            KernelCell cell;
            cell.s = s;
            cell.degree = p;
            cell.eigenvalues = spectrum;
            cell.numeric_kernel = counting_function(spectrum, epsilon);
            cell.exact_background = out.background[p];
            cell.separation = std::numeric_limits<double>::infinity();
            for (double e : spectrum) {
                if (e > epsilon) {
                    cell.separation = e;
                    break;
                }
            }
            cell.conclusive = !(cell.separation < 10.0 * epsilon);
            cell.match = cell.numeric_kernel == cell.exact_background;
            out.cells.push_back(cell);
        }
    }
    return out;
}

double operator_norm(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    return svd.singularValues()(0);
}

double ims_identity_residual(const Eigen::MatrixXd& h, const Eigen::VectorXd& j) {
    if (h.rows() != h.cols()) throw invalid_input("operator must be square");
    if (j.size() != h.rows()) throw invalid_input("cutoff length must match the operator");
    for (Eigen::Index i = 0; i < j.size(); ++i) {
        if (!(j(i) >= 0.0 && j(i) <= 1.0)) {
            throw invalid_input("cutoff entries must lie in [0, 1]");
        }
    }
    const Eigen::VectorXd jbar =
        (Eigen::VectorXd::Ones(j.size()) - j.cwiseProduct(j)).cwiseSqrt();
    const auto commute2 = [&h](const Eigen::VectorXd& d) {
        const Eigen::MatrixXd inner = d.asDiagonal() * h - h * d.asDiagonal();
        return Eigen::MatrixXd(d.asDiagonal() * inner - inner * d.asDiagonal());
    };
    const Eigen::MatrixXd rebuilt =
        jbar.asDiagonal() * h * jbar.asDiagonal() + j.asDiagonal() * h * j.asDiagonal() +
        0.5 * commute2(jbar) + 0.5 * commute2(j);
    return operator_norm(h - rebuilt);
}

RankPerturbationReport rank_perturbation_check(const Eigen::MatrixXd& a,
                                               const Eigen::MatrixXd& b,
                                               double mu, double eps) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
        throw invalid_input("operators must be square and of equal size");
    }
    RankPerturbationReport report;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sum_solver(0.5 * (a + b + (a + b).transpose()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> a_solver(0.5 * (a + a.transpose()));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> b_solver(0.5 * (b + b.transpose()));
    if (sum_solver.info() != Eigen::Success || a_solver.info() != Eigen::Success ||
        b_solver.info() != Eigen::Success) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    report.lambda_min = sum_solver.eigenvalues()(0);
    report.hypothesis_met = report.lambda_min >= mu - 1e-9 * std::max(1.0, std::abs(mu));
    const Eigen::VectorXd& ae = a_solver.eigenvalues();
    for (Eigen::Index i = 0; i < ae.size(); ++i) {
        if (ae(i) <= mu - eps) ++report.small_count;
    }
    const Eigen::VectorXd& be = b_solver.eigenvalues();
    const double scale = be.size() == 0 ? 1.0 : be.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < be.size(); ++i) {
        if (std::abs(be(i)) > 1e-8 * std::max(1.0, scale)) ++report.rank_bound;
    }
    report.bound_holds = report.hypothesis_met && report.small_count <= report.rank_bound;
    return report;
}

PlantedInstance plant_rank_perturbation(Rng& rng, std::size_t dim) {
    if (dim == 0) throw invalid_input("instance dimension must be positive");
    const Eigen::Index n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXd noise(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index jj = 0; jj < n; ++jj) noise(i, jj) = rng.real(-1.0, 1.0);
    }
    const Eigen::MatrixXd q =
        Eigen::HouseholderQR<Eigen::MatrixXd>(noise).householderQ();
    PlantedInstance inst;
    inst.mu = 1.0 + 2.0 * rng.unit();
    inst.eps = 0.05 + 0.1 * rng.unit();
    inst.planted_rank = rng.below(dim + 1);
    Eigen::VectorXd avals(n);
    Eigen::VectorXd bvals = Eigen::VectorXd::Zero(n);
    for (std::size_t i = 0; i < dim; ++i) {
        if (i < inst.planted_rank) {
            // Below the window with margin; lifted above mu by B.
            avals(static_cast<Eigen::Index>(i)) =
                inst.mu - inst.eps - 0.2 - 2.0 * rng.unit();
            bvals(static_cast<Eigen::Index>(i)) =
                inst.mu - avals(static_cast<Eigen::Index>(i)) + 0.2 + rng.unit();
        } else {
            avals(static_cast<Eigen::Index>(i)) = inst.mu + 0.5 + 2.0 * rng.unit();
        }
    }
    inst.a = q * avals.asDiagonal() * q.transpose();
    inst.b = q * bvals.asDiagonal() * q.transpose();
    return inst;
}

}  // namespace novbott
