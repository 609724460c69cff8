#include "novbott/spectral.hpp"

#include <sstream>

#include "novbott/errors.hpp"

namespace novbott {

namespace {

std::size_t family_top(const DeformationFamily& f) {
    if (f.cochain_ranks.empty()) throw invalid_input("family has no cochain ranks");
    return f.cochain_ranks.size() - 1;
}

const QMatrix* term_or_null(const DeformationFamily& f, std::size_t p, std::size_t k) {
    if (p >= f.terms.size() || k >= f.terms[p].size()) return nullptr;
    return &f.terms[p][k];
}

// Coefficients h_0..h_{max_k} of D(t) g(t) for g with coefficients
// g_0..g_{len-1} in degree p, all in powers of (t-t0).
std::vector<std::vector<Rational>> apply_family(const DeformationFamily& f,
                                                std::size_t p,
                                                const std::vector<Rational>& g,
                                                std::size_t len,
                                                std::size_t max_k) {
    const std::size_t cp = f.cochain_ranks[p];
    const std::size_t cq = f.cochain_ranks[p + 1];
    std::vector<std::vector<Rational>> h(max_k + 1, std::vector<Rational>(cq, Rational(0)));
    for (std::size_t k = 0; k <= max_k; ++k) {
        for (std::size_t j = 0; j < len && j <= k; ++j) {
            const QMatrix* d = term_or_null(f, p, k - j);
            if (d == nullptr) continue;
            for (std::size_t row = 0; row < cq; ++row) {
                for (std::size_t col = 0; col < cp; ++col) {
                    const Rational& a = d->at(row, col);
                    if (a == 0) continue;
                    h[k][row] += a * g[j * cp + col];
                }
            }
        }
    }
    return h;
}

// Tuples g_0..g_{len-1} whose product D(t) g(t) has its first `constraints`
// coefficients zero. The top degree carries no outgoing differential, so
// everything there is unconstrained.
std::vector<std::vector<Rational>> constrained_space(const DeformationFamily& f,
                                                     std::size_t p, std::size_t len,
                                                     std::size_t constraints) {
    const std::size_t n = family_top(f);
    const std::size_t cp = f.cochain_ranks[p];
    const std::size_t width = len * cp;
    if (constraints == 0 || p == n) {
        std::vector<std::vector<Rational>> basis;
        basis.reserve(width);
        for (std::size_t i = 0; i < width; ++i) {
            std::vector<Rational> e(width, Rational(0));
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    const std::size_t cq = f.cochain_ranks[p + 1];
    QMatrix a(constraints * cq, width);
    for (std::size_t k = 0; k < constraints; ++k) {
        for (std::size_t j = 0; j < len && j <= k; ++j) {
            const QMatrix* d = term_or_null(f, p, k - j);
            if (d == nullptr) continue;
            for (std::size_t row = 0; row < cq; ++row) {
                for (std::size_t col = 0; col < cp; ++col) {
                    a.at(k * cq + row, j * cp + col) = d->at(row, col);
                }
            }
        }
    }
    const QMatrix kernel = a.kernel_basis();
    std::vector<std::vector<Rational>> basis;
    basis.reserve(kernel.cols());
    for (std::size_t jcol = 0; jcol < kernel.cols(); ++jcol) {
        std::vector<Rational> v(width);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = kernel.at(i, jcol);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Z^p_r basis; r = 0 means the ungraded cochain space C^p (single degree-0
// coefficient, no divisibility condition).
std::vector<std::vector<Rational>> z_basis(const DeformationFamily& f,
                                           std::size_t p, std::size_t r) {
    return constrained_space(f, p, r == 0 ? 1 : r, r);
}

// Generators of the boundary-plus-lower subspace
// (t-t0) Z^p_{r-1} + trunc((t-t0)^{1-r} D(t) Z^{p-1}_{r-1}) inside Q^{r c_p}.
std::vector<std::vector<Rational>> lower_subspace(const DeformationFamily& f,
                                                  std::size_t p, std::size_t r) {
    const std::size_t cp = f.cochain_ranks[p];
    std::vector<std::vector<Rational>> gens;
    if (r >= 2) {
        for (const auto& z : z_basis(f, p, r - 1)) {
            std::vector<Rational> lifted(r * cp, Rational(0));
            for (std::size_t i = 0; i < z.size(); ++i) lifted[cp + i] = z[i];
            gens.push_back(std::move(lifted));
        }
    }
    if (p >= 1) {
        // Generators may carry r free coefficients beyond the divisibility
        // constraint; those feed the truncated quotient too.
        const std::size_t len = 2 * r - 1;
        for (const auto& g : constrained_space(f, p - 1, len, r - 1)) {
            const auto h = apply_family(f, p - 1, g, len, 2 * r - 2);
            for (std::size_t k = 0; k + 1 < r; ++k) {
                for (const Rational& x : h[k]) {
                    if (x != 0) throw std::logic_error("cycle basis violates divisibility");
                }
            }
            std::vector<Rational> u(r * cp, Rational(0));
            for (std::size_t kk = 0; kk < r; ++kk) {
                for (std::size_t i = 0; i < cp; ++i) u[kk * cp + i] = h[r - 1 + kk][i];
            }
            gens.push_back(std::move(u));
        }
    }
    return gens;
}

}  // namespace

void validate_family(const DeformationFamily& f) {
    const std::size_t n = family_top(f);
    if (f.terms.size() != n) {
        throw invalid_input("family must give matrix lists for degrees 0..top-1");
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (f.terms[p].size() != f.order + 1) {
            std::ostringstream os;
            os << "family degree " << p << " must list orders 0.." << f.order;
            throw invalid_input(os.str());
        }
        for (std::size_t k = 0; k <= f.order; ++k) {
            const QMatrix& d = f.terms[p][k];
            if (d.rows() != f.cochain_ranks[p + 1] || d.cols() != f.cochain_ranks[p]) {
                std::ostringstream os;
                os << "family matrix (degree " << p << ", order " << k << ") has shape "
                   << d.rows() << "x" << d.cols() << ", expected "
                   << f.cochain_ranks[p + 1] << "x" << f.cochain_ranks[p];
                throw invalid_input(os.str());
            }
        }
    }
    // Flatness congruence mod (t-t0)^{K+1}.
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t k = 0; k <= f.order; ++k) {
            QMatrix acc(f.cochain_ranks[p + 2], f.cochain_ranks[p]);
            for (std::size_t i = 0; i <= k; ++i) {
                acc = acc + f.terms[p + 1][i] * f.terms[p][k - i];
            }
            if (!acc.is_zero()) {
                std::ostringstream os;
                os << "family is not flat mod (t-t0)^" << (f.order + 1)
                   << ": composite in degree " << p << " has nonzero order-" << k
                   << " coefficient";
                throw invalid_input(os.str());
            }
        }
    }
}

std::vector<std::vector<Rational>> cycle_space(const DeformationFamily& f,
                                               std::size_t degree, std::size_t r) {
    if (degree > family_top(f)) throw invalid_input("degree out of range");
    if (r == 0) throw invalid_input("cycle space needs page r >= 1");
    if (r > f.order + 1) {
        std::ostringstream os;
        os << "cycle space at page " << r << " needs truncation order >= " << (r - 1);
        throw truncation_error(os.str());
    }
    return z_basis(f, degree, r);
}

SpectralPage page(const DeformationFamily& f, std::size_t r) {
    if (r == 0) throw invalid_input("pages are indexed from r = 1");
    if (r > f.order) {
        std::ostringstream os;
        os << "page " << r << " needs truncation order >= " << r;
        throw truncation_error(os.str());
    }
    const std::size_t n = family_top(f);
    SpectralPage out;
    out.r = r;
    out.dims.resize(n + 1);
    out.representatives.resize(n + 1);

    std::vector<std::vector<std::vector<Rational>>> lowers(n + 1);
    for (std::size_t p = 0; p <= n; ++p) {
        const std::size_t ambient = r * f.cochain_ranks[p];
        lowers[p] = lower_subspace(f, p, r);
        RowSpace span(ambient);
        for (const auto& w : lowers[p]) span.insert(w);
        for (const auto& z : z_basis(f, p, r)) {
            std::vector<Rational> copy = z;
            if (span.insert(std::move(copy))) out.representatives[p].push_back(z);
        }
        out.dims[p] = out.representatives[p].size();
    }

    out.differentials.resize(n == 0 ? 0 : n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t cq = f.cochain_ranks[p + 1];
        QMatrix d(out.dims[p + 1], out.dims[p]);
        if (out.dims[p] > 0) {
            // Columns: target representatives, then the lower-subspace
            // generators; the representative block of a solution is unique.
            const std::size_t extra = lowers[p + 1].size();
            QMatrix solve_matrix(r * cq, out.dims[p + 1] + extra);
            for (std::size_t j = 0; j < out.dims[p + 1]; ++j) {
                for (std::size_t i = 0; i < r * cq; ++i) {
                    solve_matrix.at(i, j) = out.representatives[p + 1][j][i];
                }
            }
            for (std::size_t j = 0; j < extra; ++j) {
                for (std::size_t i = 0; i < r * cq; ++i) {
                    solve_matrix.at(i, out.dims[p + 1] + j) = lowers[p + 1][j][i];
                }
            }
            for (std::size_t col = 0; col < out.dims[p]; ++col) {
                const auto& rep = out.representatives[p][col];
                const auto h = apply_family(f, p, rep, r, 2 * r - 1);
                for (std::size_t k = 0; k < r; ++k) {
                    for (const Rational& x : h[k]) {
                        if (x != 0) {
                            throw std::logic_error("representative violates divisibility");
                        }
                    }
                }
                std::vector<Rational> image(r * cq);
                for (std::size_t k = 0; k < r; ++k) {
                    for (std::size_t i = 0; i < cq; ++i) image[k * cq + i] = h[r + k][i];
                }
                const auto coords = solve_matrix.solve(image);
                if (!coords) {
                    throw truncation_error(
                        "differential image leaves the page; the family is not flat "
                        "to sufficient order");
                }
                for (std::size_t row = 0; row < out.dims[p + 1]; ++row) {
                    d.at(row, col) = (*coords)[row];
                }
            }
        }
        out.differentials[p] = std::move(d);
    }
    return out;
}

LimitResult limit_page(const DeformationFamily& f) {
    LimitResult out;
    for (std::size_t r = 1; r <= f.order; ++r) out.pages.push_back(page(f, r));
    if (out.pages.empty()) return out;
    // Stabilization = at least two consecutive equal pages persisting to the
    // truncation boundary; a lone final page proves nothing.
    const std::size_t count = out.pages.size();
    for (std::size_t start = 0; start + 1 < count; ++start) {
        bool all_equal = true;
        for (std::size_t j = start + 1; j < count; ++j) {
            if (out.pages[j].dims != out.pages[start].dims) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) {
            out.stabilized = true;
            out.stabilized_at = start + 1;  // pages are 1-indexed
            out.dims = out.pages[start].dims;
            return out;
        }
    }
    return out;
}

DeformationFamily linearize(const TwistedComplex& c,
                            const std::vector<Rational>& point,
                            const std::vector<std::int64_t>& weights,
                            std::size_t order) {
    if (point.size() != c.num_vars || weights.size() != c.num_vars) {
        throw invalid_input("linearization point and weights must match the variable count");
    }
    for (const Rational& q : point) {
        if (q == 0) throw invalid_input("linearization point must have nonzero coordinates");
    }
    DeformationFamily f;
    f.name = c.name.empty() ? "linearized" : c.name + "_linearized";
    f.base_point = Rational(0);
    f.order = order;
    f.cochain_ranks = c.cochain_ranks;
    f.terms.resize(c.top_degree);
    for (std::size_t p = 0; p < c.top_degree; ++p) {
        f.terms[p].assign(order + 1,
                          QMatrix(c.cochain_ranks[p + 1], c.cochain_ranks[p]));
        c.coboundaries[p].for_each_nonzero(
            [&](std::size_t row, std::size_t col, const LaurentPoly& poly) {
                for (const auto& [e, coef] : poly.terms()) {
                    Rational scale = coef;
                    std::int64_t w_dot_e = 0;
                    for (std::size_t v = 0; v < c.num_vars; ++v) {
                        if (e[v] != 0) scale *= rational_pow(point[v], e[v]);
                        w_dot_e = checked_add(w_dot_e, checked_mul(weights[v], e[v]));
                    }
                    for (std::size_t k = 0; k <= order; ++k) {
                        const BigInt binom = binomial_integer(w_dot_e, k);
                        if (binom == 0) continue;
                        f.terms[p][k].at(row, col) += scale * Rational(binom);
                    }
                }
            });
    }
    validate_family(f);
    return f;
}

}  // namespace novbott
