#include "novbott/twisted.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "novbott/errors.hpp"
#include "novbott/rng.hpp"

namespace novbott {

namespace {

void validate_shapes(const TwistedComplex& c) {
    if (c.fiber_dim == 0) throw invalid_input("fiber dimension must be positive");
    if (c.cochain_ranks.size() != c.top_degree + 1) {
        throw invalid_input("cochain rank list must cover degrees 0..top_degree");
    }
    for (std::size_t p = 0; p <= c.top_degree; ++p) {
        if (c.cochain_ranks[p] % c.fiber_dim != 0) {
            std::ostringstream os;
            os << "cochain rank in degree " << p << " is not divisible by the fiber dimension";
            throw invalid_input(os.str());
        }
    }
    if (c.coboundaries.size() != c.top_degree) {
        throw invalid_input("coboundary list must cover degrees 0..top_degree-1");
    }
    for (std::size_t p = 0; p < c.top_degree; ++p) {
        const LaurentMatrix& d = c.coboundaries[p];
        if (d.rows() != c.cochain_ranks[p + 1] || d.cols() != c.cochain_ranks[p]) {
            std::ostringstream os;
            os << "coboundary in degree " << p << " has shape " << d.rows() << "x"
               << d.cols() << ", expected " << c.cochain_ranks[p + 1] << "x"
               << c.cochain_ranks[p];
            throw invalid_input(os.str());
        }
        if (d.num_vars() != c.num_vars) {
            std::ostringstream os;
            os << "coboundary in degree " << p << " uses a different variable count";
            throw invalid_input(os.str());
        }
    }
    if (c.period_basis.size() != c.num_vars) {
        throw invalid_input("period basis length must equal the number of variables");
    }
}

void validate_flatness(const TwistedComplex& c) {
    for (std::size_t p = 0; p + 1 < c.top_degree; ++p) {
        const LaurentMatrix prod = c.coboundaries[p + 1] * c.coboundaries[p];
        const auto bad = prod.first_nonzero();
        if (bad) {
            std::ostringstream os;
            os << "flatness violated: (D^" << (p + 1) << " D^" << p << ") entry ("
               << bad->first << ", " << bad->second
               << ") = " << prod.at(bad->first, bad->second).to_string();
            throw invalid_input(os.str());
        }
    }
}

GenericRankResult coboundary_rank(const TwistedComplex& c, std::size_t p,
                                  const RankOptions& opts) {
    if (p >= c.top_degree) return {0, 0.0};
    // Independent evaluation points per degree keep ranks reproducible when
    // degrees are computed in any order.
    RankOptions per_degree = opts;
    per_degree.seed = Rng::forked(opts.seed, 0x7015ULL + p).next_u64();
    return rank_generic(c.coboundaries[p], per_degree);
}

}  // namespace

TwistedComplex build_complex(const ComplexDescription& desc) {
    TwistedComplex c;
    c.name = desc.name;
    c.top_degree = desc.top_degree;
    c.fiber_dim = desc.fiber_dim;
    c.num_vars = desc.num_vars;
    c.period_basis = desc.period_basis;
    if (desc.cell_counts.size() != desc.top_degree + 1) {
        throw invalid_input("cell count list must cover degrees 0..top_degree");
    }
    c.cochain_ranks.resize(desc.cell_counts.size());
    for (std::size_t p = 0; p < desc.cell_counts.size(); ++p) {
        c.cochain_ranks[p] = desc.cell_counts[p] * desc.fiber_dim;
    }

    if (desc.raw) {
        c.coboundaries = desc.raw_coboundaries;
    } else {
        const std::size_t d = desc.fiber_dim;
        std::map<std::string, std::pair<QMatrix, ExpVec>> table;
        for (const GeneratorData& g : desc.generators) {
            if (g.matrix.rows() != d || g.matrix.cols() != d) {
                throw invalid_input("representation matrix for generator '" + g.name +
                                    "' is not " + std::to_string(d) + "x" + std::to_string(d));
            }
            if (g.exponents.size() != desc.num_vars) {
                throw invalid_input("exponent vector for generator '" + g.name +
                                    "' has wrong length");
            }
            if (!g.matrix.inverse().has_value()) {
                throw invalid_input("representation matrix for generator '" + g.name +
                                    "' is not invertible");
            }
            if (!table.emplace(g.name, std::make_pair(g.matrix, g.exponents)).second) {
                throw invalid_input("generator '" + g.name + "' declared twice");
            }
        }
        c.coboundaries.reserve(desc.top_degree);
        for (std::size_t p = 0; p < desc.top_degree; ++p) {
            c.coboundaries.emplace_back(c.cochain_ranks[p + 1], c.cochain_ranks[p],
                                        desc.num_vars);
        }
        for (const BoundaryIncidence& inc : desc.incidences) {
            if (inc.degree >= desc.top_degree) {
                throw invalid_input("boundary incidence names degree " +
                                    std::to_string(inc.degree) + " with no coboundary");
            }
            if (inc.cell >= desc.cell_counts[inc.degree + 1] ||
                inc.face >= desc.cell_counts[inc.degree]) {
                std::ostringstream os;
                os << "boundary incidence (degree " << inc.degree << ", cell " << inc.cell
                   << ", face " << inc.face << ") is out of range";
                throw invalid_input(os.str());
            }
            LaurentMatrix& target = c.coboundaries[inc.degree];
            for (const BoundaryTerm& term : inc.terms) {
                if (term.sign != 1 && term.sign != -1) {
                    throw invalid_input("boundary term sign must be +1 or -1");
                }
                QMatrix w = QMatrix::identity(d);
                ExpVec e(desc.num_vars, 0);
                for (const WordFactor& f : term.word) {
                    auto it = table.find(f.generator);
                    if (it == table.end()) {
                        throw invalid_input("boundary word names undeclared generator '" +
                                            f.generator + "'");
                    }
                    if (f.inverse) {
                        w = w * *it->second.first.inverse();
                        e = exp_sub(e, it->second.second);
                    } else {
                        w = w * it->second.first;
                        e = exp_add(e, it->second.second);
                    }
                }
                for (std::size_t r = 0; r < d; ++r) {
                    for (std::size_t col = 0; col < d; ++col) {
                        const Rational coeff = Rational(term.sign) * w.at(r, col);
                        if (coeff == 0) continue;
                        target.add_to(inc.cell * d + r, inc.face * d + col,
                                      LaurentPoly::monomial(e, coeff));
                    }
                }
            }
        }
    }

    validate_shapes(c);
    validate_flatness(c);
    return c;
}

NovikovResult novikov_numbers(const TwistedComplex& c, const RankOptions& opts) {
    NovikovResult out;
    out.betti.resize(c.top_degree + 1);
    std::vector<GenericRankResult> ranks(c.top_degree + 1);
    for (std::size_t p = 0; p < c.top_degree; ++p) ranks[p] = coboundary_rank(c, p, opts);
    double bound = 0.0;
    for (std::size_t p = 0; p < c.top_degree; ++p) bound += ranks[p].failure_bound;
    out.failure_bound = std::min(1.0, bound);
    for (std::size_t p = 0; p <= c.top_degree; ++p) {
        const std::size_t below = p == 0 ? 0 : ranks[p - 1].rank;
        const std::size_t here = p == c.top_degree ? 0 : ranks[p].rank;
        if (below + here > c.cochain_ranks[p]) {
            throw std::logic_error("rank estimates exceed the cochain rank");
        }
        out.betti[p] = c.cochain_ranks[p] - below - here;
    }
    return out;
}

std::vector<std::size_t> dimensions_at(const TwistedComplex& c,
                                       const std::vector<Rational>& point) {
    std::vector<std::size_t> ranks(c.top_degree, 0);
    for (std::size_t p = 0; p < c.top_degree; ++p) {
        ranks[p] = rank_at_point(c.coboundaries[p], point);
    }
    std::vector<std::size_t> dims(c.top_degree + 1);
    for (std::size_t p = 0; p <= c.top_degree; ++p) {
        const std::size_t below = p == 0 ? 0 : ranks[p - 1];
        const std::size_t here = p == c.top_degree ? 0 : ranks[p];
        dims[p] = c.cochain_ranks[p] - below - here;
    }
    return dims;
}

JumpScanReport jump_scan(const TwistedComplex& c,
                         const std::vector<std::vector<Rational>>& probe_points,
                         const RankOptions& opts) {
    JumpScanReport report;
    const NovikovResult background = novikov_numbers(c, opts);
    report.background = background.betti;
    report.failure_bound = background.failure_bound;
    for (const auto& point : probe_points) {
        JumpProbe probe;
        probe.point = point;
        probe.dims = dimensions_at(c, point);
        probe.is_jump.resize(probe.dims.size());
        for (std::size_t p = 0; p < probe.dims.size(); ++p) {
            if (probe.dims[p] < report.background[p]) {
                throw std::runtime_error(
                    "probe dimension fell below the background estimate; "
                    "rerun with the exact strategy or a different seed");
            }
            probe.is_jump[p] = probe.dims[p] > report.background[p];
        }
        report.probes.push_back(std::move(probe));
    }
    return report;
}

long long euler_characteristic(const TwistedComplex& c) {
    long long acc = 0;
    for (std::size_t p = 0; p <= c.top_degree; ++p) {
        const long long term = static_cast<long long>(c.cochain_ranks[p]);
        acc += (p % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace novbott
