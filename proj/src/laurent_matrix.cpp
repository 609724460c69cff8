#include "novbott/laurent_matrix.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "novbott/errors.hpp"

namespace novbott {

namespace {
constexpr std::size_t kDenseLimit = 64;
}

LaurentMatrix::LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
    : rows_(rows),
      cols_(cols),
      num_vars_(num_vars),
      dense_(rows < kDenseLimit && cols < kDenseLimit),
      zero_(num_vars) {
    if (dense_) dense_entries_.assign(rows * cols, LaurentPoly(num_vars));
}

void LaurentMatrix::check_index(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
}

const LaurentPoly& LaurentMatrix::at(std::size_t i, std::size_t j) const {
    check_index(i, j);
    if (dense_) return dense_entries_[i * cols_ + j];
    auto it = sparse_entries_.find({i, j});
    return it == sparse_entries_.end() ? zero_ : it->second;
}

void LaurentMatrix::set(std::size_t i, std::size_t j, LaurentPoly value) {
    check_index(i, j);
    if (value.num_vars() != num_vars_) {
        throw invalid_input("matrix entry over a different variable set");
    }
    if (dense_) {
        dense_entries_[i * cols_ + j] = std::move(value);
        return;
    }
    if (value.is_zero()) {
        sparse_entries_.erase({i, j});
    } else {
        sparse_entries_.insert_or_assign({i, j}, std::move(value));
    }
}

void LaurentMatrix::add_to(std::size_t i, std::size_t j, const LaurentPoly& value) {
    set(i, j, at(i, j) + value);
}

bool LaurentMatrix::is_zero() const {
    return !first_nonzero().has_value();
}

std::optional<std::pair<std::size_t, std::size_t>> LaurentMatrix::first_nonzero() const {
    if (dense_) {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!dense_entries_[i * cols_ + j].is_zero()) return {{i, j}};
            }
        }
        return std::nullopt;
    }
    // Map order is (row, col) lexicographic, which is row-major.
    for (const auto& [key, poly] : sparse_entries_) {
        if (!poly.is_zero()) return {key};
    }
    return std::nullopt;
}

void LaurentMatrix::for_each_nonzero(
    const std::function<void(std::size_t, std::size_t, const LaurentPoly&)>& fn) const {
    if (dense_) {
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                const LaurentPoly& p = dense_entries_[i * cols_ + j];
                if (!p.is_zero()) fn(i, j, p);
            }
        }
        return;
    }
    for (const auto& [key, poly] : sparse_entries_) {
        if (!poly.is_zero()) fn(key.first, key.second, poly);
    }
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    if (num_vars_ != rhs.num_vars_) {
        throw invalid_input("matrix product over different variable sets");
    }
    LaurentMatrix out(rows_, rhs.cols_, num_vars_);
    for_each_nonzero([&](std::size_t i, std::size_t k, const LaurentPoly& a) {
        rhs.for_each_nonzero([&](std::size_t k2, std::size_t j, const LaurentPoly& b) {
            if (k2 != k) return;
            out.add_to(i, j, a * b);
        });
    });
    return out;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch in addition");
    }
    if (num_vars_ != rhs.num_vars_) {
        throw invalid_input("matrix sum over different variable sets");
    }
    LaurentMatrix out = *this;
    rhs.for_each_nonzero([&](std::size_t i, std::size_t j, const LaurentPoly& b) {
        out.add_to(i, j, b);
    });
    return out;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& factor) const {
    if (factor.num_vars() != num_vars_) {
        throw invalid_input("scale factor over a different variable set");
    }
    LaurentMatrix out(rows_, cols_, num_vars_);
    for_each_nonzero([&](std::size_t i, std::size_t j, const LaurentPoly& p) {
        out.set(i, j, p * factor);
    });
    return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || num_vars_ != rhs.num_vars_) {
        return false;
    }
    bool equal = true;
    for_each_nonzero([&](std::size_t i, std::size_t j, const LaurentPoly& p) {
        if (rhs.at(i, j) != p) equal = false;
    });
    rhs.for_each_nonzero([&](std::size_t i, std::size_t j, const LaurentPoly& p) {
        if (at(i, j) != p) equal = false;
    });
    return equal;
}

QMatrix LaurentMatrix::evaluate(const std::vector<Rational>& point) const {
    QMatrix out(rows_, cols_);
    for_each_nonzero([&](std::size_t i, std::size_t j, const LaurentPoly& p) {
        out.at(i, j) = p.evaluate(point);
    });
    // Validate the point even when the matrix has no entries.
    if (point.size() != num_vars_) {
        throw invalid_input("evaluation point has wrong dimension");
    }
    for (const Rational& x : point) {
        if (x == 0) throw invalid_input("evaluation point must have nonzero coordinates");
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> LaurentMatrix::evaluate_mod(
    const std::vector<std::uint64_t>& point, std::uint64_t p) const {
    std::vector<std::vector<std::uint64_t>> out(
        rows_, std::vector<std::uint64_t>(cols_, 0));
    for_each_nonzero([&](std::size_t i, std::size_t j, const LaurentPoly& poly) {
        out[i][j] = poly.evaluate_mod(point, p);
    });
    return out;
}

std::vector<std::vector<double>> LaurentMatrix::evaluate_numeric(
    double t, const std::vector<double>& periods) const {
    if (periods.size() != num_vars_) {
        throw invalid_input("period list has wrong length");
    }
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_, 0.0));
    for_each_nonzero([&](std::size_t i, std::size_t j, const LaurentPoly& poly) {
        double acc = 0.0;
        for (const auto& [e, c] : poly.terms()) {
            double inner = 0.0;
            for (std::size_t v = 0; v < num_vars_; ++v) {
                inner += periods[v] * static_cast<double>(e[v]);
            }
            const double value = std::exp(-t * inner);
            if (!std::isfinite(value)) {
                std::ostringstream os;
                os << "numeric evaluation overflows at t = " << t;
                throw std::range_error(os.str());
            }
            acc += c.get_d() * value;
        }
        if (!std::isfinite(acc)) {
            std::ostringstream os;
            os << "numeric evaluation overflows at t = " << t;
            throw std::range_error(os.str());
        }
        out[i][j] = acc;
    });
    return out;
}

ExpVec LaurentMatrix::row_clear_shift(std::size_t i) const {
    ExpVec shift(num_vars_, 0);
    bool first = true;
    for_each_nonzero([&](std::size_t r, std::size_t, const LaurentPoly& p) {
        if (r != i) return;
        const ExpVec m = p.min_exponents();
        if (first) {
            shift = m;
            first = false;
        } else {
            for (std::size_t v = 0; v < num_vars_; ++v) {
                if (m[v] < shift[v]) shift[v] = m[v];
            }
        }
    });
    return shift;
}

std::int64_t LaurentMatrix::cleared_row_degree(std::size_t i) const {
    const ExpVec shift = row_clear_shift(i);
    std::int64_t best = -1;
    for_each_nonzero([&](std::size_t r, std::size_t, const LaurentPoly& p) {
        if (r != i) return;
        const std::int64_t d = p.total_degree_after_shift(shift);
        if (d > best) best = d;
    });
    return best;
}

std::string LaurentMatrix::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).to_string(names);
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

}  // namespace novbott
