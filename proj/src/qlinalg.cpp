#include "novbott/qlinalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace novbott {

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
    return out;
}

bool QMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& x) { return x == 0; });
}

QMatrix QMatrix::operator+(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch in addition");
    }
    QMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + rhs.data_[k];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("matrix shape mismatch in subtraction");
    }
    QMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - rhs.data_[k];
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("matrix shape mismatch in product");
    }
    QMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

QMatrix QMatrix::scaled(const Rational& c) const {
    QMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = c * data_[k];
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

std::vector<Rational> QMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("vector length mismatch in apply");
    }
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j) != 0 && v[j] != 0) out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

bool QMatrix::operator==(const QMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<std::size_t> QMatrix::rref_in_place() {
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols_ && lead < rows_; ++col) {
        std::size_t sel = lead;
        while (sel < rows_ && at(sel, col) == 0) ++sel;
        if (sel == rows_) continue;
        if (sel != lead) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(lead, j));
        }
        const Rational inv = Rational(1) / at(lead, col);
        for (std::size_t j = col; j < cols_; ++j) at(lead, j) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == lead || at(i, col) == 0) continue;
            const Rational f = at(i, col);
            for (std::size_t j = col; j < cols_; ++j) at(i, j) -= f * at(lead, j);
        }
        pivots.push_back(col);
        ++lead;
    }
    return pivots;
}

std::size_t QMatrix::rank() const {
    QMatrix tmp = *this;
    return tmp.rref_in_place().size();
}

QMatrix QMatrix::kernel_basis() const {
    QMatrix tmp = *this;
    const std::vector<std::size_t> pivots = tmp.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    const std::size_t nullity = cols_ - pivots.size();
    QMatrix out(cols_, nullity);
    std::size_t k = 0;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        out.at(free_col, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            out.at(pivots[r], k) = -tmp.at(r, free_col);
        }
        ++k;
    }
    return out;
}

std::optional<std::vector<Rational>> QMatrix::solve(
    const std::vector<Rational>& b) const {
    if (b.size() != rows_) {
        throw std::invalid_argument("right-hand side length mismatch");
    }
    QMatrix aug(rows_, cols_ + 1);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    const std::vector<std::size_t> pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rational> x(cols_, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, cols_);
    return x;
}

std::optional<QMatrix> QMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    QMatrix aug = hstack(*this, identity(rows_));
    const std::vector<std::size_t> pivots = aug.rref_in_place();
    // a pivot in the identity block means the left block is singular
    if (pivots.size() != rows_) return std::nullopt;
    for (std::size_t j : pivots) {
        if (j >= cols_) return std::nullopt;
    }
    QMatrix out(rows_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < rows_; ++j) out.at(i, j) = aug.at(i, cols_ + j);
    }
    return out;
}

QMatrix QMatrix::hstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hstack row mismatch");
    QMatrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, a.cols_ + j) = b.at(i, j);
    }
    return out;
}

QMatrix QMatrix::vstack(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vstack column mismatch");
    QMatrix out(a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
    }
    for (std::size_t i = 0; i < b.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) out.at(a.rows_ + i, j) = b.at(i, j);
    }
    return out;
}

std::string QMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << rational_to_string(at(i, j));
        }
        os << "]";
        if (i + 1 < rows_) os << "\n";
    }
    return os.str();
}

bool RowSpace::insert(std::vector<Rational> v) {
    v = reduce(std::move(v));
    std::size_t pivot = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (v[j] != 0) {
            pivot = j;
            break;
        }
    }
    if (pivot == ambient_) return false;
    const Rational inv = Rational(1) / v[pivot];
    for (Rational& x : v) x *= inv;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = rows_[r][pivot];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) rows_[r][j] -= f * v[j];
    }
    // Keep rows ordered by pivot column so the basis stays in RREF.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

std::vector<Rational> RowSpace::reduce(std::vector<Rational> v) const {
    if (v.size() != ambient_) {
        throw std::invalid_argument("vector length mismatch in reduce");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational f = v[pivots_[r]];
        if (f == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= f * rows_[r][j];
    }
    return v;
}

bool RowSpace::contains(const std::vector<Rational>& v) const {
    const std::vector<Rational> res = reduce(v);
    return std::all_of(res.begin(), res.end(),
                       [](const Rational& x) { return x == 0; });
}

}  // namespace novbott
