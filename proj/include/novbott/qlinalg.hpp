#ifndef NOVBOTT_QLINALG_HPP
#define NOVBOTT_QLINALG_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "novbott/rational.hpp"

namespace novbott {

// Dense matrix over the rationals. Sized for the small complexes this
// project works with; elimination is exact and deterministic (first
// nonzero pivot in column order).
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    bool is_zero() const;

    QMatrix operator+(const QMatrix& rhs) const;
    QMatrix operator-(const QMatrix& rhs) const;
    QMatrix operator*(const QMatrix& rhs) const;
    QMatrix scaled(const Rational& c) const;
    QMatrix transpose() const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool operator==(const QMatrix& rhs) const;
    bool operator!=(const QMatrix& rhs) const { return !(*this == rhs); }

    // Reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> rref_in_place();
    std::size_t rank() const;
    // Columns span the null space {x : Ax = 0}; cols() - rank() of them.
    QMatrix kernel_basis() const;
    // One solution of Ax = b, free variables set to zero; nullopt when
    // inconsistent.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;
    // nullopt when singular or non-square.
    std::optional<QMatrix> inverse() const;

    static QMatrix hstack(const QMatrix& a, const QMatrix& b);
    static QMatrix vstack(const QMatrix& a, const QMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

// RREF basis of a growing subspace of Q^n. insert() reduces against the
// current basis and reports whether the dimension grew; dims of sums and
// intersections of spans come from feeding generators in sequence.
class RowSpace {
public:
    explicit RowSpace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }

    bool insert(std::vector<Rational> v);
    bool contains(const std::vector<Rational>& v) const;
    // Residual after eliminating against the basis; zero iff contained.
    std::vector<Rational> reduce(std::vector<Rational> v) const;
    const std::vector<std::vector<Rational>>& basis() const { return rows_; }

private:
    std::size_t ambient_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> pivots_;
};

}  // namespace novbott

#endif
