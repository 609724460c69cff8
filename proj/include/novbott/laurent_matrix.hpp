#ifndef NOVBOTT_LAURENT_MATRIX_HPP
#define NOVBOTT_LAURENT_MATRIX_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "novbott/laurent.hpp"
#include "novbott/qlinalg.hpp"

namespace novbott {

// Matrix over the Laurent ring. Storage is a coordinate list for large
// shapes and a dense array below 64x64; cellular coboundaries are sparse,
// so the coordinate list is the common case only for big inputs.
class LaurentMatrix {
public:
    LaurentMatrix() : LaurentMatrix(0, 0, 0) {}
    LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t num_vars() const { return num_vars_; }

    const LaurentPoly& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, LaurentPoly value);
    void add_to(std::size_t i, std::size_t j, const LaurentPoly& value);

    bool is_zero() const;
    // First nonzero entry in row-major order, for flatness diagnostics.
    std::optional<std::pair<std::size_t, std::size_t>> first_nonzero() const;

    void for_each_nonzero(
        const std::function<void(std::size_t, std::size_t, const LaurentPoly&)>& fn) const;

    LaurentMatrix operator*(const LaurentMatrix& rhs) const;
    LaurentMatrix operator+(const LaurentMatrix& rhs) const;
    LaurentMatrix scaled(const LaurentPoly& factor) const;

    bool operator==(const LaurentMatrix& rhs) const;
    bool operator!=(const LaurentMatrix& rhs) const { return !(*this == rhs); }

    // Substitution x_j = point[j]; coordinates must be nonzero.
    QMatrix evaluate(const std::vector<Rational>& point) const;
    // Substitution over Z/p at nonzero residues.
    std::vector<std::vector<std::uint64_t>> evaluate_mod(
        const std::vector<std::uint64_t>& point, std::uint64_t p) const;
    // Substitution x_j = e^{-t a_j}; monomial x^k becomes e^{-t<a,k>}.
    // Throws std::range_error naming t when the exponential leaves double
    // range.
    std::vector<std::vector<double>> evaluate_numeric(
        double t, const std::vector<double>& periods) const;

    // Coordinate-wise minimum exponent across the nonzero entries of row i;
    // x^{-shift} times the row is polynomial.
    ExpVec row_clear_shift(std::size_t i) const;
    // Max total degree in row i after clearing; -1 for a zero row.
    std::int64_t cleared_row_degree(std::size_t i) const;

    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t num_vars_;
    bool dense_;
    std::vector<LaurentPoly> dense_entries_;
    std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> sparse_entries_;
    LaurentPoly zero_;

    void check_index(std::size_t i, std::size_t j) const;
};

}  // namespace novbott

#endif
