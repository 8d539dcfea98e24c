#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greenring/rational.hpp"

namespace greenring {

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix column_vector(const std::vector<Rational>& v);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool is_square() const { return r_ == c_; }
    bool empty() const { return r_ == 0 || c_ == 0; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
    const std::vector<Rational>& data() const { return a_; }

    bool is_zero() const;
    bool is_identity() const;
    std::size_t nonzeros() const;

    Matrix transpose() const;
    Matrix column(std::size_t j) const;
    std::vector<Rational> column_values(std::size_t j) const;
    Matrix select_columns(const std::vector<std::size_t>& idx) const;
    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& s);
    void add_scaled(const Matrix& o, const Rational& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Rational> a_;
};

struct Echelon {
    Matrix reduced;                    // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
Matrix nullspace(const Matrix& m);
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);
Rational trace(const Matrix& m);
Rational determinant(Matrix m);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& parts);
Matrix vstack(const std::vector<Matrix>& parts);
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Indices of a maximal independent set of columns (leftmost first).
std::vector<std::size_t> pivot_columns(const Matrix& m);
// Columns of m reduced to an independent spanning set.
Matrix column_basis(const Matrix& m);
// Standard basis indices completing the column span of m to the full space.
std::vector<std::size_t> complement_indices(const Matrix& m);
// True if every column of b lies in the column span of a.
bool in_column_span(const Matrix& a, const Matrix& b);

// Sparse rows over ncols unknowns; returns a nullspace basis as columns.
using SparseRow = std::vector<std::pair<std::size_t, Rational>>;
Matrix sparse_nullspace(std::vector<SparseRow> rows, std::size_t ncols);

}  // namespace greenring
