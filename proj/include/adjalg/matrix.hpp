#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "adjalg/rational.hpp"

namespace adjalg {

// Dense matrix over the exact rationals, row-major. Ambient dimensions in
// this project stay at desk scale ((dim H)^2 and a bit beyond), so a dense
// representation with zero-skipping products is enough.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<long>> rows);

    static Mat identity(std::size_t n);
    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
    static Mat col_vector(const std::vector<Rat>& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rat& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator*(const Mat& o) const;
    Mat operator*(const Rat& s) const;
    Mat transpose() const;

    Mat col(std::size_t c) const;
    void set_col(std::size_t c, const Mat& v);

    // Stacks [this; below] vertically / [this, right] horizontally.
    Mat vcat(const Mat& below) const;
    Mat hcat(const Mat& right) const;

    // Reshape a column vector of length r*c into an r x c matrix, flat index
    // (i,j) -> i*c + j. Inverse of flatten().
    Mat reshape(std::size_t r, std::size_t c) const;
    Mat flatten() const;  // row-major flatten to a column vector

    // In-place reduced row echelon form; returns the pivot columns. Fully
    // deterministic (first nonzero pivot, normalized leading 1).
    std::vector<std::size_t> rref();

    std::size_t rank() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

// Kronecker product with the global flat-index convention: basis vector
// (i,j) of the tensor space has flat index i*cols_b + j (i.e. i*dim_b + j
// for column vectors). Under this convention kron is strictly associative.
Mat kron(const Mat& a, const Mat& b);

// Basis of the right null space {x : m x = 0}, canonical (from the RREF free
// columns, so the same matrix always yields the same basis). Empty iff m is
// injective on columns.
std::vector<Mat> kernel_basis(const Mat& m);

// Columns of the returned matrix are the kernel basis vectors.
Mat kernel_basis_mat(const Mat& m);

// The unique X with a*X = b. Throws NoSolution if inconsistent, NotUnique if
// ker(a) != 0 (the solution set is then a nontrivial coset).
Mat solve_unique(const Mat& a, const Mat& b);

// True iff the two column spans coincide (rank comparisons).
bool subspace_equal(const Mat& b1, const Mat& b2);
bool subspace_contains(const Mat& big, const Mat& small);

// Canonical basis of the span of the given columns: RREF of the transpose,
// nonzero rows back as columns. Deterministic representative of a subspace.
Mat canonical_span(const Mat& columns);

}  // namespace adjalg
