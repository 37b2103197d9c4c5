#include "adjalg/matrix.hpp"

#include <cstddef>

namespace adjalg {

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    e_.resize(rows_ * cols_);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_) fail(errc::bad_input, "ragged matrix literal");
        std::size_t c = 0;
        for (long v : row) e_[r * cols_ + c++] = Rat(v);
        ++r;
    }
}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::col_vector(const std::vector<Rat>& v) {
    Mat m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!adjalg::is_zero(x)) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::bad_input, "shape mismatch in +");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::bad_input, "shape mismatch in -");
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) fail(errc::bad_input, "shape mismatch in *");
    Mat r(rows_, o.cols_);
    // accumulate over k with zero skipping; the action matrices in this
    // project are mostly permutation-like, so this matters
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = e_[i * cols_ + k];
            if (adjalg::is_zero(a)) continue;
            const Rat* brow = &o.e_[k * o.cols_];
            Rat* rrow = &r.e_[i * o.cols_];
            for (std::size_t j = 0; j < o.cols_; ++j) {
                if (adjalg::is_zero(brow[j])) continue;
                rrow[j] += a * brow[j];
            }
        }
    }
    return r;
}

Mat Mat::operator*(const Rat& s) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * s;
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Mat Mat::col(std::size_t c) const {
    Mat r(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
    return r;
}

void Mat::set_col(std::size_t c, const Mat& v) {
    if (v.rows() != rows_ || v.cols() != 1) fail(errc::bad_input, "set_col shape");
    for (std::size_t i = 0; i < rows_; ++i) at(i, c) = v.at(i, 0);
}

Mat Mat::vcat(const Mat& below) const {
    if (cols_ != below.cols_) fail(errc::bad_input, "vcat shape");
    Mat r(rows_ + below.rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i];
    for (std::size_t i = 0; i < below.e_.size(); ++i) r.e_[e_.size() + i] = below.e_[i];
    return r;
}

Mat Mat::hcat(const Mat& right) const {
    if (rows_ != right.rows_) fail(errc::bad_input, "hcat shape");
    Mat r(rows_, cols_ + right.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < right.cols_; ++j) r.at(i, cols_ + j) = right.at(i, j);
    }
    return r;
}

Mat Mat::reshape(std::size_t r, std::size_t c) const {
    if (cols_ != 1 || rows_ != r * c) fail(errc::bad_input, "reshape shape");
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = e_[i * c + j];
    return m;
}

Mat Mat::flatten() const {
    Mat v(rows_ * cols_, 1);
    for (std::size_t i = 0; i < e_.size(); ++i) v.at(i, 0) = e_[i];
    return v;
}

std::vector<std::size_t> Mat::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
        std::size_t p = row;
        while (p < rows_ && adjalg::is_zero(at(p, c))) ++p;
        if (p == rows_) continue;
        if (p != row)
            for (std::size_t j = 0; j < cols_; ++j) swap(at(row, j), at(p, j));
        if (at(row, c) != 1) {
            Rat inv = 1 / at(row, c);
            at(row, c) = 1;
            for (std::size_t j = c + 1; j < cols_; ++j)
                if (!adjalg::is_zero(at(row, j))) at(row, j) *= inv;
        }
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            const Rat f = at(i, c);
            if (adjalg::is_zero(f)) continue;
            at(i, c) = 0;
            for (std::size_t j = c + 1; j < cols_; ++j)
                if (!adjalg::is_zero(at(row, j))) at(i, j) -= f * at(row, j);
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::size_t Mat::rank() const {
    Mat copy = *this;
    return copy.rref().size();
}

Mat kron(const Mat& a, const Mat& b) {
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& x = a.at(i, j);
            if (is_zero(x)) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Rat& y = b.at(k, l);
                    if (is_zero(y)) continue;
                    r.at(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return r;
}

Mat kernel_basis_mat(const Mat& m) {
    Mat red = m;
    std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat basis(m.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t fc = free_cols[k];
        basis.at(fc, k) = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) basis.at(pivots[r], k) = -red.at(r, fc);
    }
    return basis;
}

std::vector<Mat> kernel_basis(const Mat& m) {
    Mat basis = kernel_basis_mat(m);
    std::vector<Mat> out;
    out.reserve(basis.cols());
    for (std::size_t c = 0; c < basis.cols(); ++c) out.push_back(basis.col(c));
    return out;
}

Mat solve_unique(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) fail(errc::bad_input, "solve_unique shape");
    Mat aug = a.hcat(b);
    std::vector<std::size_t> pivots = aug.rref();

    std::size_t rank_a = 0;
    for (std::size_t c : pivots) {
        if (c < a.cols())
            ++rank_a;
        else
            fail(errc::no_solution, "inconsistent linear system");
    }
    if (rank_a < a.cols()) fail(errc::not_unique, "coefficient matrix has nonzero kernel");

    Mat x(a.cols(), b.cols());
    for (std::size_t r = 0; r < rank_a; ++r)
        for (std::size_t j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = aug.at(r, a.cols() + j);
    return x;
}

bool subspace_contains(const Mat& big, const Mat& small) {
    if (big.rows() != small.rows()) fail(errc::bad_input, "ambient dimension mismatch");
    return big.rank() == big.hcat(small).rank();
}

bool subspace_equal(const Mat& b1, const Mat& b2) {
    if (b1.rows() != b2.rows()) fail(errc::bad_input, "ambient dimension mismatch");
    std::size_t r1 = b1.rank(), r2 = b2.rank();
    return r1 == r2 && b1.hcat(b2).rank() == r1;
}

Mat canonical_span(const Mat& columns) {
    Mat red = columns.transpose();
    std::size_t r = red.rref().size();
    Mat out(columns.rows(), r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < columns.rows(); ++j) out.at(j, i) = red.at(i, j);
    return out;
}

}  // namespace adjalg
