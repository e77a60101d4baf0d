#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "trop/rational.hpp"

namespace trop {

// Dense row-major matrices. The instances this library works on are small
// (tens of rows), so there is no sparse storage.
template <typename Scalar>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        Matrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t i = 0;
        for (const auto& row : rows) {
            std::size_t j = 0;
            for (long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Scalar> row(std::size_t i) const {
        return std::vector<Scalar>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
    }
    void set_row(std::size_t i, const std::vector<Scalar>& r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
    }

    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        Matrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Scalar& v = (*this)(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < rows_; ++i) {
            s += "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) s += " ";
                s += (*this)(i, j).str();
            }
            s += "]\n";
        }
        return s;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Int>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

}  // namespace trop
