#pragma once

#include <stdexcept>
#include <vector>

#include "farq/rational.hpp"

namespace farq {

// Dense row-major matrix over an exact scalar (Rat or GaussRat).
template <typename T>
class BasicMatrix {
  public:
    BasicMatrix() : rows_(0), cols_(0) {}
    BasicMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    }
    BasicMatrix(int rows, int cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != static_cast<std::size_t>(rows) * cols)
            throw std::invalid_argument("matrix data size mismatch");
    }

    static BasicMatrix identity(int n) {
        BasicMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        return std::vector<T>(data_.begin() + static_cast<std::size_t>(i) * cols_,
                              data_.begin() + static_cast<std::size_t>(i + 1) * cols_);
    }
    void set_row(int i, const std::vector<T>& r) {
        if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("row length mismatch");
        for (int j = 0; j < cols_; ++j) at(i, j) = r[j];
    }

    std::vector<T> apply(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
        std::vector<T> y(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    bool is_zero() const {
        for (const auto& v : data_)
            if (v != T(0)) return false;
        return true;
    }

    friend BasicMatrix operator+(const BasicMatrix& a, const BasicMatrix& b) {
        check_same_shape(a, b);
        BasicMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
        return c;
    }
    friend BasicMatrix operator-(const BasicMatrix& a, const BasicMatrix& b) {
        check_same_shape(a, b);
        BasicMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
        return c;
    }
    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
        BasicMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (aik == T(0)) continue;
                for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }
    friend BasicMatrix operator*(const T& s, const BasicMatrix& a) {
        BasicMatrix c(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
        return c;
    }
    friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    static void check_same_shape(const BasicMatrix& a, const BasicMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> data_;
};

using Matrix = BasicMatrix<Rat>;
using Vec = std::vector<Rat>;

inline Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector add dimension mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector sub dimension mismatch");
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

inline Vec scale(const Rat& s, const Vec& a) {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return c;
}

inline Vec neg(const Vec& a) { return scale(rat(-1), a); }

inline bool is_zero(const Vec& a) {
    for (const auto& v : a)
        if (v != 0) return false;
    return true;
}

}  // namespace farq
