#include "farq/gauss.hpp"

#include <stdexcept>

namespace farq {

Matrix rref(Matrix a, std::vector<int>* pivot_cols) {
    if (pivot_cols) pivot_cols->clear();
    const int m = a.rows(), n = a.cols();
    int r = 0;
    for (int c = 0; c < n && r < m; ++c) {
        int pivot = -1;
        for (int i = r; i < m; ++i)
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(r, j));
        const Rat p = a.at(r, c);
        for (int j = 0; j < n; ++j) a.at(r, j) /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || a.at(i, c) == 0) continue;
            const Rat f = a.at(i, c);
            for (int j = 0; j < n; ++j) a.at(i, j) -= f * a.at(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return a;
}

int rank(const Matrix& a) {
    std::vector<int> pivots;
    rref(a, &pivots);
    return static_cast<int>(pivots.size());
}

std::vector<Vec> null_space(const Matrix& a) {
    const int n = a.cols();
    std::vector<int> pivots;
    Matrix r = rref(a, &pivots);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n, Rat(0));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
    const int m = a.rows(), n = a.cols();
    if (static_cast<int>(b.size()) != m) throw std::invalid_argument("solve_linear dimension mismatch");
    Matrix aug(m, n + 1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = b[i];
    }
    std::vector<int> pivots;
    Matrix r = rref(std::move(aug), &pivots);
    for (int c : pivots)
        if (c == n) return std::nullopt;  // pivot in the augmented column
    Vec x(n, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(static_cast<int>(k), n);
    return x;
}

}  // namespace farq
