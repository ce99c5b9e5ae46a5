#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace cybe {

// Dense rational matrix. Exact pivoting: any nonzero entry is a valid pivot.
class QMat {
  public:
    QMat() : rows_(0), cols_(0) {}
    QMat(int rows, int cols) : rows_(rows), cols_(cols), v_(size_t(rows) * cols) {}

    static QMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return v_[size_t(i) * cols_ + j]; }
    const Rat& at(int i, int j) const { return v_[size_t(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_identity() const;

    QMat transpose() const;

    friend QMat operator+(const QMat& a, const QMat& b);
    friend QMat operator-(const QMat& a, const QMat& b);
    friend QMat operator*(const QMat& a, const QMat& b);
    QMat& operator+=(const QMat& o);
    QMat scaled(const Rat& c) const;
    friend bool operator==(const QMat& a, const QMat& b);

    std::vector<Rat> apply(const std::vector<Rat>& x) const;

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<int> rref();
    int rank() const;
    std::optional<QMat> inverse() const;
    // Basis of the right null space, one column vector per element.
    std::vector<std::vector<Rat>> nullspace() const;

  private:
    int rows_, cols_;
    std::vector<Rat> v_;
};

// One solution of A x = b together with the pivot columns (free columns get 0),
// or nullopt when inconsistent.
struct LinSolve {
    std::vector<Rat> x;
    std::vector<int> pivot_cols;  // columns actually determined
    bool underdetermined = false;
};
std::optional<LinSolve> solve_linear(const QMat& a, const std::vector<Rat>& b);

}  // namespace cybe
