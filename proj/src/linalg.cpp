#include "linalg.hpp"

#include <algorithm>

namespace cybe {

QMat QMat::identity(int n) {
    QMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool QMat::is_zero() const {
    for (const auto& x : v_)
        if (!cybe::is_zero(x)) return false;
    return true;
}

bool QMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
}

QMat QMat::transpose() const {
    QMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat operator+(const QMat& a, const QMat& b) {
    QMat r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.v_.size(); ++k) r.v_[k] = a.v_[k] + b.v_[k];
    return r;
}

QMat operator-(const QMat& a, const QMat& b) {
    QMat r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.v_.size(); ++k) r.v_[k] = a.v_[k] - b.v_[k];
    return r;
}

QMat& QMat::operator+=(const QMat& o) {
    for (size_t k = 0; k < v_.size(); ++k) v_[k] += o.v_[k];
    return *this;
}

QMat QMat::scaled(const Rat& c) const {
    QMat r(rows_, cols_);
    for (size_t k = 0; k < v_.size(); ++k) r.v_[k] = v_[k] * c;
    return r;
}

bool operator==(const QMat& a, const QMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.v_ == b.v_;
}

QMat operator*(const QMat& a, const QMat& b) {
    QMat r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (is_zero(aik)) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rat& bkj = b.at(k, j);
                if (!is_zero(bkj)) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

std::vector<Rat> QMat::apply(const std::vector<Rat>& x) const {
    std::vector<Rat> y(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rat& a = at(i, j);
            if (!cybe::is_zero(a) && !cybe::is_zero(x[j])) y[i] += a * x[j];
        }
    return y;
}

std::vector<int> QMat::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!cybe::is_zero(at(i, c))) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        Rat inv = 1 / at(r, c);
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || cybe::is_zero(at(i, c))) continue;
            Rat f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int QMat::rank() const {
    QMat tmp = *this;
    return int(tmp.rref().size());
}

std::optional<QMat> QMat::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    QMat aug(rows_, 2 * cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = 1;
    }
    auto piv = aug.rref();
    if (int(piv.size()) != rows_) return std::nullopt;
    for (int k = 0; k < rows_; ++k)
        if (piv[k] != k) return std::nullopt;
    QMat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::vector<std::vector<Rat>> QMat::nullspace() const {
    QMat tmp = *this;
    auto piv = tmp.rref();
    std::vector<bool> is_piv(cols_, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (int c = 0; c < cols_; ++c) {
        if (is_piv[c]) continue;
        std::vector<Rat> v(cols_);
        v[c] = 1;
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -tmp.at(int(r), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<LinSolve> solve_linear(const QMat& a, const std::vector<Rat>& b) {
    QMat aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[size_t(i)];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;  // inconsistent
    LinSolve s;
    s.x.assign(size_t(a.cols()), Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) s.x[size_t(piv[r])] = aug.at(int(r), a.cols());
    s.pivot_cols.assign(piv.begin(), piv.end());
    s.underdetermined = int(piv.size()) < a.cols();
    return s;
}

}  // namespace cybe
