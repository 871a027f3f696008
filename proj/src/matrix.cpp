#include <zk3/matrix.hpp>

#include <stdexcept>

namespace zk3 {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    if (rows.empty())
        return RatMatrix();
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

RatMatrix RatMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rat>> q;
    q.reserve(rows.size());
    for (const auto& r : rows)
        q.emplace_back(r.begin(), r.end());
    return from_rows(q);
}

bool RatMatrix::is_integral() const {
    for (const Rat& e : entries_)
        if (e.get_den() != 1)
            return false;
    return true;
}

bool RatMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i))
                return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const Rat& e : entries_)
        if (e != 0)
            return false;
    return true;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    RatMatrix r(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                r.at(i, j) += a * other.at(k, j);
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum dimension mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] + other.entries_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] - other.entries_[i];
    return r;
}

RatMatrix RatMatrix::scaled(const Rat& c) const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        r.entries_[i] = entries_[i] * c;
    return r;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Rat> r(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r[i] += at(i, j) * v[j];
    return r;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    RatMatrix r(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            r.at(i, j) = at(row_idx[i], col_idx[j]);
    return r;
}

namespace {

// Fraction-free elimination for integer input: every intermediate value is a
// minor of the original matrix, so nothing ever needs reducing.
Rat det_bareiss(const RatMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j).get_num();

    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0)
                ++piv;
            if (piv == n)
                return Rat(0);
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Int d = a[n - 1][n - 1];
    if (sign < 0)
        d = -d;
    return Rat(d);
}

Rat det_gauss(RatMatrix m) {
    const std::size_t n = m.rows();
    Rat det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m.at(piv, k) == 0)
            ++piv;
        if (piv == n)
            return Rat(0);
        if (piv != k) {
            for (std::size_t j = k; j < n; ++j)
                std::swap(m.at(k, j), m.at(piv, j));
            det = -det;
        }
        det *= m.at(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k) == 0)
                continue;
            Rat f = m.at(i, k) / m.at(k, k);
            for (std::size_t j = k; j < n; ++j)
                m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

} // namespace

Rat det_exact(const RatMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0)
        return Rat(1);
    if (m.is_integral())
        return det_bareiss(m);
    return det_gauss(m);
}

std::optional<std::vector<Rat>> solve_rational(const RatMatrix& m, const std::vector<Rat>& b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    const std::size_t rows = m.rows(), cols = m.cols();
    RatMatrix a(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j)
            a.at(i, j) = m.at(i, j);
        a.at(i, cols) = b[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t piv = row;
        while (piv < rows && a.at(piv, col) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != row)
            for (std::size_t j = col; j <= cols; ++j)
                std::swap(a.at(row, j), a.at(piv, j));
        Rat inv = a.at(row, col);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || a.at(i, col) == 0)
                continue;
            Rat f = a.at(i, col) / inv;
            for (std::size_t j = col; j <= cols; ++j)
                a.at(i, j) -= f * a.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < rows; ++i)
        if (a.at(i, cols) != 0)
            return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        x[pivot_col[r]] = a.at(r, cols) / a.at(r, pivot_col[r]);
    return x;
}

std::size_t rank_exact(const RatMatrix& m) {
    RatMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && a.at(piv, col) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(a.at(rank, j), a.at(piv, j));
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a.at(i, col) == 0)
                continue;
            Rat f = a.at(i, col) / a.at(rank, col);
            for (std::size_t j = col; j < cols; ++j)
                a.at(i, j) -= f * a.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

} // namespace zk3
