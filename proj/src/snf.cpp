#include <zk3/snf.hpp>

#include <algorithm>
#include <stdexcept>

namespace zk3 {

namespace {

using IntMat = std::vector<std::vector<Int>>;

IntMat to_int_matrix(const RatMatrix& m) {
    if (!m.is_integral())
        throw std::domain_error("smith normal form needs integral entries");
    IntMat a(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            a[i][j] = m.at(i, j).get_num();
    return a;
}

RatMatrix to_rat_matrix(const IntMat& a) {
    RatMatrix m(a.size(), a.empty() ? 0 : a.front().size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = Rat(a[i][j]);
    return m;
}

void swap_rows(IntMat& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }

void swap_cols(IntMat& a, std::size_t i, std::size_t j) {
    for (auto& row : a)
        std::swap(row[i], row[j]);
}

// row i += f * row j
void add_row(IntMat& a, std::size_t i, std::size_t j, const Int& f) {
    for (std::size_t k = 0; k < a[i].size(); ++k)
        a[i][k] += f * a[j][k];
}

// col i += f * col j
void add_col(IntMat& a, std::size_t i, std::size_t j, const Int& f) {
    for (auto& row : a)
        row[i] += f * row[j];
}

void negate_row(IntMat& a, std::size_t i) {
    for (auto& x : a[i])
        x = -x;
}

// Smallest nonzero |entry| in the trailing block, or false if it is zero.
bool locate_pivot(const IntMat& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = t; i < d.size(); ++i)
        for (std::size_t j = t; j < d[i].size(); ++j) {
            if (d[i][j] == 0)
                continue;
            Int v = abs(d[i][j]);
            if (!found || v < best) {
                best = v;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

} // namespace

SnfResult smith_normal_form(const RatMatrix& m) {
    IntMat d = to_int_matrix(m);
    const std::size_t rows = m.rows(), cols = m.cols();
    const std::size_t nmin = std::min(rows, cols);

    IntMat left(rows, std::vector<Int>(rows, Int(0)));
    IntMat right(cols, std::vector<Int>(cols, Int(0)));
    for (std::size_t i = 0; i < rows; ++i)
        left[i][i] = 1;
    for (std::size_t j = 0; j < cols; ++j)
        right[j][j] = 1;

    for (std::size_t t = 0; t < nmin; ++t) {
        for (;;) {
            std::size_t pi = t, pj = t;
            if (!locate_pivot(d, t, pi, pj))
                break; // trailing block identically zero
            if (pi != t) {
                swap_rows(d, t, pi);
                swap_rows(left, t, pi);
            }
            if (pj != t) {
                swap_cols(d, t, pj);
                swap_cols(right, t, pj);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0)
                    continue;
                Int q = d[i][t] / d[t][t]; // truncated; remainder shrinks below pivot
                if (q != 0) {
                    add_row(d, i, t, -q);
                    add_row(left, i, t, -q);
                }
                if (d[i][t] != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0)
                    continue;
                Int q = d[t][j] / d[t][t];
                if (q != 0) {
                    add_col(d, j, t, -q);
                    add_col(right, j, t, -q);
                }
                if (d[t][j] != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // pivot now lone; enforce that it divides the rest of the block
            bool divides = true;
            std::size_t bi = t, bj = t;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols && divides; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        bi = i;
                        bj = j;
                        divides = false;
                    }
            if (divides)
                break;
            (void)bj;
            add_row(d, t, bi, Int(1));
            add_row(left, t, bi, Int(1));
        }
        if (d[t][t] < 0) {
            negate_row(d, t);
            negate_row(left, t);
        }
    }

    SnfResult res;
    res.diag.reserve(nmin);
    for (std::size_t t = 0; t < nmin; ++t)
        res.diag.push_back(d[t][t]);
    res.left = to_rat_matrix(left);
    res.right = to_rat_matrix(right);
    return res;
}

std::vector<std::vector<Int>> integer_kernel(const RatMatrix& m) {
    SnfResult snf = smith_normal_form(m);
    const std::size_t cols = m.cols();
    const std::size_t nmin = snf.diag.size();

    std::vector<std::vector<Int>> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        bool in_kernel = j >= nmin || snf.diag[j] == 0;
        if (!in_kernel)
            continue;
        std::vector<Int> v(cols);
        for (std::size_t i = 0; i < cols; ++i)
            v[i] = snf.right.at(i, j).get_num();
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix unimodular_inverse(const RatMatrix& u) {
    if (!u.is_square() || !u.is_integral())
        throw std::invalid_argument("unimodular_inverse expects a square integer matrix");
    Rat d = det_exact(u);
    if (d != 1 && d != -1)
        throw std::domain_error("matrix is not unimodular, det = " + d.get_str());
    const std::size_t n = u.rows();
    RatMatrix inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rat> e(n, Rat(0));
        e[j] = 1;
        auto col = solve_rational(u, e);
        for (std::size_t i = 0; i < n; ++i) {
            if (!is_integral((*col)[i]))
                throw std::logic_error("unimodular inverse came out non-integral");
            inv.at(i, j) = (*col)[i];
        }
    }
    return inv;
}

} // namespace zk3
