#ifndef ZK3_MATRIX_HPP
#define ZK3_MATRIX_HPP

#include <zk3/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace zk3 {

// Dense matrix of exact rationals. Values are immutable in spirit: every
// operation returns a fresh matrix, nothing is cached.
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);
    static RatMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_integral() const;
    bool is_symmetric() const;
    bool is_zero() const;

    RatMatrix transpose() const;
    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator+(const RatMatrix& other) const;
    RatMatrix operator-(const RatMatrix& other) const;
    RatMatrix scaled(const Rat& c) const;
    bool operator==(const RatMatrix& other) const = default;

    std::vector<Rat> apply(const std::vector<Rat>& v) const; // M*v
    RatMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

// Exact determinant. Integer matrices go through fraction-free (Bareiss)
// elimination, anything else through plain rational Gaussian elimination.
Rat det_exact(const RatMatrix& m);

// One rational solution of m*x = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_rational(const RatMatrix& m, const std::vector<Rat>& b);

std::size_t rank_exact(const RatMatrix& m);

} // namespace zk3

#endif
