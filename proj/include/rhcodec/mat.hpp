#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "rhcodec/field.hpp"

namespace rhcodec {

// Solution set of M x = b: a particular solution plus a kernel basis,
// stored as column vectors.
struct AffineSolution {
    Vec particular;
    std::vector<Vec> kernel;  // basis columns of {x : M x = 0}
};

// Dense row-major matrix over a prime field. All elimination is exact and
// deterministic: pivots are always the first nonzero entry scanning down.
class Mat {
  public:
    Mat(Field f, std::size_t rows, std::size_t cols);
    Mat(Field f, std::initializer_list<std::initializer_list<Elem>> rows);
    static Mat identity(Field f, std::size_t n);
    static Mat from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return f_; }

    Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Elem v) { a_[i * cols_ + j] = f_.norm(v); }

    // Pointer to row i (rows are contiguous).
    const Elem* row_data(std::size_t i) const { return a_.data() + i * cols_; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    void set_block(std::size_t i0, std::size_t j0, const Mat& b);

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat neg() const;
    Mat scaled(Elem c) const;
    Mat transpose() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // Matrix times column vector.
    Vec apply(const Vec& v) const;

    std::size_t rank() const;

    // Columns form a basis of the right kernel {x : M x = 0}; deterministic
    // (one basis vector per free column of the RREF, ascending).
    Mat kernel_basis() const;

    // Full solution set of M x = b, or nullopt when inconsistent.
    std::optional<AffineSolution> solve(const Vec& b) const;

  private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

Mat hstack(const Mat& l, const Mat& r);
Mat vstack(const Mat& t, const Mat& b);

// A^e for square A (e >= 0).
Mat mat_pow(const Mat& a, std::size_t e);

} // namespace rhcodec
