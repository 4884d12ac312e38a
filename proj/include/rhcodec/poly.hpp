#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "rhcodec/field.hpp"
#include "rhcodec/mat.hpp"

namespace rhcodec {

// Univariate polynomial over GF(p), coefficients lowest degree first,
// normalized (no trailing zeros; the zero polynomial has no coefficients).
class Poly {
  public:
    explicit Poly(Field f) : f_(f) {}
    Poly(Field f, Vec coeffs);
    Poly(Field f, std::initializer_list<Elem> coeffs);
    static Poly monomial(Field f, Elem c, std::size_t deg);

    const Field& field() const { return f_; }
    const Vec& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is -1.
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly neg() const;
    Poly scaled(Elem c) const;
    bool operator==(const Poly& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Elem eval(Elem x) const;

  private:
    void normalize();
    Field f_;
    Vec c_;
};

// Dense matrix with polynomial entries.
class PolyMat {
  public:
    PolyMat(Field f, std::size_t rows, std::size_t cols);
    static PolyMat from_constant(const Mat& m);
    // zI - A for square A.
    static PolyMat z_identity_minus(const Mat& a);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return f_; }
    const Poly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Poly p);

    PolyMat operator*(const PolyMat& o) const;
    PolyMat operator+(const PolyMat& o) const;
    PolyMat operator-(const PolyMat& o) const;
    PolyMat scaled(const Poly& p) const;
    bool operator==(const PolyMat& o) const;
    bool operator!=(const PolyMat& o) const { return !(*this == o); }

    // Exact determinant by cofactor expansion (square, small sizes).
    Poly det() const;
    // Adjugate: adj(M) * M = det(M) * I.
    PolyMat adjugate() const;
    PolyMat minor_matrix(std::size_t skip_row, std::size_t skip_col) const;

    // Keep rows whose index appears in `rows`, in the given order.
    PolyMat select_rows(const std::vector<std::size_t>& rows) const;

    // Largest degree among entries; -1 if all zero.
    long max_entry_deg() const;

  private:
    Field f_;
    std::size_t rows_, cols_;
    std::vector<Poly> e_;
};

PolyMat poly_vstack(const PolyMat& t, const PolyMat& b);

} // namespace rhcodec
