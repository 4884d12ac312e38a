#include "rhcodec/poly.hpp"

namespace rhcodec {

Poly::Poly(Field f, Vec coeffs) : f_(f), c_(std::move(coeffs)) {
    for (Elem& e : c_) e = f_.norm(e);
    normalize();
}

Poly::Poly(Field f, std::initializer_list<Elem> coeffs) : Poly(f, Vec(coeffs)) {}

Poly Poly::monomial(Field f, Elem c, std::size_t deg) {
    Vec v(deg + 1, 0);
    v[deg] = c;
    return Poly(f, std::move(v));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
    Vec r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.add(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    Vec r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_.sub(coeff(i), o.coeff(i));
    return Poly(f_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(f_);
    Vec r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_.add(r[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return Poly(f_, std::move(r));
}

Poly Poly::neg() const {
    Vec r(c_);
    for (Elem& e : r) e = f_.neg(e);
    return Poly(f_, std::move(r));
}

Poly Poly::scaled(Elem c) const {
    Vec r(c_);
    for (Elem& e : r) e = f_.mul(e, c);
    return Poly(f_, std::move(r));
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
    return acc;
}

PolyMat::PolyMat(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), e_(rows * cols, Poly(f)) {}

PolyMat PolyMat::from_constant(const Mat& m) {
    PolyMat r(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) r.set(i, j, Poly(m.field(), {m.at(i, j)}));
    return r;
}

PolyMat PolyMat::z_identity_minus(const Mat& a) {
    if (a.rows() != a.cols()) throw dimension_error("z_identity_minus: square required");
    const Field& f = a.field();
    PolyMat r(f, a.rows(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.rows(); ++j) {
            Vec c{f.neg(a.at(i, j))};
            if (i == j) c.push_back(1);
            r.set(i, j, Poly(f, std::move(c)));
        }
    return r;
}

void PolyMat::set(std::size_t i, std::size_t j, Poly p) {
    if (p.field() != f_) throw dimension_error("PolyMat::set: field mismatch");
    e_[i * cols_ + j] = std::move(p);
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols_ != o.rows_ || f_ != o.f_) throw dimension_error("polymat mul: shape mismatch");
    PolyMat r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            Poly acc(f_);
            for (std::size_t l = 0; l < cols_; ++l) acc = acc + at(i, l) * o.at(l, j);
            r.set(i, j, std::move(acc));
        }
    return r;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
        throw dimension_error("polymat add: shape mismatch");
    PolyMat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

PolyMat PolyMat::operator-(const PolyMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
        throw dimension_error("polymat sub: shape mismatch");
    PolyMat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

PolyMat PolyMat::scaled(const Poly& p) const {
    PolyMat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] * p;
    return r;
}

bool PolyMat::operator==(const PolyMat& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

PolyMat PolyMat::minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    PolyMat r(f_, rows_ - 1, cols_ - 1);
    std::size_t ri = 0;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i == skip_row) continue;
        std::size_t rj = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j == skip_col) continue;
            r.set(ri, rj, at(i, j));
            ++rj;
        }
        ++ri;
    }
    return r;
}

Poly PolyMat::det() const {
    if (rows_ != cols_) throw dimension_error("det: square required");
    if (rows_ == 0) return Poly(f_, {1});
    if (rows_ == 1) return at(0, 0);
    Poly acc(f_);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (at(i, 0).is_zero()) continue;
        Poly term = at(i, 0) * minor_matrix(i, 0).det();
        acc = (i % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

PolyMat PolyMat::adjugate() const {
    if (rows_ != cols_) throw dimension_error("adjugate: square required");
    PolyMat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            Poly c = minor_matrix(i, j).det();
            if ((i + j) % 2 == 1) c = c.neg();
            r.set(j, i, std::move(c));  // transposed cofactor
        }
    return r;
}

PolyMat PolyMat::select_rows(const std::vector<std::size_t>& rows) const {
    PolyMat r(f_, rows.size(), cols_);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] >= rows_) throw dimension_error("select_rows: index out of range");
        for (std::size_t j = 0; j < cols_; ++j) r.set(i, j, at(rows[i], j));
    }
    return r;
}

long PolyMat::max_entry_deg() const {
    long d = -1;
    for (const Poly& p : e_) d = std::max(d, p.deg());
    return d;
}

PolyMat poly_vstack(const PolyMat& t, const PolyMat& b) {
    if (t.cols() != b.cols() || t.field() != b.field())
        throw dimension_error("poly_vstack: column mismatch");
    PolyMat r(t.field(), t.rows() + b.rows(), t.cols());
    for (std::size_t i = 0; i < t.rows(); ++i)
        for (std::size_t j = 0; j < t.cols(); ++j) r.set(i, j, t.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(t.rows() + i, j, b.at(i, j));
    return r;
}

} // namespace rhcodec
