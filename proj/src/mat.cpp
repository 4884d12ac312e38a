#include "rhcodec/mat.hpp"

#include <string>

namespace rhcodec {

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

Mat::Mat(Field f, std::initializer_list<std::initializer_list<Elem>> rows)
    : f_(f), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_error("Mat: ragged initializer");
        for (Elem v : r) a_.push_back(f_.norm(v));
    }
}

Mat Mat::identity(Field f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols) {
    Mat m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw dimension_error("from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Vec Mat::row(std::size_t i) const {
    return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

void Mat::set_block(std::size_t i0, std::size_t j0, const Mat& b) {
    if (i0 + b.rows() > rows_ || j0 + b.cols() > cols_)
        throw dimension_error("set_block: block exceeds bounds");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            set(i0 + i, j0 + j, b.at(i, j));
}

Mat Mat::operator*(const Mat& o) const {
    if (f_ != o.f_) throw dimension_error("mat mul: field mismatch");
    if (cols_ != o.rows_)
        throw dimension_error("mat mul: " + std::to_string(cols_) + " vs " +
                              std::to_string(o.rows_));
    Mat r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t l = 0; l < cols_; ++l) {
            Elem x = at(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.set(i, j, f_.add(r.at(i, j), f_.mul(x, o.at(l, j))));
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
        throw dimension_error("mat add: shape mismatch");
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.add(a_[i], o.a_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || f_ != o.f_)
        throw dimension_error("mat sub: shape mismatch");
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.sub(a_[i], o.a_[i]);
    return r;
}

Mat Mat::neg() const {
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.neg(a_[i]);
    return r;
}

Mat Mat::scaled(Elem c) const {
    Mat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_.mul(a_[i], c);
    return r;
}

Mat Mat::transpose() const {
    Mat r(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool Mat::operator==(const Mat& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw dimension_error("apply: vector length mismatch");
    const Vec* src = &v;
    Vec canon;
    for (Elem e : v)
        if (!f_.is_canonical(e)) {
            canon.reserve(cols_);
            for (Elem x : v) canon.push_back(f_.norm(x));
            src = &canon;
            break;
        }
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = f_.dot(row_data(i), src->data(), cols_);
    return r;
}

namespace {

struct Echelon {
    Mat m;                          // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

// Deterministic Gauss-Jordan: first nonzero entry below the current row is
// the pivot for each column, left to right.
Echelon rref(Mat m) {
    const Field& f = m.field();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m.at(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) {
                Elem t = m.at(r, j);
                m.set(r, j, m.at(p, j));
                m.set(p, j, t);
            }
        Elem piv = f.inv(m.at(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m.set(r, j, f.mul(m.at(r, j), piv));
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r) continue;
            Elem x = m.at(i, c);
            if (x == 0) continue;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(x, m.at(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace

std::size_t Mat::rank() const {
    return rref(*this).pivots.size();
}

Mat Mat::kernel_basis() const {
    Echelon e = rref(*this);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Mat basis(f_, cols_, free_cols.size());
    for (std::size_t bi = 0; bi < free_cols.size(); ++bi) {
        std::size_t fc = free_cols[bi];
        basis.set(fc, bi, 1);
        for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
            basis.set(e.pivots[pr], bi, f_.neg(e.m.at(pr, fc)));
    }
    return basis;
}

std::optional<AffineSolution> Mat::solve(const Vec& b) const {
    if (b.size() != rows_) throw dimension_error("solve: rhs length mismatch");
    Mat aug(f_, rows_, cols_ + 1);
    aug.set_block(0, 0, *this);
    for (std::size_t i = 0; i < rows_; ++i) aug.set(i, cols_, b[i]);
    Echelon e = rref(std::move(aug));
    for (std::size_t c : e.pivots)
        if (c == cols_) return std::nullopt;  // pivot in the rhs column
    Vec x(cols_, 0);
    for (std::size_t pr = 0; pr < e.pivots.size(); ++pr)
        x[e.pivots[pr]] = e.m.at(pr, cols_);
    Mat kb = kernel_basis();
    std::vector<Vec> kernel_cols;
    kernel_cols.reserve(kb.cols());
    for (std::size_t j = 0; j < kb.cols(); ++j) kernel_cols.push_back(kb.col(j));
    return AffineSolution{std::move(x), std::move(kernel_cols)};
}

Mat hstack(const Mat& l, const Mat& r) {
    if (l.rows() != r.rows() || l.field() != r.field())
        throw dimension_error("hstack: row count mismatch");
    Mat m(l.field(), l.rows(), l.cols() + r.cols());
    m.set_block(0, 0, l);
    m.set_block(0, l.cols(), r);
    return m;
}

Mat vstack(const Mat& t, const Mat& b) {
    if (t.cols() != b.cols() || t.field() != b.field())
        throw dimension_error("vstack: column count mismatch");
    Mat m(t.field(), t.rows() + b.rows(), t.cols());
    m.set_block(0, 0, t);
    m.set_block(t.rows(), 0, b);
    return m;
}

Mat mat_pow(const Mat& a, std::size_t e) {
    if (a.rows() != a.cols()) throw dimension_error("mat_pow: square matrix required");
    Mat acc = Mat::identity(a.field(), a.rows());
    for (std::size_t i = 0; i < e; ++i) acc = acc * a;
    return acc;
}

} // namespace rhcodec
