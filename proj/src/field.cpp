#include "rhcodec/field.hpp"

namespace rhcodec {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace

Field::Field(std::uint32_t p) : p_(p) {
    if (!is_prime(p))
        throw field_error("field order must be prime, got " + std::to_string(p));
}

Elem Field::inv(Elem a) const {
    a = norm(a);
    if (a == 0) throw division_by_zero();
    // Fermat: a^(p-2). p is prime and a != 0.
    return pow(a, p_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    std::int64_t base = norm(a), acc = 1;
    while (e > 0) {
        if (e & 1) acc = acc * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<Elem>(acc);
}

Vec vec_sub(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dimension_error("vec_sub: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return r;
}

Vec vec_add(const Field& f, const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dimension_error("vec_add: length mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

Vec vec_neg(const Field& f, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.neg(a[i]);
    return r;
}

long hamming(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw dimension_error("hamming: length mismatch");
    long d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

} // namespace rhcodec
