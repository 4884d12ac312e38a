#include <doctest.h>

#include "rhcodec/poly.hpp"

using namespace rhcodec;

TEST_CASE("polynomial normalization and degree") {
    Field f(5);
    CHECK(Poly(f).deg() == -1);
    CHECK(Poly(f, {0, 0}).deg() == -1);
    CHECK(Poly(f, {1, 2, 0}).deg() == 1);
    CHECK(Poly(f, {3}).deg() == 0);
    CHECK(Poly::monomial(f, 2, 3).coeffs() == Vec{0, 0, 0, 2});
    CHECK(Poly::monomial(f, 0, 3).is_zero());
}

TEST_CASE("polynomial arithmetic over GF(5)") {
    Field f(5);
    Poly a(f, {1, 2});     // 1 + 2z
    Poly b(f, {3, 0, 4});  // 3 + 4z^2
    CHECK((a + b).coeffs() == Vec{4, 2, 4});
    CHECK((a - b).coeffs() == Vec{3, 2, 1});
    CHECK((a * b).coeffs() == Vec{3, 1, 4, 3});
    CHECK((a * Poly(f)).is_zero());
    CHECK(a.neg().coeffs() == Vec{4, 3});
    CHECK(a.scaled(3).coeffs() == Vec{3, 1});
    CHECK(a.eval(2) == 0);  // 1 + 4 = 5
    CHECK(b.eval(1) == 2);
}

TEST_CASE("determinant of a polynomial matrix") {
    Field f(5);
    PolyMat q(f, 2, 2);
    q.set(0, 0, Poly(f, {3}));
    q.set(0, 1, Poly(f, {0, 1}));  // z
    q.set(1, 0, Poly(f, {1}));
    // q = [[3, z], [1, 0]]; det = 3*0 - z*1 = -z = 4z.
    Poly det = q.det();
    CHECK(det.coeffs() == Vec{0, 4});
    CHECK(det.deg() == 1);
}

TEST_CASE("characteristic polynomial via z-identity") {
    Field f(2);
    Mat a = Mat::identity(f, 2);
    Poly chi = PolyMat::z_identity_minus(a).det();
    // (z - 1)^2 = z^2 + 1 over GF(2).
    CHECK(chi.coeffs() == Vec{1, 0, 1});
}

TEST_CASE("adjugate identity adj(M) * M = det(M) * I") {
    Field f(5);
    PolyMat m(f, 3, 3);
    m.set(0, 0, Poly(f, {1, 1}));
    m.set(0, 2, Poly(f, {2}));
    m.set(1, 1, Poly(f, {0, 3}));
    m.set(1, 0, Poly(f, {4}));
    m.set(2, 2, Poly(f, {1, 0, 1}));
    m.set(2, 1, Poly(f, {2, 2}));
    PolyMat prod = m.adjugate() * m;
    Poly det = m.det();
    PolyMat expect(f, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) expect.set(i, i, det);
    CHECK(prod == expect);
}

TEST_CASE("row selection and stacking") {
    Field f(5);
    PolyMat m(f, 3, 1);
    m.set(0, 0, Poly(f, {1}));
    m.set(1, 0, Poly(f, {2}));
    m.set(2, 0, Poly(f, {3}));
    PolyMat sel = m.select_rows({2, 0});
    CHECK(sel.rows() == 2);
    CHECK(sel.at(0, 0).coeffs() == Vec{3});
    CHECK(sel.at(1, 0).coeffs() == Vec{1});
    CHECK(poly_vstack(m, sel).rows() == 5);
    CHECK(m.max_entry_deg() == 0);
    CHECK(PolyMat(f, 2, 2).max_entry_deg() == -1);
}
