#include "rhcodec/density.hpp"

#include "rhcodec/window_code.hpp"

namespace rhcodec {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r *= static_cast<unsigned long>(n - k + i);
        r /= static_cast<unsigned long>(i);
    }
    return r;
}

BigInt ball_size(std::size_t n, long t, std::uint32_t q) {
    BigInt total = 0, qm1pow = 1;
    for (long i = 0; i <= t && i <= static_cast<long>(n); ++i) {
        total += binomial(n, static_cast<std::size_t>(i)) * qm1pow;
        qm1pow *= (q - 1);
    }
    return total;
}

DensityStats density_stats(std::size_t n, std::size_t k, long d, const Field& f) {
    if (d < 1) throw dimension_error("density_stats: minimum distance must be >= 1");
    if (k > n) throw dimension_error("density_stats: k must not exceed n");
    DensityStats s;
    s.t = (d - 1) / 2;
    s.e_kt = ball_size(k, s.t, f.p());
    BigInt cosets = 1;
    for (std::size_t i = 0; i < n - k; ++i) cosets *= f.p();
    s.density = Rational(ball_size(n, s.t, f.p()), cosets);
    s.p_outside = Rational(1) - s.density;
    return s;
}

Rational multiplicity_bound(const ConvCode& code, std::size_t N, std::size_t Delta,
                            std::size_t M, const Budget& budget) {
    if (M < 2) throw dimension_error("multiplicity_bound: need M >= 2");
    if (N < 1 || Delta < N) throw dimension_error("multiplicity_bound: need 1 <= N <= Delta");

    WindowCode c1(code, 1, budget);
    DensityStats s1 = density_stats(code.n(), code.k(), c1.min_distance(), code.field());

    Rational bound(1);
    for (std::size_t i = 0; i + 1 < M; ++i) bound *= s1.density;
    bound /= Rational(s1.e_kt);

    for (std::size_t i = N; i <= Delta; ++i) {
        WindowCode ci(code, i, budget);
        DensityStats si =
            density_stats(i * code.n(), i * code.k(), ci.min_distance(), code.field());
        bound *= si.p_outside;
    }
    return bound;
}

std::string rational_str(const Rational& r) {
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" + den.str();
}

double rational_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace rhcodec
