#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rhcodec/budget.hpp"
#include "rhcodec/conv_code.hpp"

namespace rhcodec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) exactly.
BigInt binomial(std::size_t n, std::size_t k);

// Number of vectors in a Hamming ball: sum_{i=0}^{t} C(n,i) (q-1)^i.
BigInt ball_size(std::size_t n, long t, std::uint32_t q);

// Packing density of an [n, k, d] code over GF(q). Exact rationals
// throughout; floats only appear at presentation time.
struct DensityStats {
    long t;             // floor((d-1)/2), the correction radius
    BigInt e_kt;        // messages within distance t: sum C(k,i)(q-1)^i
    Rational density;   // ball_size(n,t,q) / q^{n-k}
    Rational p_outside; // 1 - density
};

DensityStats density_stats(std::size_t n, std::size_t k, long d, const Field& f);

/*
 * Upper bound on the probability that a window decode admits M or more
 * optimal solutions persisting from window length N through Delta:
 *
 *   density(C_1)^{M-1} / E_{k,t_1}  *  prod_{i=N}^{Delta} p_outside(C_i)
 *
 * where C_i is the length i*n window code of `code`, d_i its true minimum
 * distance (enumerated, budget-checked), and t_1 the correction radius of
 * C_1. Exact rational.
 */
Rational multiplicity_bound(const ConvCode& code, std::size_t N, std::size_t Delta,
                            std::size_t M, const Budget& budget = {});

std::string rational_str(const Rational& r);
double rational_double(const Rational& r);

} // namespace rhcodec
