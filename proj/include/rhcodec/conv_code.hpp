#pragma once

#include <cstddef>
#include <vector>

#include "rhcodec/budget.hpp"
#include "rhcodec/mat.hpp"
#include "rhcodec/poly.hpp"

namespace rhcodec {

// A length-(T+1) stretch of code symbols c_t = (y_t; u_t), t = 0..T.
// y_t has n-k entries, u_t has k entries.
struct SymbolSeq {
    std::vector<Vec> y;
    std::vector<Vec> u;

    std::size_t length() const { return u.size(); }
    bool empty() const { return u.empty(); }
};

// Equality as polynomial sequences: the shorter side is zero-padded.
bool same_codeword(const SymbolSeq& a, const SymbolSeq& b);

// Extend with zero symbols up to the given length (no-op if already longer).
SymbolSeq pad_to(const SymbolSeq& s, std::size_t len, std::size_t nk, std::size_t k);

/*
 * Rate k/n convolutional code presented as a linear system over GF(p):
 *
 *     x_{t+1} = A x_t + B u_t          A: delta x delta, B: delta x k
 *     y_t     = C x_t + D u_t          C: (n-k) x delta, D: (n-k) x k
 *
 * Codewords are the symbol sequences (y; u) driven from x_0 = 0 by inputs
 * that return the state to zero after the last step. Construction validates
 * that (A, B) is controllable and (A, C) observable, and computes the
 * controllability indices kappa_1 >= ... >= kappa_k (sum = delta).
 */
class ConvCode {
  public:
    ConvCode(Field f, Mat A, Mat B, Mat C, Mat D);

    const Field& field() const { return f_; }
    std::size_t n() const { return nk_ + k_; }
    std::size_t k() const { return k_; }
    std::size_t nk() const { return nk_; }          // n - k output rows
    std::size_t delta() const { return delta_; }    // state dimension / complexity
    const Mat& A() const { return A_; }
    const Mat& B() const { return B_; }
    const Mat& C() const { return C_; }
    const Mat& D() const { return D_; }

    // Controllability indices, sorted descending.
    const std::vector<std::size_t>& kappa() const { return kappa_; }
    std::size_t kappa_max() const { return kappa_.empty() ? 0 : kappa_.front(); }
    std::size_t kappa_min() const { return kappa_.empty() ? 0 : kappa_.back(); }

    struct Encoded {
        SymbolSeq seq;
        Vec final_state;  // state after consuming all inputs
    };
    // Run the system over the input sequence from state x0 (default zero).
    Encoded encode(const std::vector<Vec>& inputs, const Vec& x0 = {}) const;

    // Shortest input sequence driving state x back to zero; ties broken by
    // minimal total Hamming weight, then by lexicographically smallest
    // stacked input vector (u_0, ..., u_{tau-1}). Length tau <= kappa_max.
    std::vector<Vec> zero_return_extension(const Vec& x, const Budget& budget = {}) const;

    // Operational membership: re-encode the input part from x_0 = 0 and
    // require the outputs to match and the final state to be zero.
    bool is_codeword(const SymbolSeq& s) const;

    // Kernel-description membership: the stacked vector
    // (y_0..y_gamma, u_0..u_gamma) must lie in the kernel of
    // membership_matrix(gamma). Cross-checked against is_codeword in tests.
    Mat membership_matrix(std::size_t gamma) const;
    bool is_codeword_kernel(const SymbolSeq& s) const;

    Vec zero_state() const { return Vec(delta_, 0); }

  private:
    Field f_;
    Mat A_, B_, C_, D_;
    std::size_t k_, nk_, delta_;
    std::vector<std::size_t> kappa_;
};

// Polynomial generator G(z) = (P(z); Q(z)):roughly, messages v(z) map to
// codewords (y; u) = (P v; Q v). P is (n-k) x k, Q is k x k nonsingular.
struct PolyGenerator {
    PolyMat P;
    PolyMat Q;
    // Optional provenance of a row reordering: row_permutation[i] - 1 is the
    // stacked (P; Q) row that displayed row i of the source matrix became.
    std::vector<std::size_t> row_permutation;
};

// Validates shapes and full column rank over the rational function field
// (some k x k minor of (P; Q) has nonzero determinant).
PolyGenerator make_generator(PolyMat P, PolyMat Q, std::vector<std::size_t> row_permutation = {});

// Build a generator from a displayed n x k polynomial matrix plus the row
// permutation mapping displayed rows into (P; Q) order (1-based).
PolyGenerator generator_from_displayed(const PolyMat& G, const std::vector<std::size_t>& row_permutation,
                                       std::size_t k);

// Exact polynomial identity linking the realization to the generator:
//     det(zI - A) * P(z) == (C adj(zI - A) B + det(zI - A) D) * Q(z).
bool verify_realization(const ConvCode& code, const PolyGenerator& gen);

} // namespace rhcodec
