#pragma once

#include <cstdint>
#include <vector>

#include "rhcodec/budget.hpp"
#include "rhcodec/conv_code.hpp"

namespace rhcodec {

struct MLDecodeResult {
    Vec codeword;           // nearest codeword (deterministic tie choice)
    Vec error;              // z - codeword; the lex-smallest minimum-weight coset vector
    long error_weight;
    std::uint64_t tie_count;  // number of minimum-weight vectors in the coset
};

/*
 * Length N*n block code obtained by windowing the convolutional code.
 * Coordinates stack N consecutive symbols with time DECREASING left to
 * right: (y_{t+N-1}, ..., y_t, u_{t+N-1}, ..., u_t). With
 *
 *   M = [ D  CB  CAB ... CA^{N-2}B ]      (block upper triangular,
 *       [    D   CB  ...           ]       D on the diagonal)
 *       [        ...         D     ]
 *
 * the stored pair is
 *
 *   generator  B_N = [ -M ]        check  H_N = [ I | M ],
 *                    [ I_Nk ]
 *
 * so H_N B_N = 0, B_N is systematic in its bottom Nk rows, and H_N matches
 * the worked small-field examples digit for digit. (-M instead of M is a
 * coordinatewise negation of the y-block, a Hamming isometry: distances,
 * weights, tie structure and protected supports are unaffected.)
 *
 * Construction eagerly builds the full coset-leader table and enumerates the
 * minimum distance, so instances are immutable afterwards and queries are
 * pure. Both enumerations are budget-checked.
 */
class WindowCode {
  public:
    WindowCode(const ConvCode& code, std::size_t N, const Budget& budget = {});

    const ConvCode& code() const { return code_; }
    const Field& field() const { return code_.field(); }
    std::size_t window() const { return N_; }
    std::size_t block_length() const { return N_ * code_.n(); }
    std::size_t dim() const { return N_ * code_.k(); }

    const Mat& generator() const { return bn_; }
    const Mat& check() const { return hn_; }

    long min_distance() const { return min_distance_; }
    long covering_radius() const { return covering_radius_; }

    // Syndrome (coset-leader) decoding of a length N*n vector.
    MLDecodeResult ml_decode(const Vec& z) const;

    // Same lookup without copying: returns the stored leader for z's coset
    // and fills in its weight and tie count. The reference stays valid for
    // the lifetime of this object.
    const Vec& coset_leader(const Vec& z, long& error_weight, std::uint64_t& tie_count) const;

    // All nearest codewords to z, sorted lexicographically. Size equals the
    // tie_count reported by ml_decode.
    std::vector<Vec> nearest_codewords(const Vec& z) const;

    Vec syndrome(const Vec& z) const;
    std::uint64_t syndrome_index(const Vec& s) const;

    // Message (bottom Nk systematic coordinates) of a codeword.
    Vec message_of(const Vec& codeword) const;
    Vec encode_message(const Vec& message) const;

  private:
    void build_matrices();
    void build_syndrome_table(const Budget& budget);
    void compute_min_distance(const Budget& budget);

    ConvCode code_;
    std::size_t N_;
    Mat bn_, hn_;
    std::vector<Vec> leader_;
    std::vector<long> leader_weight_;
    std::vector<std::uint64_t> tie_count_;
    long covering_radius_ = 0;
    long min_distance_ = 0;
};

/*
 * Error-correcting capability of the receding-horizon step: with stride L,
 * the decoder commits the OLDEST L symbols of each window, i.e. coordinates
 *   (N-L)(n-k)+1 .. N(n-k)   (old output block)
 *   Nn - Lk + 1  .. Nn       (old input block)      [1-based]
 * d_prime is the largest weight w such that every nonzero codeword of weight
 * <= w vanishes on all protected coordinates; window errors of weight
 * <= floor(d_prime/2) then leave the committed symbols exact.
 */
struct AdmissibleCapability {
    std::vector<std::size_t> protected_indices;  // 1-based, ascending
    long d_prime;
    bool meets_distance_condition;  // d_prime >= d_N - 1
};

AdmissibleCapability admissible_capability(const WindowCode& wc, std::size_t L,
                                           const Budget& budget = {});

} // namespace rhcodec
