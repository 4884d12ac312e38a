#include "rhcodec/conv_code.hpp"

#include <algorithm>
#include <string>

namespace rhcodec {

bool same_codeword(const SymbolSeq& a, const SymbolSeq& b) {
    std::size_t len = std::max(a.length(), b.length());
    if (!a.empty() && !b.empty() &&
        (a.y[0].size() != b.y[0].size() || a.u[0].size() != b.u[0].size()))
        return false;
    Vec zy(a.empty() ? (b.empty() ? 0 : b.y[0].size()) : a.y[0].size(), 0);
    Vec zu(a.empty() ? (b.empty() ? 0 : b.u[0].size()) : a.u[0].size(), 0);
    auto zero_or = [](const std::vector<Vec>& v, std::size_t t, const Vec& z) -> const Vec& {
        return t < v.size() ? v[t] : z;
    };
    for (std::size_t t = 0; t < len; ++t) {
        if (zero_or(a.y, t, zy) != zero_or(b.y, t, zy)) return false;
        if (zero_or(a.u, t, zu) != zero_or(b.u, t, zu)) return false;
    }
    return true;
}

SymbolSeq pad_to(const SymbolSeq& s, std::size_t len, std::size_t nk, std::size_t k) {
    SymbolSeq r = s;
    while (r.y.size() < len) r.y.emplace_back(nk, 0);
    while (r.u.size() < len) r.u.emplace_back(k, 0);
    return r;
}

namespace {

// Controllability indices by the power-major column selection
// b_1..b_k, Ab_1..Ab_k, ...; kappa_j counts how many powers of column j get
// kept before A^i b_j falls into the span of previously kept columns. In
// this ordering a column that goes dependent stays dependent.
std::vector<std::size_t> controllability_indices(const Mat& A, const Mat& B) {
    const Field& f = A.field();
    std::size_t delta = A.rows(), k = B.cols();
    std::vector<std::size_t> kappa(k, 0);
    if (delta == 0) return kappa;

    std::vector<Vec> kept;
    std::vector<bool> closed(k, false);
    std::vector<Vec> cur(k);
    for (std::size_t j = 0; j < k; ++j) cur[j] = B.col(j);

    for (std::size_t power = 0; power <= delta && kept.size() < delta; ++power) {
        for (std::size_t j = 0; j < k && kept.size() < delta; ++j) {
            if (closed[j]) continue;
            std::vector<Vec> cand = kept;
            cand.push_back(cur[j]);
            if (Mat::from_rows(f, cand, delta).rank() == cand.size()) {
                kept.push_back(cur[j]);
                ++kappa[j];
            } else {
                closed[j] = true;
            }
        }
        for (std::size_t j = 0; j < k; ++j)
            if (!closed[j]) cur[j] = A.apply(cur[j]);
    }
    if (kept.size() != delta) throw not_controllable();
    return kappa;
}

// Advance an ascending index combination; false once exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t n) {
    std::size_t k = pick.size();
    for (std::size_t i = k; i-- > 0;) {
        if (pick[i] + (k - i) < n) {
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

ConvCode::ConvCode(Field f, Mat A, Mat B, Mat C, Mat D)
    : f_(f), A_(std::move(A)), B_(std::move(B)), C_(std::move(C)), D_(std::move(D)) {
    delta_ = A_.rows();
    k_ = B_.cols();
    nk_ = C_.rows();
    if (A_.cols() != delta_) throw dimension_error("A must be square");
    if (B_.rows() != delta_) throw dimension_error("B must be delta x k");
    if (C_.cols() != delta_) throw dimension_error("C must be (n-k) x delta");
    if (D_.rows() != nk_ || D_.cols() != k_) throw dimension_error("D must be (n-k) x k");
    if (A_.field() != f_ || B_.field() != f_ || C_.field() != f_ || D_.field() != f_)
        throw dimension_error("realization matrices must share the code field");
    if (k_ == 0) throw dimension_error("input dimension k must be at least 1");
    if (nk_ == 0) throw dimension_error("rate must satisfy n > k");

    kappa_ = controllability_indices(A_, B_);
    std::sort(kappa_.begin(), kappa_.end(), std::greater<>());
    if (kappa_min() > delta_ / k_)
        throw invariant_violation("controllability indices: min exceeds floor(delta/k)");

    if (delta_ > 0) {
        Mat obs = C_;
        Mat block = C_;
        for (std::size_t i = 1; i < delta_; ++i) {
            block = block * A_;
            obs = vstack(obs, block);
        }
        if (obs.rank() != delta_) throw not_observable();
    }
}

ConvCode::Encoded ConvCode::encode(const std::vector<Vec>& inputs, const Vec& x0) const {
    Vec x = x0.empty() ? zero_state() : x0;
    if (x.size() != delta_) throw dimension_error("encode: bad initial state size");
    for (Elem& e : x) e = f_.norm(e);
    Encoded out;
    out.seq.y.reserve(inputs.size());
    out.seq.u.reserve(inputs.size());
    Vec xnext(delta_);
    for (const Vec& u : inputs) {
        if (u.size() != k_) throw dimension_error("encode: input symbol size must be k");
        Vec un(k_);
        for (std::size_t i = 0; i < k_; ++i) un[i] = f_.norm(u[i]);
        Vec y(nk_);
        for (std::size_t i = 0; i < nk_; ++i)
            y[i] = f_.add(f_.dot(C_.row_data(i), x.data(), delta_),
                          f_.dot(D_.row_data(i), un.data(), k_));
        for (std::size_t i = 0; i < delta_; ++i)
            xnext[i] = f_.add(f_.dot(A_.row_data(i), x.data(), delta_),
                              f_.dot(B_.row_data(i), un.data(), k_));
        x.swap(xnext);
        out.seq.y.push_back(std::move(y));
        out.seq.u.push_back(std::move(un));
    }
    out.final_state = std::move(x);
    return out;
}

std::vector<Vec> ConvCode::zero_return_extension(const Vec& x, const Budget& budget) const {
    if (x.size() != delta_) throw dimension_error("zero_return_extension: bad state size");
    if (weight(x) == 0) return {};

    for (std::size_t tau = 1; tau <= kappa_max(); ++tau) {
        // Want A^tau x + [A^{tau-1}B | ... | B] (u_0; ...; u_{tau-1}) = 0.
        Mat K(f_, delta_, tau * k_);
        Mat blk = B_;
        for (std::size_t j = tau; j-- > 0;) {
            K.set_block(0, j * k_, blk);
            if (j > 0) blk = A_ * blk;
        }
        Vec rhs = vec_neg(f_, mat_pow(A_, tau).apply(x));
        auto sol = K.solve(rhs);
        if (!sol) continue;

        // Minimal total weight, then lexicographically smallest stacked
        // input, over the whole affine solution set.
        std::size_t kdim = sol->kernel.size();
        std::uint64_t combos = checked_pow(f_.p(), kdim);
        budget.check(combos, "zero_return_extension solution sweep");

        Vec best;
        long best_w = -1;
        for (std::uint64_t it = 0; it < combos; ++it) {
            Vec cand = sol->particular;
            std::uint64_t rem = it;
            for (std::size_t c = kdim; c-- > 0;) {  // big-endian digits
                Elem coeff = static_cast<Elem>(rem % f_.p());
                rem /= f_.p();
                if (coeff == 0) continue;
                for (std::size_t r = 0; r < cand.size(); ++r)
                    cand[r] = f_.add(cand[r], f_.mul(coeff, sol->kernel[c][r]));
            }
            long w = weight(cand);
            if (best_w < 0 || w < best_w || (w == best_w && cand < best)) {
                best = std::move(cand);
                best_w = w;
            }
        }

        std::vector<Vec> ext(tau);
        for (std::size_t t = 0; t < tau; ++t)
            ext[t] = Vec(best.begin() + static_cast<std::ptrdiff_t>(t * k_),
                         best.begin() + static_cast<std::ptrdiff_t>((t + 1) * k_));
        return ext;
    }
    // Controllability guarantees a return within kappa_max steps.
    throw invariant_violation("zero_return_extension: no return within kappa_max steps");
}

bool ConvCode::is_codeword(const SymbolSeq& s) const {
    if (s.y.size() != s.u.size()) return false;
    for (const Vec& y : s.y)
        if (y.size() != nk_) return false;
    for (const Vec& u : s.u)
        if (u.size() != k_) return false;
    Encoded e = encode(s.u);
    if (weight(e.final_state) != 0) return false;
    for (std::size_t t = 0; t < s.length(); ++t)
        if (e.seq.y[t] != s.y[t]) return false;
    return true;
}

/*
 * Stacked kernel description of membership for sequences of length gamma+1,
 * columns ordered (y_0..y_gamma, u_0..u_gamma):
 *
 *   [ 0   | A^g B  A^{g-1} B ...  B ]   (state returns to zero)
 *   [ -I  | D                       ]   (y_t = C x_t + D u_t row by row,
 *   [     | CB     D               ]    x_t accumulated from the inputs)
 *   [     | CAB    CB    D         ]
 *   [     | ...                    ]
 */
Mat ConvCode::membership_matrix(std::size_t gamma) const {
    std::size_t steps = gamma + 1;
    std::size_t rows = delta_ + steps * nk_;
    std::size_t cols = steps * (nk_ + k_);
    Mat m(f_, rows, cols);
    std::size_t ucol0 = steps * nk_;

    Mat blk = B_;
    for (std::size_t i = steps; i-- > 0;) {
        m.set_block(0, ucol0 + i * k_, blk);
        if (i > 0) blk = A_ * blk;
    }
    for (std::size_t t = 0; t < steps; ++t) {
        std::size_t r0 = delta_ + t * nk_;
        for (std::size_t i = 0; i < nk_; ++i) m.set(r0 + i, t * nk_ + i, f_.neg(1));
        m.set_block(r0, ucol0 + t * k_, D_);
        if (t > 0) {
            Mat abk = B_;  // A^{t-1-i} B, built up from the right
            for (std::size_t i = t; i-- > 0;) {
                m.set_block(r0, ucol0 + i * k_, C_ * abk);
                if (i > 0) abk = A_ * abk;
            }
        }
    }
    return m;
}

bool ConvCode::is_codeword_kernel(const SymbolSeq& s) const {
    if (s.empty()) return true;
    if (s.y.size() != s.u.size()) return false;
    std::size_t gamma = s.length() - 1;
    Vec stacked;
    stacked.reserve(s.length() * n());
    for (const Vec& y : s.y) {
        if (y.size() != nk_) return false;
        stacked.insert(stacked.end(), y.begin(), y.end());
    }
    for (const Vec& u : s.u) {
        if (u.size() != k_) return false;
        stacked.insert(stacked.end(), u.begin(), u.end());
    }
    return weight(membership_matrix(gamma).apply(stacked)) == 0;
}

PolyGenerator make_generator(PolyMat P, PolyMat Q, std::vector<std::size_t> row_permutation) {
    if (P.field() != Q.field()) throw dimension_error("generator: field mismatch");
    std::size_t k = Q.cols();
    if (k == 0 || Q.rows() != k) throw dimension_error("generator: Q must be square k x k");
    if (P.cols() != k) throw dimension_error("generator: P must have k columns");
    if (P.rows() == 0) throw dimension_error("generator: rate must satisfy n > k");
    std::size_t n = P.rows() + k;

    if (!row_permutation.empty()) {
        if (row_permutation.size() != n)
            throw dimension_error("generator: row permutation must have n entries");
        std::vector<bool> seen(n, false);
        for (std::size_t v : row_permutation) {
            if (v < 1 || v > n || seen[v - 1])
                throw dimension_error("generator: row permutation must be a permutation of 1..n");
            seen[v - 1] = true;
        }
    }

    // Full column rank over F(z): some k x k minor has nonzero determinant.
    PolyMat G = poly_vstack(P, Q);
    std::vector<std::size_t> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = i;
    bool full_rank = false;
    do {
        if (!G.select_rows(pick).det().is_zero()) {
            full_rank = true;
            break;
        }
    } while (next_combination(pick, n));
    if (!full_rank)
        throw dimension_error("generator: (P; Q) does not have full column rank over F(z)");

    return PolyGenerator{std::move(P), std::move(Q), std::move(row_permutation)};
}

PolyGenerator generator_from_displayed(const PolyMat& G, const std::vector<std::size_t>& row_permutation,
                                       std::size_t k) {
    std::size_t n = G.rows();
    if (k == 0 || k >= n) throw dimension_error("displayed generator: need 1 <= k < n");
    if (G.cols() != k) throw dimension_error("displayed generator: G must be n x k");
    if (row_permutation.size() != n)
        throw dimension_error("displayed generator: row permutation must have n entries");
    PolyMat stacked(G.field(), n, k);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t dst = row_permutation[i];
        if (dst < 1 || dst > n || seen[dst - 1])
            throw dimension_error("displayed generator: invalid row permutation");
        seen[dst - 1] = true;
        for (std::size_t j = 0; j < k; ++j) stacked.set(dst - 1, j, G.at(i, j));
    }
    PolyMat P(G.field(), n - k, k);
    PolyMat Q(G.field(), k, k);
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = 0; i < n - k; ++i) P.set(i, j, stacked.at(i, j));
        for (std::size_t i = 0; i < k; ++i) Q.set(i, j, stacked.at(n - k + i, j));
    }
    return make_generator(std::move(P), std::move(Q), row_permutation);
}

bool verify_realization(const ConvCode& code, const PolyGenerator& gen) {
    const Field& f = code.field();
    if (gen.Q.cols() != code.k() || gen.P.rows() != code.nk()) return false;

    Poly charpoly(f, {1});
    PolyMat cadjb = PolyMat::from_constant(Mat(f, code.nk(), code.k()));
    if (code.delta() > 0) {
        PolyMat zia = PolyMat::z_identity_minus(code.A());
        charpoly = zia.det();
        cadjb = PolyMat::from_constant(code.C()) * zia.adjugate() * PolyMat::from_constant(code.B());
    }
    PolyMat lhs = gen.P.scaled(charpoly);
    PolyMat rhs = (cadjb + PolyMat::from_constant(code.D()).scaled(charpoly)) * gen.Q;
    return lhs == rhs;
}

} // namespace rhcodec
