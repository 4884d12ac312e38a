#include "rhcodec/window_code.hpp"

#include <algorithm>
#include <string>

namespace rhcodec {

WindowCode::WindowCode(const ConvCode& code, std::size_t N, const Budget& budget)
    : code_(code), N_(N), bn_(code.field(), 0, 0), hn_(code.field(), 0, 0) {
    if (N == 0) throw dimension_error("window length N must be at least 1");
    build_matrices();
    build_syndrome_table(budget);
    compute_min_distance(budget);
}

void WindowCode::build_matrices() {
    const Field& f = code_.field();
    std::size_t n = code_.n(), k = code_.k(), nk = code_.nk();

    // M: block row i, block col j (0-based): D on the diagonal,
    // C A^{j-i-1} B above it, zero below.
    Mat m(f, N_ * nk, N_ * k);
    for (std::size_t i = 0; i < N_; ++i) m.set_block(i * nk, i * k, code_.D());
    if (N_ > 1) {
        Mat abk = code_.B();  // A^e B
        for (std::size_t e = 0; e + 2 <= N_; ++e) {
            Mat cab = code_.C() * abk;
            for (std::size_t i = 0; i + e + 1 < N_; ++i)
                m.set_block(i * nk, (i + e + 1) * k, cab);
            if (e + 3 <= N_) abk = code_.A() * abk;
        }
    }

    bn_ = vstack(m.neg(), Mat::identity(f, N_ * k));
    hn_ = hstack(Mat::identity(f, N_ * nk), m);
}

void WindowCode::build_syndrome_table(const Budget& budget) {
    const Field& f = code_.field();
    const std::uint32_t p = f.p();
    std::size_t len = block_length();
    std::size_t srows = N_ * code_.nk();

    std::uint64_t table_size = checked_pow(p, srows);
    budget.check(table_size, "syndrome table");

    leader_.assign(table_size, Vec());
    leader_weight_.assign(table_size, -1);
    tie_count_.assign(table_size, 0);

    std::uint64_t filled = 0, enumerated = 0;

    // Sweep error vectors by increasing weight; a coset's leader weight is
    // the weight of the sweep pass that first reaches it, and its tie count
    // is how many vectors of that pass land on it. Weight passes always run
    // to completion so tie counts and lex-minimal leaders are exact.
    for (std::size_t w = 0; w <= len && filled < table_size; ++w) {
        if (w == 0) {
            Vec e(len, 0);
            leader_[0] = e;
            leader_weight_[0] = 0;
            tie_count_[0] = 1;
            ++filled;
            ++enumerated;
            continue;
        }
        std::vector<std::size_t> pos(w);
        for (std::size_t i = 0; i < w; ++i) pos[i] = i;
        while (true) {
            // value odometer over (p-1)^w, big-endian
            std::uint64_t vcombos = checked_pow(p - 1, w);
            for (std::uint64_t vi = 0; vi < vcombos; ++vi) {
                enumerated += 1;
                if (enumerated > budget.max_enumeration)
                    throw budget_exceeded("syndrome table sweep exceeds budget " +
                                          std::to_string(budget.max_enumeration));
                Vec e(len, 0);
                std::uint64_t rem = vi;
                for (std::size_t i = w; i-- > 0;) {
                    e[pos[i]] = static_cast<Elem>(rem % (p - 1)) + 1;
                    rem /= (p - 1);
                }
                // syndrome from support columns only
                Vec s(srows, 0);
                for (std::size_t i = 0; i < w; ++i) {
                    Elem x = e[pos[i]];
                    for (std::size_t r = 0; r < srows; ++r)
                        s[r] = f.add(s[r], f.mul(hn_.at(r, pos[i]), x));
                }
                std::uint64_t idx = syndrome_index(s);
                if (leader_weight_[idx] < 0) {
                    leader_[idx] = std::move(e);
                    leader_weight_[idx] = static_cast<long>(w);
                    tie_count_[idx] = 1;
                    ++filled;
                } else if (leader_weight_[idx] == static_cast<long>(w)) {
                    ++tie_count_[idx];
                    if (e < leader_[idx]) leader_[idx] = std::move(e);
                }
            }
            // next support combination
            std::size_t i = w;
            bool advanced = false;
            while (i-- > 0) {
                if (pos[i] + (w - i) < len) {
                    ++pos[i];
                    for (std::size_t j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) break;
        }
    }
    if (filled != table_size)
        throw invariant_violation("syndrome table incomplete after full sweep");

    covering_radius_ = 0;
    for (long w : leader_weight_) covering_radius_ = std::max(covering_radius_, w);
}

void WindowCode::compute_min_distance(const Budget& budget) {
    const Field& f = code_.field();
    const std::uint32_t p = f.p();
    std::size_t dim_ = dim(), len = block_length();

    std::uint64_t msgs = checked_pow(p, dim_);
    budget.check(msgs, "codeword enumeration");

    long best = static_cast<long>(len) + 1;
    for (std::uint64_t mi = 1; mi < msgs; ++mi) {
        std::uint64_t rem = mi;
        long w = 0;
        Vec acc(len - dim_, 0);  // only the redundancy part needs accumulating
        for (std::size_t j = dim_; j-- > 0;) {
            Elem x = static_cast<Elem>(rem % p);
            rem /= p;
            if (x == 0) continue;
            ++w;  // systematic coordinate
            for (std::size_t r = 0; r < acc.size(); ++r)
                acc[r] = f.add(acc[r], f.mul(bn_.at(r, j), x));
        }
        w += weight(acc);
        best = std::min(best, w);
        if (best == 1) break;  // cannot go lower for a nonzero codeword
    }
    min_distance_ = best;
}

Vec WindowCode::syndrome(const Vec& z) const {
    if (z.size() != block_length()) throw dimension_error("syndrome: bad vector length");
    return hn_.apply(z);
}

std::uint64_t WindowCode::syndrome_index(const Vec& s) const {
    const std::uint32_t p = field().p();
    std::uint64_t idx = 0;
    for (Elem e : s) idx = idx * p + static_cast<std::uint64_t>(e);
    return idx;
}

MLDecodeResult WindowCode::ml_decode(const Vec& z) const {
    MLDecodeResult r;
    const Vec& e = coset_leader(z, r.error_weight, r.tie_count);
    r.error = e;
    r.codeword = vec_sub(field(), z, e);
    return r;
}

const Vec& WindowCode::coset_leader(const Vec& z, long& error_weight,
                                    std::uint64_t& tie_count) const {
    if (z.size() != block_length()) throw dimension_error("coset_leader: bad vector length");
    const Field& f = field();
    const std::uint32_t p = f.p();
    // hn_ = [I | M]: row r dotted with z is z[r] plus the M-part product.
    const std::size_t msg = dim();
    const std::size_t off = block_length() - msg;
    std::uint64_t idx = 0;
    for (std::size_t r = 0; r < hn_.rows(); ++r)
        idx = idx * p +
              static_cast<std::uint64_t>(
                  f.add(z[r], f.dot(hn_.row_data(r) + off, z.data() + off, msg)));
    error_weight = leader_weight_[idx];
    tie_count = tie_count_[idx];
    return leader_[idx];
}

std::vector<Vec> WindowCode::nearest_codewords(const Vec& z) const {
    const Field& f = field();
    const std::uint32_t p = f.p();
    Vec s = syndrome(z);
    std::uint64_t idx = syndrome_index(s);
    std::size_t w = static_cast<std::size_t>(leader_weight_[idx]);
    std::size_t len = block_length();

    std::vector<Vec> out;
    if (w == 0) {
        out.push_back(z);
        return out;
    }
    std::vector<std::size_t> pos(w);
    for (std::size_t i = 0; i < w; ++i) pos[i] = i;
    while (true) {
        std::uint64_t vcombos = checked_pow(p - 1, w);
        for (std::uint64_t vi = 0; vi < vcombos; ++vi) {
            Vec e(len, 0);
            std::uint64_t rem = vi;
            for (std::size_t i = w; i-- > 0;) {
                e[pos[i]] = static_cast<Elem>(rem % (p - 1)) + 1;
                rem /= (p - 1);
            }
            if (syndrome_index(syndrome(e)) == idx) out.push_back(vec_sub(f, z, e));
        }
        std::size_t i = w;
        bool advanced = false;
        while (i-- > 0) {
            if (pos[i] + (w - i) < len) {
                ++pos[i];
                for (std::size_t j = i + 1; j < w; ++j) pos[j] = pos[j - 1] + 1;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    std::sort(out.begin(), out.end());
    if (out.size() != tie_count_[idx])
        throw invariant_violation("nearest_codewords: tie enumeration mismatch");
    return out;
}

Vec WindowCode::message_of(const Vec& codeword) const {
    if (codeword.size() != block_length()) throw dimension_error("message_of: bad length");
    return Vec(codeword.end() - static_cast<std::ptrdiff_t>(dim()), codeword.end());
}

Vec WindowCode::encode_message(const Vec& message) const {
    if (message.size() != dim()) throw dimension_error("encode_message: bad length");
    return bn_.apply(message);
}

AdmissibleCapability admissible_capability(const WindowCode& wc, std::size_t L,
                                           const Budget& budget) {
    std::size_t N = wc.window();
    if (L < 1 || L > N) throw dimension_error("admissible_capability: need 1 <= L <= N");
    const ConvCode& code = wc.code();
    std::size_t n = code.n(), k = code.k(), nk = code.nk();

    AdmissibleCapability cap;
    for (std::size_t i = (N - L) * nk + 1; i <= N * nk; ++i) cap.protected_indices.push_back(i);
    for (std::size_t i = N * n - L * k + 1; i <= N * n; ++i) cap.protected_indices.push_back(i);

    const Field& f = wc.field();
    const std::uint32_t p = f.p();
    std::uint64_t msgs = checked_pow(p, wc.dim());
    budget.check(msgs, "admissible capability sweep");

    long min_violating = static_cast<long>(wc.block_length()) + 1;
    for (std::uint64_t mi = 1; mi < msgs; ++mi) {
        Vec msg(wc.dim(), 0);
        std::uint64_t rem = mi;
        for (std::size_t j = wc.dim(); j-- > 0;) {
            msg[j] = static_cast<Elem>(rem % p);
            rem /= p;
        }
        Vec cw = wc.encode_message(msg);
        bool touches = false;
        for (std::size_t i1 : cap.protected_indices)
            if (cw[i1 - 1] != 0) {
                touches = true;
                break;
            }
        if (touches) min_violating = std::min(min_violating, weight(cw));
    }
    if (min_violating > static_cast<long>(wc.block_length()))
        throw invariant_violation("admissible_capability: no codeword touches the protected block");
    cap.d_prime = min_violating - 1;
    cap.meets_distance_condition = cap.d_prime >= wc.min_distance() - 1;
    return cap;
}

} // namespace rhcodec
