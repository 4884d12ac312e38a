#pragma once

#include <cstdint>
#include <vector>

#include "rhcodec/errors.hpp"

namespace rhcodec {

using Elem = std::int32_t;
using Vec = std::vector<Elem>;

// Prime field GF(p). Elements are canonical representatives 0..p-1.
class Field {
  public:
    explicit Field(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    Elem add(Elem a, Elem b) const { return norm(static_cast<std::int64_t>(a) + b); }
    Elem sub(Elem a, Elem b) const { return norm(static_cast<std::int64_t>(a) - b); }
    Elem mul(Elem a, Elem b) const { return norm(static_cast<std::int64_t>(a) * b); }
    Elem neg(Elem a) const { return norm(-static_cast<std::int64_t>(a)); }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    // Reduce an arbitrary integer to its canonical representative.
    Elem norm(std::int64_t v) const {
        std::int64_t r = v % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    // Dot product of canonical vectors with deferred reduction: the sum is
    // accumulated raw and divided only when it nears 2^62, so long rows cost
    // one division instead of two per term.
    Elem dot(const Elem* a, const Elem* b, std::size_t n) const {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            acc += static_cast<std::uint64_t>(a[i]) * static_cast<std::uint64_t>(b[i]);
            if (acc >> 62) acc %= p_;
        }
        return static_cast<Elem>(acc % p_);
    }

    bool is_canonical(Elem a) const { return a >= 0 && static_cast<std::uint32_t>(a) < p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

  private:
    std::uint32_t p_;
};

// Hamming weight of a vector of canonical elements.
inline long weight(const Vec& v) {
    long w = 0;
    for (Elem e : v)
        if (e != 0) ++w;
    return w;
}

// Componentwise a - b.
Vec vec_sub(const Field& f, const Vec& a, const Vec& b);
Vec vec_add(const Field& f, const Vec& a, const Vec& b);
Vec vec_neg(const Field& f, const Vec& a);

// Hamming distance (same-length vectors).
long hamming(const Vec& a, const Vec& b);

} // namespace rhcodec
