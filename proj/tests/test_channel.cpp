#include <doctest.h>

#include "codes.hpp"
#include "rhcodec/channel.hpp"
#include "rhcodec/errors.hpp"

using namespace rhcodec;
using rhcodec::testing::make_f5;

namespace {

SymbolSeq zero_seq(const ConvCode& code, std::size_t len) {
    SymbolSeq s;
    s.y.assign(len, Vec(code.nk(), 0));
    s.u.assign(len, Vec(code.k(), 0));
    return s;
}

long seq_weight(const SymbolSeq& s) {
    long w = 0;
    for (const Vec& v : s.y) w += weight(v);
    for (const Vec& v : s.u) w += weight(v);
    return w;
}

} // namespace

TEST_CASE("channels are deterministic in the seed") {
    ConvCode code = make_f5();
    SymbolSeq sent = zero_seq(code, 40);
    ChannelSpec spec;
    spec.kind = ChannelKind::q_symmetric;
    spec.p_err = 0.2;
    ChannelResult a = apply_channel(code.field(), sent, spec, 99);
    ChannelResult b = apply_channel(code.field(), sent, spec, 99);
    ChannelResult c = apply_channel(code.field(), sent, spec, 100);
    CHECK(a.seq.y == b.seq.y);
    CHECK(a.seq.u == b.seq.u);
    CHECK(a.errors.size() == b.errors.size());
    bool differs = !(a.seq.y == c.seq.y) || !(a.seq.u == c.seq.u);
    CHECK(differs);
}

TEST_CASE("q_symmetric error rate lands near p") {
    ConvCode code = make_f5();
    SymbolSeq sent = zero_seq(code, 2000);  // 6000 coordinates
    ChannelSpec spec;
    spec.kind = ChannelKind::q_symmetric;
    spec.p_err = 0.1;
    ChannelResult r = apply_channel(code.field(), sent, spec, 7);
    double rate = static_cast<double>(r.errors.size()) / 6000.0;
    CHECK(rate > 0.07);
    CHECK(rate < 0.13);
    CHECK(seq_weight(r.seq) == static_cast<long>(r.errors.size()));
    for (const ErrorEntry& e : r.errors) CHECK(e.value != 0);
}

TEST_CASE("per_window plants exactly the requested weight per stride") {
    ConvCode code = make_f5();
    SymbolSeq sent = zero_seq(code, 12);
    ChannelSpec spec;
    spec.kind = ChannelKind::per_window;
    spec.weight = 2;
    spec.stride = 3;
    ChannelResult r = apply_channel(code.field(), sent, spec, 5);
    CHECK(r.errors.size() == 8);  // 4 windows x weight 2
    std::vector<long> per_window(4, 0);
    for (const ErrorEntry& e : r.errors) ++per_window[e.t / 3];
    for (long w : per_window) CHECK(w == 2);
    // Distinct coordinates within a window, all errors nonzero.
    CHECK(seq_weight(r.seq) == 8);
}

TEST_CASE("explicit errors are applied additively in canonical order") {
    ConvCode code = make_f5();
    SymbolSeq sent = zero_seq(code, 4);
    ChannelSpec spec;
    spec.kind = ChannelKind::explicit_errors;
    spec.errors = {{2, 1, 3}, {0, 0, 4}, {2, 1, 1}};
    ChannelResult r = apply_channel(code.field(), sent, spec, 0);
    CHECK(r.seq.y[0][0] == 4);
    CHECK(r.seq.u[2][0] == 4);  // coordinate 1 = first input entry; 3 + 1
    REQUIRE(r.errors.size() == 3);
    CHECK(r.errors[0].t == 0);
    CHECK(r.errors[1].t == 2);
    CHECK(r.errors[2].t == 2);
}

TEST_CASE("channel validation errors") {
    ConvCode code = make_f5();
    SymbolSeq sent = zero_seq(code, 4);
    ChannelSpec spec;
    spec.kind = ChannelKind::per_window;
    spec.weight = 20;
    spec.stride = 2;
    CHECK_THROWS_AS(apply_channel(code.field(), sent, spec, 1), dimension_error);

    ChannelSpec bad;
    bad.kind = ChannelKind::explicit_errors;
    bad.errors = {{9, 0, 1}};
    CHECK_THROWS_AS(apply_channel(code.field(), sent, bad, 1), dimension_error);

    CHECK(channel_kind_from_name("q_symmetric") == ChannelKind::q_symmetric);
    CHECK_THROWS_AS(channel_kind_from_name("bogus"), parse_error);
    CHECK(channel_kind_name(ChannelKind::per_window) == "per_window");

    ChannelSpec none;
    ChannelResult r = apply_channel(code.field(), sent, none, 1);
    CHECK(r.errors.empty());
    CHECK(seq_weight(r.seq) == 0);
}
