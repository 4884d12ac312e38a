#include <doctest.h>

#include <cstdio>
#include <string>

#include "codes.hpp"
#include "rhcodec/decode.hpp"
#include "rhcodec/errors.hpp"
#include "rhcodec/io.hpp"
#include "rhcodec/window_code.hpp"

using namespace rhcodec;
using rhcodec::testing::make_f5;

TEST_CASE("bundled GF(5) fixture parses and its generator verifies") {
    CodeSpec spec = load_code_spec(FIXTURE_DIR "/f5_paper.code");
    CHECK(spec.code.field().p() == 5);
    CHECK(spec.code.n() == 3);
    CHECK(spec.code.k() == 2);
    CHECK(spec.code.delta() == 1);
    REQUIRE(spec.generator.has_value());
    CHECK(spec.generator->row_permutation == std::vector<std::size_t>{1, 2, 3});
    CHECK(verify_realization(spec.code, *spec.generator));

    WindowCode w2(spec.code, 2);
    CHECK(w2.check() == Mat(spec.code.field(), {{1, 0, 1, 3, 4, 3}, {0, 1, 0, 0, 1, 3}}));
}

TEST_CASE("bundled binary fixture matches the worked realization") {
    CodeSpec spec = load_code_spec(FIXTURE_DIR "/f2_appendix.code");
    CHECK(spec.code.field().p() == 2);
    CHECK(spec.code.n() == 4);
    CHECK(spec.code.k() == 2);
    CHECK(spec.code.delta() == 2);
    CHECK(!spec.generator.has_value());
    WindowCode w1(spec.code, 1);
    CHECK(w1.generator() == Mat(spec.code.field(), {{0, 1}, {1, 1}, {1, 0}, {0, 1}}));
}

TEST_CASE("code spec round-trips through its JSON form") {
    CodeSpec spec = load_code_spec(FIXTURE_DIR "/f5_paper.code");
    CodeSpec back = parse_code_spec(code_spec_json(spec));
    CHECK(back.code.A() == spec.code.A());
    CHECK(back.code.B() == spec.code.B());
    CHECK(back.code.C() == spec.code.C());
    CHECK(back.code.D() == spec.code.D());
    CHECK(back.label == spec.label);
    REQUIRE(back.generator.has_value());
    CHECK(back.generator->P == spec.generator->P);
    CHECK(back.generator->Q == spec.generator->Q);
}

TEST_CASE("code spec validation errors") {
    CHECK_THROWS_AS(parse_code_spec("not json"), parse_error);
    CHECK_THROWS_AS(parse_code_spec(R"({"field_p": 4, "A": [], "B": [],
        "C": [[ ]], "D": [[1]]})"),
                    field_error);
    CHECK_THROWS_AS(parse_code_spec(R"({"field_p": 2, "A": [], "B": [],
        "C": [[ ]], "D": []})"),
                    parse_error);
    // Generator that does not match the realization.
    CHECK_THROWS_AS(parse_code_spec(R"({"field_p": 5, "A": [[0]], "B": [[1, 2]],
        "C": [[4]], "D": [[1, 3]],
        "generator": {"P": [[[1], [1]]], "Q": [[[1], []], [[], [1]]]}})"),
                    parse_error);
}

TEST_CASE("sequence files round-trip") {
    ConvCode code = make_f5();
    SymbolSeq seq = code.encode({{1, 0}, {0, 2}, {0, 0}}).seq;
    std::string text = format_seq(code.field(), seq, code.k());
    SymbolSeq back = parse_seq(code.field(), code.nk(), code.k(), text);
    CHECK(back.y == seq.y);
    CHECK(back.u == seq.u);

    // Header: p n k T.
    CHECK(text.substr(0, 8) == "5 3 2 2\n");
}

TEST_CASE("sequence parser accepts comments and flexible whitespace") {
    ConvCode code = make_f5();
    std::string text = "# a comment line\n5 3 2 1\n# another\n1 1 0\n4 0   0\n";
    SymbolSeq seq = parse_seq(code.field(), code.nk(), code.k(), text);
    REQUIRE(seq.length() == 2);
    CHECK(seq.y[0] == Vec{1});
    CHECK(seq.u[0] == Vec{1, 0});
    CHECK(seq.y[1] == Vec{4});
    CHECK(seq.u[1] == Vec{0, 0});

    CHECK_THROWS_AS(parse_seq(code.field(), code.nk(), code.k(), "5 3 2 1\n1 1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_seq(code.field(), code.nk(), code.k(), "7 3 2 0\n1 1 0\n"), parse_error);
    CHECK_THROWS_AS(parse_seq(code.field(), code.nk(), code.k(), "5 4 2 0\n1 1 0 0\n"),
                    parse_error);
    CHECK_THROWS_AS(parse_seq(code.field(), code.nk(), code.k(), "5 3 2 0\nx y z\n"), parse_error);
}

TEST_CASE("sequence save/load through files") {
    ConvCode code = make_f5();
    SymbolSeq seq = code.encode({{3, 1}, {0, 0}}).seq;
    std::string path = std::string(BUILD_TMP_DIR) + "/roundtrip.seq";
    save_seq(code, seq, path);
    SymbolSeq back = load_seq(code, path);
    CHECK(back.y == seq.y);
    CHECK(back.u == seq.u);
    std::remove(path.c_str());

    CHECK_THROWS_AS(load_seq(code, "/does/not/exist.seq"), parse_error);
}
