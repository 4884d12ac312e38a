#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "rhcodec/conv_code.hpp"

namespace rhcodec {

// A parsed code specification file: the realization plus the optional
// polynomial generator it was displayed as.
struct CodeSpec {
    ConvCode code;
    std::optional<PolyGenerator> generator;
    std::string label;
};

// Structured code file:
//   { "field_p": 5, "label": "...",
//     "A": [[...]], "B": [[...]], "C": [[...]], "D": [[...]],
//     "generator": { "P": [[[c0,c1,...], ...]], "Q": [...],
//                    "row_permutation": [1,2,3] } }
// Polynomial entries are coefficient lists, lowest degree first.  When a
// generator is present it must verify against the realization exactly.
CodeSpec parse_code_spec(const std::string& text);
CodeSpec load_code_spec(const std::string& path);
std::string code_spec_json(const CodeSpec& spec);

// Symbol sequence file: '#' starts a comment line; the first data line is the
// header `p n k T`; then (T+1)*n whitespace-separated integers, the symbol at
// time t listed as its n-k output entries followed by its k input entries.
std::string format_seq(const Field& f, const SymbolSeq& seq, std::size_t k);
SymbolSeq parse_seq(const Field& f, std::size_t nk, std::size_t k, const std::string& text);
// Reads the header itself and checks it against the given code.
SymbolSeq load_seq(const ConvCode& code, const std::string& path);
void save_seq(const ConvCode& code, const SymbolSeq& seq, const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace rhcodec
