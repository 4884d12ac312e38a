#include "rhcodec/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rhcodec/errors.hpp"

namespace rhcodec {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write " + path);
    out << content;
    if (!out) throw parse_error("write failed: " + path);
}

namespace {

Mat mat_from_json(const Field& f, const nlohmann::json& j, std::size_t rows, std::size_t cols,
                  const std::string& name) {
    if (!j.is_array() || (j.size() != rows && !(j.empty() && rows == 0)))
        throw parse_error("matrix " + name + ": expected " + std::to_string(rows) + " rows");
    Mat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const nlohmann::json& r = j[i];
        if (!r.is_array() || r.size() != cols)
            throw parse_error("matrix " + name + ": row " + std::to_string(i) + " needs " +
                              std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m.set(i, c, r[c].get<Elem>());
    }
    return m;
}

nlohmann::json mat_to_json(const Mat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

PolyMat polymat_from_json(const Field& f, const nlohmann::json& j, std::size_t rows,
                          std::size_t cols, const std::string& name) {
    if (!j.is_array() || j.size() != rows)
        throw parse_error("polynomial matrix " + name + ": expected " + std::to_string(rows) +
                          " rows");
    PolyMat m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const nlohmann::json& r = j[i];
        if (!r.is_array() || r.size() != cols)
            throw parse_error("polynomial matrix " + name + ": row " + std::to_string(i) +
                              " needs " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const nlohmann::json& e = r[c];
            if (!e.is_array())
                throw parse_error("polynomial matrix " + name +
                                  ": entries are coefficient lists (lowest degree first)");
            Vec coeffs;
            for (const nlohmann::json& v : e) coeffs.push_back(v.get<Elem>());
            m.set(i, c, Poly(f, std::move(coeffs)));
        }
    }
    return m;
}

nlohmann::json polymat_to_json(const PolyMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json r = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m.at(i, j).coeffs());
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

CodeSpec parse_code_spec(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("code spec: ") + e.what());
    }
    std::uint32_t p;
    std::size_t delta, nk, k;
    try {
        p = j.at("field_p").get<std::uint32_t>();
        const nlohmann::json& jd = j.at("D");
        if (!jd.is_array() || jd.empty() || !jd[0].is_array() || jd[0].empty())
            throw parse_error("code spec: D must be a non-empty matrix");
        nk = jd.size();
        k = jd[0].size();
        delta = j.at("A").size();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("code spec: ") + e.what());
    }
    Field f(p);
    Mat A = mat_from_json(f, j["A"], delta, delta, "A");
    Mat B = mat_from_json(f, j["B"], delta, k, "B");
    Mat C = mat_from_json(f, j["C"], nk, delta, "C");
    Mat D = mat_from_json(f, j["D"], nk, k, "D");

    CodeSpec spec{ConvCode(f, A, B, C, D), std::nullopt, j.value("label", std::string())};

    if (j.contains("generator")) {
        const nlohmann::json& g = j["generator"];
        std::vector<std::size_t> perm;
        if (g.contains("row_permutation"))
            for (const nlohmann::json& v : g.at("row_permutation"))
                perm.push_back(v.get<std::size_t>());
        PolyMat P = polymat_from_json(f, g.at("P"), nk, k, "P");
        PolyMat Q = polymat_from_json(f, g.at("Q"), k, k, "Q");
        spec.generator = make_generator(std::move(P), std::move(Q), std::move(perm));
        if (!verify_realization(spec.code, *spec.generator))
            throw parse_error("code spec: generator does not match the realization");
    }
    return spec;
}

CodeSpec load_code_spec(const std::string& path) { return parse_code_spec(read_file(path)); }

std::string code_spec_json(const CodeSpec& spec) {
    nlohmann::json j;
    j["field_p"] = spec.code.field().p();
    if (!spec.label.empty()) j["label"] = spec.label;
    j["A"] = mat_to_json(spec.code.A());
    j["B"] = mat_to_json(spec.code.B());
    j["C"] = mat_to_json(spec.code.C());
    j["D"] = mat_to_json(spec.code.D());
    if (spec.generator) {
        nlohmann::json g;
        g["P"] = polymat_to_json(spec.generator->P);
        g["Q"] = polymat_to_json(spec.generator->Q);
        if (!spec.generator->row_permutation.empty())
            g["row_permutation"] = spec.generator->row_permutation;
        j["generator"] = std::move(g);
    }
    return j.dump(2) + "\n";
}

std::string format_seq(const Field& f, const SymbolSeq& seq, std::size_t k) {
    if (seq.y.size() != seq.u.size()) throw dimension_error("sequence y/u length mismatch");
    std::size_t nk = seq.empty() ? 0 : seq.y[0].size();
    if (!seq.empty()) k = seq.u[0].size();
    std::ostringstream os;
    os << f.p() << ' ' << (nk + k) << ' ' << k << ' '
       << (seq.empty() ? 0 : seq.length() - 1) << "\n";
    for (std::size_t t = 0; t < seq.length(); ++t) {
        for (std::size_t i = 0; i < nk; ++i) os << seq.y[t][i] << (i + 1 < nk + k ? " " : "");
        for (std::size_t i = 0; i < k; ++i) os << seq.u[t][i] << (i + 1 < k ? " " : "");
        os << "\n";
    }
    return os.str();
}

SymbolSeq parse_seq(const Field& f, std::size_t nk, std::size_t k, const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<long> nums;
    bool have_header = false;
    std::size_t T = 0;
    while (std::getline(in, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        long v;
        while (ls >> v) nums.push_back(v);
        if (!ls.eof()) throw parse_error("sequence: non-integer token in: " + line);
        if (!have_header && nums.size() >= 4) {
            if (nums[0] != static_cast<long>(f.p()))
                throw parse_error("sequence: field mismatch (file says p=" +
                                  std::to_string(nums[0]) + ")");
            if (nums[1] != static_cast<long>(nk + k) || nums[2] != static_cast<long>(k))
                throw parse_error("sequence: dimension mismatch in header");
            if (nums[3] < 0) throw parse_error("sequence: negative T");
            T = static_cast<std::size_t>(nums[3]);
            nums.erase(nums.begin(), nums.begin() + 4);
            have_header = true;
        }
    }
    if (!have_header) throw parse_error("sequence: missing `p n k T` header");
    std::size_t need = (T + 1) * (nk + k);
    if (nums.size() != need)
        throw parse_error("sequence: expected " + std::to_string(need) + " symbols, got " +
                          std::to_string(nums.size()));
    SymbolSeq seq;
    seq.y.resize(T + 1);
    seq.u.resize(T + 1);
    std::size_t pos = 0;
    for (std::size_t t = 0; t <= T; ++t) {
        seq.y[t].resize(nk);
        for (std::size_t i = 0; i < nk; ++i) seq.y[t][i] = f.norm(static_cast<Elem>(nums[pos++]));
        seq.u[t].resize(k);
        for (std::size_t i = 0; i < k; ++i) seq.u[t][i] = f.norm(static_cast<Elem>(nums[pos++]));
    }
    return seq;
}

SymbolSeq load_seq(const ConvCode& code, const std::string& path) {
    return parse_seq(code.field(), code.nk(), code.k(), read_file(path));
}

void save_seq(const ConvCode& code, const SymbolSeq& seq, const std::string& path) {
    write_file(path, format_seq(code.field(), seq, code.k()));
}

} // namespace rhcodec
