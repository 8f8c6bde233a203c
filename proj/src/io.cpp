#include "tropvol/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace tropvol {

using nlohmann::json;

parse_error::parse_error(const std::string& msg, std::size_t line, std::size_t column)
    : input_error("line " + std::to_string(line) + ", column " +
                  std::to_string(column) + ": " + msg),
      line(line),
      column(column) {}

namespace {

struct TokenStream {
    std::string text;
    std::size_t pos = 0, line = 1, column = 1;
    std::size_t token_line = 1, token_column = 1;

    explicit TokenStream(const std::string& t) : text(t) {}

    void advance() {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
        ++pos;
    }

    // returns empty at end of input; records the token's start position
    std::string next() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '#') {
                while (pos < text.size() && text[pos] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
        token_line = line;
        token_column = column;
        std::string tok;
        while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
               text[pos] != '\r' && text[pos] != '\n') {
            tok.push_back(text[pos]);
            advance();
        }
        return tok;
    }
};

std::size_t parse_count(TokenStream& ts, const char* what) {
    std::string tok = ts.next();
    if (tok.empty()) throw parse_error(std::string("missing ") + what, ts.line, ts.column);
    try {
        std::size_t pos = 0;
        long v = std::stol(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw parse_error(std::string("malformed ") + what + ": '" + tok + "'",
                          ts.token_line, ts.token_column);
    }
}

Ext parse_entry(const std::string& tok) {
    if (tok == "inf" || tok == "+inf" || tok == "Inf") return Ext::inf();
    return Ext(parse_rat(tok));
}

Matrix matrix_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw parse_error(e.what(), 1, 1);
    }
    if (!j.contains("m") || !j.contains("n") || !j.contains("entries"))
        throw parse_error("matrix JSON needs m, n and entries", 1, 1);
    std::size_t m = j["m"].get<std::size_t>(), n = j["n"].get<std::size_t>();
    if (m == 0 || n == 0) throw parse_error("matrix dimensions must be positive", 1, 1);
    const auto& rows = j["entries"];
    if (!rows.is_array() || rows.size() != m)
        throw parse_error("entries must hold m rows", 1, 1);
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n)
            throw parse_error("row " + std::to_string(i + 1) + " must hold n entries", 1, 1);
        for (std::size_t jj = 0; jj < n; ++jj) {
            const auto& cell = rows[i][jj];
            if (cell.is_number_integer())
                a.at(i, jj) = Ext(Rat(cell.get<long>()));
            else if (cell.is_string())
                a.at(i, jj) = parse_entry(cell.get<std::string>());
            else
                throw parse_error("entries must be integers or strings", 1, 1);
        }
    }
    return a;
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw parse_error("empty input", 1, 1);
    if (text[first] == '{') return matrix_from_json(text);

    TokenStream ts(text);
    std::size_t m = parse_count(ts, "row count");
    std::size_t n = parse_count(ts, "column count");
    if (m == 0 || n == 0)
        throw parse_error("matrix dimensions must be positive", ts.token_line,
                          ts.token_column);
    Matrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string tok = ts.next();
            if (tok.empty())
                throw parse_error("matrix ended early at entry (" +
                                      std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + ")",
                                  ts.line, ts.column);
            try {
                a.at(i, j) = parse_entry(tok);
            } catch (const input_error& e) {
                throw parse_error(e.what(), ts.token_line, ts.token_column);
            }
        }
    std::string extra = ts.next();
    if (!extra.empty())
        throw parse_error("trailing input: '" + extra + "'", ts.token_line,
                          ts.token_column);
    return a;
}

Matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str());
}

std::string matrix_to_text(const Matrix& a) {
    std::ostringstream os;
    os << a.rows() << ' ' << a.cols() << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            os << (j ? " " : "") << a.at(i, j).str();
        os << '\n';
    }
    return os.str();
}

std::string matrix_to_json(const Matrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    json j{{"m", a.rows()}, {"n", a.cols()}, {"entries", std::move(rows)}};
    return j.dump();
}

SatFormula parse_m2sat(const std::string& text) {
    TokenStream ts(text);
    std::string tok = ts.next();
    if (tok != "p")
        throw parse_error("expected header 'p m2sat n r'", ts.token_line, ts.token_column);
    tok = ts.next();
    if (tok != "m2sat")
        throw parse_error("expected format 'm2sat'", ts.token_line, ts.token_column);
    SatFormula f;
    f.n_vars = parse_count(ts, "variable count");
    std::size_t r = parse_count(ts, "clause count");
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t i = parse_count(ts, "clause literal");
        std::size_t k = parse_count(ts, "clause literal");
        f.clauses.emplace_back(i, k);
    }
    std::string extra = ts.next();
    if (!extra.empty())
        throw parse_error("trailing input: '" + extra + "'", ts.token_line,
                          ts.token_column);
    try {
        validate_formula(f);
    } catch (const input_error& e) {
        throw parse_error(e.what(), 1, 1);
    }
    return f;
}

SatFormula load_m2sat(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_m2sat(buf.str());
}

}  // namespace tropvol
