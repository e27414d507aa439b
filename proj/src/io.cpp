#include "lvder/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace lvder {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> data_lines(std::istream& in) {
    std::vector<Line> out;
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        std::istringstream words(raw);
        Line line{number, {}};
        for (std::string tok; words >> tok;) line.tokens.push_back(tok);
        if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
        out.push_back(std::move(line));
    }
    return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
    throw ParseError(source + ":" + std::to_string(line) + ": " + what);
}

std::size_t parse_index(const std::string& source, std::size_t line, const std::string& tok, std::size_t max,
                        const char* what) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size())
        fail(source, line, std::string("expected ") + what + ", got '" + tok + "'");
    if (v < 1 || v > max)
        fail(source, line, std::string(what) + " " + tok + " out of range 1.." + std::to_string(max));
    return v;
}

Rational parse_entry(const std::string& source, std::size_t line, const std::string& tok) {
    try {
        return parse_rational(tok);
    } catch (const ParseError& e) {
        fail(source, line, e.what());
    }
}

std::size_t parse_dimension(const std::string& source, const std::vector<Line>& lines) {
    if (lines.empty()) throw ParseError(source + ": empty input, expected the dimension n");
    const Line& head = lines.front();
    if (head.tokens.size() != 1)
        fail(source, head.number, "first line must hold only the dimension n");
    return parse_index(source, head.number, head.tokens[0], kMaxFileDimension, "dimension");
}

RatMatrix parse_square(const std::string& source, const std::vector<Line>& lines, std::size_t n) {
    const std::size_t rows = lines.size() - 1;
    if (rows != n) {
        const std::size_t at = rows > n ? lines[n + 1].number : lines.back().number;
        fail(source, at, "expected " + std::to_string(n) + " rows, found " + std::to_string(rows));
    }
    RatMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const Line& line = lines[r + 1];
        if (line.tokens.size() != n)
            fail(source, line.number,
                 "expected " + std::to_string(n) + " entries, found " + std::to_string(line.tokens.size()));
        for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_entry(source, line.number, line.tokens[c]);
    }
    return m;
}

WeightedGraph parse_graph(const std::string& source, const std::vector<Line>& lines, std::size_t n) {
    std::vector<Edge> records;
    std::vector<std::size_t> seen_at(n * n, 0);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const Line& line = lines[r];
        if (line.tokens.size() != 3)
            fail(source, line.number, "expected an edge record 'i j w', found " + std::to_string(line.tokens.size()) +
                                          " tokens");
        const std::size_t i = parse_index(source, line.number, line.tokens[0], n, "vertex") - 1;
        const std::size_t j = parse_index(source, line.number, line.tokens[1], n, "vertex") - 1;
        if (i == j) fail(source, line.number, "self-loop at vertex " + std::to_string(i + 1));
        const std::size_t key = std::min(i, j) * n + std::max(i, j);
        if (seen_at[key] != 0)
            fail(source, line.number,
                 "pair {" + std::to_string(std::min(i, j) + 1) + "," + std::to_string(std::max(i, j) + 1) +
                     "} already given on line " + std::to_string(seen_at[key]));
        seen_at[key] = line.number;
        records.push_back({i, j, parse_entry(source, line.number, line.tokens[2])});
    }
    return WeightedGraph::from_edges(n, records);
}

bool is_integer_token(const std::string& tok) {
    std::size_t v = 0;
    const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    return ec == std::errc() && end == tok.data() + tok.size();
}

bool looks_like_matrix(const std::vector<Line>& lines, std::size_t n) {
    if (lines.size() < 2) return false;
    if (lines[1].tokens.size() != n) return false;
    if (n == 3 && is_integer_token(lines[1].tokens[0])) return false;
    return true;
}

std::ifstream open(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    return in;
}

}  // namespace

LVAlgebra read_algebra(std::istream& in, const std::string& source, InputFormat format) {
    const auto lines = data_lines(in);
    const std::size_t n = parse_dimension(source, lines);
    if (format == InputFormat::Auto) format = looks_like_matrix(lines, n) ? InputFormat::Matrix : InputFormat::Graph;
    if (format == InputFormat::Graph) return algebra_of(parse_graph(source, lines, n));
    try {
        return LVAlgebra(parse_square(source, lines, n));
    } catch (const ValidationError& e) {
        throw ValidationError(source + ": " + e.what(), e.row(), e.col());
    }
}

LVAlgebra load_algebra(const std::filesystem::path& path, InputFormat format) {
    auto in = open(path);
    return read_algebra(in, path.string(), format);
}

LinearMap read_linear_map(std::istream& in, const std::string& source) {
    const auto lines = data_lines(in);
    const std::size_t n = parse_dimension(source, lines);
    return LinearMap(parse_square(source, lines, n));
}

LinearMap load_linear_map(const std::filesystem::path& path) {
    auto in = open(path);
    return read_linear_map(in, path.string());
}

void write_matrix(std::ostream& out, const RatMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << to_string(m(r, c));
        out << '\n';
    }
}

void write_linear_map(std::ostream& out, const LinearMap& d) {
    out << d.dim() << '\n';
    write_matrix(out, d.mat);
}

void write_graph(std::ostream& out, const WeightedGraph& g) {
    out << g.n() << '\n';
    for (const auto& e : g.dashed_edges()) out << e.i + 1 << ' ' << e.j + 1 << ' ' << to_string(e.w) << '\n';
}

}  // namespace lvder
