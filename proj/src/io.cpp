#include "dichi/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace dichi {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

std::vector<Token> split(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        out.push_back({line.substr(i, j - i), i + 1});
        i = j;
    }
    return out;
}

// Non-comment, non-blank lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<Token>>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<Token>>> out;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const std::size_t end = text.find('\n');
        const std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        auto tokens = split(line);
        if (!tokens.empty() && tokens.front().text.front() != '#') out.emplace_back(number, std::move(tokens));
        if (end == std::string_view::npos) break;
    }
    return out;
}

std::size_t number_at(std::size_t line, const Token& t, const char* what) {
    std::size_t v = 0;
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || ptr != e) {
        throw ParseError(line, t.column, std::string("expected ") + what + ", found '" + std::string(t.text) + "'");
    }
    return v;
}

void expect_count(std::size_t line, const std::vector<Token>& tokens, std::size_t want, const char* shape) {
    if (tokens.size() == want) return;
    const std::size_t col = tokens.size() > want ? tokens[want].column : tokens.back().column;
    throw ParseError(line, col, std::string("expected '") + shape + "'");
}

}  // namespace

OrientedGraph parse_graph(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "missing header 'n m'");
    const auto& [hline, header] = lines.front();
    expect_count(hline, header, 2, "n m");
    const std::size_t n = number_at(hline, header[0], "vertex count");
    const std::size_t m = number_at(hline, header[1], "arc count");
    if (lines.size() - 1 != m) {
        const std::size_t at = lines.size() - 1 > m ? lines[m + 1].first : lines.back().first;
        throw ParseError(at, 1, "header announces " + std::to_string(m) + " arcs, file has " +
                                    std::to_string(lines.size() - 1));
    }

    std::vector<Arc> arcs;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // arc -> line
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [line, tokens] = lines[i];
        expect_count(line, tokens, 2, "u v");
        const std::size_t u = number_at(line, tokens[0], "vertex");
        const std::size_t v = number_at(line, tokens[1], "vertex");
        if (u >= n) throw ParseError(line, tokens[0].column, "vertex " + std::to_string(u) + " out of range");
        if (v >= n) throw ParseError(line, tokens[1].column, "vertex " + std::to_string(v) + " out of range");
        if (u == v) throw ParseError(line, tokens[0].column, "self-loop at vertex " + std::to_string(u));
        if (auto it = seen.find({v, u}); it != seen.end()) {
            throw ParseError(line, tokens[0].column,
                             "digon (" + std::to_string(v) + "," + std::to_string(u) + ")/(" + std::to_string(u) +
                                 "," + std::to_string(v) + "), first arc on line " + std::to_string(it->second));
        }
        seen.emplace(std::pair{u, v}, line);
        arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    return OrientedGraph::build(n, arcs);
}

std::string serialize_graph(const OrientedGraph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const Arc& a : g.arcs()) os << a.tail << ' ' << a.head << '\n';
    return os.str();
}

std::string graph_digest(const OrientedGraph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : serialize_graph(g)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

ColoringFile parse_coloring(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "missing header 'dicoloring n colors pattern budget'");
    const auto& [hline, header] = lines.front();
    expect_count(hline, header, 5, "dicoloring n colors pattern budget");
    if (header[0].text != "dicoloring") throw ParseError(hline, header[0].column, "expected 'dicoloring'");

    ColoringFile f;
    f.n = number_at(hline, header[1], "vertex count");
    f.colors = number_at(hline, header[2], "color count");
    if (header[3].text != "-") {
        f.pattern = parse_pattern(header[3].text);
        if (!f.pattern) throw ParseError(hline, header[3].column, "unknown pattern '" + std::string(header[3].text) + "'");
    }
    f.budget = std::string(header[4].text);

    std::vector<char> given(f.n, 0);
    f.color_of.assign(f.n, 0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [line, tokens] = lines[i];
        expect_count(line, tokens, 2, "v c");
        const std::size_t v = number_at(line, tokens[0], "vertex");
        const std::size_t c = number_at(line, tokens[1], "color");
        if (v >= f.n) throw ParseError(line, tokens[0].column, "vertex " + std::to_string(v) + " out of range");
        if (given[v]) throw ParseError(line, tokens[0].column, "vertex " + std::to_string(v) + " colored twice");
        given[v] = 1;
        f.color_of[v] = c;
    }
    for (std::size_t v = 0; v < f.n; ++v) {
        if (!given[v]) {
            throw ParseError(lines.back().first, 1, "vertex " + std::to_string(v) + " has no color");
        }
    }
    return f;
}

std::string serialize_coloring(const Dicoloring& d, std::optional<PatternId> pattern) {
    std::ostringstream os;
    os << "dicoloring " << d.color_of.size() << ' ' << d.colors_used << ' '
       << (pattern ? std::string(to_string(*pattern)) : std::string("-")) << ' '
       << (d.claimed_bound > 0 ? d.claimed_bound.str() : std::string("-")) << '\n';
    for (std::size_t v = 0; v < d.color_of.size(); ++v) os << v << ' ' << d.color_of[v] << '\n';
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    if (in.bad()) throw std::runtime_error("cannot read " + path);
    return os.str();
}

}  // namespace dichi
