#include "gridfill/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace gridfill {

ParseError::ParseError(int line_, const std::string& what_)
    : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}

namespace {

struct TokenLine {
    int number = 0;
    std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens per physical line; '#' comments run
// to end of line; lines with no tokens left are dropped.
struct Lines {
    std::vector<TokenLine> lines;
    int last_physical = 0;  // for end-of-file error positions
};

Lines tokenize(std::string_view text) {
    Lines out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view raw = text.substr(pos, eol == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : eol - pos);
        if (eol == std::string_view::npos && raw.empty() && pos == text.size()) break;
        ++number;
        const std::size_t hash = raw.find('#');
        if (hash != std::string_view::npos) raw = raw.substr(0, hash);
        TokenLine tl;
        tl.number = number;
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
            if (i > start) tl.tokens.emplace_back(raw.substr(start, i - start));
        }
        if (!tl.tokens.empty()) out.lines.push_back(std::move(tl));
        if (eol == std::string_view::npos) break;
        pos = eol + 1;
    }
    out.last_physical = number;
    return out;
}

Value parse_value(const std::string& tok, int line) {
    Value v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "invalid token '" + tok + "'");
    if (v < 1) throw ParseError(line, "non-positive value " + tok);
    return v;
}

struct Header {
    int n;
    int k;
    Col cols;
    int line;
};

Header parse_header(const Lines& in) {
    if (in.lines.empty()) throw ParseError(in.last_physical + 1, "unexpected end of file");
    const TokenLine& h = in.lines.front();
    if (h.tokens.size() != 3) throw ParseError(h.number, "malformed header");
    Value f[3];
    for (int t = 0; t < 3; ++t) {
        const std::string& tok = h.tokens[static_cast<std::size_t>(t)];
        const auto [ptr, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), f[t]);
        if (ec != std::errc{} || ptr != tok.data() + tok.size() || f[t] < 1)
            throw ParseError(h.number, "malformed header");
    }
    if (f[0] > 1000000 || f[1] > 1000000 || f[2] > 1000000)
        throw ParseError(h.number, "malformed header");
    return {static_cast<int>(f[0]), static_cast<int>(f[1]), f[2], h.number};
}

// One line of exactly `count` positive integers.
std::vector<Value> parse_row_line(const Lines& in, std::size_t index, Col count,
                                  const char* what) {
    if (index >= in.lines.size())
        throw ParseError(in.last_physical + 1, "unexpected end of file");
    const TokenLine& tl = in.lines[index];
    if (static_cast<Col>(tl.tokens.size()) != count)
        throw ParseError(tl.number, std::string("wrong ") + what + " (expected " +
                                        std::to_string(count) + " values, got " +
                                        std::to_string(tl.tokens.size()) + ")");
    std::vector<Value> vals;
    vals.reserve(tl.tokens.size());
    for (const auto& tok : tl.tokens) vals.push_back(parse_value(tok, tl.number));
    return vals;
}

ValueSet parse_set_line(const Lines& in, std::size_t index, int k) {
    if (index >= in.lines.size())
        throw ParseError(in.last_physical + 1, "unexpected end of file");
    const int line = in.lines[index].number;
    ValueSet s = parse_row_line(in, index, k, "set cardinality");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
        throw ParseError(line, "duplicate element in set");
    return s;
}

void reject_trailing(const Lines& in, std::size_t next_index) {
    if (next_index < in.lines.size())
        throw ParseError(in.lines[next_index].number, "unexpected extra content");
}

void append_values(std::ostringstream& os, const std::vector<Value>& vals) {
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i) os << ' ';
        os << vals[i];
    }
    os << '\n';
}

}  // namespace

Instance parse_instance(std::string_view text) {
    const Lines in = tokenize(text);
    const Header h = parse_header(in);
    if (h.cols < h.n) throw ParseError(h.line, "horizon below n");
    Instance inst;
    inst.n = h.n;
    inst.k = h.k;
    inst.horizon = h.cols;
    std::size_t index = 1;
    for (int i = 0; i < h.k; ++i) {
        std::vector<ValueSet> row;
        row.reserve(static_cast<std::size_t>(h.cols));
        for (Col j = 0; j < h.cols; ++j) row.push_back(parse_set_line(in, index++, h.k));
        inst.sets.push_back(std::move(row));
        inst.tails.push_back(parse_set_line(in, index++, h.k));
    }
    reject_trailing(in, index);
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream os;
    os << inst.n << ' ' << inst.k << ' ' << inst.horizon << '\n';
    for (int i = 0; i < inst.k; ++i) {
        for (const auto& s : inst.sets[static_cast<std::size_t>(i)]) append_values(os, s);
        append_values(os, inst.tails[static_cast<std::size_t>(i)]);
    }
    return os.str();
}

Assignment parse_assignment(std::string_view text) {
    const Lines in = tokenize(text);
    const Header h = parse_header(in);
    if (h.cols < h.n) throw ParseError(h.line, "horizon below n");
    Assignment a;
    a.n = h.n;
    a.k = h.k;
    a.out_horizon = h.cols;
    std::size_t index = 1;
    for (int i = 0; i < h.k; ++i)
        a.entries.push_back(parse_row_line(in, index++, h.cols, "entry count"));
    a.tail_values = parse_row_line(in, index++, h.k, "tail count");
    reject_trailing(in, index);
    return a;
}

std::string serialize_assignment(const Assignment& a) {
    std::ostringstream os;
    os << a.n << ' ' << a.k << ' ' << a.out_horizon << '\n';
    for (const auto& row : a.entries) append_values(os, row);
    append_values(os, a.tail_values);
    return os.str();
}

}  // namespace gridfill
