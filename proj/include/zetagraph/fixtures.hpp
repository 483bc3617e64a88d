#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graphzeta.hpp"
#include "hypergraph.hpp"
#include "zetarat.hpp"

namespace zetagraph {

struct FixtureParseError : std::runtime_error {
    explicit FixtureParseError(const std::string& what) : std::runtime_error(what) {}
};

/// One embedded reference value: `id | n | m | kind | numerator | denominator`.
struct Fixture {
    enum class Kind { w_minus, w_plus, w_hyper };
    std::string id;
    int n = 0;
    long long m = 0;
    Kind kind = Kind::w_minus;
    ZetaRat value;
    bool cograph = false;
    std::optional<Composition> kite;
};

namespace fixture_detail {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw FixtureParseError("expected '" + std::string(1, c) + "' at offset " +
                                    std::to_string(pos) + " in: " + s);
    }
    long long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw FixtureParseError("expected integer in: " + s);
        return std::stoll(s.substr(start, pos - start));
    }
    bool peek_digit() {
        skip_ws();
        return pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]));
    }
};

/// term := [int] [*] [X[^int]] [*] [T[^int]], at least one part present
inline void parse_term(Cursor& c, int sign, BiPoly& into) {
    long long coef = 1;
    bool any = false;
    if (c.peek_digit()) {
        coef = c.integer();
        any = true;
    }
    long long xe = 0, te = 0;
    c.accept('*');
    if (c.accept('X')) {
        xe = c.accept('^') ? c.integer() : 1;
        any = true;
        c.accept('*');
    }
    if (c.accept('T')) {
        te = c.accept('^') ? c.integer() : 1;
        any = true;
    }
    if (!any) throw FixtureParseError("empty term in: " + c.s);
    into.add_term(xe, te, Rational(sign * coef));
}

/// numerator := ['-'] term { ('+'|'-') term }
inline BiPoly parse_numerator(const std::string& text) {
    Cursor c{text};
    BiPoly p;
    int sign = c.accept('-') ? -1 : 1;
    parse_term(c, sign, p);
    while (!c.done()) {
        if (c.accept('+')) sign = 1;
        else if (c.accept('-')) sign = -1;
        else throw FixtureParseError("expected '+' or '-' in: " + text);
        parse_term(c, sign, p);
    }
    return p;
}

/// denominator := '1' | { '(' '1' '-' [X[^a]] T[^b] ')' ['^' m] }
inline std::vector<GeoFactor> parse_denominator(const std::string& text) {
    Cursor c{text};
    std::vector<GeoFactor> den;
    if (c.peek() == '1') {
        c.expect('1');
        if (!c.done()) throw FixtureParseError("trailing input after '1' in: " + text);
        return den;
    }
    while (!c.done()) {
        c.expect('(');
        c.expect('1');
        c.expect('-');
        long long a = 0;
        if (c.accept('X')) a = c.accept('^') ? c.integer() : 1;
        c.accept('*');
        c.expect('T');
        long long b = c.accept('^') ? c.integer() : 1;
        c.expect(')');
        long long mult = c.accept('^') ? c.integer() : 1;
        den.push_back(GeoFactor{a, b, mult});
    }
    return den;
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == '|') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    for (auto& f : fields) {
        size_t a = f.find_first_not_of(" \t");
        size_t b = f.find_last_not_of(" \t");
        f = (a == std::string::npos) ? "" : f.substr(a, b - a + 1);
    }
    return fields;
}

}  // namespace fixture_detail

/// Parses the one-record-per-line fixture format. Lines starting with '#'
/// and blank lines are skipped. Every value is reduced on load.
inline std::vector<Fixture> parse_fixtures(const std::string& text) {
    std::vector<Fixture> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto fields = fixture_detail::split_fields(line);
        if (fields.size() != 6)
            throw FixtureParseError("expected 6 '|'-separated fields: " + line);
        Fixture f;
        f.id = fields[0];
        f.n = std::stoi(fields[1]);
        f.m = std::stoll(fields[2]);
        if (fields[3] == "w_minus") f.kind = Fixture::Kind::w_minus;
        else if (fields[3] == "w_plus") f.kind = Fixture::Kind::w_plus;
        else if (fields[3] == "w_hyper") f.kind = Fixture::Kind::w_hyper;
        else throw FixtureParseError("unknown kind '" + fields[3] + "' in: " + line);
        f.value = ZetaRat(fixture_detail::parse_numerator(fields[4]),
                          fixture_detail::parse_denominator(fields[5]))
                      .reduced();
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace zetagraph
