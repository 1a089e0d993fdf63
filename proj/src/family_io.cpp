#include "kanti/family_io.hpp"

#include <cctype>
#include <stdexcept>

namespace kanti {
namespace {

constexpr int kCompactLimit = 15;

int compact_value(char c) {
    if (c >= '1' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

char compact_char(int point) { return point <= 9 ? static_cast<char>('0' + point) : static_cast<char>('a' + point - 10); }

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

[[noreturn]] void fail(std::string_view what, std::string_view text) {
    throw std::invalid_argument(std::string(what) + " in '" + std::string(text) + "'");
}

PointSet parse_braced(std::string_view body, int ground, std::string_view whole) {
    PointSet s(ground);
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i]))) ++i;
    };
    skip_space();
    if (i == body.size()) return s;
    while (true) {
        skip_space();
        if (i == body.size() || !std::isdigit(static_cast<unsigned char>(body[i]))) fail("expected a point", whole);
        int value = 0;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
            value = value * 10 + (body[i] - '0');
            if (value > kMaxGround) fail("point out of range", whole);
            ++i;
        }
        if (value < 1 || value > ground) fail("point " + std::to_string(value) + " out of range for n = " + std::to_string(ground), whole);
        if (s.contains(value)) fail("repeated point", whole);
        s.insert(value);
        skip_space();
        if (i == body.size()) return s;
        if (body[i] != ',') fail("expected ','", whole);
        ++i;
    }
}

PointSet parse_compact(std::string_view word, int ground, std::string_view whole) {
    PointSet s(ground);
    for (char c : word) {
        const int value = compact_value(c);
        if (value < 0) fail(std::string("unexpected character '") + c + "'", whole);
        if (value > ground) fail(std::string("character '") + c + "' out of range for n = " + std::to_string(ground), whole);
        if (s.contains(value)) fail("repeated point", whole);
        s.insert(value);
    }
    return s;
}

}  // namespace

PointSet parse_set(std::string_view text, int ground) {
    const SetFamily f = parse_family(text, ground);
    if (f.size() != 1) fail("expected exactly one set", text);
    return f[0];
}

SetFamily parse_family(std::string_view text, int ground) {
    SetFamily family(ground);
    std::size_t i = 0;
    while (i < text.size()) {
        if (is_separator(text[i])) {
            ++i;
            continue;
        }
        if (text[i] == '{') {
            const std::size_t close = text.find('}', i);
            if (close == std::string_view::npos) fail("unterminated '{'", text);
            const std::string_view body = text.substr(i + 1, close - i - 1);
            if (body.find('{') != std::string_view::npos) fail("nested '{'", text);
            family.push_back(parse_braced(body, ground, text));
            i = close + 1;
            continue;
        }
        if (text[i] == '}') fail("unbalanced '}'", text);
        std::size_t end = i;
        while (end < text.size() && !is_separator(text[end]) && text[end] != '{' && text[end] != '}') ++end;
        family.push_back(parse_compact(text.substr(i, end - i), ground, text));
        i = end;
    }
    return family;
}

std::string format_set(const PointSet& s) {
    if (s.ground() <= kCompactLimit && !s.empty()) {
        std::string out;
        for (int p : s.points()) out.push_back(compact_char(p));
        return out;
    }
    std::string out = "{";
    bool first = true;
    for (int p : s.points()) {
        if (!first) out.push_back(',');
        out += std::to_string(p);
        first = false;
    }
    out.push_back('}');
    return out;
}

std::string format_family(const SetFamily& family) {
    std::string out;
    for (std::size_t i = 0; i < family.size(); ++i) {
        if (i) out.push_back(',');
        out += format_set(family[i]);
    }
    return out;
}

}  // namespace kanti
