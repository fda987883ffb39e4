#include "lodual/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace lodual {

RingPtr ParsedFile::ring(const std::string& name) const {
    for (const auto& [n, r] : rings)
        if (n == name)
            return r;
    return nullptr;
}

const GradedModulePresentation* ParsedFile::module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name)
            return &m;
    return nullptr;
}

const FreeComplex* ParsedFile::complex(const std::string& name) const {
    for (const auto& [n, c] : complexes)
        if (n == name)
            return &c;
    return nullptr;
}

namespace {

// ---- polynomial expression parser ----

struct PolyParser {
    const std::string& text;
    const RingPtr& ring;
    int line;
    int offset; // column of text[0] in the original line
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line, offset + static_cast<int>(pos) + 1, msg);
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    PolynomialElement parse() {
        PolynomialElement e = expr();
        skip_ws();
        if (pos != text.size())
            fail("unexpected character '" + std::string(1, text[pos]) + "'");
        return e;
    }

    PolynomialElement expr() {
        PolynomialElement acc = eat('-') ? term().scaled(Rational(-1)) : term();
        while (true) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                break;
        }
        return acc;
    }

    PolynomialElement term() {
        PolynomialElement acc = factor();
        while (eat('*'))
            acc = acc * factor();
        return acc;
    }

    PolynomialElement factor() {
        skip_ws();
        if (pos >= text.size())
            fail("expected a polynomial factor");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            PolynomialElement e = expr();
            if (!eat(')'))
                fail("expected ')'");
            return maybe_power(e);
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return maybe_power(rational_factor());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return maybe_power(name_factor());
        fail("expected a number, generator name, or '('");
    }

    PolynomialElement maybe_power(PolynomialElement base) {
        while (eat('^')) {
            long n = integer();
            if (n < 0)
                fail("negative exponent");
            PolynomialElement out = PolynomialElement::constant(ring, Rational(1));
            for (long i = 0; i < n; ++i)
                out = out * base;
            base = out;
        }
        return base;
    }

    long integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (start == pos)
            fail("expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    PolynomialElement rational_factor() {
        long num = integer();
        if (eat('/')) {
            long den = integer();
            if (den == 0)
                fail("zero denominator");
            return PolynomialElement::constant(ring, Rational(num, den));
        }
        return PolynomialElement::constant(ring, Rational(num));
    }

    PolynomialElement name_factor() {
        std::size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        std::string name = text.substr(start, pos - start);
        std::size_t i = ring->find_generator(name);
        if (i == GradedPolynomialRing::npos) {
            pos = start;
            fail("unknown generator '" + name + "'");
        }
        return PolynomialElement::generator(ring, i);
    }
};

// ---- line tokenizer ----

struct Line {
    int number = 0;
    std::string text;
    std::vector<std::string> words;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    int n = 0;
    while (std::getline(in, raw)) {
        ++n;
        std::string body = raw;
        auto hash = body.find('#');
        if (hash != std::string::npos)
            body = body.substr(0, hash);
        Line l;
        l.number = n;
        l.text = body;
        std::istringstream ws(body);
        std::string w;
        while (ws >> w)
            l.words.push_back(w);
        if (!l.words.empty())
            lines.push_back(std::move(l));
    }
    return lines;
}

int parse_int(const Line& l, const std::string& w, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(w, &used);
        if (used != w.size())
            throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ParseError(l.number, 1, "expected " + what + ", got '" + w + "'");
    }
}

// Split the part of the line after the first ':' by a separator character.
std::vector<std::string> split_tail(const Line& l, char sep, std::size_t& colon_pos) {
    colon_pos = l.text.find(':');
    if (colon_pos == std::string::npos)
        throw ParseError(l.number, 1, "expected ':'");
    std::vector<std::string> parts;
    std::string tail = l.text.substr(colon_pos + 1);
    std::string cur;
    for (char c : tail) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else
            cur.push_back(c);
    }
    parts.push_back(cur);
    return parts;
}

} // namespace

PolynomialElement parse_polynomial(const std::string& text, const RingPtr& ring, int line,
                                   int column_offset) {
    std::string trimmed = text;
    // Track where the trimmed region starts for correct column reporting.
    std::size_t lead = trimmed.find_first_not_of(" \t");
    if (lead == std::string::npos)
        throw ParseError(line, column_offset + 1, "empty polynomial");
    PolyParser p{text, ring, line, column_offset};
    return p.parse();
}

ParsedFile parse_input(const std::string& text) {
    ParsedFile out;
    auto lines = split_lines(text);
    std::size_t i = 0;
    while (i < lines.size()) {
        const Line& head = lines[i];
        const auto& w = head.words;
        if (w[0] == "ring") {
            if (w.size() != 2)
                throw ParseError(head.number, 1, "usage: ring <name>");
            std::string name = w[1];
            std::vector<std::pair<std::string, int>> gens;
            ++i;
            while (i < lines.size() && lines[i].words[0] != "end") {
                const Line& l = lines[i];
                if (l.words[0] != "gen" || l.words.size() != 3)
                    throw ParseError(l.number, 1, "usage: gen <name> <even positive degree>");
                gens.emplace_back(l.words[1], parse_int(l, l.words[2], "a degree"));
                ++i;
            }
            if (i == lines.size())
                throw ParseError(head.number, 1, "ring block without 'end'");
            ++i;
            try {
                out.rings.emplace_back(name, make_ring(name, gens));
            } catch (const std::invalid_argument& e) {
                throw ParseError(head.number, 1, e.what());
            }
        } else if (w[0] == "module") {
            if (w.size() != 4 || w[2] != "over")
                throw ParseError(head.number, 1, "usage: module <name> over <ring>");
            RingPtr ring = out.ring(w[3]);
            if (!ring)
                throw ParseError(head.number, 1, "unknown ring '" + w[3] + "'");
            std::vector<int> gens;
            std::vector<std::vector<PolynomialElement>> rels;
            bool saw_generators = false;
            ++i;
            while (i < lines.size() && lines[i].words[0] != "end") {
                const Line& l = lines[i];
                if (l.words[0] == "generators") {
                    saw_generators = true;
                    for (std::size_t k = 1; k < l.words.size(); ++k)
                        gens.push_back(parse_int(l, l.words[k], "a generator degree"));
                } else if (l.words[0] == "relation") {
                    auto rel_text = l.text.substr(l.text.find("relation") + 8);
                    std::vector<PolynomialElement> col;
                    std::string cur;
                    int col_start = static_cast<int>(l.text.find("relation")) + 8;
                    std::vector<std::pair<std::string, int>> pieces;
                    for (std::size_t p = 0; p <= rel_text.size(); ++p) {
                        if (p == rel_text.size() || rel_text[p] == ',') {
                            pieces.emplace_back(cur, col_start);
                            col_start += static_cast<int>(cur.size()) + 1;
                            cur.clear();
                        } else
                            cur.push_back(rel_text[p]);
                    }
                    for (const auto& [piece, off] : pieces) {
                        if (piece.find_first_not_of(" \t") == std::string::npos)
                            col.push_back(PolynomialElement::zero(ring));
                        else
                            col.push_back(parse_polynomial(piece, ring, l.number, off));
                    }
                    rels.push_back(std::move(col));
                } else {
                    throw ParseError(l.number, 1,
                                     "expected 'generators', 'relation', or 'end'");
                }
                ++i;
            }
            if (i == lines.size())
                throw ParseError(head.number, 1, "module block without 'end'");
            ++i;
            if (!saw_generators)
                throw ParseError(head.number, 1, "module block needs a 'generators' line");
            for (auto& col : rels)
                if (col.size() != gens.size())
                    throw ParseError(head.number, 1,
                                     "relation entry count differs from generator count");
            try {
                out.modules.emplace_back(w[1],
                                         GradedModulePresentation(ring, gens, rels, w[1]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(head.number, 1, e.what());
            }
        } else if (w[0] == "complex") {
            if (w.size() != 4 || w[2] != "over")
                throw ParseError(head.number, 1, "usage: complex <name> over <ring>");
            RingPtr ring = out.ring(w[3]);
            if (!ring)
                throw ParseError(head.number, 1, "unknown ring '" + w[3] + "'");
            std::map<int, std::vector<int>> terms;
            std::vector<std::pair<Line, int>> dlines; // parse after terms known
            ++i;
            while (i < lines.size() && lines[i].words[0] != "end") {
                const Line& l = lines[i];
                if (l.words[0] == "term") {
                    std::size_t colon;
                    auto parts = split_tail(l, ' ', colon);
                    int s = parse_int(l, l.words[1], "a homological degree");
                    std::vector<int> shifts;
                    std::istringstream ts(l.text.substr(colon + 1));
                    std::string tok;
                    while (ts >> tok)
                        shifts.push_back(parse_int(l, tok, "an internal shift"));
                    terms[s] = std::move(shifts);
                } else if (l.words[0] == "d") {
                    int s = parse_int(l, l.words[1], "a homological degree");
                    dlines.emplace_back(l, s);
                } else {
                    throw ParseError(l.number, 1, "expected 'term', 'd', or 'end'");
                }
                ++i;
            }
            if (i == lines.size())
                throw ParseError(head.number, 1, "complex block without 'end'");
            ++i;
            std::map<int, PolyMatrix> diffs;
            for (const auto& [l, s] : dlines) {
                std::size_t rows = terms.count(s - 1) ? terms[s - 1].size() : 0;
                std::size_t cols = terms.count(s) ? terms[s].size() : 0;
                std::size_t colon;
                auto row_texts = split_tail(l, ';', colon);
                if (row_texts.size() != rows)
                    throw ParseError(l.number, 1,
                                     "d " + std::to_string(s) + " needs " + std::to_string(rows) +
                                         " row(s) separated by ';'");
                PolyMatrix mat;
                int off = static_cast<int>(colon) + 1;
                for (const auto& row_text : row_texts) {
                    std::vector<PolynomialElement> row;
                    std::string cur;
                    std::vector<std::pair<std::string, int>> pieces;
                    int piece_off = off;
                    for (std::size_t p = 0; p <= row_text.size(); ++p) {
                        if (p == row_text.size() || row_text[p] == ',') {
                            pieces.emplace_back(cur, piece_off);
                            piece_off += static_cast<int>(cur.size()) + 1;
                            cur.clear();
                        } else
                            cur.push_back(row_text[p]);
                    }
                    if (pieces.size() != cols)
                        throw ParseError(l.number, 1,
                                         "d " + std::to_string(s) + " needs " +
                                             std::to_string(cols) + " column(s) per row");
                    for (const auto& [piece, poff] : pieces) {
                        if (piece.find_first_not_of(" \t") == std::string::npos)
                            row.push_back(PolynomialElement::zero(ring));
                        else
                            row.push_back(parse_polynomial(piece, ring, l.number, poff));
                    }
                    off += static_cast<int>(row_text.size()) + 1;
                    mat.push_back(std::move(row));
                }
                diffs[s] = std::move(mat);
            }
            try {
                out.complexes.emplace_back(w[1], FreeComplex(ring, terms, diffs, w[1]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(head.number, 1, e.what());
            }
        } else {
            throw ParseError(head.number, 1,
                             "expected 'ring', 'module', or 'complex', got '" + w[0] + "'");
        }
    }
    return out;
}

ParsedFile parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_input(ss.str());
}

} // namespace lodual
