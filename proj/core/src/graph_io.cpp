#include "graphcoh/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace graphcoh {

namespace {

struct Token {
    std::string_view text;
    int column = 0;  // 1-based
};

struct Line {
    std::string_view text;
    int number = 0;  // 1-based
};

std::vector<Token> tokenize(std::string_view line)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

std::vector<Line> split_lines(std::string_view text)
{
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++number;
        out.push_back(Line{text.substr(pos, end - pos), number});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

bool is_blank_or_comment(std::string_view line)
{
    const std::size_t first = line.find_first_not_of(" \t\r");
    return first == std::string_view::npos || line[first] == '#';
}

int parse_int(const Token& t, int line, std::string_view what)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size())
        throw ParseError("expected an integer " + std::string(what) + ", got '" + std::string(t.text) + "'", line,
                         t.column);
    return value;
}

Rational parse_rational(const Token& t, int line)
{
    std::string_view s = t.text;
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    const std::size_t slash = s.find('/');
    auto digits = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        return std::all_of(s.begin() + from, s.begin() + to, [](char c) { return c >= '0' && c <= '9'; });
    };
    const bool ok = slash == std::string_view::npos ? digits(i, s.size()) : digits(i, slash) && digits(slash + 1, s.size());
    if (!ok) throw ParseError("expected a rational p/q, got '" + std::string(s) + "'", line, t.column);
    std::string text(s[0] == '+' ? s.substr(1) : s);
    Rational r(text);
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'", line, t.column);
    r.canonicalize();
    return r;
}

void expect_token_count(const std::vector<Token>& tokens, std::size_t n, int line, std::string_view shape)
{
    if (tokens.size() == n) return;
    const int column = tokens.size() > n ? tokens[n].column : tokens.back().column + static_cast<int>(tokens.back().text.size());
    throw ParseError("expected '" + std::string(shape) + "'", line, column);
}

RawGraph parse_header(const std::vector<Token>& tokens, int line)
{
    RawGraph g;
    bool seen[4] = {false, false, false, false};
    for (const Token& t : tokens) {
        const std::size_t eq = t.text.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("header entries have the form key=value, got '" + std::string(t.text) + "'", line, t.column);
        const std::string_view key = t.text.substr(0, eq);
        const Token value{t.text.substr(eq + 1), t.column + static_cast<int>(eq) + 1};
        int slot = -1;
        try {
            if (key == "backbone") {
                slot = 0;
                g.backbone = parse_backbone(value.text);
            } else if (key == "parity") {
                slot = 1;
                g.parity = parse_parity(value.text);
            }
        } catch (const ValidationError& e) {
            throw ParseError(e.what(), line, value.column);
        }
        if (key == "v_e") {
            slot = 2;
            g.v_e = parse_int(value, line, "for v_e");
        } else if (key == "v_i") {
            slot = 3;
            g.v_i = parse_int(value, line, "for v_i");
        }
        if (slot < 0) throw ParseError("unknown header key '" + std::string(key) + "'", line, t.column);
        if (seen[slot]) throw ParseError("duplicate header key '" + std::string(key) + "'", line, t.column);
        seen[slot] = true;
    }
    static constexpr const char* names[] = {"backbone", "parity", "v_e", "v_i"};
    for (int s = 0; s < 4; ++s)
        if (!seen[s]) throw ParseError(std::string("header is missing ") + names[s], line, 1);
    if (g.v_e < 0 || g.v_i < 0) throw ValidationError("line " + std::to_string(line) + ": vertex counts must be non-negative");
    return g;
}

RawGraph parse_graph_lines(const std::vector<Line>& lines)
{
    RawGraph g;
    bool have_header = false;
    std::vector<std::pair<int, Edge>> labelled;  // even parity: (label, edge)
    const auto where = [](int line) { return "line " + std::to_string(line) + ": "; };
    int last_line = 0;
    for (const Line& l : lines) {
        if (is_blank_or_comment(l.text)) continue;
        last_line = l.number;
        const std::vector<Token> tokens = tokenize(l.text);
        if (!have_header) {
            if (tokens.front().text.find('=') == std::string_view::npos)
                throw ParseError("expected header 'backbone=... parity=... v_e=... v_i=...'", l.number, tokens.front().column);
            g = parse_header(tokens, l.number);
            have_header = true;
            continue;
        }
        if (tokens.front().text != "edge")
            throw ParseError("expected 'edge', got '" + std::string(tokens.front().text) + "'", l.number,
                             tokens.front().column);
        const int n = g.vertex_count();
        auto vertex = [&](const Token& t) {
            const int x = parse_int(t, l.number, "vertex number");
            if (x < 1 || x > n)
                throw ValidationError(where(l.number) + "vertex " + std::to_string(x) + " out of range 1.." +
                                      std::to_string(n));
            return x - 1;
        };
        if (g.parity == Parity::odd) {
            if (tokens.size() != 3 && tokens.size() != 6)
                expect_token_count(tokens, 3, l.number, "edge <src> <dst> [halforder a b]");
            Edge e{vertex(tokens[1]), vertex(tokens[2]), false};
            if (tokens.size() == 6) {
                if (tokens[3].text != "halforder")
                    throw ParseError("expected 'halforder'", l.number, tokens[3].column);
                const int a = parse_int(tokens[4], l.number, "half-edge");
                const int b = parse_int(tokens[5], l.number, "half-edge");
                if (!((a == 1 && b == 2) || (a == 2 && b == 1)))
                    throw ParseError("halforder must be '1 2' or '2 1'", l.number, tokens[4].column);
                if (!e.is_loop())
                    throw ValidationError(where(l.number) + "halforder is only allowed on a loop at an external vertex");
                e.halves_swapped = a == 2;
            } else if (e.is_loop() && e.u < g.v_e) {
                throw ValidationError(where(l.number) +
                                      "a loop at an external vertex needs its half-edge order (halforder 1 2 or 2 1)");
            }
            g.edges.push_back(e);
        } else {
            expect_token_count(tokens, 4, l.number, "edge <label> <u> <v>");
            const int label = parse_int(tokens[1], l.number, "edge label");
            labelled.emplace_back(label, Edge{vertex(tokens[2]), vertex(tokens[3]), false});
        }
    }
    if (!have_header) throw ParseError("empty graph document", std::max(last_line, 1), 1);
    if (g.parity == Parity::even) {
        std::sort(labelled.begin(), labelled.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i < labelled.size(); ++i)
            if (labelled[i].first != static_cast<int>(i) + 1)
                throw ValidationError("edge labels must be a bijection onto 1.." + std::to_string(labelled.size()));
        for (const auto& [label, e] : labelled) g.edges.push_back(e);
    }
    validate(g);
    return g;
}

}  // namespace

RawGraph parse_graph(std::string_view text) { return parse_graph_lines(split_lines(text)); }

std::string serialize(const RawGraph& g)
{
    for (int x = 0; x < static_cast<int>(g.labels.size()); ++x)
        if (g.labels[x] != x) throw ValidationError("only graphs in the standard numbering can be serialized");
    std::ostringstream os;
    os << "backbone=" << to_string(g.backbone) << " parity=" << to_string(g.parity) << " v_e=" << g.v_e
       << " v_i=" << g.v_i << '\n';
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const Edge& e = g.edges[i];
        if (g.parity == Parity::odd) {
            os << "edge " << e.u + 1 << ' ' << e.v + 1;
            if (e.is_loop()) os << (e.halves_swapped ? " halforder 2 1" : " halforder 1 2");
        } else {
            os << "edge " << i + 1 << ' ' << e.u + 1 << ' ' << e.v + 1;
        }
        os << '\n';
    }
    return os.str();
}

std::string serialize(const CanonicalGraph& g) { return serialize(g.raw()); }

ChainDocument parse_chain_document(std::string_view text)
{
    ChainDocument doc;
    const std::vector<Line> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const Line& l = lines[i];
        if (is_blank_or_comment(l.text)) continue;
        const std::vector<Token> tokens = tokenize(l.text);
        if (tokens.front().text == "graph") {
            expect_token_count(tokens, 2, l.number, "graph <id>");
            const std::string id(tokens[1].text);
            if (doc.graphs.count(id)) throw ParseError("duplicate graph id '" + id + "'", l.number, tokens[1].column);
            std::vector<Line> block;
            std::size_t j = i + 1;
            for (; j < lines.size(); ++j) {
                const std::vector<Token> inner = tokenize(lines[j].text);
                if (!inner.empty() && inner.front().text == "end") break;
                block.push_back(lines[j]);
            }
            if (j == lines.size()) throw ParseError("graph block '" + id + "' is not closed by 'end'", l.number, 1);
            doc.graphs.emplace(id, parse_graph_lines(block));
            i = j;
            continue;
        }
        if (tokens.size() < 2 || tokens.size() > 3)
            throw ParseError("expected '<p/q> <id>' or '<p/q> <id1> <id2>'", l.number, tokens.front().column);
        ChainDocument::Term term;
        term.coefficient = parse_rational(tokens[0], l.number);
        for (std::size_t t = 1; t < tokens.size(); ++t) term.ids.emplace_back(tokens[t].text);
        doc.terms.push_back(std::move(term));
    }
    for (const auto& term : doc.terms)
        for (const std::string& id : term.ids)
            if (!doc.graphs.count(id)) throw ValidationError("term references unknown graph id '" + id + "'");
    return doc;
}

Chain to_chain(const ChainDocument& doc)
{
    Chain out;
    for (const auto& term : doc.terms) {
        if (term.ids.size() != 1) throw ValidationError("chain terms name exactly one graph");
        out.add(canonicalize(doc.graphs.at(term.ids[0])), term.coefficient);
    }
    return out;
}

TensorChain to_tensor_chain(const ChainDocument& doc)
{
    TensorChain out;
    for (const auto& term : doc.terms) {
        if (term.ids.size() != 2) throw ValidationError("tensor terms name exactly two graphs");
        const SignedGraph a = canonicalize(doc.graphs.at(term.ids[0]));
        const SignedGraph b = canonicalize(doc.graphs.at(term.ids[1]));
        if (a.is_zero() || b.is_zero()) continue;
        out.add(TensorKey{a.graph(), b.graph()}, term.coefficient * a.sign() * b.sign());
    }
    return out;
}

namespace {

class GraphTable {
public:
    const std::string& id(const CanonicalGraph& g)
    {
        auto [it, inserted] = ids_.try_emplace(g, "");
        if (inserted) {
            it->second = "g" + std::to_string(ids_.size());
            order_.push_back(g);
        }
        return it->second;
    }

    void write_blocks(std::ostream& os) const
    {
        for (const CanonicalGraph& g : order_) os << "graph " << ids_.at(g) << '\n' << serialize(g) << "end\n";
    }

private:
    std::map<CanonicalGraph, std::string> ids_;
    std::vector<CanonicalGraph> order_;
};

}  // namespace

std::string write_chain(const Chain& c)
{
    GraphTable table;
    std::ostringstream terms;
    for (const auto& [g, coefficient] : c) terms << coefficient.get_str() << ' ' << table.id(g) << '\n';
    std::ostringstream os;
    table.write_blocks(os);
    os << terms.str();
    return os.str();
}

std::string write_tensor_chain(const TensorChain& t)
{
    GraphTable table;
    std::ostringstream terms;
    for (const auto& [key, coefficient] : t) {
        const std::string a = table.id(key.first);
        const std::string b = table.id(key.second);
        terms << coefficient.get_str() << ' ' << a << ' ' << b << '\n';
    }
    std::ostringstream os;
    table.write_blocks(os);
    os << terms.str();
    return os.str();
}

std::string to_dot(const CanonicalGraph& g, std::string_view name)
{
    std::ostringstream os;
    os << "graph \"" << name << "\" {\n";
    os << "  // backbone=" << to_string(g.backbone()) << " parity=" << to_string(g.parity()) << '\n';
    os << "  node [shape=circle];\n";
    for (int x = 0; x < g.vertex_count(); ++x) {
        os << "  v" << x + 1 << " [label=\"" << x + 1 << '"';
        if (x < g.v_e()) os << ", shape=doublecircle";
        os << "];\n";
    }
    for (int x = 0; x + 1 < g.v_e(); ++x) os << "  v" << x + 1 << " -- v" << x + 2 << " [style=bold, dir=forward];\n";
    if (g.backbone() == Backbone::circle && g.v_e() >= 2)
        os << "  v" << g.v_e() << " -- v1 [style=bold, dir=forward];\n";
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        os << "  v" << e.u + 1 << " -- v" << e.v + 1 << " [style=dashed";
        if (g.parity() == Parity::odd) {
            os << ", dir=forward";
            if (e.is_loop()) os << ", label=\"" << (e.halves_swapped ? "2 1" : "1 2") << '"';
        } else {
            os << ", label=\"" << i + 1 << '"';
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace graphcoh
