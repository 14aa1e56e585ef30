#include "cdga/model_io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace cdga {

namespace {

struct LineScanner {
    const std::string& s;
    int line;
    size_t pos = 0;

    void skip_ws()
    {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t'))
            ++pos;
    }

    int col()
    {
        skip_ws();
        return static_cast<int>(pos) + 1;
    }

    [[noreturn]] void fail(const std::string& msg, int at = -1)
    {
        throw ParseError(line, at < 0 ? col() : at, msg);
    }

    char peek()
    {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool consume(char ch)
    {
        if (peek() != ch || ch == '\0')
            return false;
        ++pos;
        return true;
    }

    bool at_end() { return peek() == '\0'; }

    std::string ident()
    {
        skip_ws();
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            fail("expected identifier");
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    std::string digits()
    {
        skip_ws();
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number");
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        return s.substr(start, pos - start);
    }

    int nat()
    {
        int at = col();
        std::string d = digits();
        if (d.size() > 6)
            fail("number out of range", at);
        return std::stoi(d);
    }

    bool peek_digit()
    {
        skip_ws();
        return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
    }
};

Rational parse_coeff(LineScanner& sc)
{
    mpz_class num(sc.digits());
    if (sc.consume('/')) {
        int at = sc.col();
        mpz_class den(sc.digits());
        if (den == 0)
            sc.fail("zero denominator", at);
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    return Rational(num);
}

// term := coeff | [coeff "*"] IDENT ("^" NAT)? ("*" IDENT ("^" NAT)?)*
// Factors multiply in written order, so "b*a" picks up the Koszul sign.
Element parse_term(LineScanner& sc, const Algebra& alg)
{
    // A minus sign binds to the coefficient when digits follow ("a + -2*b");
    // a bare minus before a name belongs to the expression level.
    bool neg = false;
    if (sc.peek() == '-') {
        size_t save = sc.pos;
        ++sc.pos;
        if (sc.peek_digit())
            neg = true;
        else
            sc.pos = save;
    }
    Rational coeff(1);
    if (sc.peek_digit()) {
        coeff = parse_coeff(sc);
        if (neg)
            coeff = -coeff;
        if (!sc.consume('*'))
            return coeff * alg.unit();
    }
    Element acc = coeff * alg.unit();
    do {
        int at = sc.col();
        std::string name = sc.ident();
        int g = alg.gen_index(name);
        if (g < 0)
            sc.fail("unknown generator '" + name + "'", at);
        int e = 1;
        if (sc.consume('^')) {
            int exp_at = sc.col();
            e = sc.nat();
            if (e >= 2 && alg.gen(g).degree % 2 != 0)
                sc.fail("odd generator '" + name + "' cannot carry an exponent >= 2", exp_at);
        }
        Element pw = alg.unit();
        for (int i = 0; i < e; ++i)
            pw = pw * alg.gen_element(g);
        acc = acc * pw;
    } while (sc.consume('*'));
    return acc;
}

Element parse_expr(LineScanner& sc, const Algebra& alg)
{
    Element out = alg.zero();
    bool negate = sc.consume('-');
    for (;;) {
        Element t = parse_term(sc, alg);
        out = negate ? out - t : out + t;
        if (sc.consume('+'))
            negate = false;
        else if (sc.consume('-'))
            negate = true;
        else
            break;
    }
    if (!sc.at_end())
        sc.fail("unexpected trailing input");
    return out;
}

std::string strip_comment(const std::string& line)
{
    auto hash = line.find('#');
    std::string s = hash == std::string::npos ? line : line.substr(0, hash);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    return s;
}

}  // namespace

Dga parse_model(const std::string& text)
{
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line))
            lines.push_back(strip_comment(line));
    }

    std::vector<GeneratorSpec> gens;
    std::map<std::string, int> seen;
    std::vector<std::pair<int, std::string>> diff_lines;  // (line number, rest of line)
    bool in_diff_section = false;

    for (size_t i = 0; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        LineScanner sc{lines[i], lineno};
        if (sc.at_end())
            continue;
        int at = sc.col();
        std::string kw = sc.ident();
        if (kw == "gen") {
            if (in_diff_section)
                sc.fail("generator declarations must precede differential lines", at);
            int name_at = sc.col();
            std::string name = sc.ident();
            int deg_at = sc.col();
            int deg = sc.nat();
            if (!sc.at_end())
                sc.fail("unexpected trailing input");
            if (deg < 1)
                sc.fail("generator degree must be >= 1", deg_at);
            if (!seen.emplace(name, static_cast<int>(gens.size())).second)
                sc.fail("duplicate generator '" + name + "'", name_at);
            gens.push_back({name, deg});
        } else if (kw == "d") {
            in_diff_section = true;
            diff_lines.emplace_back(lineno, lines[i]);
        } else {
            sc.fail("expected 'gen' or 'd'", at);
        }
    }

    if (gens.empty())
        throw ParseError(1, 1, "model declares no generators");

    Algebra alg(gens);
    std::vector<Element> diffs(gens.size(), alg.zero());
    std::vector<bool> have(gens.size(), false);

    for (const auto& [lineno, text_line] : diff_lines) {
        LineScanner sc{text_line, lineno};
        sc.ident();  // "d", already matched
        int name_at = sc.col();
        std::string name = sc.ident();
        int g = alg.gen_index(name);
        if (g < 0)
            sc.fail("unknown generator '" + name + "'", name_at);
        if (have[g])
            sc.fail("duplicate differential for '" + name + "'", name_at);
        if (!sc.consume('='))
            sc.fail("expected '='");
        diffs[g] = parse_expr(sc, alg);
        have[g] = true;
    }

    for (size_t g = 0; g < gens.size(); ++g)
        if (!have[g])
            throw ParseError(static_cast<int>(lines.size()), 1,
                             "missing differential for generator '" + gens[g].name + "'");

    return Dga(std::move(alg), std::move(diffs));
}

Element parse_element(const Algebra& alg, const std::string& expr)
{
    LineScanner sc{expr, 1};
    if (sc.at_end())
        sc.fail("empty expression");
    return parse_expr(sc, alg);
}

Element parse_element(const Dga& dga, const std::string& expr) { return parse_element(dga.algebra(), expr); }

namespace {

std::string factors_str(const Algebra& alg, const Monomial& m)
{
    std::string out;
    for (const auto& [g, e] : m.factors) {
        if (!out.empty())
            out += "*";
        out += alg.gen(g).name;
        if (e > 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string render(const Element& u)
{
    if (u.is_zero())
        return "0";
    const Algebra& alg = u.algebra();
    std::string out;
    bool first = true;
    for (const auto& [m, c] : u.terms()) {
        const bool neg = c < 0;
        Rational mag = neg ? Rational(-c) : c;
        std::string piece;
        if (m.is_unit())
            piece = rat_str(mag);
        else if (mag == 1)
            piece = factors_str(alg, m);
        else
            piece = rat_str(mag) + "*" + factors_str(alg, m);
        if (first)
            out = (neg ? "-" : "") + piece;
        else
            out += (neg ? " - " : " + ") + piece;
        first = false;
    }
    return out;
}

}  // namespace cdga
