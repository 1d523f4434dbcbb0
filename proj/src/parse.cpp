#include "gitstab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace gitstab {

namespace {

enum class Tok { number, ident, plus, minus, star, caret, slash, lparen, rparen,
                 lbracket, rbracket, colon, comma, equals, end };

struct Token {
    Tok kind;
    std::string text;
    int line, col;
};

class Lexer {
public:
    explicit Lexer(const std::string& s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col);
    }
    Token expect(Tok kind, const std::string& what) {
        if (tok_.kind != kind) fail("expected " + what);
        return take();
    }

private:
    void advance() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) bump();
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_ = {Tok::end, "", line_, col_};
            return;
        }
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                num += s_[pos_];
                bump();
            }
            tok_ = {Tok::number, num, tok_.line, tok_.col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
                id += s_[pos_];
                bump();
            }
            tok_ = {Tok::ident, id, tok_.line, tok_.col};
            return;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '^': kind = Tok::caret; break;
            case '/': kind = Tok::slash; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            case '[': kind = Tok::lbracket; break;
            case ']': kind = Tok::rbracket; break;
            case ':': kind = Tok::colon; break;
            case ',': kind = Tok::comma; break;
            case '=': kind = Tok::equals; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        std::string text(1, c);
        bump();
        tok_ = {kind, text, tok_.line, tok_.col};
    }
    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_{Tok::end, "", 1, 1};
};

int var_index(Lexer& lx, const Token& t, const std::vector<std::string>& names) {
    auto it = std::find(names.begin(), names.end(), t.text);
    if (it == names.end()) {
        std::ostringstream os;
        os << "unknown variable '" << t.text << "'";
        throw ParseError(os.str(), t.line, t.col);
    }
    (void)lx;
    return static_cast<int>(it - names.begin());
}

long long parse_uint(Lexer& lx, const std::string& what) {
    Token t = lx.expect(Tok::number, what);
    try {
        return std::stoll(t.text);
    } catch (const std::exception&) {
        throw ParseError("integer out of range", t.line, t.col);
    }
}

// coefficient := integer ('/' integer)?
Rat parse_coeff(Lexer& lx) {
    Token t = lx.expect(Tok::number, "a number");
    mpz_class num(t.text);
    if (lx.peek().kind == Tok::slash) {
        lx.take();
        Token d = lx.expect(Tok::number, "a denominator");
        mpz_class den(d.text);
        if (den == 0) throw ParseError("zero denominator", d.line, d.col);
        return Rat(num, den);
    }
    return Rat(num);
}

// term := coeff? ('*'? var ('^' int)?)*
Poly parse_term(Lexer& lx, const std::vector<std::string>& names) {
    int nv = static_cast<int>(names.size());
    Poly acc = Poly::one(nv);
    bool any = false;
    if (lx.peek().kind == Tok::number) {
        acc = Poly::constant(nv, parse_coeff(lx));
        any = true;
    }
    while (true) {
        if (lx.peek().kind == Tok::star) {
            lx.take();
            if (lx.peek().kind == Tok::number) {
                // allow forms like x*2 only as explicit products
                acc = acc * Poly::constant(nv, parse_coeff(lx));
                continue;
            }
        } else if (lx.peek().kind != Tok::ident) {
            break;
        }
        Token v = lx.expect(Tok::ident, "a variable");
        int idx = var_index(lx, v, names);
        long long e = 1;
        if (lx.peek().kind == Tok::caret) {
            lx.take();
            e = parse_uint(lx, "an exponent");
            if (e < 0 || e > 64) throw ParseError("exponent out of range", v.line, v.col);
        }
        acc = acc * Poly::variable(nv, idx).pow(static_cast<int>(e));
        any = true;
    }
    if (!any) lx.fail("expected a term");
    return acc;
}

Poly parse_poly_body(Lexer& lx, const std::vector<std::string>& names) {
    int nv = static_cast<int>(names.size());
    Poly acc = Poly::zero(nv);
    int sign = +1;
    if (lx.peek().kind == Tok::plus || lx.peek().kind == Tok::minus) {
        sign = lx.take().kind == Tok::minus ? -1 : +1;
    }
    while (true) {
        Poly t = parse_term(lx, names);
        acc += sign < 0 ? -t : t;
        if (lx.peek().kind == Tok::plus || lx.peek().kind == Tok::minus) {
            sign = lx.take().kind == Tok::minus ? -1 : +1;
            continue;
        }
        break;
    }
    return acc;
}

std::vector<std::string> parse_name_list(Lexer& lx) {
    lx.expect(Tok::lparen, "'('");
    std::vector<std::string> names;
    while (true) {
        names.push_back(lx.expect(Tok::ident, "a variable name").text);
        if (lx.peek().kind == Tok::comma) {
            lx.take();
            continue;
        }
        break;
    }
    lx.expect(Tok::rparen, "')'");
    return names;
}

long long parse_keyvalue_int(Lexer& lx, const std::string& key) {
    Token t = lx.expect(Tok::ident, "'" + key + "'");
    if (t.text != key) throw ParseError("expected '" + key + "='", t.line, t.col);
    lx.expect(Tok::equals, "'='");
    bool neg = false;
    if (lx.peek().kind == Tok::minus) {
        lx.take();
        neg = true;
    }
    long long v = parse_uint(lx, "an integer");
    return neg ? -v : v;
}

}  // namespace

std::vector<std::string> default_var_names(int n) {
    if (n == 3) return {"x", "y", "z"};
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

std::vector<std::string> henon_var_names(int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

Poly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
    Lexer lx(text);
    Poly p = parse_poly_body(lx, var_names);
    if (lx.peek().kind != Tok::end) lx.fail("trailing input after polynomial");
    return p;
}

ProjMap parse_map(const std::string& text) {
    Lexer lx(text);
    std::optional<long long> want_n, want_d;
    std::vector<std::string> names;
    if (lx.peek().kind == Tok::ident && lx.peek().text == "map") {
        lx.take();
        want_n = parse_keyvalue_int(lx, "N");
        want_d = parse_keyvalue_int(lx, "d");
        Token t = lx.expect(Tok::ident, "'vars'");
        if (t.text != "vars") throw ParseError("expected 'vars=(...)'", t.line, t.col);
        lx.expect(Tok::equals, "'='");
        names = parse_name_list(lx);
        lx.expect(Tok::colon, "':'");
        if (*want_n < 1) lx.fail("N must be at least 1");
        if (static_cast<long long>(names.size()) != *want_n + 1)
            lx.fail("vars list must have N+1 names");
    }
    Token open = lx.expect(Tok::lbracket, "'['");
    (void)open;
    if (names.empty()) {
        // bare form: count coordinates first to choose default names
        std::string rest = text;
        size_t lb = rest.find('[');
        size_t rb = rest.rfind(']');
        if (rb == std::string::npos) lx.fail("missing ']'");
        int colons = 0;
        for (size_t i = lb; i < rb; ++i)
            if (rest[i] == ':') ++colons;
        names = default_var_names(colons + 1);
    }
    std::vector<Poly> coords;
    while (true) {
        coords.push_back(parse_poly_body(lx, names));
        if (lx.peek().kind == Tok::colon) {
            lx.take();
            continue;
        }
        break;
    }
    lx.expect(Tok::rbracket, "']'");
    if (lx.peek().kind != Tok::end) lx.fail("trailing input after map");
    if (coords.size() != names.size()) lx.fail("coordinate count must be N+1");

    // validate the declared shape before normalization
    std::optional<int> deg;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].is_zero()) continue;
        if (!coords[i].is_homogeneous()) {
            std::ostringstream os;
            os << "coordinate " << (i + 1) << " is not homogeneous";
            throw ParseError(os.str(), 1, 1);
        }
        if (deg && *deg != *coords[i].degree()) {
            std::ostringstream os;
            os << "coordinate " << (i + 1) << " has degree " << *coords[i].degree()
               << ", expected " << *deg;
            throw ParseError(os.str(), 1, 1);
        }
        deg = coords[i].degree();
    }
    if (!deg) throw ParseError("all coordinates are zero", 1, 1);
    if (want_d && *deg != *want_d) {
        std::ostringstream os;
        os << "declared d=" << *want_d << " but coordinates have degree " << *deg;
        throw ParseError(os.str(), 1, 1);
    }
    return ProjMap::from_coords(std::move(coords));
}

LineP2 parse_line(const std::string& text) {
    Lexer lx(text);
    if (lx.peek().kind == Tok::ident && lx.peek().text == "line") {
        lx.take();
        lx.expect(Tok::colon, "':'");
    }
    Poly p = parse_poly_body(lx, {"x", "y", "z"});
    if (lx.peek().kind != Tok::end) lx.fail("trailing input after line");
    if (p.is_zero() || !p.degree() || *p.degree() != 1 || !p.is_homogeneous())
        throw ParseError("a line must be a nonzero homogeneous linear polynomial", 1, 1);
    return LineP2::make(p.coeff(Monomial({1, 0, 0})), p.coeff(Monomial({0, 1, 0})),
                        p.coeff(Monomial({0, 0, 1})));
}

HenonSpec parse_henon(const std::string& text) {
    Lexer lx(text);
    Token t = lx.expect(Tok::ident, "'henon'");
    if (t.text != "henon") throw ParseError("expected 'henon N=... k=... d=...'", t.line, t.col);
    long long n = parse_keyvalue_int(lx, "N");
    long long k = parse_keyvalue_int(lx, "k");
    long long d = parse_keyvalue_int(lx, "d");
    if (n < 2 || n > 16) lx.fail("N out of range");
    Token bt = lx.expect(Tok::ident, "'b'");
    if (bt.text != "b") throw ParseError("expected 'b=(...)'", bt.line, bt.col);
    lx.expect(Tok::equals, "'='");
    lx.expect(Tok::lparen, "'('");
    std::vector<Rat> b;
    while (true) {
        int sign = +1;
        if (lx.peek().kind == Tok::minus) {
            lx.take();
            sign = -1;
        }
        Rat c = parse_coeff(lx);
        b.push_back(sign < 0 ? -c : c);
        if (lx.peek().kind == Tok::comma) {
            lx.take();
            continue;
        }
        break;
    }
    lx.expect(Tok::rparen, "')'");

    std::vector<std::string> names = henon_var_names(static_cast<int>(n));
    std::vector<std::optional<Poly>> ps(static_cast<size_t>(n - k + 1));
    while (lx.peek().kind != Tok::end) {
        Token pt = lx.expect(Tok::ident, "'P<i>'");
        if (pt.text.size() < 2 || pt.text[0] != 'P')
            throw ParseError("expected a P<i> entry", pt.line, pt.col);
        int idx;
        try {
            idx = std::stoi(pt.text.substr(1));
        } catch (const std::exception&) {
            throw ParseError("bad P index", pt.line, pt.col);
        }
        if (idx < k + 1 || idx > n + 1)
            throw ParseError("P index out of range (need P" + std::to_string(k + 1) + "..P" +
                                 std::to_string(n + 1) + ")",
                             pt.line, pt.col);
        lx.expect(Tok::equals, "'='");
        lx.expect(Tok::lparen, "'('");
        Poly p = parse_poly_body(lx, names);
        lx.expect(Tok::rparen, "')'");
        if (ps[idx - k - 1]) throw ParseError("duplicate P" + std::to_string(idx), pt.line, pt.col);
        ps[idx - k - 1] = std::move(p);
    }
    std::vector<Poly> pvec;
    for (size_t i = 0; i < ps.size(); ++i)
        pvec.push_back(ps[i] ? *ps[i] : Poly::zero(static_cast<int>(n)));
    return HenonSpec::make(static_cast<int>(n), static_cast<int>(k), static_cast<int>(d),
                           std::move(b), std::move(pvec));
}

std::vector<long long> parse_weights(const std::string& text) {
    std::vector<long long> out;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw std::invalid_argument("weights: empty entry");
        size_t pos = 0;
        long long v = std::stoll(cur, &pos);
        if (pos != cur.size()) throw std::invalid_argument("weights: bad integer '" + cur + "'");
        out.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    flush();
    return out;
}

std::string format_map(const ProjMap& m) {
    std::vector<std::string> names = default_var_names(m.dim() + 1);
    std::ostringstream os;
    os << "map N=" << m.dim() << " d=" << m.degree() << " vars=(";
    for (int i = 0; i <= m.dim(); ++i) os << (i ? "," : "") << names[i];
    os << "): [";
    for (int i = 0; i <= m.dim(); ++i) os << (i ? " : " : "") << m.coords()[i].str(names);
    os << "]";
    return os.str();
}

std::string format_henon(const HenonSpec& spec) {
    std::vector<std::string> names = henon_var_names(spec.N);
    std::ostringstream os;
    os << "henon N=" << spec.N << " k=" << spec.k << " d=" << spec.d << " b=(";
    for (int i = 0; i < spec.N; ++i) os << (i ? "," : "") << spec.b[i].str();
    os << ")";
    for (int i = spec.k; i <= spec.N; ++i)
        os << " P" << (i + 1) << "=(" << spec.P[i - spec.k].str(names) << ")";
    return os.str();
}

}  // namespace gitstab
