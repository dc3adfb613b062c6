#include "hermcert/parse.hpp"

#include <algorithm>
#include <cctype>
#include <nlohmann/json.hpp>
#include <set>

namespace hermcert {

ParseError::ParseError(const std::string& msg, std::size_t pos_)
    : std::runtime_error("parse error at position " + std::to_string(pos_) + ": " + msg),
      pos(pos_) {}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit((unsigned char)c)) {
            while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
            out.push_back({Tok::Number, s.substr(start, i - start), start});
        } else if (std::isalpha((unsigned char)c)) {
            while (i < s.size() && std::isalnum((unsigned char)s[i])) ++i;
            out.push_back({Tok::Ident, s.substr(start, i - start), start});
        } else {
            Tok k;
            switch (c) {
                case '+': k = Tok::Plus; break;
                case '-': k = Tok::Minus; break;
                case '*': k = Tok::Star; break;
                case '^': k = Tok::Caret; break;
                case '/': k = Tok::Slash; break;
                case '(': k = Tok::LParen; break;
                case ')': k = Tok::RParen; break;
                default: throw ParseError(std::string("unexpected character '") + c + "'", i);
            }
            out.push_back({k, s.substr(i, 1), i});
            ++i;
        }
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : toks_(tokenize(text)) {
        // the variable count is global, so scan for it before elaborating
        n_ = -1;
        for (const auto& t : toks_)
            if (t.kind == Tok::Ident && t.text.size() >= 2 && t.text[0] == 'z') {
                bool digits = true;
                for (std::size_t j = 1; j < t.text.size(); ++j)
                    digits = digits && std::isdigit((unsigned char)t.text[j]);
                if (digits) n_ = std::max(n_, std::stoi(t.text.substr(1)));
            }
    }

    HermitianForm run(int* n_out) {
        HermitianForm f = expr();
        expect(Tok::End, "trailing input");
        *n_out = n_;
        return f;
    }

    HoloSection run_section(int n_override) {
        if (n_override > n_) n_ = n_override;
        HoloSection h = parse_holo();
        expect(Tok::End, "trailing input");
        return h;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    int n_;

    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    int require_n(std::size_t pos) const {
        if (n_ < 0) throw ParseError("cannot infer the variable count (no zk appears)", pos);
        return n_;
    }

    unsigned parse_uint() {
        if (peek().kind != Tok::Number) throw ParseError("expected integer", peek().pos);
        return (unsigned)std::stoul(next().text);
    }

    mpq_class parse_rational() {
        std::size_t pos = peek().pos;
        if (peek().kind != Tok::Number) throw ParseError("expected rational", pos);
        mpz_class num(next().text);
        if (accept(Tok::Slash)) {
            if (peek().kind != Tok::Number) throw ParseError("expected denominator", peek().pos);
            mpz_class den(next().text);
            if (den == 0) throw ParseError("zero denominator", pos);
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }

    // rational with optional trailing 'i', e.g. 3/2 or 3/2i or i
    Scalar parse_coef_atom() {
        if (peek().kind == Tok::Ident && peek().text == "i") {
            next();
            return Scalar(mpq_class(0), mpq_class(1));
        }
        mpq_class q = parse_rational();
        if (peek().kind == Tok::Ident && peek().text == "i") {
            next();
            return Scalar(0, q);
        }
        return Scalar(q);
    }

    // parenthesized complex literal: (a), (a+bi), (a-bi), (bi), (-a+i), ...
    Scalar parse_complex_paren() {
        expect(Tok::LParen, "'('");
        Scalar acc;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept(Tok::Minus))
                sign = -1;
            else if (accept(Tok::Plus))
                sign = 1;
            else if (!first)
                break;
            Scalar part = parse_coef_atom();
            acc += (sign < 0) ? Scalar(0) - part : part;
            first = false;
        }
        expect(Tok::RParen, "')'");
        return acc;
    }

    bool is_var() const {
        const Token& t = peek();
        return t.kind == Tok::Ident && t.text.size() >= 2 && t.text[0] == 'z' &&
               std::isdigit((unsigned char)t.text[1]);
    }

    // one product of coefficient atoms and powered variables
    std::pair<Scalar, MultiIndex> parse_holo_term() {
        Scalar coef(1);
        MultiIndex exp(require_n(peek().pos) + 1, 0);
        bool any = false;
        for (;;) {
            std::size_t pos = peek().pos;
            if (is_var()) {
                int idx = std::stoi(next().text.substr(1));
                if (idx > n_) throw ParseError("undeclared variable", pos);
                int p = 1;
                if (accept(Tok::Caret)) p = (int)parse_uint();
                exp[idx] += p;
            } else if (peek().kind == Tok::Number ||
                       (peek().kind == Tok::Ident && peek().text == "i")) {
                coef = coef * parse_coef_atom();
            } else if (peek().kind == Tok::LParen) {
                coef = coef * parse_complex_paren();
            } else if (!any) {
                throw ParseError("expected monomial or coefficient", pos);
            } else {
                break;
            }
            any = true;
            if (!accept(Tok::Star)) break;
        }
        return {coef, exp};
    }

    HoloSection parse_holo() {
        std::size_t start = peek().pos;
        std::vector<std::pair<Scalar, MultiIndex>> terms;
        int sign = 1;
        if (accept(Tok::Minus)) sign = -1;
        for (;;) {
            auto [c, e] = parse_holo_term();
            terms.emplace_back(sign < 0 ? Scalar(0) - c : c, e);
            if (accept(Tok::Plus))
                sign = 1;
            else if (accept(Tok::Minus))
                sign = -1;
            else
                break;
        }
        int d = degree(terms.front().second);
        for (const auto& [c, e] : terms)
            if (degree(e) != d)
                throw ParseError("inhomogeneous holomorphic polynomial", start);
        HoloSection h(n_, d);
        for (const auto& [c, e] : terms) h.add_term(e, c);
        return h;
    }

    HermitianForm form_pow(const HermitianForm& f, unsigned k) {
        HermitianForm acc = HermitianForm::unit(f.n);
        for (unsigned i = 0; i < k; ++i) acc = product(acc, f);
        return acc;
    }

    HermitianForm factor() {
        std::size_t pos = peek().pos;
        if (peek().kind == Tok::Ident && peek().text == "sq") {
            next();
            expect(Tok::LParen, "'('");
            HoloSection h = parse_holo();
            expect(Tok::RParen, "')'");
            return from_squares({{1, h}});
        }
        if (peek().kind == Tok::Ident && peek().text == "normK") {
            next();
            expect(Tok::LParen, "'('");
            unsigned k = parse_uint();
            expect(Tok::RParen, "')'");
            return norm_power(require_n(pos), (int)k);
        }
        if (accept(Tok::LParen)) {
            HermitianForm f = expr();
            expect(Tok::RParen, "')'");
            if (accept(Tok::Caret)) return form_pow(f, parse_uint());
            return f;
        }
        throw ParseError("expected sq(...), normK(...) or parenthesized expression", pos);
    }

    HermitianForm term() {
        mpq_class coef(1);
        if (peek().kind == Tok::Number) {
            coef = parse_rational();
            expect(Tok::Star, "'*' after coefficient");
        }
        HermitianForm f = factor();
        while (peek().kind == Tok::Star) {
            next();
            f = product(f, factor());
        }
        return coef == 1 ? f : f.scaled(coef);
    }

    HermitianForm expr() {
        std::size_t start = peek().pos;
        int sign = accept(Tok::Minus) ? -1 : 1;
        HermitianForm acc = term();
        if (sign < 0) acc = acc.scaled(mpq_class(-1));
        for (;;) {
            std::size_t pos = peek().pos;
            if (accept(Tok::Plus))
                sign = 1;
            else if (accept(Tok::Minus))
                sign = -1;
            else
                break;
            HermitianForm t = term();
            if (t.d != acc.d)
                throw ParseError("mixed-degree sum (degrees " + std::to_string(acc.d) + " and " +
                                     std::to_string(t.d) + ")",
                                 pos);
            acc = (sign < 0) ? acc - t : acc + t;
        }
        (void)start;
        return acc;
    }
};

bool is_keyword(const std::string& s) { return s == "sq" || s == "normK" || s == "i"; }

bool is_var_name(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && std::isalpha((unsigned char)s[i])) ++i;
    if (i == 0 || i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit((unsigned char)s[j])) return false;
    return !is_keyword(s);
}

std::pair<std::string, long> var_key(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && std::isalpha((unsigned char)s[i])) ++i;
    return {s.substr(0, i), std::stol(s.substr(i))};
}

MixedHermPoly mixed_mul(const MixedHermPoly& a, const MixedHermPoly& b) {
    MixedHermPoly out(a.n_vars);
    for (const auto& [ka, ca] : a.coeffs)
        for (const auto& [kb, cb] : b.coeffs)
            out.add_term(mi_add(ka.first, kb.first), mi_add(ka.second, kb.second), ca * cb);
    return out;
}

/// Same grammar, elaborated over named affine variables with no
/// homogeneity requirements anywhere.
class MixedParser {
public:
    explicit MixedParser(const std::string& text) : toks_(tokenize(text)) {
        for (const auto& t : toks_)
            if (t.kind == Tok::Ident && is_var_name(t.text)) names_.insert(t.text);
        vars_.assign(names_.begin(), names_.end());
        std::sort(vars_.begin(), vars_.end(),
                  [](const std::string& a, const std::string& b) { return var_key(a) < var_key(b); });
        for (std::size_t i = 0; i < vars_.size(); ++i) index_[vars_[i]] = (int)i;
        if (vars_.empty()) throw ParseError("no variables in expression", 0);
    }

    MixedHermPoly run(std::vector<std::string>* vars_out) {
        MixedHermPoly p = expr();
        if (toks_[at_].kind != Tok::End) throw ParseError("trailing input", toks_[at_].pos);
        *vars_out = vars_;
        return p;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    std::set<std::string> names_;
    std::vector<std::string> vars_;
    std::map<std::string, int> index_;

    const Token& peek() const { return toks_[at_]; }
    Token next() { return toks_[at_++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++at_;
        return true;
    }
    void expect(Tok k, const char* what) {
        if (!accept(k)) throw ParseError(std::string("expected ") + what, peek().pos);
    }

    unsigned parse_uint() {
        if (peek().kind != Tok::Number) throw ParseError("expected integer", peek().pos);
        return (unsigned)std::stoul(next().text);
    }

    mpq_class parse_rational() {
        std::size_t pos = peek().pos;
        if (peek().kind != Tok::Number) throw ParseError("expected rational", pos);
        mpz_class num(next().text);
        if (accept(Tok::Slash)) {
            if (peek().kind != Tok::Number) throw ParseError("expected denominator", peek().pos);
            mpz_class den(next().text);
            if (den == 0) throw ParseError("zero denominator", pos);
            mpq_class q(num, den);
            q.canonicalize();
            return q;
        }
        return mpq_class(num);
    }

    Scalar parse_coef_atom() {
        if (peek().kind == Tok::Ident && peek().text == "i") {
            next();
            return Scalar(mpq_class(0), mpq_class(1));
        }
        mpq_class q = parse_rational();
        if (peek().kind == Tok::Ident && peek().text == "i") {
            next();
            return Scalar(mpq_class(0), q);
        }
        return Scalar(q);
    }

    Scalar parse_complex_paren() {
        expect(Tok::LParen, "'('");
        Scalar acc;
        bool first = true;
        for (;;) {
            int sign = 1;
            if (accept(Tok::Minus))
                sign = -1;
            else if (accept(Tok::Plus))
                sign = 1;
            else if (!first)
                break;
            Scalar part = parse_coef_atom();
            acc += (sign < 0) ? -part : part;
            first = false;
        }
        expect(Tok::RParen, "')'");
        return acc;
    }

    // holomorphic polynomial as a coefficient map, no degree constraint
    std::map<MultiIndex, Scalar> holo() {
        std::map<MultiIndex, Scalar> terms;
        int sign = accept(Tok::Minus) ? -1 : 1;
        for (;;) {
            Scalar coef(1);
            MultiIndex e(vars_.size(), 0);
            bool any = false;
            for (;;) {
                std::size_t pos = peek().pos;
                if (peek().kind == Tok::Ident && is_var_name(peek().text)) {
                    int idx = index_.at(next().text);
                    int p = 1;
                    if (accept(Tok::Caret)) p = (int)parse_uint();
                    e[idx] += p;
                } else if (peek().kind == Tok::Number ||
                           (peek().kind == Tok::Ident && peek().text == "i")) {
                    coef = coef * parse_coef_atom();
                } else if (peek().kind == Tok::LParen) {
                    coef = coef * parse_complex_paren();
                } else if (!any) {
                    throw ParseError("expected monomial or coefficient", pos);
                } else {
                    break;
                }
                any = true;
                if (!accept(Tok::Star)) break;
            }
            if (sign < 0) coef = -coef;
            auto it = terms.find(e);
            if (it == terms.end())
                terms.emplace(e, coef);
            else {
                it->second += coef;
                if (it->second.is_zero()) terms.erase(it);
            }
            if (accept(Tok::Plus))
                sign = 1;
            else if (accept(Tok::Minus))
                sign = -1;
            else
                break;
        }
        return terms;
    }

    MixedHermPoly factor() {
        std::size_t pos = peek().pos;
        if (peek().kind == Tok::Ident && peek().text == "sq") {
            next();
            expect(Tok::LParen, "'('");
            auto h = holo();
            expect(Tok::RParen, "')'");
            MixedHermPoly out((int)vars_.size());
            for (const auto& [a, ca] : h)
                for (const auto& [b, cb] : h) out.add_term(a, b, ca * cb.conj());
            return out;
        }
        if (peek().kind == Tok::Ident && peek().text == "normK") {
            next();
            expect(Tok::LParen, "'('");
            unsigned k = parse_uint();
            expect(Tok::RParen, "')'");
            MixedHermPoly base((int)vars_.size());
            for (std::size_t v = 0; v < vars_.size(); ++v) {
                MultiIndex e(vars_.size(), 0);
                e[v] = 1;
                base.add_term(e, e, Scalar(1));
            }
            MixedHermPoly acc((int)vars_.size());
            acc.add_term(MultiIndex(vars_.size(), 0), MultiIndex(vars_.size(), 0), Scalar(1));
            for (unsigned j = 0; j < k; ++j) acc = mixed_mul(acc, base);
            return acc;
        }
        if (accept(Tok::LParen)) {
            MixedHermPoly f = expr();
            expect(Tok::RParen, "')'");
            if (accept(Tok::Caret)) {
                unsigned k = parse_uint();
                MixedHermPoly acc((int)vars_.size());
                acc.add_term(MultiIndex(vars_.size(), 0), MultiIndex(vars_.size(), 0), Scalar(1));
                for (unsigned j = 0; j < k; ++j) acc = mixed_mul(acc, f);
                return acc;
            }
            return f;
        }
        throw ParseError("expected sq(...), normK(...) or parenthesized expression", pos);
    }

    MixedHermPoly term() {
        mpq_class coef(1);
        if (peek().kind == Tok::Number) {
            coef = parse_rational();
            if (!accept(Tok::Star)) {  // bare constant term
                MixedHermPoly out((int)vars_.size());
                out.add_term(MultiIndex(vars_.size(), 0), MultiIndex(vars_.size(), 0),
                             Scalar(coef));
                return out;
            }
        }
        MixedHermPoly f = factor();
        while (accept(Tok::Star)) f = mixed_mul(f, factor());
        if (coef != 1) {
            MixedHermPoly out(f.n_vars);
            for (const auto& [k, c] : f.coeffs) out.coeffs.emplace(k, c * Scalar(coef));
            f = out;
        }
        return f;
    }

    MixedHermPoly expr() {
        int sign = accept(Tok::Minus) ? -1 : 1;
        MixedHermPoly acc((int)vars_.size());
        for (;;) {
            MixedHermPoly t = term();
            for (const auto& [k, c] : t.coeffs)
                acc.add_term(k.first, k.second, sign < 0 ? -c : c);
            if (accept(Tok::Plus))
                sign = 1;
            else if (accept(Tok::Minus))
                sign = -1;
            else
                break;
        }
        return acc;
    }
};

std::string mono_str(const MultiIndex& a, int fallback_var) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "z" + std::to_string(i);
        if (a[i] > 1) out += "^" + std::to_string(a[i]);
    }
    if (out.empty()) out = "z" + std::to_string(fallback_var) + "^0";
    return out;
}

void append_term(std::string& out, const mpq_class& c, const std::string& body) {
    if (c == 0) return;
    mpq_class a = abs(c);
    if (out.empty())
        out += (c < 0) ? "-" : "";
    else
        out += (c < 0) ? " - " : " + ";
    out += a.get_str() + "*" + body;
}

}  // namespace

FormExpression parse_form(const std::string& text) {
    FormExpression out;
    out.source = text;
    Parser p(text);
    out.form = p.run(&out.n);
    return out;
}

std::string print_form(const HermitianForm& P) {
    if (P.is_zero())
        return "0*sq(" + mono_str(MultiIndex(std::size_t(P.n) + 1, 0), P.n) +
               (P.d > 0 ? "*z0^" + std::to_string(P.d) : "") + ")";
    std::string out;
    for (const auto& [key, c] : P.C) {
        const auto& [alpha, beta] = key;
        if (alpha == beta) {
            append_term(out, c.re, "sq(" + mono_str(alpha, P.n) + ")");
        } else if (grlex_before(alpha, beta)) {
            // c u conj(v) + conj(c) v conj(u) rendered through sq() identities:
            // u conj(v) + v conj(u) = (sq(u+v) - sq(u-v)) / 2
            // i (u conj(v) - v conj(u)) = (sq(u-iv) - sq(u+iv)) / 2
            std::string u = mono_str(alpha, P.n), v = mono_str(beta, P.n);
            append_term(out, c.re / 2, "sq(" + u + " + " + v + ")");
            append_term(out, -c.re / 2, "sq(" + u + " - " + v + ")");
            append_term(out, c.im / 2, "sq(" + u + " - i*" + v + ")");
            append_term(out, -c.im / 2, "sq(" + u + " + i*" + v + ")");
        }
    }
    return out;
}

HermitianForm form_from_matrix_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    if (!j.is_array() || j.empty()) throw std::runtime_error("matrix file: expected a nonempty array");
    int n = -1, d = -1;
    HermitianForm P;
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != 4)
            throw std::runtime_error("matrix file: each entry is [alpha, beta, re, im]");
        MultiIndex a = row[0].get<std::vector<int>>();
        MultiIndex b = row[1].get<std::vector<int>>();
        Scalar c(parse_rational(row[2].get<std::string>()),
                 parse_rational(row[3].get<std::string>()));
        if (n < 0) {
            n = (int)a.size() - 1;
            d = degree(a);
            P = HermitianForm(n, d);
        }
        if ((int)a.size() != n + 1 || (int)b.size() != n + 1 || degree(a) != d || degree(b) != d)
            throw std::runtime_error("matrix file: inconsistent exponent vectors");
        P.add_entry(a, b, c);
    }
    if (!P.is_hermitian()) throw std::runtime_error("matrix file: matrix is not Hermitian");
    return P;
}

HoloSection parse_section(const std::string& text, int n_override) {
    Parser p(text);
    return p.run_section(n_override);
}

MixedExpression parse_mixed_form(const std::string& text) {
    MixedExpression out;
    out.source = text;
    MixedParser p(text);
    out.poly = p.run(&out.vars);
    return out;
}

ChainSpec parse_chain(const std::string& text, const std::vector<std::string>& initial_vars) {
    ChainSpec spec;
    std::vector<std::string> prev = initial_vars;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        std::string step = text.substr(start, bar == std::string::npos ? bar : bar - start);
        start = (bar == std::string::npos) ? text.size() + 1 : bar + 1;

        // split on commas into old=monomial assignments
        std::map<std::string, std::map<std::string, int>> assign;
        std::size_t p0 = 0;
        while (p0 <= step.size()) {
            std::size_t comma = step.find(',', p0);
            std::string item = step.substr(p0, comma == std::string::npos ? comma : comma - p0);
            p0 = (comma == std::string::npos) ? step.size() + 1 : comma + 1;
            std::size_t eq = item.find('=');
            if (eq == std::string::npos) throw ParseError("chain: expected old=monomial", 0);
            auto trim = [](std::string s) {
                std::size_t a = s.find_first_not_of(" \t");
                std::size_t b = s.find_last_not_of(" \t");
                return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
            };
            std::string lhs = trim(item.substr(0, eq));
            if (!is_var_name(lhs)) throw ParseError("chain: bad variable name '" + lhs + "'", 0);
            if (assign.count(lhs)) throw ParseError("chain: duplicate assignment for " + lhs, 0);
            std::map<std::string, int> mono;
            for (const Token& t : tokenize(item.substr(eq + 1))) {
                if (t.kind == Tok::End || t.kind == Tok::Star) continue;
                if (t.kind == Tok::Ident && is_var_name(t.text)) {
                    mono[t.text] += 1;
                } else if (t.kind == Tok::Caret) {
                    throw ParseError("chain: powers are written by repetition (y1*y1)", 0);
                } else {
                    throw ParseError("chain: monomials are products of variables", 0);
                }
            }
            if (mono.empty()) throw ParseError("chain: empty monomial for " + lhs, 0);
            assign.emplace(lhs, std::move(mono));
        }

        std::vector<std::string> lhs_sorted;
        std::set<std::string> new_names;
        for (const auto& [lhs, mono] : assign) {
            lhs_sorted.push_back(lhs);
            for (const auto& [v, e] : mono) new_names.insert(v);
        }
        std::sort(lhs_sorted.begin(), lhs_sorted.end(),
                  [](const std::string& a, const std::string& b) { return var_key(a) < var_key(b); });
        if (lhs_sorted != prev)
            throw ParseError("chain: step variables do not match the current coordinates", 0);
        std::vector<std::string> next(new_names.begin(), new_names.end());
        std::sort(next.begin(), next.end(),
                  [](const std::string& a, const std::string& b) { return var_key(a) < var_key(b); });
        std::map<std::string, int> next_index;
        for (std::size_t i = 0; i < next.size(); ++i) next_index[next[i]] = (int)i;

        std::vector<MultiIndex> sub;
        for (const auto& name : prev) {
            MultiIndex row(next.size(), 0);
            for (const auto& [v, e] : assign.at(name)) row[next_index.at(v)] += e;
            sub.push_back(row);
        }
        spec.steps.push_back(std::move(sub));
        spec.var_names.push_back(next);
        prev = next;
    }
    if (spec.steps.empty()) throw ParseError("chain: no steps", 0);
    return spec;
}

std::string matrix_entries_json(const HermitianForm& P) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [key, c] : P.C)
        j.push_back({key.first, key.second, rational_str(c.re), rational_str(c.im)});
    return j.dump();
}

}  // namespace hermcert
