#include "skeinalg/jobfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace skein {

namespace {

struct Token {
    enum Kind { plus, minus, star, caret, slash, number, ident, end } kind;
    std::string text;
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

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::end, ""};
            return;
        }
        char c = s_[i_];
        if (c == '+' || c == '-' || c == '*' || c == '^' || c == '/') {
            ++i_;
            tok_ = {c == '+'   ? Token::plus
                    : c == '-' ? Token::minus
                    : c == '*' ? Token::star
                    : c == '^' ? Token::caret
                               : Token::slash,
                    std::string(1, c)};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::number, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) ||
                                     s_[j] == '_' || s_[j] == '\''))
                ++j;
            tok_ = {Token::ident, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        throw Error(std::string("polynomial: unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t i_ = 0;
    Token tok_{Token::end, ""};
};

} // namespace

QPoly parse_qpoly(const RingPtr& ring, const std::string& text) {
    Lexer lex(text);
    QPoly result(ring);
    bool first = true;
    while (lex.peek().kind != Token::end) {
        int sign = 1;
        while (lex.peek().kind == Token::plus || lex.peek().kind == Token::minus) {
            if (lex.take().kind == Token::minus) sign = -sign;
        }
        if (!first && sign == 1 && lex.peek().kind == Token::end)
            throw Error("polynomial: trailing operator in \"" + text + "\"");
        Rational coeff(sign);
        Monomial mono(ring->arity());
        bool saw_factor = false;
        while (true) {
            Token t = lex.peek();
            if (t.kind == Token::star) {
                lex.take();
                continue;
            }
            if (t.kind == Token::number) {
                lex.take();
                Rational v{Rational(std::string(t.text))};
                if (lex.peek().kind == Token::slash) {
                    lex.take();
                    Token d = lex.take();
                    if (d.kind != Token::number)
                        throw Error("polynomial: expected denominator in \"" + text + "\"");
                    v = v / Rational(std::string(d.text));
                }
                coeff *= v;
                saw_factor = true;
                continue;
            }
            if (t.kind == Token::ident) {
                lex.take();
                int vi = ring->var_index(t.text);
                if (vi < 0)
                    throw Error("polynomial: unknown variable \"" + t.text + "\"");
                long e = 1;
                if (lex.peek().kind == Token::caret) {
                    lex.take();
                    Token num = lex.take();
                    if (num.kind != Token::number)
                        throw Error("polynomial: expected exponent in \"" + text + "\"");
                    e = std::stol(num.text);
                }
                mono[static_cast<size_t>(vi)] += e;
                saw_factor = true;
                continue;
            }
            break;
        }
        if (!saw_factor)
            throw Error("polynomial: empty term in \"" + text + "\"");
        result.add_term(mono, coeff);
        first = false;
    }
    return result;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

WeightVector parse_weight(const std::string& name, AmbientRing kind, size_t arity,
                          const std::string& path) {
    if (name == "sprime") {
        if (kind != AmbientRing::s4) throw SchemaError(path, "sprime needs ring = s4");
        return S4Ring::instance().sprime_weights();
    }
    if (name == "s") {
        if (kind != AmbientRing::s4) throw SchemaError(path, "s needs ring = s4");
        return S4Ring::instance().s_weights();
    }
    if (name == "xzy") {
        if (kind != AmbientRing::h2) throw SchemaError(path, "xzy needs ring = h2");
        return xzy_weights();
    }
    if (name.rfind("custom:", 0) == 0) {
        std::vector<long> w;
        std::istringstream is(name.substr(7));
        std::string item;
        while (std::getline(is, item, ',')) w.push_back(std::stol(item));
        if (w.size() != arity) throw SchemaError(path, "custom weight arity mismatch");
        return WeightVector(std::move(w));
    }
    throw SchemaError(path, "unknown weight \"" + name + "\"");
}

MonomialOrder parse_order(const std::string& name, const WeightVector& w,
                          const std::string& path) {
    if (name == "s4-leading") return s4_leading_order();
    if (name == "grlex") return MonomialOrder::graded_lex(w);
    if (name.rfind("lex:", 0) == 0) {
        std::vector<int> coords;
        std::istringstream is(name.substr(4));
        std::string item;
        while (std::getline(is, item, ',')) coords.push_back(std::stoi(item));
        return MonomialOrder::lex_on_coords(coords);
    }
    throw SchemaError(path, "unknown order \"" + name + "\"");
}

} // namespace

SpanJob parse_span_job(const std::string& text) {
    SpanJob job;
    std::optional<AmbientRing> ring_kind;
    std::string weight_name;
    std::optional<long> cutoff, cap;
    std::vector<std::pair<std::string, std::string>> gen_lines;
    std::vector<std::string> x_lines;
    std::string order_name;

    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        std::string path = "line " + std::to_string(lineno);
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.rfind("generator", 0) == 0) {
            std::string rest = trim(line.substr(9));
            auto eq = rest.find('=');
            if (eq == std::string::npos) throw SchemaError(path, "expected generator NAME = POLY");
            gen_lines.emplace_back(trim(rest.substr(0, eq)), trim(rest.substr(eq + 1)));
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw SchemaError(path, "expected KEY = VALUE");
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key == "ring") {
            if (val == "s4")
                ring_kind = AmbientRing::s4;
            else if (val == "h2")
                ring_kind = AmbientRing::h2;
            else
                throw SchemaError("ring", "must be s4 or h2");
        } else if (key == "weight") {
            weight_name = val;
        } else if (key == "cutoff") {
            cutoff = std::stol(val);
        } else if (key == "cap") {
            cap = std::stol(val);
        } else if (key == "leading_order") {
            order_name = val;
        } else if (key == "x") {
            x_lines.push_back(val);
        } else {
            throw SchemaError(key, "unknown key");
        }
    }

    if (!ring_kind) throw SchemaError("ring", "missing");
    if (weight_name.empty()) throw SchemaError("weight", "missing");
    if (!cutoff) throw SchemaError("cutoff", "missing");

    SpanProblem& p = job.problem;
    p.ring_kind = *ring_kind;
    p.weight = parse_weight(weight_name, p.ring_kind, p.ring()->arity(), "weight");
    p.cutoff = *cutoff;
    p.generator_weight_cap = cap.value_or(*cutoff);
    for (size_t i = 0; i < gen_lines.size(); ++i) {
        const auto& [name, poly_text] = gen_lines[i];
        std::string path = "generator[" + std::to_string(i) + "]";
        try {
            p.generators.emplace_back(name, p.reduce(parse_qpoly(p.ring(), poly_text)));
        } catch (const Error& e) {
            throw SchemaError(path, e.what());
        }
    }
    for (size_t i = 0; i < x_lines.size(); ++i) {
        try {
            p.module_gens.push_back(p.reduce(parse_qpoly(p.ring(), x_lines[i])));
        } catch (const Error& e) {
            throw SchemaError("x[" + std::to_string(i) + "]", e.what());
        }
    }
    if (!order_name.empty()) {
        job.leading_order = parse_order(order_name, p.weight, "leading_order");
        job.leading_order_name = order_name;
    }
    return job;
}

SpanJob load_span_job(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw SchemaError("job", "cannot open \"" + path + "\"");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_span_job(buf.str());
}

} // namespace skein
