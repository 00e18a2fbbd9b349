#include "skeinalg/laurent.hpp"

#include <cctype>
#include <sstream>

namespace skein {

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second.is_one();
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
    return r;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [k, c] : b.coeffs_) r.add_term(k, c);
    return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r = a;
    for (const auto& [k, c] : b.coeffs_) r.add_term(k, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ka, ca] : a.coeffs_)
        for (const auto& [kb, cb] : b.coeffs_) r.add_term(ka + kb, ca * cb);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : coeffs_) r.coeffs_.emplace(k, v * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e + k, c);
    return r;
}

Rational LaurentPoly::eval_q1() const {
    Rational s(0);
    for (const auto& [k, c] : coeffs_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [k, c] : coeffs_) {
        if (!first) os << ", ";
        first = false;
        os << k << ":" << c.str();
    }
    os << "}";
    return os.str();
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) {
    return a * b;
}

LaurentPoly parse_laurent(const std::string& text) {
    LaurentPoly p;
    size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '{')
        throw Error("laurent: expected '{' in \"" + text + "\"");
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == '}') return p;
    while (true) {
        skip_ws();
        size_t j = i;
        while (j < text.size() && text[j] != ':') ++j;
        if (j >= text.size()) throw Error("laurent: missing ':' in \"" + text + "\"");
        int exp = std::stoi(text.substr(i, j - i));
        i = j + 1;
        skip_ws();
        j = i;
        while (j < text.size() && text[j] != ',' && text[j] != '}') ++j;
        if (j >= text.size()) throw Error("laurent: missing '}' in \"" + text + "\"");
        std::string coeff = text.substr(i, j - i);
        while (!coeff.empty() && std::isspace(static_cast<unsigned char>(coeff.back())))
            coeff.pop_back();
        p.add_term(exp, Rational(coeff));
        i = j;
        if (text[i] == '}') break;
        ++i;
    }
    return p;
}

} // namespace skein
