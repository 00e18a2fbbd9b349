#include "skeinalg/report.hpp"

#include <sstream>

namespace skein {

void Report::kv(const std::string& key, const std::string& value) {
    lines_.push_back(key + ": " + value);
}

void Report::kv(const std::string& key, long value) {
    lines_.push_back(key + ": " + std::to_string(value));
}

void Report::kv(const std::string& key, bool value) {
    lines_.push_back(key + ": " + (value ? "yes" : "no"));
}

void Report::line(const std::string& text) { lines_.push_back(text); }

void Report::blank() { lines_.emplace_back(); }

void Report::table(const std::string& title, const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    lines_.push_back("== " + title + " ==");
    std::ostringstream h;
    for (size_t i = 0; i < header.size(); ++i) h << (i ? " | " : "") << header[i];
    lines_.push_back(h.str());
    for (const auto& row : rows) {
        std::ostringstream os;
        for (size_t i = 0; i < row.size(); ++i) os << (i ? " | " : "") << row[i];
        lines_.push_back(os.str());
    }
}

std::string Report::render() const {
    std::string out;
    for (const auto& l : lines_) {
        out += l;
        out += '\n';
    }
    return out;
}

std::string input_digest(const std::string& canonical) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    static const char* hex = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = hex[h & 0xf];
        h >>= 4;
    }
    return s;
}

void append_conventions(Report& r) {
    r.line("convention: genus-2 ring variables x, z, y with x = tr(a), z = tr(b), y = tr(ab)");
    r.line("convention: (x,z;y)-degree weights x:1 z:1 y:2");
    r.line("convention: four-holed-sphere generators s1,s2,s3,s12,s13,s23,s123;"
           " s-weights 3,3,3,4,4,4,3; s'-weights 2,2,1,2,3,3,3");
    r.line("convention: SL2 oracle evaluates s_i -> tr(A_i), s_ij -> -tr(A_i*A_j),"
           " s_123 -> tr(A_1*A_2*A_3)");
    r.line("convention: genus-2 pants (C1,C1,C3) (C2,C2,C3); genus-3 pants"
           " (C1,C2,C5) (C1,C4,C6) (C2,C3,C6) (C3,C4,C5)");
    r.line("convention: twists: t_i >= 0 whenever n_i = 0; positive twist is the"
           " right-handed crossing of the curve over the dual graph edge");
}

} // namespace skein
