#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skein {

/// Self-describing text report: ordered key-value lines plus simple tables.
/// Rendering is deterministic; identical inputs give byte-identical output.
class Report {
public:
    void kv(const std::string& key, const std::string& value);
    void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
    void kv(const std::string& key, long value);
    void kv(const std::string& key, int value) { kv(key, static_cast<long>(value)); }
    void kv(const std::string& key, bool value);  // "yes" / "no"
    void line(const std::string& text);
    void blank();
    void table(const std::string& title, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows);

    std::string render() const;

private:
    std::vector<std::string> lines_;
};

/// FNV-1a hash of a canonical input string, as fixed-width hex.
std::string input_digest(const std::string& canonical);

/// The convention block embedded in every report: variable assignments,
/// oracle signs, pants numbering, twist conventions.
void append_conventions(Report& r);

} // namespace skein
