#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace maxtoric::cli {

/// Decimal with 17 significant digits; null for non-finite values.
std::string json_number(double x);
std::string json_string(const std::string& s);
std::string json_array(const std::vector<double>& xs);
std::string json_array(const std::vector<std::string>& items, bool quote = true);

/// Insertion-ordered object; one member per line at the top level, nested
/// values inline.
class JsonObject {
public:
    JsonObject& add_raw(std::string key, std::string rendered);
    JsonObject& add(std::string key, double x) { return add_raw(std::move(key), json_number(x)); }
    JsonObject& add(std::string key, std::int64_t n) { return add_raw(std::move(key), std::to_string(n)); }
    JsonObject& add(std::string key, std::size_t n) { return add_raw(std::move(key), std::to_string(n)); }
    JsonObject& add(std::string key, bool b) { return add_raw(std::move(key), b ? "true" : "false"); }
    JsonObject& add(std::string key, const char* s) { return add_raw(std::move(key), json_string(s)); }
    JsonObject& add(std::string key, const std::string& s) { return add_raw(std::move(key), json_string(s)); }

    std::string inline_text() const;
    std::string pretty_text() const;

private:
    std::vector<std::pair<std::string, std::string>> members_;
};

}  // namespace maxtoric::cli
