#include "cli/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace maxtoric::cli {

std::string json_number(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
    return buf;
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (const char ch : s) {
        const auto c = static_cast<unsigned char>(ch);
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out + "\"";
}

std::string json_array(const std::vector<double>& xs) {
    std::vector<std::string> items;
    for (double x : xs) items.push_back(json_number(x));
    return json_array(items, false);
}

std::string json_array(const std::vector<std::string>& items, bool quote) {
    std::string out = "[";
    for (std::size_t k = 0; k < items.size(); ++k) {
        if (k) out += ", ";
        out += quote ? json_string(items[k]) : items[k];
    }
    return out + "]";
}

JsonObject& JsonObject::add_raw(std::string key, std::string rendered) {
    members_.emplace_back(std::move(key), std::move(rendered));
    return *this;
}

std::string JsonObject::inline_text() const {
    std::string out = "{";
    for (std::size_t k = 0; k < members_.size(); ++k) {
        if (k) out += ", ";
        out += json_string(members_[k].first) + ": " + members_[k].second;
    }
    return out + "}";
}

std::string JsonObject::pretty_text() const {
    if (members_.empty()) return "{}";
    std::string out = "{\n";
    for (std::size_t k = 0; k < members_.size(); ++k) {
        out += "  " + json_string(members_[k].first) + ": " + members_[k].second;
        out += k + 1 < members_.size() ? ",\n" : "\n";
    }
    return out + "}";
}

}  // namespace maxtoric::cli
