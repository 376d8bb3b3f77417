#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "json.hpp"

// canonical JSON emission: no whitespace, object keys in insertion order,
// floats with 17 significant digits (lossless for doubles), negative zero
// normalized away. emitting, parsing and re-emitting a document is therefore
// byte-identical, which the test suite relies on.

namespace lande_cli {

inline std::string format_double(double v) {
    if (v == 0.0) return "0";  // fold -0
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void escape_into(std::string& out, const std::string& s) {
    out += '"';
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

inline void dump_into(std::string& out, const nlohmann::ordered_json& j) {
    using value_t = nlohmann::ordered_json::value_t;
    switch (j.type()) {
        case value_t::null: out += "null"; break;
        case value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case value_t::number_integer: out += std::to_string(j.get<std::int64_t>()); break;
        case value_t::number_unsigned: out += std::to_string(j.get<std::uint64_t>()); break;
        case value_t::number_float: out += format_double(j.get<double>()); break;
        case value_t::string: escape_into(out, j.get<std::string>()); break;
        case value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ',';
                first = false;
                dump_into(out, el);
            }
            out += ']';
            break;
        }
        case value_t::object: {
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                escape_into(out, it.key());
                out += ':';
                dump_into(out, it.value());
            }
            out += '}';
            break;
        }
        default: out += "null"; break;
    }
}

inline std::string canonical_dump(const nlohmann::ordered_json& j) {
    std::string out;
    dump_into(out, j);
    return out;
}

}  // namespace lande_cli
