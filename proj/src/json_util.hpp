#pragma once

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lpg/errors.hpp"

namespace lpg::detail {

/// Parse JSON text, translating syntax errors into ParseError with line/column.
inline nlohmann::json parse_json(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // e.byte is 1-based and points one past the offending character.
        std::size_t line = 1, column = 1;
        const std::size_t stop = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
        for (std::size_t i = 0; i < stop; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(std::string(what) + ": syntax error", line, column);
    }
}

inline double require_number(const nlohmann::json& j, const std::string& key, const std::string& ctx) {
    if (!j.is_number()) throw ParseError(ctx + ": '" + key + "' must be a number");
    return j.get<double>();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace lpg::detail
