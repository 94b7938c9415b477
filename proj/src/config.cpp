#include "flagforge/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace flagforge {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long to_int(const std::string& val, const std::string& where) {
    try {
        size_t used = 0;
        long long v = std::stoll(val, &used);
        if (used != val.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw SchemaError(where + ": expected an integer, got \"" + val + "\"");
    }
}

} // namespace

Config parse_config(const std::string& text, const std::string& name) {
    Config cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        const std::string where = name + ":" + std::to_string(lineno);
        if (eq == std::string::npos) throw SchemaError(where + ": expected key = value");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
            val = val.substr(1, val.size() - 2);
        if (key == "default_field") {
            cfg.field = val;
        } else if (key == "default_d") {
            cfg.d = static_cast<int>(to_int(val, where));
        } else if (key == "seed") {
            cfg.has_seed = true;
            cfg.seed = static_cast<unsigned long long>(to_int(val, where));
        } else {
            throw SchemaError(where + ": unknown key \"" + key +
                              "\" (expected default_field, default_d, or seed)");
        }
    }
    return cfg;
}

Config load_config(const std::string& path, bool must_exist) {
    std::ifstream in(path);
    if (!in) {
        if (must_exist) throw SchemaError(path + ": cannot read config file");
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

} // namespace flagforge
