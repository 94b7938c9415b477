#pragma once
// flagforge.toml reader: a strict `key = value` subset of TOML.  Lines are
// blank, `# comment`, or `key = value` with the value bare or double-quoted.
// Only the keys default_field, default_d, and seed are accepted; anything
// else is a SchemaError naming file and line.

#include "flagforge/errors.hpp"

#include <string>

namespace flagforge {

struct Config {
    std::string field;               // empty = not set
    int d = 0;                       // 0 = not set
    bool has_seed = false;
    unsigned long long seed = 0;
};

// Parse config text; `name` labels error messages (a path or "stdin").
Config parse_config(const std::string& text, const std::string& name);

// Read and parse `path`.  A missing file yields an empty Config unless
// `must_exist`, in which case it is a SchemaError.
Config load_config(const std::string& path, bool must_exist);

} // namespace flagforge
