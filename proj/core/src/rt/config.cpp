#include "qirc/rt/config.hpp"

#include <stdexcept>

#include "qirc/support/errors.hpp"

namespace qirc::rt {

namespace {

std::string take_value(const std::vector<std::string>& args, std::size_t& i,
                       const std::string& flag) {
    if (i + 1 >= args.size()) {
        throw ConfigError("flag '" + flag + "' expects a value");
    }
    return args[++i];
}

std::int64_t parse_int(const std::string& text, const std::string& flag) {
    try {
        std::size_t used = 0;
        const std::int64_t value = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ConfigError("flag '" + flag + "' expects an integer, got '" + text + "'");
    }
}

}  // namespace

ExecutionConfig parse_runtime_args(const std::vector<std::string>& args) {
    ExecutionConfig cfg;
    bool explicit_shots = false;
    for (std::size_t i = 0; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "-qrt") {
            const std::string mode = take_value(args, i, arg);
            if (mode == "nisq") {
                cfg.mode = ExecutionMode::Nisq;
            } else if (mode == "ftqc") {
                cfg.mode = ExecutionMode::Ftqc;
            } else {
                throw ConfigError("unknown runtime mode '" + mode + "' (expected nisq or ftqc)");
            }
        } else if (arg == "-shots") {
            cfg.shots = parse_int(take_value(args, i, arg), arg);
            explicit_shots = true;
            if (cfg.shots < 1) throw ConfigError("-shots must be at least 1");
        } else if (arg == "-qpu") {
            cfg.backend = take_value(args, i, arg);
        } else if (arg == "-seed") {
            cfg.seed = static_cast<std::uint64_t>(parse_int(take_value(args, i, arg), arg));
        } else {
            // Raw argv tail: anything else belongs to the host program.
        }
    }
    if (explicit_shots && cfg.mode != ExecutionMode::Nisq && cfg.shots != 1) {
        throw ConfigError("-shots applies to nisq mode only");
    }
    return cfg;
}

bool is_builtin_backend(const std::string& name) {
    return name.empty() || name == "builtin" || name == "aer" || name == "statevector" ||
           name == "qpp";
}

}  // namespace qirc::rt
