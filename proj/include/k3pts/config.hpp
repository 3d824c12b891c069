#pragma once

// Run configuration: defaults, then ./k3pts.json (or an explicit file), then
// K3PTS_THREADS, then command-line flags.

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3pts/algebra/integer.hpp"
#include "k3pts/errors.hpp"

namespace k3pts {

enum class OutputFormat { json, csv };

struct Config {
    unsigned threads = 1;
    bool threads_set = false;  // true once a file, the environment or a flag chose threads
    double height_tolerance = 0.05;
    double nontorsion_epsilon = 1e-3;
    int doubling_depth = 4;
    std::vector<std::int64_t> prime_budget = primes_in(3, 100);
    OutputFormat output_format = OutputFormat::json;

    void validate() const {
        if (threads < 1) throw invalid_argument("threads must be positive");
        if (!(height_tolerance > 0)) throw invalid_argument("height_tolerance must be positive");
        if (!(nontorsion_epsilon > 0)) throw invalid_argument("nontorsion_epsilon must be positive");
        if (doubling_depth < 2) throw invalid_argument("doubling_depth must be at least 2");
        if (prime_budget.empty()) throw invalid_argument("prime_budget must not be empty");
        for (auto p : prime_budget)
            if (p < 2 || !is_prime(p)) throw invalid_argument("prime_budget entry " + std::to_string(p) + " is not a prime");
    }
};

inline constexpr const char* kDefaultConfigPath = "k3pts.json";
inline constexpr const char* kThreadsEnv = "K3PTS_THREADS";

inline OutputFormat parse_output_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    throw invalid_argument("output_format must be json or csv, got " + s);
}

inline unsigned parse_threads(const std::string& s, const std::string& origin) {
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || v < 1 || v > 1024) throw invalid_argument(origin + " must be a thread count in 1..1024, got '" + s + "'");
    return static_cast<unsigned>(v);
}

/// Unknown keys are rejected so that typos do not silently fall back to defaults.
inline void apply_config_json(Config& c, const nlohmann::json& j) {
    if (!j.is_object()) throw invalid_argument("config must be a JSON object");
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "threads") {
                if (!v.is_number_integer() || v.get<long long>() < 1) throw invalid_argument("threads must be a positive integer");
                c.threads = v.get<unsigned>();
                c.threads_set = true;
            } else if (key == "height_tolerance") {
                c.height_tolerance = v.get<double>();
            } else if (key == "nontorsion_epsilon") {
                c.nontorsion_epsilon = v.get<double>();
            } else if (key == "doubling_depth") {
                c.doubling_depth = v.get<int>();
            } else if (key == "prime_budget") {
                c.prime_budget = v.get<std::vector<std::int64_t>>();
            } else if (key == "output_format") {
                c.output_format = parse_output_format(v.get<std::string>());
            } else {
                throw invalid_argument("unknown config key " + key);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument(std::string("config: ") + e.what());
    }
    c.validate();
}

/// Reads `explicit_path` if given (it must exist), otherwise the default path
/// if present, then applies the environment. Flags are applied by the caller.
inline Config load_config(const std::optional<std::string>& explicit_path, const char* env_threads) {
    Config c;
    std::optional<std::string> path = explicit_path;
    if (!path && std::filesystem::exists(kDefaultConfigPath)) path = kDefaultConfigPath;
    if (path) {
        std::ifstream in(*path);
        if (!in) throw invalid_argument("cannot open config " + *path);
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw invalid_argument(*path + ": " + e.what());
        }
        apply_config_json(c, j);
    }
    if (env_threads && *env_threads) {
        c.threads = parse_threads(env_threads, kThreadsEnv);
        c.threads_set = true;
    }
    c.validate();
    return c;
}

inline Config load_config(const std::optional<std::string>& explicit_path = std::nullopt) {
    return load_config(explicit_path, std::getenv(kThreadsEnv));
}

}  // namespace k3pts
