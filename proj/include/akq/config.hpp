#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "akq/geometry.hpp"

namespace akq {

inline const std::vector<std::string> kSuiteNames = {"drift",       "gap",    "vanishing", "comparison",
                                                     "deformation", "egorov", "trace",     "bergman"};

struct BackendConfig {
    std::string name;
    BackendSpec spec;
    std::vector<int> ks;
};

// Parsed run file.  Physics parameters (k, resolution, tol and the
// suite-specific ones) have no defaults.
struct RunConfig {
    std::vector<BackendConfig> backends;
    std::vector<std::string> suites;
    double tol = 0.0;
    std::filesystem::path output;
    std::filesystem::path cache;
    int workers = 1;
    unsigned seed = 20240611;
    int window_levels = 3;
    std::optional<double> egorov_time;
    std::optional<double> trace_support;
    std::optional<double> trace_energy;
    std::string text;   // raw config, hashed into the provenance

    bool wants(const std::string& suite) const;
};

// Throws Error(Schema) with "<source>:<line>: ..." on any violation, including
// unknown sections or keys and resolutions below the geometry minimum.
RunConfig parse_config(std::istream& in, const std::string& source_name,
                       const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

// "4..14", "4..14:2", "1,2,3" or a single integer.
std::vector<int> parse_k_list(const std::string& text);

}  // namespace akq
