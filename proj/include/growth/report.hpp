#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "growth/bounds.hpp"

// Report and manifest serialization for the command-line tool.  Outputs are
// byte-stable for equal inputs: canonical key order, fixed decimal rendering.

namespace growth {

inline constexpr const char* kToolVersion = "growthbound 1.0.0";

std::string sha256_hex(const std::string& bytes);

std::string bound_report_json(const BoundResult& r, std::int64_t runtime_ms);

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> parameters;
    int workers = 0;
    std::uint64_t node_budget = 0;
    std::int64_t wall_ms = 0;
    std::map<std::string, std::string> output_digests;  // file name -> sha256
};

std::string manifest_json(const RunManifest& m);

}  // namespace growth
