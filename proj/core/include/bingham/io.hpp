#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bingham/inference.hpp"

namespace bingham {

/// 17 significant digits; round-trips any double exactly.
std::string format_double(double v);

/// Data CSV: no header, q numeric columns, one unit vector per row. Rows are
/// validated to |norm - 1| <= 1e-8 and then renormalised. Errors name the
/// offending row.
std::vector<UnitVector> read_data_csv(const std::filesystem::path& path);
void write_data_csv(const std::filesystem::path& path, const std::vector<UnitVector>& data);

/// Chain CSV: no header, q - 1 numeric columns, one thinned draw per row.
/// A chain read back carries draws only (no acceptance bookkeeping).
Chain read_chain_csv(const std::filesystem::path& path);
void write_chain_csv(const std::filesystem::path& path, const Chain& chain);

/// Ordered flat `key = value` text, used for run summaries and manifests.
class KeyValueLog {
public:
    void add(std::string key, std::string value);
    void add(std::string key, const char* value);
    void add(std::string key, double value);
    void add(std::string key, std::uint64_t value);
    void add(std::string key, long long value);

    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    std::string to_string() const;
    void write(const std::filesystem::path& path) const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Resolved parameters of a CLI run; emitted with every run so that re-running
/// with the same parameters reproduces outputs bit-identically.
struct RunManifest {
    std::string subcommand;
    std::string version;
    std::uint64_t seed = 0;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::string>> input_digests;
    double duration_seconds = 0.0;

    void append_to(KeyValueLog& log) const;
};

/// FNV-1a 64-bit digest, hex encoded.
std::string fnv1a_digest(std::string_view bytes);
std::string fnv1a_file_digest(const std::filesystem::path& path);

}  // namespace bingham
