#include "bingham/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bingham {

namespace {

constexpr double kUnitNormTol = 1e-8;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// Parse one CSV row of doubles; throws with the 1-based row number on failure.
std::vector<double> parse_row(std::string_view line, std::size_t row) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= line.size()) {
        const std::size_t comma = line.find(',', start);
        const std::string_view field =
            trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                    : comma - start));
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (ec != std::errc{} || ptr != field.data() + field.size())
            throw validation_error("malformed CSV value in row " + std::to_string(row));
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open file: " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        std::vector<double> row = parse_row(line, lineno);
        if (!rows.empty() && row.size() != rows.front().size())
            throw validation_error("row " + std::to_string(lineno) + " has " +
                                   std::to_string(row.size()) + " columns, expected " +
                                   std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::vector<UnitVector> read_data_csv(const std::filesystem::path& path) {
    const auto rows = read_numeric_csv(path);
    if (rows.empty()) throw validation_error("empty data file: " + path.string());
    if (rows.front().size() < 2)
        throw validation_error("data file needs at least two columns: " + path.string());
    std::vector<UnitVector> data;
    data.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        double ss = 0.0;
        for (double c : rows[r]) ss += c * c;
        if (std::abs(std::sqrt(ss) - 1.0) > kUnitNormTol)
            throw validation_error("row " + std::to_string(r + 1) + " is not a unit vector");
        data.emplace_back(std::vector<double>(rows[r]));
    }
    return data;
}

void write_data_csv(const std::filesystem::path& path, const std::vector<UnitVector>& data) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write file: " + path.string());
    for (const auto& x : data) {
        for (std::size_t i = 0; i < x.dim(); ++i) {
            if (i > 0) out << ',';
            out << format_double(x[i]);
        }
        out << '\n';
    }
    if (!out) throw validation_error("write failed: " + path.string());
}

Chain read_chain_csv(const std::filesystem::path& path) {
    const auto rows = read_numeric_csv(path);
    if (rows.empty()) throw validation_error("empty chain file: " + path.string());
    Chain chain;
    chain.n_params = rows.front().size();
    chain.draws.reserve(rows.size() * chain.n_params);
    for (const auto& row : rows)
        chain.draws.insert(chain.draws.end(), row.begin(), row.end());
    return chain;
}

void write_chain_csv(const std::filesystem::path& path, const Chain& chain) {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write file: " + path.string());
    for (std::size_t r = 0; r < chain.rows(); ++r) {
        for (std::size_t c = 0; c < chain.n_params; ++c) {
            if (c > 0) out << ',';
            out << format_double(chain.at(r, c));
        }
        out << '\n';
    }
    if (!out) throw validation_error("write failed: " + path.string());
}

void KeyValueLog::add(std::string key, std::string value) {
    entries_.emplace_back(std::move(key), std::move(value));
}
void KeyValueLog::add(std::string key, const char* value) {
    entries_.emplace_back(std::move(key), std::string(value));
}
void KeyValueLog::add(std::string key, double value) {
    entries_.emplace_back(std::move(key), format_double(value));
}
void KeyValueLog::add(std::string key, std::uint64_t value) {
    entries_.emplace_back(std::move(key), std::to_string(value));
}
void KeyValueLog::add(std::string key, long long value) {
    entries_.emplace_back(std::move(key), std::to_string(value));
}

std::string KeyValueLog::to_string() const {
    std::ostringstream out;
    for (const auto& [k, v] : entries_) out << k << " = " << v << '\n';
    return out.str();
}

void KeyValueLog::write(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write file: " + path.string());
    out << to_string();
    if (!out) throw validation_error("write failed: " + path.string());
}

void RunManifest::append_to(KeyValueLog& log) const {
    log.add("manifest.cmd", subcommand);
    log.add("manifest.version", version);
    log.add("manifest.seed", seed);
    for (const auto& [k, v] : params) log.add("manifest." + k, v);
    for (const auto& [k, v] : input_digests) log.add("manifest.digest." + k, v);
    log.add("manifest.duration.seconds", duration_seconds);
}

std::string fnv1a_digest(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fnv1a_file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open file: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return fnv1a_digest(ss.str());
}

}  // namespace bingham
