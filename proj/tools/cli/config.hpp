#ifndef FRACDIFF_CLI_CONFIG_HPP
#define FRACDIFF_CLI_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fdcli {

// Raised for malformed files, unknown keys, and constraint violations; the
// message names the key and line.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// `key = value` lines under `[section]` headers, `#` comments. Section names
// must be one of the known commands (or `global`).
class RawConfig {
public:
    struct Entry {
        std::string value;
        int line = 0;
        mutable bool used = false;
    };

    static RawConfig parse_text(const std::string& text, const std::string& origin = "<config>");
    static RawConfig parse_file(const std::string& path);

    const Entry* find(const std::string& section, const std::string& key) const;
    // every key of `section` must have been consumed
    void reject_unused(const std::string& section) const;
    bool has_section(const std::string& section) const;

private:
    std::map<std::string, Entry> entries_; // "section.key"
    std::string origin_;
};

// Typed view of one section. Every lookup is recorded (value or default) so
// the command can echo its full parameter set into output metadata.
class SectionReader {
public:
    SectionReader(const RawConfig& raw, std::string section);

    double require_double(const std::string& key);
    double get_double(const std::string& key, double def);
    long require_long(const std::string& key);
    long get_long(const std::string& key, long def);
    std::uint64_t get_u64(const std::string& key, std::uint64_t def);
    std::optional<std::uint64_t> optional_u64(const std::string& key);
    std::string require_string(const std::string& key);
    std::string get_string(const std::string& key, const std::string& def);
    std::vector<double> get_double_list(const std::string& key, const std::vector<double>& def);

    // constraint helpers; throw ConfigError naming the key and line
    void check(bool ok, const std::string& key, const std::string& what) const;

    const std::vector<std::pair<std::string, std::string>>& echo() const { return echo_; }
    const std::string& section() const { return section_; }

private:
    const RawConfig::Entry* find(const std::string& key) const;
    void record(const std::string& key, const std::string& value);
    [[noreturn]] void fail(const std::string& key, const std::string& what) const;

    const RawConfig& raw_;
    std::string section_;
    std::vector<std::pair<std::string, std::string>> echo_;
    std::map<std::string, int> lines_;
};

std::string format_double(double v); // shortest round-trip via %.17g

} // namespace fdcli

#endif
