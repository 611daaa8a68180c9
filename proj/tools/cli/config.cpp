#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace fdcli {

namespace {

const char* kKnownSections[] = {"global", "sample", "ml-eval", "green",  "solve",
                                "agents", "ctrw",   "compare", "mass-report"};

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

bool known_section(const std::string& name) {
    return std::find_if(std::begin(kKnownSections), std::end(kKnownSections),
                        [&name](const char* s) { return name == s; }) != std::end(kKnownSections);
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

RawConfig RawConfig::parse_text(const std::string& text, const std::string& origin) {
    RawConfig cfg;
    cfg.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(origin + ": malformed section header (line " +
                                  std::to_string(line_no) + ")");
            section = trim(line.substr(1, line.size() - 2));
            if (!known_section(section))
                throw ConfigError(origin + ": unknown section '" + section + "' (line " +
                                  std::to_string(line_no) + ")");
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ": expected 'key = value' (line " +
                              std::to_string(line_no) + ")");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ConfigError(origin + ": empty key (line " + std::to_string(line_no) + ")");
        if (section.empty())
            throw ConfigError(origin + ": key '" + key + "' outside any [section] (line " +
                              std::to_string(line_no) + ")");
        std::string full = section + "." + key;
        if (cfg.entries_.count(full))
            throw ConfigError(origin + ": duplicate key '" + key + "' in [" + section +
                              "] (line " + std::to_string(line_no) + ")");
        cfg.entries_[full] = Entry{value, line_no, false};
    }
    return cfg;
}

RawConfig RawConfig::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path);
}

const RawConfig::Entry* RawConfig::find(const std::string& section, const std::string& key) const {
    auto it = entries_.find(section + "." + key);
    if (it == entries_.end()) return nullptr;
    it->second.used = true;
    return &it->second;
}

bool RawConfig::has_section(const std::string& section) const {
    std::string prefix = section + ".";
    auto it = entries_.lower_bound(prefix);
    return it != entries_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
}

void RawConfig::reject_unused(const std::string& section) const {
    std::string prefix = section + ".";
    for (const auto& [full, entry] : entries_) {
        if (full.compare(0, prefix.size(), prefix) != 0) continue;
        if (!entry.used)
            throw ConfigError("unknown key '" + full.substr(prefix.size()) + "' in [" + section +
                              "] (line " + std::to_string(entry.line) + ")");
    }
}

SectionReader::SectionReader(const RawConfig& raw, std::string section)
    : raw_(raw), section_(std::move(section)) {}

const RawConfig::Entry* SectionReader::find(const std::string& key) const {
    return raw_.find(section_, key);
}

void SectionReader::record(const std::string& key, const std::string& value) {
    for (auto& [k, v] : echo_) {
        if (k == key) {
            v = value;
            return;
        }
    }
    echo_.emplace_back(key, value);
}

void SectionReader::fail(const std::string& key, const std::string& what) const {
    auto it = lines_.find(key);
    std::string where = (it != lines_.end()) ? " (line " + std::to_string(it->second) + ")" : "";
    throw ConfigError("key '" + key + "' in [" + section_ + "]: " + what + where);
}

void SectionReader::check(bool ok, const std::string& key, const std::string& what) const {
    if (!ok) fail(key, what);
}

double SectionReader::require_double(const std::string& key) {
    const auto* e = find(key);
    if (!e) throw ConfigError("missing required key '" + key + "' in [" + section_ + "]");
    lines_[key] = e->line;
    try {
        std::size_t pos = 0;
        double v = std::stod(e->value, &pos);
        if (pos != e->value.size()) throw std::invalid_argument("trailing characters");
        record(key, format_double(v));
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(key, "malformed numeric value '" + e->value + "'");
    }
}

double SectionReader::get_double(const std::string& key, double def) {
    if (!raw_.find(section_, key)) {
        record(key, format_double(def));
        return def;
    }
    return require_double(key);
}

long SectionReader::require_long(const std::string& key) {
    const auto* e = find(key);
    if (!e) throw ConfigError("missing required key '" + key + "' in [" + section_ + "]");
    lines_[key] = e->line;
    try {
        std::size_t pos = 0;
        long v = std::stol(e->value, &pos);
        if (pos != e->value.size()) throw std::invalid_argument("trailing characters");
        record(key, std::to_string(v));
        return v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(key, "malformed integer value '" + e->value + "'");
    }
}

long SectionReader::get_long(const std::string& key, long def) {
    if (!raw_.find(section_, key)) {
        record(key, std::to_string(def));
        return def;
    }
    return require_long(key);
}

std::uint64_t SectionReader::get_u64(const std::string& key, std::uint64_t def) {
    if (!raw_.find(section_, key)) {
        record(key, std::to_string(def));
        return def;
    }
    return *optional_u64(key);
}

std::optional<std::uint64_t> SectionReader::optional_u64(const std::string& key) {
    const auto* e = find(key);
    if (!e) return std::nullopt;
    lines_[key] = e->line;
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(e->value, &pos);
        if (pos != e->value.size()) throw std::invalid_argument("trailing characters");
        record(key, std::to_string(v));
        return (std::uint64_t)v;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(key, "malformed unsigned integer value '" + e->value + "'");
    }
}

std::string SectionReader::require_string(const std::string& key) {
    const auto* e = find(key);
    if (!e) throw ConfigError("missing required key '" + key + "' in [" + section_ + "]");
    lines_[key] = e->line;
    record(key, e->value);
    return e->value;
}

std::string SectionReader::get_string(const std::string& key, const std::string& def) {
    if (!raw_.find(section_, key)) {
        record(key, def);
        return def;
    }
    return require_string(key);
}

std::vector<double> SectionReader::get_double_list(const std::string& key,
                                                   const std::vector<double>& def) {
    const auto* e = find(key);
    if (!e) {
        std::string joined;
        for (std::size_t i = 0; i < def.size(); ++i)
            joined += (i ? "," : "") + format_double(def[i]);
        record(key, joined);
        return def;
    }
    lines_[key] = e->line;
    std::vector<double> out;
    std::string item;
    std::istringstream in(e->value);
    try {
        while (std::getline(in, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            std::size_t pos = 0;
            out.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("trailing characters");
        }
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(key, "malformed list value '" + e->value + "'");
    }
    std::string joined;
    for (std::size_t i = 0; i < out.size(); ++i)
        joined += (i ? "," : "") + format_double(out[i]);
    record(key, joined);
    return out;
}

} // namespace fdcli
