#include "csv.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "config.hpp"

namespace fdcli {

CsvDocument::CsvDocument(std::string command) : command_(std::move(command)) {}

void CsvDocument::add_metadata(const std::string& key, const std::string& value) {
    metadata_.emplace_back(key, value);
}

void CsvDocument::add_metadata(const MetadataList& list) {
    for (const auto& kv : list) metadata_.push_back(kv);
}

void CsvDocument::set_header(const std::string& header) { header_ = header; }

void CsvDocument::add_row(const std::vector<double>& values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i)
        line += (i ? "," : "") + format_double(values[i]);
    rows_.push_back(std::move(line));
}

void CsvDocument::add_row_text(const std::string& line) { rows_.push_back(line); }

std::string CsvDocument::str() const {
    std::ostringstream out;
    out << "# fracdiff " << command_ << "\n";
    for (const auto& [k, v] : metadata_) out << "# " << k << " = " << v << "\n";
    if (!header_.empty()) out << header_ << "\n";
    for (const auto& row : rows_) out << row << "\n";
    return out.str();
}

void CsvDocument::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write output file: " + path);
    out << str();
}

CsvTable CsvTable::read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open CSV file: " + path);
    CsvTable table;
    std::string line;
    bool have_header = false;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::istringstream row(line);
        std::string cell;
        if (!have_header) {
            while (std::getline(row, cell, ',')) table.columns.push_back(cell);
            have_header = true;
            continue;
        }
        std::vector<double> values;
        while (std::getline(row, cell, ',')) {
            try {
                values.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw std::runtime_error(path + ": malformed numeric cell '" + cell + "' (line " +
                                         std::to_string(line_no) + ")");
            }
        }
        if (values.size() != table.columns.size())
            throw std::runtime_error(path + ": row width mismatch (line " +
                                     std::to_string(line_no) + ")");
        table.rows.push_back(std::move(values));
    }
    if (!have_header) throw std::runtime_error(path + ": missing header row");
    return table;
}

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return (int)i;
    return -1;
}

} // namespace fdcli
