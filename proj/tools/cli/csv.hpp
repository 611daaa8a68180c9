#ifndef FRACDIFF_CLI_CSV_HPP
#define FRACDIFF_CLI_CSV_HPP

#include <string>
#include <utility>
#include <vector>

namespace fdcli {

using MetadataList = std::vector<std::pair<std::string, std::string>>;

// Builds a CSV document: commented metadata header (full parameter echo),
// a column header line, then rows. Numbers are rendered with %.17g so a rerun
// with the same configuration is byte-identical.
class CsvDocument {
public:
    explicit CsvDocument(std::string command);

    void add_metadata(const std::string& key, const std::string& value);
    void add_metadata(const MetadataList& list);
    void set_header(const std::string& header);
    void add_row(const std::vector<double>& values);
    void add_row_text(const std::string& line);

    std::string str() const;
    void write(const std::string& path) const;

private:
    std::string command_;
    MetadataList metadata_;
    std::string header_;
    std::vector<std::string> rows_;
};

// Parsed numeric CSV: '#' lines skipped, first non-comment line is the header.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    static CsvTable read(const std::string& path);
    int column(const std::string& name) const; // -1 when absent
};

} // namespace fdcli

#endif
