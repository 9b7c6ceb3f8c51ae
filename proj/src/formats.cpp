#include "eulerian/formats.hpp"

#include <json.hpp>

#include <sstream>

namespace eulerian {

std::vector<OutputRecord> records_from(const Triangle& tri) {
    std::vector<OutputRecord> out;
    for (int n = 0; n <= tri.max_row(); ++n)
        for (int k = 0; k <= n; ++k)
            out.push_back({tri.family(), n, k, to_decimal(tri.at(n, k))});
    return out;
}

std::string format_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream os;
    int current = -1;
    for (const OutputRecord& r : records) {
        if (r.n != current) {
            if (current >= 0) os << '\n';
            os << r.n;
            current = r.n;
        }
        os << ',' << r.value;
    }
    if (current >= 0) os << '\n';
    return os.str();
}

std::string format_bfile(const std::vector<OutputRecord>& records, long offset) {
    std::ostringstream os;
    long index = offset;
    for (const OutputRecord& r : records) os << index++ << ' ' << r.value << '\n';
    return os.str();
}

std::string format_json(const std::vector<OutputRecord>& records, Family family) {
    nlohmann::json rows = nlohmann::json::array();
    for (const OutputRecord& r : records) {
        if (r.k == 0) rows.push_back(nlohmann::json::array());
        rows.back().push_back(r.value);
    }
    nlohmann::json doc;
    doc["family"] = family_name(family);
    doc["rows"] = rows;
    return doc.dump() + "\n";
}

std::vector<Row> parse_csv_rows(const std::string& text) {
    std::vector<Row> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        Row row;
        bool first = true;
        while (std::getline(ls, cell, ',')) {
            if (first) {
                first = false;  // leading cell is the row index
                continue;
            }
            row.push_back(BigInt(cell));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<BigInt> parse_bfile_values(const std::string& text) {
    std::vector<BigInt> values;
    std::istringstream is(text);
    std::string index, value;
    while (is >> index >> value) values.push_back(BigInt(value));
    return values;
}

std::vector<Row> parse_json_rows(const std::string& text) {
    nlohmann::json doc = nlohmann::json::parse(text);
    std::vector<Row> rows;
    for (const auto& jrow : doc.at("rows")) {
        Row row;
        for (const auto& cell : jrow) row.push_back(BigInt(cell.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace eulerian
