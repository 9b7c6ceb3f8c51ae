#pragma once

#include "eulerian/numeric.hpp"
#include "eulerian/triangles.hpp"

#include <string>
#include <vector>

namespace eulerian {

/// One triangle entry ready for serialization; the decimal string
/// round-trips to the exact integer.
struct OutputRecord {
    Family family;
    int n = 0;
    int k = 0;
    std::string value;
};

std::vector<OutputRecord> records_from(const Triangle& tri);

// Lines "n,v0,...,vn", one per row.
std::string format_csv(const std::vector<OutputRecord>& records);

// OEIS b-file lines "index value", indices consecutive across rows starting
// at `offset`.
std::string format_bfile(const std::vector<OutputRecord>& records, long offset = 0);

// {"family": ..., "rows": [["1"], ["1","0"], ...]} with decimal strings.
std::string format_json(const std::vector<OutputRecord>& records, Family family);

// Decoders (used to verify that all encodings carry identical values).
std::vector<Row> parse_csv_rows(const std::string& text);
std::vector<BigInt> parse_bfile_values(const std::string& text);
std::vector<Row> parse_json_rows(const std::string& text);

}  // namespace eulerian
