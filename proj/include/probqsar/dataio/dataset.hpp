#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace probqsar::dataio {

// Minimal delimiter-separated table with RFC-4180 style quoting. The
// delimiter (comma or tab) is auto-detected from the header line.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  size_t column(const std::string &name) const;  // throws MissingColumn
};

CsvTable read_delimited(const std::string &path);
CsvTable parse_delimited(const std::string &text);

struct ColumnMap {
  std::string smiles = "canonical_smiles";
  std::string pchembl = "pchembl_value";
  std::string id = "molecule_chembl_id";
};

struct ActivityRecord {
  std::string smiles;
  double pchembl = 0.0;
  std::string compound_id;
};

struct SkipCounts {
  size_t input_rows = 0;
  size_t kept = 0;
  size_t missing_value = 0;   // empty SMILES or empty/non-numeric pChEMBL
  size_t parse_error = 0;     // SMILES rejected by the parser
  size_t multi_component = 0; // '.' separated mixtures
  size_t out_of_range = 0;    // pChEMBL outside [0, 14] or non-finite
  size_t duplicate_merged = 0;

  // input_rows == kept + duplicate_merged + all skip reasons
  bool balanced() const;
  std::string summary() const;
};

struct Provenance {
  std::string source_path;
  std::vector<std::string> filter_log;
  SkipCounts skips;
};

struct Dataset {
  std::vector<ActivityRecord> records;
  Provenance provenance;

  uint64_t fingerprint() const;
};

// Keeps rows with parseable single-component SMILES and a numeric pChEMBL
// in [0, 14]; duplicate compound ids collapse to one record holding the
// median pChEMBL of their rows. Every dropped row is counted by reason.
Dataset load_chembl_csv(const std::string &path, const ColumnMap &columns);

}  // namespace probqsar::dataio
