#include "probqsar/dataio/dataset.hpp"

#include <algorithm>
#include <cmath>

#include "probqsar/chem/smiles.hpp"
#include "probqsar/dataio/bytes.hpp"
#include "probqsar/errors.hpp"
#include "probqsar/feat/fnv.hpp"

namespace probqsar::dataio {

size_t CsvTable::column(const std::string &name) const {
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) {
      return i;
    }
  }
  throw MissingColumn("column '" + name + "' not found in header");
}

CsvTable parse_delimited(const std::string &text) {
  // detect delimiter on the header line
  char delim = ',';
  for (char c : text) {
    if (c == '\n') {
      break;
    }
    if (c == '\t') {
      delim = '\t';
      break;
    }
  }

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  size_t i = 0;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
  };
  auto end_row = [&] {
    end_field();
    rows.push_back(std::move(row));
    row.clear();
  };
  while (i < text.size()) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && field.empty()) {
      in_quotes = true;
    } else if (c == delim) {
      end_field();
    } else if (c == '\n') {
      end_row();
    } else if (c != '\r') {
      field += c;
    }
    ++i;
  }
  if (!field.empty() || !row.empty()) {
    end_row();
  }

  CsvTable table;
  if (rows.empty()) {
    throw NoValidRows("input has no header row");
  }
  table.header = rows.front();
  table.rows.assign(rows.begin() + 1, rows.end());
  return table;
}

CsvTable read_delimited(const std::string &path) {
  return parse_delimited(read_file(path));
}

bool SkipCounts::balanced() const {
  return input_rows == kept + duplicate_merged + missing_value + parse_error +
                           multi_component + out_of_range;
}

std::string SkipCounts::summary() const {
  return "rows=" + std::to_string(input_rows) + " kept=" +
         std::to_string(kept) + " missing_value=" +
         std::to_string(missing_value) + " parse_error=" +
         std::to_string(parse_error) + " multi_component=" +
         std::to_string(multi_component) + " out_of_range=" +
         std::to_string(out_of_range) + " duplicate_merged=" +
         std::to_string(duplicate_merged);
}

uint64_t Dataset::fingerprint() const {
  feat::Fnv1a h;
  h.update_u64(records.size());
  for (const auto &rec : records) {
    h.update_string(rec.compound_id).update_byte(0);
    h.update_string(rec.smiles).update_byte(0);
    uint64_t bits;
    static_assert(sizeof(bits) == sizeof(rec.pchembl));
    std::memcpy(&bits, &rec.pchembl, sizeof(bits));
    h.update_u64(bits);
  }
  return h.digest();
}

namespace {

bool parse_double(const std::string &s, double *out) {
  if (s.empty()) {
    return false;
  }
  size_t pos = 0;
  try {
    *out = std::stod(s, &pos);
  } catch (const std::exception &) {
    return false;
  }
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  return pos == s.size();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

}  // namespace

Dataset load_chembl_csv(const std::string &path, const ColumnMap &columns) {
  const CsvTable table = read_delimited(path);
  const size_t col_smiles = table.column(columns.smiles);
  const size_t col_pchembl = table.column(columns.pchembl);
  const size_t col_id = table.column(columns.id);

  Dataset ds;
  ds.provenance.source_path = path;
  ds.provenance.filter_log.push_back("required columns: " + columns.smiles +
                                     ", " + columns.pchembl + ", " +
                                     columns.id);
  SkipCounts &skips = ds.provenance.skips;
  skips.input_rows = table.rows.size();

  std::vector<std::string> id_order;
  std::map<std::string, std::vector<std::pair<std::string, double>>> by_id;
  for (const auto &row : table.rows) {
    const size_t width = row.size();
    const std::string smiles = col_smiles < width ? row[col_smiles] : "";
    const std::string pchembl = col_pchembl < width ? row[col_pchembl] : "";
    const std::string id = col_id < width ? row[col_id] : "";

    double value = 0.0;
    if (smiles.empty() || !parse_double(pchembl, &value)) {
      ++skips.missing_value;
      continue;
    }
    if (!std::isfinite(value) || value < 0.0 || value > 14.0) {
      ++skips.out_of_range;
      continue;
    }
    try {
      chem::parse_smiles(smiles);
    } catch (const chem::ParseError &e) {
      if (e.kind() == chem::ParseErrorKind::MultiComponentUnsupported) {
        ++skips.multi_component;
      } else {
        ++skips.parse_error;
      }
      continue;
    }
    if (by_id.find(id) == by_id.end()) {
      id_order.push_back(id);
    }
    by_id[id].emplace_back(smiles, value);
  }

  for (const auto &id : id_order) {
    const auto &rows = by_id[id];
    std::vector<double> values;
    for (const auto &[smiles, value] : rows) {
      values.push_back(value);
    }
    // first-seen SMILES represents the compound; median activity
    ds.records.push_back({rows.front().first, median(values), id});
    ++skips.kept;
    skips.duplicate_merged += rows.size() - 1;
  }

  if (ds.records.empty()) {
    throw NoValidRows("no valid records in " + path + " (" + skips.summary() +
                      ")");
  }
  ds.provenance.filter_log.push_back(skips.summary());
  return ds;
}

}  // namespace probqsar::dataio
