#pragma once

// Tabular ingestion and the continuous encoding used as the diffusion space:
// continuous columns are standardized (population std), categorical feature
// columns become one-hot blocks. Label, sensitive and domain columns are
// routed to integer vectors and never appear in X.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fairdiff/matrix.hpp"

namespace fairdiff {

enum class FeatureKind { continuous, categorical };
enum class FeatureRole { feature, label, sensitive, domain };

struct FeatureSpec {
  std::string name;
  FeatureKind kind = FeatureKind::continuous;
  FeatureRole role = FeatureRole::feature;
  std::vector<std::string> categories;  // categorical only
  double mean = 0.0;                    // continuous, set by fit_encode
  double std = 1.0;

  std::optional<size_t> category_index(const std::string& value) const;
};

struct TabularSchema {
  std::vector<FeatureSpec> columns;
  bool fitted = false;

  /// One label, one sensitive, one domain column; categorical metadata sane.
  void validate() const;
  size_t column_index(const std::string& name) const;
  const FeatureSpec& label() const;
  const FeatureSpec& sensitive() const;
  const FeatureSpec& domain() const;
  std::vector<size_t> feature_columns() const;
  size_t encoded_width() const;
  /// FNV-1a over the canonical schema text, including fitted statistics.
  std::string fingerprint() const;

  std::string to_json() const;
  static TabularSchema from_json(const std::string& text);
  static TabularSchema load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;
};

struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  size_t dropped = 0;  // rows skipped because of the '?' missing marker
};

struct EncodedDataset {
  MatrixD x;
  std::vector<int> y;
  std::vector<int> z;  // -1 when the sensitive column is absent
  std::vector<int> d;  // -1 when the domain column is absent

  size_t size() const { return x.rows; }
  size_t width() const { return x.cols; }
  EncodedDataset subset(const std::vector<size_t>& rows) const;
  /// Throws a usage error if row counts disagree.
  void check_consistent() const;
};

using DomainPartition = std::map<int, std::vector<size_t>>;

struct LoadOptions {
  bool require_sensitive = true;
  bool require_domain = true;
};

/// Reads a headered CSV, keeps schema columns in schema order and drops rows
/// containing '?' in any schema column.
RawTable load_csv(const std::filesystem::path& path, const TabularSchema& schema, LoadOptions opts = {});
RawTable parse_csv(const std::string& text, const TabularSchema& schema, LoadOptions opts = {},
                   const std::string& source = "<memory>");
void write_csv(const std::filesystem::path& path, const RawTable& table);

struct EncodeFit {
  TabularSchema schema;
  EncodedDataset data;
};

EncodeFit fit_encode(const RawTable& rows, const TabularSchema& schema);
/// Encodes with an already fitted schema.
EncodedDataset encode(const RawTable& rows, const TabularSchema& fitted);

/// Decodes samples to feature columns in schema order plus the label column.
RawTable decode(const MatrixD& samples, const std::vector<int>& labels, const TabularSchema& fitted);
/// Index of the largest entry; ties resolve to the lowest index.
size_t argmax_block(const double* values, size_t n);

DomainPartition split_domains(const EncodedDataset& ds);

void write_encoded(const std::filesystem::path& path, const EncodedDataset& ds);
EncodedDataset read_encoded(const std::filesystem::path& path);

std::string format_number(double v);

}  // namespace fairdiff
