#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace moca {

/// Error raised for unreadable, malformed or contract-violating data inputs.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AttributeKind { nominal, numeric };

/// Per-attribute metadata inferred from the loaded records. Nominal
/// attributes keep their distinct values in first-occurrence order; record
/// values are encoded as indices into that list. Numeric attributes keep
/// observed bounds and records store their parsed values directly.
struct AttributeMeta {
  std::string name;
  AttributeKind kind = AttributeKind::nominal;
  std::vector<std::string> nominal_values;
  double numeric_min = 0.0;
  double numeric_max = 0.0;

  bool operator==(const AttributeMeta&) const = default;
};

struct Dataset {
  std::vector<AttributeMeta> attributes;
  std::vector<std::string> class_labels;
  std::vector<std::vector<double>> records;  // encoded, one row per record
  std::vector<int> record_classes;           // index into class_labels

  std::size_t size() const { return records.size(); }
  std::size_t attribute_count() const { return attributes.size(); }

  /// Index of a class label, or -1 when absent.
  int class_index(const std::string& label) const;

  /// Decode an encoded value of attribute `attr` back to its text form.
  std::string format_value(std::size_t attr, double value) const;

  bool operator==(const Dataset&) const = default;
};

struct DataSplit {
  std::vector<std::size_t> train_indices;
  std::vector<std::size_t> test_indices;
  std::uint64_t seed = 0;
  double train_fraction = 0.0;
};

struct LoadOptions {
  std::string class_column;       // column name (with header) or zero-based index
  char delimiter = ',';
  std::string missing_marker = "?";
  bool has_header = false;
  /// Treat every attribute column as nominal regardless of content.
  bool force_nominal_all = false;
  /// Columns (names or zero-based indices, pre-class-removal) forced nominal.
  std::vector<std::string> force_nominal_columns;
};

/// Load a delimited file into a Dataset. Rows containing the missing marker
/// are dropped. A column is numeric iff every retained value parses as a
/// finite number (unless forced nominal). Headerless attribute columns are
/// named a1..aN in dataset order.
Dataset load_csv(const std::string& path, const LoadOptions& opts);

/// Deterministic stratified split: per-class counts in train match the full
/// dataset within +-1 record. Every class needs at least 2 records.
DataSplit stratified_split(const Dataset& dataset, double train_fraction,
                           std::uint64_t seed);

/// Most frequent class over `indices`; ties break toward the earlier label
/// in class_labels order. Returns a class index.
int majority_class(const Dataset& dataset, std::span<const std::size_t> indices);

}  // namespace moca
