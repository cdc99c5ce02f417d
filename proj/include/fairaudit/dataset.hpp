#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fairaudit {

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Record {
  int truth = 0;       // Y
  int prediction = 0;  // Yhat
  std::vector<std::uint8_t> attributes;  // binary group indicators
  std::vector<double> features;
};

// Immutable after construction; shared read-only by all audit code.
struct Dataset {
  std::vector<Record> records;
  std::vector<std::string> attribute_names;
  std::vector<std::string> feature_names;
  bool has_predictions = true;

  std::size_t size() const { return records.size(); }
  std::size_t attribute_index(const std::string& name) const;
  void validate() const;
  std::uint64_t fingerprint() const;  // FNV-1a over a canonical byte layout
};

struct CsvSchema {
  std::string truth_column = "y_true";
  // When absent, predictions default to 0 and has_predictions is false.
  std::optional<std::string> prediction_column = "y_pred";
  std::vector<std::string> attribute_columns;  // ignored when auto_attributes
  bool auto_attributes = false;  // all remaining binary columns become attributes
  std::vector<std::string> feature_columns;
};

struct SyntheticConfig {
  long long n_participants = 100;
  long long n_attributes = 1000;
  double base_rate = 0.5;          // P(Y = 1)
  double accuracy_group0 = 0.75;   // accuracy where attribute 0 has value 0
  double accuracy_group1 = 0.75;   // accuracy where attribute 0 has value 1
  double attribute_rate = 0.5;     // Bernoulli parameter of every attribute
  bool gaussian_feature = true;    // one N(0,1) feature per record
  std::uint64_t seed = 0;
};

Dataset load_csv(const std::string& path, const CsvSchema& schema);
void save_csv(const Dataset& data, const std::string& path);

// Label-flip model: Yhat = Y with probability accuracy(group of attribute 0),
// else 1 - Y. Single-threaded so a seed always reproduces the same bytes.
Dataset generate_synthetic(const SyntheticConfig& config);

// Disjoint partition of sizes (round(n*f), remainder), shuffled per seed.
std::pair<Dataset, Dataset> split(const Dataset& data, double train_fraction,
                                  std::uint64_t seed);

// Swaps the 0/1 coding of one attribute; group differences negate.
Dataset relabel_attribute(const Dataset& data, const std::string& attribute);

}  // namespace fairaudit
