#pragma once

#include <string>
#include <vector>

#include "pwss/types.hpp"

namespace pwss {

// One dataset/synthetic attribute: the model spec plus how raw values are
// read (percent columns are stored as 0..100) and the range used when values
// are synthesised instead of sampled.
struct AttributeConfig {
  QoSAttributeSpec spec;
  int column = -1;        // 0-based dataset column; -1 = synthetic only
  bool percentage = false;
  double synthetic_min = 0.0;
  double synthetic_max = 1.0;
};

std::vector<AttributeConfig> default_qws_attributes();

// Reads a JSON array of attribute configs; unknown directions or aggregation
// names are errors.
std::vector<AttributeConfig> load_attribute_config(const std::string& path);

struct QwsService {
  std::string name;
  std::vector<double> qos;  // aligned with the attribute config
};

struct QwsDataset {
  std::vector<QwsService> services;
  int skipped = 0;  // malformed rows
  std::vector<std::string> warnings;
};

// Parses the comma-separated dataset. Malformed rows are skipped with a
// warning; zero usable rows is a hard error.
QwsDataset ingest_qws(const std::string& path,
                      const std::vector<AttributeConfig>& attributes);

}  // namespace pwss
