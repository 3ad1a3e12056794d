#include "pwss/qws.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace pwss {

namespace {

AttributeConfig make_config(const char* name, Direction direction,
                            AggregationKind aggregation, const char* unit,
                            int column, bool percentage, double lo, double hi) {
  AttributeConfig c;
  c.spec.name = name;
  c.spec.direction = direction;
  c.spec.aggregation = aggregation;
  c.spec.unit = unit;
  c.column = column;
  c.percentage = percentage;
  c.synthetic_min = lo;
  c.synthetic_max = hi;
  return c;
}

}  // namespace

// The nine QWS columns in file order. Percent-scaled attributes aggregate as
// products, response-time-like ones as critical-path sums, throughput as the
// bottleneck minimum. Synthetic ranges roughly track the dataset's spread.
std::vector<AttributeConfig> default_qws_attributes() {
  using D = Direction;
  using A = AggregationKind;
  return {
      make_config("response_time", D::Negative, A::CriticalPath, "ms", 0, false,
                  20.0, 1500.0),
      make_config("availability", D::Positive, A::Multiplicative, "fraction", 1,
                  true, 0.70, 1.0),
      make_config("throughput", D::Positive, A::Bottleneck, "invokes/s", 2,
                  false, 1.0, 40.0),
      make_config("successability", D::Positive, A::Multiplicative, "fraction",
                  3, true, 0.70, 1.0),
      make_config("reliability", D::Positive, A::Multiplicative, "fraction", 4,
                  true, 0.50, 0.95),
      make_config("compliance", D::Positive, A::Multiplicative, "fraction", 5,
                  true, 0.50, 1.0),
      make_config("best_practices", D::Positive, A::Multiplicative, "fraction",
                  6, true, 0.50, 0.95),
      make_config("latency", D::Negative, A::CriticalPath, "ms", 7, false, 1.0,
                  300.0),
      make_config("documentation", D::Positive, A::Multiplicative, "fraction",
                  8, true, 0.05, 1.0),
  };
}

std::vector<AttributeConfig> load_attribute_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  nlohmann::json j;
  in >> j;
  std::vector<AttributeConfig> out;
  for (const nlohmann::json& e : j) {
    AttributeConfig c;
    c.spec.name = e.at("name").get<std::string>();
    c.spec.direction =
        direction_from_string(e.at("direction").get<std::string>());
    c.spec.aggregation =
        aggregation_from_string(e.at("aggregation").get<std::string>());
    if (e.contains("weight")) c.spec.weight = e.at("weight").get<double>();
    if (e.contains("unit")) c.spec.unit = e.at("unit").get<std::string>();
    if (e.contains("column")) c.column = e.at("column").get<int>();
    if (e.contains("percentage")) c.percentage = e.at("percentage").get<bool>();
    if (e.contains("synthetic_min"))
      c.synthetic_min = e.at("synthetic_min").get<double>();
    if (e.contains("synthetic_max"))
      c.synthetic_max = e.at("synthetic_max").get<double>();
    out.push_back(std::move(c));
  }
  if (out.empty()) throw std::runtime_error(path + " defines no attributes");
  return out;
}

namespace {

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

bool parse_number(const std::string& text, double& out) {
  std::size_t consumed = 0;
  try {
    out = std::stod(text, &consumed);
  } catch (const std::exception&) {
    return false;
  }
  while (consumed < text.size() &&
         (text[consumed] == ' ' || text[consumed] == '\t' ||
          text[consumed] == '\r'))
    ++consumed;
  return consumed == text.size() && std::isfinite(out);
}

}  // namespace

QwsDataset ingest_qws(const std::string& path,
                      const std::vector<AttributeConfig>& attributes) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);

  int max_column = -1;
  for (const AttributeConfig& attr : attributes)
    max_column = std::max(max_column, attr.column);
  if (max_column < 0)
    throw std::runtime_error("attribute config maps no dataset columns");

  QwsDataset out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string> fields = split_csv(line);
    if (static_cast<int>(fields.size()) <= max_column) {
      ++out.skipped;
      out.warnings.push_back("line " + std::to_string(line_no) + ": only " +
                             std::to_string(fields.size()) + " fields");
      continue;
    }
    QwsService svc;
    svc.qos.reserve(attributes.size());
    bool ok = true;
    for (const AttributeConfig& attr : attributes) {
      double value = 0.0;
      if (attr.column < 0 ||
          !parse_number(fields[static_cast<std::size_t>(attr.column)], value)) {
        ok = false;
        out.warnings.push_back("line " + std::to_string(line_no) +
                               ": cannot parse " + attr.spec.name);
        break;
      }
      if (attr.percentage) {
        if (value < 0.0 || value > 100.0) {
          ok = false;
          out.warnings.push_back("line " + std::to_string(line_no) + ": " +
                                 attr.spec.name + " outside [0,100]");
          break;
        }
        value /= 100.0;
      }
      svc.qos.push_back(value);
    }
    if (!ok) {
      ++out.skipped;
      continue;
    }
    svc.name = static_cast<std::size_t>(max_column) + 1 < fields.size()
                   ? fields[static_cast<std::size_t>(max_column) + 1]
                   : "row" + std::to_string(line_no);
    out.services.push_back(std::move(svc));
  }
  if (out.services.empty())
    throw std::runtime_error(path + " yields no usable service records");
  return out;
}

}  // namespace pwss
