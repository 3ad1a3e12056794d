// Dataset ingestion: parsing, percent scaling, skip accounting, config I/O.

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pwss/qws.hpp"

using namespace pwss;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(name) {
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

// Two metric columns, then the service name.
std::vector<AttributeConfig> tiny_config() {
  std::vector<AttributeConfig> out(2);
  out[0].spec.name = "rt";
  out[0].spec.direction = Direction::Negative;
  out[0].spec.aggregation = AggregationKind::CriticalPath;
  out[0].column = 0;
  out[1].spec.name = "av";
  out[1].spec.direction = Direction::Positive;
  out[1].spec.aggregation = AggregationKind::Multiplicative;
  out[1].column = 1;
  out[1].percentage = true;
  return out;
}

}  // namespace

TEST_CASE("the default attribute set matches the nine dataset columns") {
  const std::vector<AttributeConfig> attrs = default_qws_attributes();
  REQUIRE(attrs.size() == 9);
  const std::vector<std::string> names = {
      "response_time", "availability",  "throughput",
      "successability", "reliability",  "compliance",
      "best_practices", "latency",      "documentation"};
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    CHECK(attrs[i].spec.name == names[i]);
    CHECK(attrs[i].column == static_cast<int>(i));
    CHECK(attrs[i].synthetic_min < attrs[i].synthetic_max);
  }
  CHECK(attrs[0].spec.direction == Direction::Negative);
  CHECK(attrs[0].spec.aggregation == AggregationKind::CriticalPath);
  CHECK_FALSE(attrs[0].percentage);
  CHECK(attrs[1].percentage);
  CHECK(attrs[2].spec.aggregation == AggregationKind::Bottleneck);
  CHECK_FALSE(attrs[2].percentage);
  CHECK(attrs[7].spec.direction == Direction::Negative);
  CHECK(attrs[8].percentage);
}

TEST_CASE("percent columns are scaled to fractions") {
  const TempFile f("qws_ok.csv", "120.5,85,SvcA\n90,100,SvcB\n");
  const QwsDataset data = ingest_qws(f.path, tiny_config());
  REQUIRE(data.services.size() == 2);
  CHECK(data.skipped == 0);
  CHECK(data.services[0].name == "SvcA");
  CHECK(data.services[0].qos == std::vector<double>{120.5, 0.85});
  CHECK(data.services[1].qos == std::vector<double>{90.0, 1.0});
}

TEST_CASE("malformed rows are skipped with a warning, good rows survive") {
  const TempFile f("qws_mixed.csv",
                   "# comment line\n"
                   "\n"
                   "120,85,SvcA\n"
                   "oops,85,SvcB\n"
                   "130,None,SvcC\n"
                   "140,120,SvcD\n"
                   "90\n"
                   "95,50,SvcE\n");
  const QwsDataset data = ingest_qws(f.path, tiny_config());
  REQUIRE(data.services.size() == 2);
  CHECK(data.services[0].name == "SvcA");
  CHECK(data.services[1].name == "SvcE");
  CHECK(data.skipped == 4);
  REQUIRE(data.warnings.size() == 4);
  CHECK(data.warnings[0].find("line 4") != std::string::npos);
  CHECK(data.warnings[1].find("line 5") != std::string::npos);
  CHECK(data.warnings[2].find("outside [0,100]") != std::string::npos);
  CHECK(data.warnings[3].find("only 1 fields") != std::string::npos);
}

TEST_CASE("a file with no usable rows is a hard error") {
  const TempFile f("qws_bad.csv", "# only a comment\nnope,x,y\n");
  CHECK_THROWS_WITH_AS(ingest_qws(f.path, tiny_config()),
                       doctest::Contains("yields no usable service records"),
                       std::runtime_error);
  CHECK_THROWS_AS(ingest_qws("no_such_file.csv", tiny_config()),
                  std::runtime_error);
}

TEST_CASE("a row without a name field gets a positional name") {
  const TempFile f("qws_noname.csv", "120,85\n");
  const QwsDataset data = ingest_qws(f.path, tiny_config());
  REQUIRE(data.services.size() == 1);
  CHECK(data.services[0].name == "row1");
}

TEST_CASE("windows line endings are tolerated") {
  const TempFile f("qws_crlf.csv", "120,85,SvcA\r\n90,75,SvcB\r\n");
  const QwsDataset data = ingest_qws(f.path, tiny_config());
  CHECK(data.services.size() == 2);
  CHECK(data.services[1].name == "SvcB");
}

TEST_CASE("attribute config files load and reject unknown names") {
  const TempFile good("attrs_ok.json",
                      R"([{"name":"rt","direction":"negative",
                           "aggregation":"critical_path","unit":"ms",
                           "column":0,"synthetic_min":5,"synthetic_max":50},
                          {"name":"av","direction":"positive",
                           "aggregation":"multiplicative","column":1,
                           "percentage":true}])");
  const std::vector<AttributeConfig> attrs = load_attribute_config(good.path);
  REQUIRE(attrs.size() == 2);
  CHECK(attrs[0].spec.name == "rt");
  CHECK(attrs[0].spec.unit == "ms");
  CHECK(attrs[0].synthetic_min == 5.0);
  CHECK(attrs[0].synthetic_max == 50.0);
  CHECK(attrs[1].percentage);
  CHECK(attrs[1].column == 1);

  const TempFile bad("attrs_bad.json",
                     R"([{"name":"rt","direction":"sideways",
                          "aggregation":"critical_path"}])");
  CHECK_THROWS_AS(load_attribute_config(bad.path), std::invalid_argument);

  const TempFile empty("attrs_empty.json", "[]");
  CHECK_THROWS_AS(load_attribute_config(empty.path), std::runtime_error);
  CHECK_THROWS_AS(load_attribute_config("missing_attrs.json"),
                  std::runtime_error);
}

TEST_CASE("the shipped attribute config mirrors the built-in default") {
  const std::vector<AttributeConfig> shipped =
      load_attribute_config(PWSS_SOURCE_DIR "/data/qws_attributes.json");
  const std::vector<AttributeConfig> built_in = default_qws_attributes();
  REQUIRE(shipped.size() == built_in.size());
  for (std::size_t i = 0; i < shipped.size(); ++i) {
    CHECK(shipped[i].spec.name == built_in[i].spec.name);
    CHECK(shipped[i].spec.direction == built_in[i].spec.direction);
    CHECK(shipped[i].spec.aggregation == built_in[i].spec.aggregation);
    CHECK(shipped[i].column == built_in[i].column);
    CHECK(shipped[i].percentage == built_in[i].percentage);
    CHECK(shipped[i].synthetic_min == built_in[i].synthetic_min);
    CHECK(shipped[i].synthetic_max == built_in[i].synthetic_max);
  }
}
