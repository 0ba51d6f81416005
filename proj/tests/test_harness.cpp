#include <doctest.h>

#include <sstream>

#include "disten/harness.hpp"

using namespace disten;

TEST_CASE("descriptor parsing and validation") {
  SUBCASE("round trip") {
    auto desc = parse_experiment_descriptor(R"({
      "name": "grid-E2",
      "generator": "grid",
      "measurements": ["E2", "D"],
      "sweep": [16, 64],
      "seeds": [0, 1],
      "reference": "n^3 log n"
    })");
    CHECK(desc.name == "grid-E2");
    CHECK(desc.measurements.size() == 2);
    CHECK(desc.sweep == std::vector<std::uint64_t>{16, 64});
  }
  SUBCASE("defaults") {
    auto desc = parse_experiment_descriptor(
        R"({"name":"d","generator":"grid","measurements":["D"],"sweep":[4]})");
    CHECK(desc.seeds == std::vector<std::uint64_t>{0});
    CHECK_FALSE(desc.reference.has_value());
  }
  SUBCASE("unknown ids are rejected") {
    CHECK_THROWS_AS(parse_experiment_descriptor(
                        R"({"name":"x","generator":"torus","measurements":["D"],"sweep":[4]})"),
                    validation_error);
    CHECK_THROWS_AS(parse_experiment_descriptor(
                        R"({"name":"x","generator":"grid","measurements":["Z9"],"sweep":[4]})"),
                    validation_error);
    CHECK_THROWS_AS(
        parse_experiment_descriptor(
            R"({"name":"x","generator":"grid","measurements":["D"],"sweep":[4],"reference":"n^9"})"),
        validation_error);
    CHECK_THROWS_AS(parse_experiment_descriptor("not json"), validation_error);
    CHECK_THROWS_AS(parse_experiment_descriptor(
                        R"({"name":"x","generator":"grid","measurements":[],"sweep":[4]})"),
                    validation_error);
  }
}

TEST_CASE("run_experiment output shape and determinism") {
  ExperimentDescriptor desc;
  desc.name = "grid-demo";
  desc.generator = "grid";
  desc.measurements = {"E2", "D"};
  desc.sweep = {16, 64, 256};
  desc.seeds = {0};
  desc.reference = "n^3 log n";

  auto csv = run_experiment(desc, 1);
  CHECK(csv.find("# experiment: grid-demo") == 0);
  CHECK(csv.find("param,seed,E2,D,reference,ratio") != std::string::npos);
  // one row per sweep point
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 3);

  CHECK(run_experiment(desc, 1) == csv);
  CHECK(run_experiment(desc, 4) == csv);

  // unsorted sweeps serialize in ascending order
  ExperimentDescriptor shuffled = desc;
  shuffled.sweep = {256, 16, 64};
  CHECK(run_experiment(shuffled, 1) == csv);
}

TEST_CASE("elekes experiment reports ratios at most 4") {
  ExperimentDescriptor desc;
  desc.name = "elekes-D";
  desc.generator = "elekes";
  desc.measurements = {"D"};
  desc.sweep = {2, 3};
  desc.reference = "sqrt(m n)";
  auto csv = run_experiment(desc, 1);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // comment
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    auto last_comma = line.rfind(',');
    REQUIRE(last_comma != std::string::npos);
    double ratio = std::stod(line.substr(last_comma + 1));
    CHECK(ratio <= 4.0);
  }
}

TEST_CASE("subset metrics run end to end") {
  ExperimentDescriptor desc;
  desc.name = "subset-growth";
  desc.generator = "grid";
  desc.measurements = {"subset_E3"};
  desc.sweep = {100};
  desc.seeds = {1, 2};
  auto csv = run_experiment(desc, 1);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2 + 2);
}

TEST_CASE("format_sig6") {
  CHECK(format_sig6(1234567.0) == "1.23457e+06");
  CHECK(format_sig6(0.5) == "0.5");
  CHECK(format_sig6(3.0) == "3");
}

TEST_CASE("verify_suite passes on a healthy build") {
  std::ostringstream sink;
  CHECK(verify_suite(sink) == 0);
  CHECK(sink.str().find("FAIL") == std::string::npos);
  CHECK(sink.str().find("ok sqdist-symmetry-zero") != std::string::npos);
}
