#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "disten/constructions.hpp"
#include "disten/energy.hpp"
#include "disten/extraction.hpp"

namespace disten {

/// Declarative experiment: a registered generator swept over a parameter,
/// with registered metrics and an optional reference formula for ratios.
struct ExperimentDescriptor {
  std::string name;
  std::string generator;            // grid | behrend_collinear | random | elekes | line | parabola | circle | intrange
  std::vector<std::string> measurements;
  std::vector<std::uint64_t> sweep;
  std::vector<std::uint64_t> seeds{0};
  std::optional<std::string> reference;
};

/// Parses and validates a JSON descriptor (unknown ids are rejected).
ExperimentDescriptor parse_experiment_descriptor(const std::string& json_text);

const std::vector<std::string>& registered_generators();
const std::vector<std::string>& registered_metrics();
const std::vector<std::string>& registered_references();

/// Runs the experiment and renders the CSV report: one row per
/// (sweep value, seed), sorted, with exact integer metrics and a 6
/// significant digit ratio column against the reference formula.
/// Byte-identical output for identical descriptors, any thread count.
std::string run_experiment(const ExperimentDescriptor& descriptor, unsigned threads = 1);

/// Runs every exact module invariant at desk scale, printing one line per
/// check ("ok NAME" / "FAIL NAME: detail"). Returns the number of failures.
int verify_suite(std::ostream& out);

/// Decimal with 6 significant digits, the report format for ratios.
std::string format_sig6(double value);

}  // namespace disten
