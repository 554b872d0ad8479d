#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "tenstwist/rational.hpp"
#include "tenstwist/twist.hpp"

namespace tenstwist {

// Fully validated scenario: the diagram, the generated action, hermitian
// data, normalized anisotropy flags, the polymer, and multiplicities.
struct Scenario {
  DynkinDiagram diagram;
  GaloisAction action;
  HermitianData hermitian;
  AnisotropyFlags flags;
  Polymer polymer;
  std::vector<std::pair<Part, Int>> multiplicities;
};

class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(std::vector<std::string> errors);
  const std::vector<std::string>& errors() const { return errors_; }

 private:
  std::vector<std::string> errors_;
};

// Parses and validates the JSON scenario text. Collects as many errors
// as it can and throws ScenarioError listing all of them; parse errors
// carry line and column, reference errors carry the field path.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

std::string part_to_string(const DynkinDiagram& d, const Part& t);

}  // namespace tenstwist
