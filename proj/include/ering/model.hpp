#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "ering/carrier.hpp"
#include "ering/mutants.hpp"

namespace ering {

/// A model file that does not parse or does not describe a valid carrier.
/// `field` is a JSON pointer ("/left/atoms"), empty for syntax errors.
class ModelError : public std::runtime_error {
public:
  ModelError(std::string source, std::size_t line, std::size_t column, std::string field, const std::string& message);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& field() const { return field_; }

private:
  std::string source_;
  std::size_t line_;
  std::size_t column_;
  std::string field_;
};

/// A loaded model: the carrier as described, and the mutation (if any) the
/// file asks for. Carrier-level mutations are already applied to `carrier`;
/// map-level ones are left for the suites to pick up.
struct Model {
  std::string name;
  CarrierPtr carrier;
  Mutation mutation = Mutation::none;
};

/// Model files are JSON objects:
///
///   {"kind": "function_ring", "atoms": [["x"], ["y", "z"]], "values": "int"}
///   {"kind": "function_ring", "atoms": 3, "values": "rational", "grid": 4}
///   {"kind": "matrix", "dim": 2}
///   {"kind": "product", "left": {...}, "right": {...}}
///
/// with optional "points" (defaults to the union of the atoms, in order),
/// "name", and a top-level "mutation". Unknown keys are errors.
Model parse_model(const std::string& text, const std::string& source = "<model>");
Model load_model(const std::filesystem::path& path);

}  // namespace ering
