#pragma once

// JSON forms of the public value types.

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>

#include "twistform/electrodynamics.hpp"
#include "twistform/families.hpp"
#include "twistform/weyl.hpp"

namespace twistform {

using nlohmann::json;

/// Malformed input; `where` is a JSON pointer to the offending value.
class SerializationError : public std::invalid_argument {
 public:
  SerializationError(std::string where, const std::string& what)
      : std::invalid_argument(where + ": " + what), where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// {"kind","parity","grade","dim","first_label","coeffs":{"0,1": …}}. Every
/// coefficient is written; on input missing tuples read as zero and
/// "first_label" defaults to `default_first_label`.
json to_json(const GradedElement& x);
GradedElement graded_from_json(const json& j, int default_first_label = 1,
                               const std::string& where = "");

/// {"w": GradedElement, "e": GradedElement} in normal form.
json to_json(const TensorQM& t);
TensorQM tensor_from_json(const json& j, const std::string& where = "");

/// Field families: polynomial, trig, plane_wave, coulomb, constant_field, zero.
/// Parameters may sit under "params" or at the top level.
SmoothForm field_from_json(const json& j, SpaceDescriptor space, const std::string& where = "");

json to_json(const CubeDomain& box);
CubeDomain cube_from_json(const json& j, int dim, const std::string& where = "");

json to_json(const DiracCurrent& d);
DiracCurrent dirac_from_json(const json& j, SpaceDescriptor space, const std::string& where = "");

/// {"lambda","mu","nu"} as row-major arrays, optional "offset" and
/// "dependence": "constant".
json to_json(const QuadraticDensity& k);
QuadraticDensity density_from_json(const json& j, SpaceDescriptor space,
                                   const std::string& where = "");

/// {"A": family, "G": "from_constitutive" | {...,"offset"}, "J": "zero" |
/// "from_maxwell" | {...,"offset"}}.
Trajectory trajectory_from_json(const json& j, const MinkowskiStructure& ms,
                                const std::string& where = "");

json to_json(const Verdict& v);

/// Parses text, reporting syntax errors with their byte offset.
json parse_json_text(const std::string& text, const std::string& source);

}  // namespace twistform
