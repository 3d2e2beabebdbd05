#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sugawara/gaudin.hpp"
#include "sugawara/linalg.hpp"
#include "sugawara/nc_matrix.hpp"
#include "sugawara/nc_element.hpp"
#include "sugawara/report.hpp"
#include "sugawara/w_algebra.hpp"
#include "sugawara/wpolynomial.hpp"

namespace sugawara {

/// Malformed input; location is a byte offset ("byte 17") for syntax errors
/// and a JSON pointer ("/terms/2/coeff") for structural ones.
class SerializationError : public std::runtime_error {
 public:
  SerializationError(const std::string& message, std::string location)
      : std::runtime_error(message + " at " + location), message_(message), location_(std::move(location)) {}
  [[nodiscard]] const std::string& message() const { return message_; }
  [[nodiscard]] const std::string& location() const { return location_; }

 private:
  std::string message_;
  std::string location_;
};

using Json = nlohmann::json;

// Terms are emitted in the element's canonical order (K-degree, word length,
// generator order) and object keys are sorted, so dump() is byte-stable.
Json to_json(const NcElement& x);
Json to_json(const WPolynomial& p);
Json to_json(const RationalMatrix& m);
/// Rows of element objects.
Json to_json(const NcMatrix& m);
Json to_json(const CheckReport& r);
Json to_json(const LaurentSeries<Rational>& s);
Json to_json(const DiffOperator<Rational>& op);
Json to_json(const ChiSeries& chi);

NcElement nc_element_from_json(const Json& j);
WPolynomial wpolynomial_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
NcMatrix nc_matrix_from_json(const Json& j);
CheckReport check_report_from_json(const Json& j);
ChiSeries chi_series_from_json(const Json& j);

/// Compact canonical text.
std::string serialize(const NcElement& x);
std::string serialize(const WPolynomial& p);

/// Parses JSON text; syntax errors carry their byte offset.
Json parse_json(std::string_view text);
NcElement parse_nc_element(std::string_view text);
WPolynomial parse_wpolynomial(std::string_view text);
ChiSeries parse_chi_series(std::string_view text);

}  // namespace sugawara
