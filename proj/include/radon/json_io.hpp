#pragma once

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "radon/integrals.hpp"
#include "radon/weyl.hpp"

namespace radon {

using Json = nlohmann::ordered_json;

// bad user input; the CLI maps it to exit code 2
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// inline JSON (starting with '{' or '['), a bare JSON scalar, or a file path
Json load_json_arg(const std::string& arg);

Rational json_rational(const Json& j);
Complex json_complex(const Json& j);
ExactMatrix json_exact_matrix(const Json& j);
CMat json_cmat(const Json& j);  // also accepts {"diag": [...]}
std::vector<Rational> parse_rational_list(const std::string& csv);

Json to_json(const Rational& q);
Json to_json(const Complex& z);
Json to_json(const ExactMatrix& m);
Json to_json(const CMat& m);
Json to_json(const ExactJet& j);
Json to_json(const ExactH& h);
Json to_json(const ExactWeyl& w);
Json to_json(const ComplexWeyl& w);
Json to_json(const CharacterParams& p);
Json to_json(const IntegralEstimate& e);

ExactJet json_exact_jet(const Json& j, size_t r);
ExactH json_exact_h(const Json& j, const PartitionSpec& spec);
ExactWeyl json_exact_weyl(const Json& j, const PartitionSpec& spec);
// {"partition": "2,1,1", "r": 1, "alpha": [[...], ...] or flat [...], "m": 2r}
CharacterParams json_params(const Json& j);
// alpha only, shaped by spec
CharacterParams json_alpha(const Json& j, const PartitionSpec& spec);
PartitionSpec json_partition(const Json& j);

}  // namespace radon
