#ifndef INVTENSOR_IO_HPP
#define INVTENSOR_IO_HPP

#include <string>

#include <json.hpp>

#include "invtensor/construct.hpp"
#include "invtensor/positivity.hpp"

namespace invtensor {

using Json = nlohmann::json;

/// Parse failures and missing fields raise InvalidInput.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// {"n": int, "weights": [{"set": [...], "w": int}, ...]}, nonzero weights only.
Json wsc_to_json(const Wsc& w);
Wsc wsc_from_json(const Json& j);

/// {"order": int, "mul": [[...]]}
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {"group": ..., "complex": ..., "vertex_act": [[...]], "copy_act": [[...]]}
Json action_to_json(const WscAction& a);
WscAction action_from_json(const Json& j);

/// {"dims": [...], "entries": [[re, im], ...]}, row-major.
Json tensor_to_json(const GlobalTensor& t);
GlobalTensor tensor_from_json(const Json& j);

/// {"action", "r", "dims", "locals": [[[re, im], ...] per site], "algebra",
/// "shapes": [[rows, cols], ...], "separable", "purification"}
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {"action", "r", "dims", "matrices": [site][j] = [[[re, im], ...], ...]}
Json psd_family_to_json(const PsdFamily& f);
PsdFamily psd_family_from_json(const Json& j);

/// {"n", "r", "d": [site][l] = [re, im]}
Json coefficients_to_json(const IndicatorCoefficients& c);
IndicatorCoefficients coefficients_from_json(const Json& j);

Json report_to_json(const ValidationReport& rep);

}  // namespace invtensor

#endif
