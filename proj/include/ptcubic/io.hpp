#pragma once

// JSON and CSV encodings shared by the CLI and the Python module.

#include "ptcubic/series_engine.hpp"
#include "ptcubic/spectral.hpp"
#include "ptcubic/wkb.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ptcubic {

inline constexpr const char* kToolVersion = "1.0.0";

nlohmann::json rational_to_json(const ExactRational& q);
ExactRational rational_from_json(const nlohmann::json& j);

/// {"model", "coefficients": [{"num","den"}, ...]}
nlohmann::json series_to_json(const EnergySeries& series);
EnergySeries series_from_json(const nlohmann::json& j);

/// {"model", "max_order", "parity_pruning", "entries": [[n, [j,k,l], "num", "den"], ...]}
nlohmann::json tensor_to_json(const CoefficientTensor& tensor);
CoefficientTensor tensor_from_json(const nlohmann::json& j);

/// Top-level {"tool_version", "config", "data"} wrapper.
nlohmann::json envelope(const nlohmann::json& config, const nlohmann::json& data);

/// Raw float64 row-major dump of a potential grid plus its JSON sidecar.
void write_grid_binary(const PotentialGrid& grid, std::ostream& out);
nlohmann::json grid_sidecar(const PotentialGrid& grid);

}  // namespace ptcubic
