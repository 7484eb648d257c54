#include "ptcubic/io.hpp"

#include "ptcubic/errors.hpp"

#include <ostream>

namespace ptcubic {

using nlohmann::json;

json rational_to_json(const ExactRational& q) {
    return json{{"num", q.numerator_string()}, {"den", q.denominator_string()}};
}

ExactRational rational_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den") || !j["num"].is_string() || !j["den"].is_string())
        throw InvalidArgument("rational must be an object with string fields num and den");
    return ExactRational::from_parts(j["num"].get<std::string>(), j["den"].get<std::string>());
}

json series_to_json(const EnergySeries& series) {
    json coeffs = json::array();
    for (const auto& c : series.coefficients) coeffs.push_back(rational_to_json(c));
    return json{{"model", std::string(model_name(series.model.id))}, {"coefficients", coeffs}};
}

EnergySeries series_from_json(const json& j) {
    try {
        EnergySeries series{build_model(parse_model(j.at("model").get<std::string>())), {}};
        for (const auto& c : j.at("coefficients")) series.coefficients.push_back(rational_from_json(c));
        return series;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed energy series JSON: ") + e.what());
    }
}

json tensor_to_json(const CoefficientTensor& tensor) {
    json entries = json::array();
    const int d = tensor.model().dimension;
    tensor.for_each_nonzero([&](int n, const MultiIndex& m, const ExactRational& v) {
        json exps = json::array();
        for (int i = 0; i < d; ++i) exps.push_back(m[i]);
        entries.push_back(json::array({n, exps, v.numerator_string(), v.denominator_string()}));
    });
    return json{{"model", std::string(model_name(tensor.model().id))},
                {"max_order", tensor.max_order()},
                {"parity_pruning", tensor.parity_pruned()},
                {"entries", entries}};
}

CoefficientTensor tensor_from_json(const json& j) {
    try {
        CoefficientTensor tensor(build_model(parse_model(j.at("model").get<std::string>())),
                                 j.at("max_order").get<int>(), j.value("parity_pruning", true));
        const int d = tensor.model().dimension;
        for (const auto& e : j.at("entries")) {
            if (!e.is_array() || e.size() != 4) throw InvalidArgument("tensor entry must be [n, [m...], num, den]");
            const auto& exps = e[1];
            if (!exps.is_array() || static_cast<int>(exps.size()) != d)
                throw InvalidArgument("tensor entry exponent list does not match the model dimension");
            MultiIndex m{};
            for (int i = 0; i < d; ++i) m[i] = exps[static_cast<std::size_t>(i)].get<int>();
            tensor.set(e[0].get<int>(), m, ExactRational::from_parts(e[2].get<std::string>(), e[3].get<std::string>()));
        }
        return tensor;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed coefficient tensor JSON: ") + e.what());
    }
}

json envelope(const json& config, const json& data) {
    return json{{"tool_version", kToolVersion}, {"config", config}, {"data", data}};
}

void write_grid_binary(const PotentialGrid& grid, std::ostream& out) {
    out.write(reinterpret_cast<const char*>(grid.values.data()),
              static_cast<std::streamsize>(grid.values.size() * sizeof(double)));
}

json grid_sidecar(const PotentialGrid& grid) {
    return json{{"model", std::string(model_name(grid.model))},
                {"g", grid.g},
                {"nx", grid.nx},
                {"ny", grid.ny},
                {"extent", grid.extent},
                {"dtype", "float64"},
                {"order", "row-major, y outer"}};
}

}  // namespace ptcubic
