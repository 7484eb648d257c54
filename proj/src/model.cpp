#include "ptcubic/model.hpp"

#include "ptcubic/errors.hpp"

#include <cmath>

namespace ptcubic {

double ModelSpec::evaluate_perturbation(const std::array<double, kMaxDimension>& x) const {
    double total = 0.0;
    for (const auto& term : perturbation) {
        double value = term.coefficient.to_double();
        for (int i = 0; i < dimension; ++i) value *= std::pow(x[i], term.exponents[i]);
        total += value;
    }
    return total;
}

ModelSpec build_model(ModelId id) {
    switch (id) {
        case ModelId::Cubic1D:
            return {id, 1, ExactRational(1), {{ExactRational(1), {3, 0, 0}}}};
        case ModelId::XY2_2D:
            return {id, 2, ExactRational(2), {{ExactRational(1), {1, 2, 0}}}};
        case ModelId::XYZ_3D:
            return {id, 3, ExactRational(3), {{ExactRational(1), {1, 1, 1}}}};
        case ModelId::HenonHeiles2D:
            return {id, 2, ExactRational(2),
                    {{ExactRational(1), {1, 2, 0}}, {ExactRational(-1, 3), {3, 0, 0}}}};
    }
    throw InvalidArgument("unknown model id " + std::to_string(static_cast<int>(id)));
}

std::string_view model_name(ModelId id) {
    switch (id) {
        case ModelId::Cubic1D: return "c1d";
        case ModelId::XY2_2D: return "xy2";
        case ModelId::XYZ_3D: return "xyz";
        case ModelId::HenonHeiles2D: return "hh";
    }
    return "unknown";
}

ModelId parse_model(std::string_view name) {
    for (ModelId id : kAllModels) {
        if (model_name(id) == name) return id;
    }
    throw InvalidArgument("unknown model '" + std::string(name) + "' (expected c1d, xy2, xyz or hh)");
}

}  // namespace ptcubic
