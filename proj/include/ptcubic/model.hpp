#pragma once

#include "ptcubic/rational.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ptcubic {

enum class ModelId { Cubic1D, XY2_2D, XYZ_3D, HenonHeiles2D };

inline constexpr std::array<ModelId, 4> kAllModels{ModelId::Cubic1D, ModelId::XY2_2D,
                                                   ModelId::XYZ_3D, ModelId::HenonHeiles2D};

inline constexpr int kMaxDimension = 3;

/// Exponent multi-index; unused trailing slots stay zero.
using MultiIndex = std::array<int, kMaxDimension>;

struct Monomial {
    ExactRational coefficient;
    MultiIndex exponents{};
};

/// A cubic perturbation of the d-dimensional oscillator H0 = sum(p_i^2 + x_i^2).
/// `perturbation` is the real auxiliary cubic W; the physical Hamiltonian is
/// H0 + i g W.
struct ModelSpec {
    ModelId id;
    int dimension;
    ExactRational unperturbed_energy;
    std::vector<Monomial> perturbation;

    /// W evaluated at a point (only the first `dimension` coordinates are read).
    [[nodiscard]] double evaluate_perturbation(const std::array<double, kMaxDimension>& x) const;
};

ModelSpec build_model(ModelId id);

/// Short names used on the command line and in output files: c1d, xy2, xyz, hh.
[[nodiscard]] std::string_view model_name(ModelId id);
ModelId parse_model(std::string_view name);

}  // namespace ptcubic
