#include "ptcubic/series_engine.hpp"

#include "ptcubic/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <random>
#include <string>

namespace ptcubic {

namespace {

int total_degree(const MultiIndex& m) { return m[0] + m[1] + m[2]; }

struct CoordinateShape {
    int max_exponent = 0;
    bool uniform_parity = true;
    int parity = 0;
};

std::array<CoordinateShape, kMaxDimension> coordinate_shapes(const ModelSpec& model) {
    std::array<CoordinateShape, kMaxDimension> shapes{};
    for (int i = 0; i < model.dimension; ++i) {
        auto& s = shapes[i];
        bool first = true;
        for (const auto& term : model.perturbation) {
            const int e = term.exponents[i];
            s.max_exponent = std::max(s.max_exponent, e);
            if (first) {
                s.parity = e % 2;
                first = false;
            } else if (e % 2 != s.parity) {
                s.uniform_parity = false;
            }
        }
    }
    return shapes;
}

void check_model(const ModelSpec& model) {
    if (model.dimension < 1 || model.dimension > kMaxDimension)
        throw InvalidArgument("model dimension must be 1, 2 or 3");
    if (model.perturbation.empty()) throw InvalidArgument("model has no perturbation");
    for (const auto& term : model.perturbation) {
        if (total_degree(term.exponents) != 3)
            throw InvalidArgument("perturbation monomials must have total degree 3");
        for (int i = model.dimension; i < kMaxDimension; ++i) {
            if (term.exponents[i] != 0) throw InvalidArgument("exponent beyond model dimension");
        }
    }
}

}  // namespace

OrderLayout::OrderLayout(const ModelSpec& model, int order, bool parity_pruning)
    : dimension_(model.dimension), order_(order) {
    const auto shapes = coordinate_shapes(model);
    size_ = 1;
    for (int i = 0; i < kMaxDimension; ++i) {
        if (i >= dimension_) {
            offset_[i] = 0;
            step_[i] = 1;
            count_[i] = 1;
            continue;
        }
        int bound = 3 * order;
        if (parity_pruning) {
            bound = order * shapes[i].max_exponent;
            if (shapes[i].uniform_parity) {
                offset_[i] = (order * shapes[i].parity) % 2;
                step_[i] = 2;
            }
        }
        count_[i] = bound >= offset_[i] ? (bound - offset_[i]) / step_[i] + 1 : 0;
        size_ *= static_cast<std::size_t>(count_[i]);
    }
}

std::optional<std::size_t> OrderLayout::index_of(const MultiIndex& m) const {
    std::size_t index = 0;
    for (int i = 0; i < kMaxDimension; ++i) {
        const int shifted = m[i] - offset_[i];
        if (shifted < 0 || shifted % step_[i] != 0) return std::nullopt;
        const int k = shifted / step_[i];
        if (k >= count_[i]) return std::nullopt;
        index = index * static_cast<std::size_t>(count_[i]) + static_cast<std::size_t>(k);
    }
    return index;
}

MultiIndex OrderLayout::exponents_at(std::size_t index) const {
    MultiIndex m{};
    for (int i = kMaxDimension - 1; i >= 0; --i) {
        const auto c = static_cast<std::size_t>(count_[i]);
        m[i] = offset_[i] + step_[i] * static_cast<int>(index % c);
        index /= c;
    }
    return m;
}

CoefficientTensor::CoefficientTensor(ModelSpec model, int max_order, bool parity_pruning)
    : model_(std::move(model)), max_order_(max_order), parity_pruning_(parity_pruning) {
    check_model(model_);
    if (max_order < 0) throw InvalidArgument("max_order must be non-negative");
    layouts_.reserve(static_cast<std::size_t>(max_order) + 1);
    values_.reserve(static_cast<std::size_t>(max_order) + 1);
    for (int n = 0; n <= max_order; ++n) {
        layouts_.emplace_back(model_, n, parity_pruning_);
        values_.emplace_back(layouts_.back().size());
    }
    values_[0][*layouts_[0].index_of(MultiIndex{})] = ExactRational(1);
}

const ExactRational& CoefficientTensor::at(int n, const MultiIndex& m) const {
    static const ExactRational zero{};
    if (n < 0 || n > max_order_) return zero;
    for (int v : m) {
        if (v < 0) return zero;
    }
    const auto& layout = layouts_[static_cast<std::size_t>(n)];
    const auto idx = layout.index_of(m);
    if (!idx) return zero;
    return values_[static_cast<std::size_t>(n)][*idx];
}

void CoefficientTensor::set(int n, const MultiIndex& m, ExactRational value) {
    if (n < 0 || n > max_order_) throw InvalidArgument("order " + std::to_string(n) + " out of range");
    if (total_degree(m) > 3 * n && !value.is_zero())
        throw ComputationAnomaly("nonzero coefficient above degree 3n at order " + std::to_string(n));
    const auto idx = layouts_[static_cast<std::size_t>(n)].index_of(m);
    if (!idx) {
        if (value.is_zero()) return;
        throw InvalidArgument("exponent outside the admissible support at order " + std::to_string(n));
    }
    values_[static_cast<std::size_t>(n)][*idx] = std::move(value);
}

void CoefficientTensor::for_each_nonzero(
    const std::function<void(int, const MultiIndex&, const ExactRational&)>& visit) const {
    for (int n = 0; n <= max_order_; ++n) {
        const auto& layout = layouts_[static_cast<std::size_t>(n)];
        const auto& vals = values_[static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (!vals[i].is_zero()) visit(n, layout.exponents_at(i), vals[i]);
        }
    }
}

std::size_t CoefficientTensor::nonzero_count() const {
    std::size_t count = 0;
    for (const auto& vals : values_) {
        count += static_cast<std::size_t>(
            std::count_if(vals.begin(), vals.end(), [](const ExactRational& v) { return !v.is_zero(); }));
    }
    return count;
}

bool operator==(const CoefficientTensor& a, const CoefficientTensor& b) {
    if (a.model_.id != b.model_.id || a.max_order_ != b.max_order_) return false;
    bool equal = true;
    a.for_each_nonzero([&](int n, const MultiIndex& m, const ExactRational& v) {
        if (equal && b.at(n, m) != v) equal = false;
    });
    b.for_each_nonzero([&](int n, const MultiIndex& m, const ExactRational& v) {
        if (equal && a.at(n, m) != v) equal = false;
    });
    return equal;
}

CoefficientTensor compute_wavefunction_coefficients(const ModelSpec& model, int max_order,
                                                    const TensorOptions& options) {
    if (max_order < 1) throw InvalidArgument("max_order must be at least 1");
    CoefficientTensor tensor(model, max_order, options.parity_pruning);
    const int d = model.dimension;

    std::mt19937 shuffler(options.shuffle_seed.value_or(0U));

    // energy[p] for the real coupling; odd orders vanish for a cubic W.
    std::vector<mpq_class> energy(static_cast<std::size_t>(max_order) + 1);
    mpq_class acc;
    mpq_class term;

    for (int n = 1; n <= max_order; ++n) {
        const auto& layout = tensor.layout(n);
        auto& values = tensor.order_values(n);

        std::vector<std::pair<int, std::size_t>> schedule;
        schedule.reserve(layout.size());
        for (std::size_t i = 0; i < layout.size(); ++i) {
            const int deg = total_degree(layout.exponents_at(i));
            if (deg >= 1 && deg <= 3 * n) schedule.emplace_back(deg, i);
        }
        std::stable_sort(schedule.begin(), schedule.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        if (options.shuffle_seed) {
            auto first = schedule.begin();
            while (first != schedule.end()) {
                auto last = std::find_if(first, schedule.end(),
                                         [&](const auto& e) { return e.first != first->first; });
                std::shuffle(first, last, shuffler);
                first = last;
            }
        }

        std::vector<int> active_energies;
        for (int p = 1; p < n; ++p) {
            if (sgn(energy[static_cast<std::size_t>(p)]) != 0) active_energies.push_back(p);
        }

        for (const auto& [deg, idx] : schedule) {
            const MultiIndex m = layout.exponents_at(idx);
            acc = 0;
            for (int i = 0; i < d; ++i) {
                MultiIndex up = m;
                up[i] += 2;
                const auto& neighbour = tensor.at(n, up).raw();
                if (sgn(neighbour) != 0) {
                    term = neighbour * ((m[i] + 1) * (m[i] + 2));
                    acc += term;
                }
            }
            for (const auto& mono : model.perturbation) {
                MultiIndex down{};
                bool valid = true;
                for (int i = 0; i < kMaxDimension; ++i) {
                    down[i] = m[i] - mono.exponents[i];
                    if (down[i] < 0) valid = false;
                }
                if (!valid) continue;
                const auto& lower = tensor.at(n - 1, down).raw();
                if (sgn(lower) != 0) {
                    term = mono.coefficient.raw() * lower;
                    acc -= term;
                }
            }
            for (int p : active_energies) {
                const auto& prev = tensor.at(n - p, m).raw();
                if (sgn(prev) != 0) {
                    term = energy[static_cast<std::size_t>(p)] * prev;
                    acc += term;
                }
            }
            if (sgn(acc) != 0) {
                acc /= 2 * deg;
                values[idx].raw() = acc;
            }
        }

        mpq_class e = 0;
        for (int i = 0; i < d; ++i) {
            MultiIndex q{};
            q[i] = 2;
            e += tensor.at(n, q).raw();
        }
        energy[static_cast<std::size_t>(n)] = -2 * e;
    }
    return tensor;
}

std::vector<ExactRational> real_coupling_energies(const CoefficientTensor& tensor) {
    const ModelSpec& model = tensor.model();
    std::vector<ExactRational> energies;
    energies.reserve(static_cast<std::size_t>(tensor.max_order()) + 1);
    energies.push_back(model.unperturbed_energy);
    for (int n = 1; n <= tensor.max_order(); ++n) {
        ExactRational e;
        for (int i = 0; i < model.dimension; ++i) {
            MultiIndex q{};
            q[i] = 2;
            e += tensor.at(n, q);
        }
        energies.push_back(ExactRational(-2) * e);
    }
    return energies;
}

EnergySeries energy_series(const CoefficientTensor& tensor, int max_order_in_g2) {
    if (max_order_in_g2 < 0) throw InvalidArgument("series order must be non-negative");
    if (2 * max_order_in_g2 > tensor.max_order())
        throw InvalidArgument("tensor computed to order " + std::to_string(tensor.max_order()) +
                              " cannot give the g^2 series to order " + std::to_string(max_order_in_g2));
    const auto energies = real_coupling_energies(tensor);
    for (std::size_t n = 1; n < energies.size(); n += 2) {
        if (!energies[n].is_zero())
            throw ComputationAnomaly("odd-order energy correction E_" + std::to_string(n) + " is nonzero");
    }
    EnergySeries series{tensor.model(), {}};
    series.coefficients.reserve(static_cast<std::size_t>(max_order_in_g2) + 1);
    series.coefficients.push_back(energies[0]);
    // g -> i g: g^{2n} picks up (-1)^n.
    for (int n = 1; n <= max_order_in_g2; ++n) {
        const ExactRational& e = energies[static_cast<std::size_t>(2 * n)];
        series.coefficients.push_back(n % 2 == 0 ? e : -e);
    }
    return series;
}

EnergySeries compute_energy_series(ModelId id, int max_order_in_g2) {
    const int wave_order = std::max(1, 2 * max_order_in_g2);
    return energy_series(compute_wavefunction_coefficients(build_model(id), wave_order), max_order_in_g2);
}

int default_series_order(ModelId id) {
    switch (id) {
        case ModelId::Cubic1D: return 60;
        case ModelId::XY2_2D: return 45;
        case ModelId::HenonHeiles2D: return 45;
        case ModelId::XYZ_3D: return 30;
    }
    return 30;
}

}  // namespace ptcubic
