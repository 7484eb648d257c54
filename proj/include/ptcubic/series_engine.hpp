#pragma once

// Exact Rayleigh-Schrodinger perturbation coefficients for the ground state
// of H0 + g W, where H0 = sum(p_i^2 + x_i^2) and W is a real cubic.
//
// Writing psi = exp(-r^2/2) * sum_n g^n P_n(x), each P_n is a polynomial of
// degree 3n whose coefficients a_{n,m} satisfy
//
//   2|m| a_{n,m} = sum_i (m_i+1)(m_i+2) a_{n,m+2e_i} - [W P_{n-1}]_m
//                  + sum_{p=1}^{n-1} E_p a_{n-p,m},
//
// with a_{n,0} = 0 for n >= 1 and E_n = -2 sum_i a_{n,2e_i}. Within an order
// the recursion is solved from the top degree 3n downward.

#include "ptcubic/model.hpp"
#include "ptcubic/rational.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace ptcubic {

struct TensorOptions {
    /// Skip exponents that the parity structure of W forces to vanish.
    bool parity_pruning = true;
    /// When set, entries of equal total degree are evaluated in a shuffled
    /// order. Results must not depend on it.
    std::optional<unsigned> shuffle_seed;
};

/// Dense storage for one perturbative order over the box of admissible exponents.
class OrderLayout {
public:
    OrderLayout() = default;
    OrderLayout(const ModelSpec& model, int order, bool parity_pruning);

    [[nodiscard]] std::size_t size() const { return size_; }
    [[nodiscard]] std::optional<std::size_t> index_of(const MultiIndex& m) const;
    [[nodiscard]] MultiIndex exponents_at(std::size_t index) const;
    [[nodiscard]] int order() const { return order_; }

private:
    int dimension_ = 0;
    int order_ = 0;
    MultiIndex offset_{};
    MultiIndex step_{1, 1, 1};
    MultiIndex count_{1, 1, 1};
    std::size_t size_ = 0;
};

class CoefficientTensor {
public:
    CoefficientTensor(ModelSpec model, int max_order, bool parity_pruning = true);

    [[nodiscard]] const ModelSpec& model() const { return model_; }
    [[nodiscard]] int max_order() const { return max_order_; }
    [[nodiscard]] bool parity_pruned() const { return parity_pruning_; }

    /// a_{n,m}; zero for anything outside the stored support.
    [[nodiscard]] const ExactRational& at(int n, const MultiIndex& m) const;
    /// Writes a_{n,m}. Throws if m lies outside the admissible support.
    void set(int n, const MultiIndex& m, ExactRational value);

    /// Visits nonzero entries ordered by (n, storage index).
    void for_each_nonzero(const std::function<void(int, const MultiIndex&, const ExactRational&)>& visit) const;
    [[nodiscard]] std::size_t nonzero_count() const;

    [[nodiscard]] const OrderLayout& layout(int n) const { return layouts_.at(static_cast<std::size_t>(n)); }
    [[nodiscard]] const std::vector<ExactRational>& order_values(int n) const {
        return values_.at(static_cast<std::size_t>(n));
    }
    std::vector<ExactRational>& order_values(int n) { return values_.at(static_cast<std::size_t>(n)); }

    friend bool operator==(const CoefficientTensor& a, const CoefficientTensor& b);

private:
    ModelSpec model_;
    int max_order_;
    bool parity_pruning_;
    std::vector<OrderLayout> layouts_;
    std::vector<std::vector<ExactRational>> values_;
};

struct EnergySeries {
    ModelSpec model;
    /// c_0 .. c_N with E(g) ~ sum_n c_n g^{2n} for the coupling i g W.
    std::vector<ExactRational> coefficients;

    [[nodiscard]] int max_order() const { return static_cast<int>(coefficients.size()) - 1; }
};

CoefficientTensor compute_wavefunction_coefficients(const ModelSpec& model, int max_order,
                                                    const TensorOptions& options = {});

/// Energy corrections E_n of the real auxiliary problem H0 + g W, n = 0..max_order.
std::vector<ExactRational> real_coupling_energies(const CoefficientTensor& tensor);

EnergySeries energy_series(const CoefficientTensor& tensor, int max_order_in_g2);

/// Convenience: tensor to order 2N followed by assembly.
EnergySeries compute_energy_series(ModelId id, int max_order_in_g2);

/// Default series depth per model: 60 (1D), 45 (2D and Henon-Heiles), 30 (3D).
int default_series_order(ModelId id);

}  // namespace ptcubic
