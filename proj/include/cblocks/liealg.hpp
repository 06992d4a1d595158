#pragma once

// Finite-dimensional simple Lie algebras: Cartan data, the invariant form
// normalized by (theta|theta) = 2, Casimir scalars, level truncation,
// duality and weight multiplicities.

#include "cblocks/exact.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace cblocks {

/// Coordinates of a weight-lattice point in the fundamental-weight basis.
/// Entries may be negative (non-dominant weights of a weight system).
using Labels = std::vector<int>;

/// A dominant integral weight, stored by its Dynkin labels.
class Weight {
public:
    Weight() = default;
    explicit Weight(Labels labels);

    static Weight zero(std::size_t rank) { return Weight(Labels(rank, 0)); }
    static Weight fundamental(std::size_t rank, std::size_t i);  // i is 1-based

    const Labels& labels() const { return labels_; }
    std::size_t size() const { return labels_.size(); }
    int operator[](std::size_t i) const { return labels_[i]; }
    bool is_zero() const;

    /// "1,0,2"
    std::string to_string() const;

    auto operator<=>(const Weight&) const = default;

private:
    Labels labels_;
};

enum class Family { A, B, C, D, E, F, G };

/// Immutable Cartan data for one simple Lie algebra. Cheap to copy.
class SimpleAlgebra {
public:
    SimpleAlgebra(Family family, int rank);

    /// Parses "A1", "D4", "E7", ...
    static SimpleAlgebra parse(std::string_view text);

    Family family() const;
    int rank() const;
    std::string name() const;

    /// a_ij = <alpha_j, alpha_i^vee>.
    const std::vector<std::vector<int>>& cartan_matrix() const;
    /// (varpi_i | varpi_j) under the normalization (theta|theta) = 2.
    const std::vector<std::vector<Rational>>& normalized_form() const;
    /// (alpha_i | alpha_i).
    const std::vector<Rational>& root_lengths() const;
    /// Comarks: level(varpi_i) = (varpi_i | theta).
    const std::vector<int>& comarks() const;

    Weight rho() const;
    /// Highest root, as Dynkin labels.
    const Labels& theta() const;
    int dual_coxeter() const;

    /// Positive roots in Dynkin-label coordinates, ordered by height.
    const std::vector<Labels>& positive_roots() const;
    /// Simple root alpha_i (0-based) in Dynkin-label coordinates.
    const Labels& simple_root(std::size_t i) const;

    /// Exact (x|y) on lattice points.
    Rational form(const Labels& x, const Labels& y) const;
    /// form_scale() * (x|y), always an integer.
    long long scaled_form(const Labels& x, const Labels& y) const;
    long long form_scale() const;

    /// Throws InputError unless w has rank() labels.
    void check(const Weight& w) const;

    bool operator==(const SimpleAlgebra& other) const { return name() == other.name(); }

private:
    struct Data;
    std::shared_ptr<const Data> d_;
};

/// Casimir scalar c(lambda) = (lambda | lambda + 2 rho).
Rational casimir(const SimpleAlgebra& alg, const Weight& w);

/// (lambda | theta); an integer in this normalization.
int level(const SimpleAlgebra& alg, const Weight& w);

/// All dominant weights of level <= ell in lexicographic label order.
std::vector<Weight> level_weights(const SimpleAlgebra& alg, int ell);

/// Highest weight of the dual representation.
Weight dual_weight(const SimpleAlgebra& alg, const Weight& w);

/// Weyl dimension formula.
Integer weyl_dimension(const SimpleAlgebra& alg, const Weight& w);

inline constexpr std::size_t kDefaultWeightCapacity = 1'000'000;

using WeightSystem = std::map<Labels, long long>;

/// Full weight system of V_lambda with multiplicities (Freudenthal).
/// Throws CapacityError when the number of distinct weights would exceed
/// `capacity`.
WeightSystem weight_multiplicities(const SimpleAlgebra& alg, const Weight& w,
                                   std::size_t capacity = kDefaultWeightCapacity);

/// Reflects x into the dominant chamber by simple reflections. Returns the
/// sign of the Weyl element used, or 0 if x + 0 lies on a wall (some
/// reflection fixes it). `x` is overwritten with the dominant representative.
int reflect_to_dominant(const SimpleAlgebra& alg, Labels& x);

/// Parses "1,0,2" (labels), "w2" (fundamental weight), or "0".
Weight parse_weight(const SimpleAlgebra& alg, std::string_view text);

}  // namespace cblocks
