#pragma once

// Exact realizations of the simple root systems A_n, B_n, C_n, D_n, E6, E7
// in an orthonormal basis {e_i}.
//
// Simple roots follow the Bourbaki ordering. E6 and E7 use the
// eight-dimensional realization
//
//   σ1 = ½(e8 − e7 − e6 − e5 − e4 − e3 − e2 + e1),  σ2 = e1 + e2,
//   σ3 = e2 − e1,  σ4 = e3 − e2,  ...
//
// so that the extra simple root of E7 is σ7 = e6 − e5. Fundamental weights
// are always obtained from the inverse Cartan matrix.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "knf/matrix.hpp"
#include "knf/rational.hpp"

namespace knf {

/// Exact rational vector in the ambient orthonormal basis.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::size_t dim) : coords_(dim) {}
    explicit WeightVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

    static WeightVector unit(std::size_t dim, std::size_t i);

    [[nodiscard]] std::size_t dim() const { return coords_.size(); }
    [[nodiscard]] const std::vector<Rational>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }

    [[nodiscard]] bool is_zero() const;

    WeightVector& operator+=(const WeightVector& o);
    WeightVector& operator-=(const WeightVector& o);
    WeightVector& operator*=(const Rational& s);

    friend WeightVector operator+(WeightVector a, const WeightVector& b) { return a += b; }
    friend WeightVector operator-(WeightVector a, const WeightVector& b) { return a -= b; }
    friend WeightVector operator*(const Rational& s, WeightVector v) { return v *= s; }
    friend WeightVector operator-(WeightVector v) { return v *= Rational(-1); }

    friend bool operator==(const WeightVector&, const WeightVector&) = default;
    friend auto operator<=>(const WeightVector& a, const WeightVector& b) { return a.coords_ <=> b.coords_; }

    [[nodiscard]] std::string str() const;

private:
    std::vector<Rational> coords_;
};

/// Standard dot product. Throws knf::Error on a dimension mismatch.
Rational inner(const WeightVector& u, const WeightVector& v);

enum class Family { A, B, C, D, E6, E7 };

std::string family_name(Family f);

class RootSystem {
public:
    [[nodiscard]] Family family() const { return family_; }
    [[nodiscard]] int rank() const { return rank_; }
    [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
    /// e.g. "C3", "E7".
    [[nodiscard]] std::string name() const;

    [[nodiscard]] const std::vector<WeightVector>& simple_roots() const { return simple_; }
    [[nodiscard]] const std::vector<WeightVector>& positive_roots() const { return positive_; }
    [[nodiscard]] const std::vector<WeightVector>& fundamental_weights() const { return fundamental_; }
    [[nodiscard]] const WeightVector& rho() const { return rho_; }

    /// A_ij = 2⟨σ_i,σ_j⟩/⟨σ_j,σ_j⟩; row i holds the ω-coordinates of σ_i.
    [[nodiscard]] const IntMatrix& cartan() const { return cartan_; }
    [[nodiscard]] const RatMatrix& inv_cartan() const { return inv_cartan_; }

    /// σ-coordinates (nonnegative integers) of each positive root, same order as positive_roots().
    [[nodiscard]] const std::vector<std::vector<int>>& positive_roots_sigma() const { return positive_sigma_; }
    /// ω-coordinates (integers) of each positive root.
    [[nodiscard]] const std::vector<std::vector<int>>& positive_roots_omega() const { return positive_omega_; }
    /// Gram matrix ⟨ω_i, ω_j⟩.
    [[nodiscard]] const RatMatrix& omega_gram() const { return omega_gram_; }
    /// ½⟨σ_i, σ_i⟩ for each simple root.
    [[nodiscard]] const std::vector<Rational>& half_norms() const { return half_norms_; }

    /// Coefficients of the highest root on the simple roots.
    [[nodiscard]] const std::vector<int>& highest_root_sigma() const { return positive_sigma_.back(); }

    [[nodiscard]] bool is_root(const WeightVector& v) const;
    [[nodiscard]] bool is_positive_root(const WeightVector& v) const;

    /// ω-coordinates of v; throws if v is not in the rational span of the simple roots.
    [[nodiscard]] std::vector<Rational> to_omega_coords(const WeightVector& v) const;
    /// σ-coordinates of v; throws if v is not in the rational span of the simple roots.
    [[nodiscard]] std::vector<Rational> to_sigma_coords(const WeightVector& v) const;

    [[nodiscard]] WeightVector from_omega_coords(std::span<const Rational> m) const;
    [[nodiscard]] WeightVector from_omega_coords(std::span<const int> m) const;
    [[nodiscard]] WeightVector from_sigma_coords(std::span<const Rational> c) const;

    /// v − 2⟨v,α⟩/⟨α,α⟩·α; throws if α ∉ Δ.
    [[nodiscard]] WeightVector reflect(const WeightVector& root, const WeightVector& v) const;
    /// Reflection in the simple root σ_i (0-based index, no root check).
    [[nodiscard]] WeightVector simple_reflect(std::size_t i, const WeightVector& v) const;

private:
    friend std::shared_ptr<const RootSystem> build_root_system(Family family, int rank);
    RootSystem() = default;
    void finish();

    Family family_ = Family::A;
    int rank_ = 0;
    std::size_t ambient_dim_ = 0;
    std::vector<WeightVector> simple_;
    std::vector<WeightVector> positive_;
    std::vector<WeightVector> fundamental_;
    WeightVector rho_;
    IntMatrix cartan_;
    RatMatrix inv_cartan_;
    std::vector<std::vector<int>> positive_sigma_;
    std::vector<std::vector<int>> positive_omega_;
    RatMatrix omega_gram_;
    std::vector<Rational> half_norms_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

/// Valid ranks: A n≥2, B n≥3, C n≥1, D n≥4, E6 = 6, E7 = 7.
/// Throws RangeError naming the family and the valid range otherwise.
RootSystemPtr build_root_system(Family family, int rank);
/// "A3", "B3", "C2", "D4", "E6", "E7". Throws std::invalid_argument on bad syntax.
RootSystemPtr parse_root_system(std::string_view name);

}  // namespace knf
