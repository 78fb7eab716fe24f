#pragma once

/// Points of the circle R/Z and of finite-dimensional tori, with the
/// weighted product metric. Coordinates are exact rationals canonicalized
/// to [0, 1); equality is equality of canonical forms. All values are
/// immutable after construction and all operations are pure.

#include <compare>
#include <cstddef>
#include <vector>

#include "toral/numeric.hpp"

namespace toral {

/// One coordinate of the torus: a rational point of R/Z stored by its
/// canonical representative in [0, 1).
class CirclePoint {
  public:
    CirclePoint() : value_(0) {}
    explicit CirclePoint(const Rat& r) : value_(mod_one(r)) {}

    const Rat& value() const { return value_; }

    CirclePoint operator+(const CirclePoint& other) const {
        return CirclePoint(value_ + other.value_);
    }
    CirclePoint operator-() const { return CirclePoint(-value_); }
    CirclePoint operator-(const CirclePoint& other) const {
        return CirclePoint(value_ - other.value_);
    }

    bool operator==(const CirclePoint& other) const { return value_ == other.value_; }
    std::strong_ordering operator<=>(const CirclePoint& other) const {
        int c = cmp(value_, other.value_);
        return c <=> 0;
    }

  private:
    Rat value_;
};

/// Arc-length metric on R/Z: min(|a-b|, 1-|a-b|), always in [0, 1/2].
Rat circle_dist(const CirclePoint& a, const CirclePoint& b);

/// A point of the N-torus; the ambient dimension is the coordinate count.
class TorusPoint {
  public:
    TorusPoint() = default;
    explicit TorusPoint(std::vector<CirclePoint> coords) : coords_(std::move(coords)) {}
    /// Convenience constructor canonicalizing raw rationals.
    explicit TorusPoint(const std::vector<Rat>& coords);

    static TorusPoint zero(std::size_t ambient);

    std::size_t ambient() const { return coords_.size(); }
    const CirclePoint& coord(std::size_t n) const { return coords_[n]; }
    const std::vector<CirclePoint>& coords() const { return coords_; }

    bool is_zero() const;

    TorusPoint operator+(const TorusPoint& other) const;
    TorusPoint operator-() const;
    TorusPoint operator-(const TorusPoint& other) const;

    bool operator==(const TorusPoint& other) const { return coords_ == other.coords_; }
    std::strong_ordering operator<=>(const TorusPoint& other) const;

  private:
    std::vector<CirclePoint> coords_;
};

/// Coordinate weights for the product metric on the torus. The default is
/// the dyadic sequence 2^-n; an explicit vector of positive rationals may
/// replace it (vector entry k is the weight of coordinate k+1, coordinates
/// past the end fall back to 2^-n).
class Weights {
  public:
    Weights() = default;
    explicit Weights(std::vector<Rat> values);

    /// Weight of coordinate n (1-based).
    Rat at(std::size_t n) const;

    bool is_dyadic() const { return values_.empty(); }
    const std::vector<Rat>& values() const { return values_; }

  private:
    std::vector<Rat> values_;
};

/// Weighted metric sum over coordinates: sum_n w(n) * d_circle(x(n), y(n)).
/// Throws on ambient mismatch.
Rat torus_dist(const TorusPoint& x, const TorusPoint& y, const Weights& w = Weights());

}  // namespace toral
