#include "toral/circle.hpp"

#include "toral/error.hpp"

namespace toral {

Rat circle_dist(const CirclePoint& a, const CirclePoint& b) {
    Rat d = abs(a.value() - b.value());
    Rat wrap = Rat(1) - d;
    return d < wrap ? d : wrap;
}

TorusPoint::TorusPoint(const std::vector<Rat>& coords) {
    coords_.reserve(coords.size());
    for (const Rat& r : coords) coords_.emplace_back(r);
}

TorusPoint TorusPoint::zero(std::size_t ambient) {
    return TorusPoint(std::vector<CirclePoint>(ambient));
}

bool TorusPoint::is_zero() const {
    for (const CirclePoint& c : coords_)
        if (c.value() != 0) return false;
    return true;
}

TorusPoint TorusPoint::operator+(const TorusPoint& other) const {
    if (coords_.size() != other.coords_.size())
        throw Error(Errc::ambient_mismatch, "torus point addition: ambient mismatch");
    std::vector<CirclePoint> out;
    out.reserve(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) out.push_back(coords_[i] + other.coords_[i]);
    return TorusPoint(std::move(out));
}

TorusPoint TorusPoint::operator-() const {
    std::vector<CirclePoint> out;
    out.reserve(coords_.size());
    for (const CirclePoint& c : coords_) out.push_back(-c);
    return TorusPoint(std::move(out));
}

TorusPoint TorusPoint::operator-(const TorusPoint& other) const { return *this + (-other); }

std::strong_ordering TorusPoint::operator<=>(const TorusPoint& other) const {
    if (auto c = coords_.size() <=> other.coords_.size(); c != 0) return c;
    for (std::size_t i = 0; i < coords_.size(); ++i)
        if (auto c = coords_[i] <=> other.coords_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

Weights::Weights(std::vector<Rat> values) : values_(std::move(values)) {
    for (const Rat& w : values_)
        if (w <= 0) throw Error(Errc::invalid_argument, "weights must be positive");
}

Rat Weights::at(std::size_t n) const {
    if (n == 0) throw Error(Errc::out_of_range, "weight index is 1-based");
    if (n <= values_.size()) return values_[n - 1];
    return pow2_inverse(n);
}

Rat torus_dist(const TorusPoint& x, const TorusPoint& y, const Weights& w) {
    if (x.ambient() != y.ambient())
        throw Error(Errc::ambient_mismatch, "torus_dist: ambient mismatch");
    Rat total(0);
    for (std::size_t n = 1; n <= x.ambient(); ++n)
        total += w.at(n) * circle_dist(x.coord(n - 1), y.coord(n - 1));
    return total;
}

}  // namespace toral
