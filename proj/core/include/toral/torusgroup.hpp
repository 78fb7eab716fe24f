#pragma once

/// Compact subgroups of the torus T^N, stored only through their
/// annihilator lattice Λ ≤ Z^N: the group is
///   K = {x ∈ T^N : λ·x ∈ Z for every λ ∈ Λ}.
/// The annihilator is canonical, so subgroup equality is operator==.
/// Element lists, components, distances and quotient maps are all derived
/// views computed from Λ.

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "toral/circle.hpp"
#include "toral/finabelian.hpp"
#include "toral/lattice.hpp"

namespace toral {

class TorusSubgroup {
  public:
    /// The full torus T^ambient (empty annihilator).
    explicit TorusSubgroup(std::size_t ambient)
        : ambient_(ambient), annihilator_(Lattice(ambient)) {}

    explicit TorusSubgroup(Lattice annihilator)
        : ambient_(annihilator.ambient()), annihilator_(std::move(annihilator)) {}

    std::size_t ambient() const { return ambient_; }
    const Lattice& annihilator() const { return annihilator_; }

    bool operator==(const TorusSubgroup& other) const = default;

  private:
    std::size_t ambient_;
    Lattice annihilator_;
};

Lattice annihilator_of(const TorusSubgroup& k);
TorusSubgroup ann_of_lattice(const Lattice& l);

/// The closed subgroup generated by rational points (finite, since the
/// generators are rational). Empty list gives the trivial group.
TorusSubgroup generated_subgroup(std::size_t ambient, const std::vector<TorusPoint>& points);

/// |K| when the annihilator has full rank, nullopt when K is infinite.
std::optional<Int> order(const TorusSubgroup& k);

/// All points of a finite K, sorted, closed under addition, containing 0.
/// Throws Errc::infinite_group or Errc::cap_exceeded.
std::vector<TorusPoint> elements(const TorusSubgroup& k,
                                 unsigned long cap = default_enumeration_cap);

/// {n : the projection of K to coordinate n is nontrivial}, 1-based.
/// Equivalently the coordinates whose standard vector is not in Λ.
std::vector<std::size_t> support(const TorusSubgroup& k);

/// Projection to the first n coordinates; the annihilator is Λ ∩ (Z^n × 0)
/// truncated to its first n coordinates.
TorusSubgroup project(const TorusSubgroup& k, std::size_t n);

/// Identity component K°: the subtorus with annihilator sat(Λ).
TorusSubgroup identity_component(const TorusSubgroup& k);

/// Number of connected components, [sat(Λ) : Λ].
Int component_count(const TorusSubgroup& k);

/// True iff Λ has full rank (K finite in this truncated setting).
bool is_totally_disconnected(const TorusSubgroup& k);

/// K as content rather than annihilator: finitely many generators of a
/// transversal of K° plus integer columns parametrizing K° itself
/// (directions has ambient rows and ambient − rank(Λ) columns).
struct TorusDecomposition {
    std::vector<TorusPoint> finite_generators;
    IntMatrix directions;
};

TorusDecomposition decompose(const TorusSubgroup& k);

/// Rebuilds the subgroup generated by the given points together with the
/// subtorus spanned by the direction columns, by recomputing the
/// annihilator from scratch. Inverse of decompose.
TorusSubgroup subgroup_from_parts(std::size_t ambient, const std::vector<TorusPoint>& points,
                                  const IntMatrix& directions);

/// Exact Hausdorff distance between two finite subgroups under the
/// weighted metric.
Rat hausdorff_dist(const TorusSubgroup& k, const TorusSubgroup& l, const Weights& w = Weights(),
                   unsigned long cap = default_enumeration_cap);

/// A finite subset of K together with a certified covering radius at most
/// `radius`: every point of K is within that radius of the returned set.
/// Finite K yields its elements with radius 0; positive-dimensional K is
/// netted per component by pulling a uniform grid through the free columns
/// of the annihilator's Smith decomposition, the radius certified by the
/// weighted column Lipschitz constants. The cap bounds the net size.
std::pair<std::vector<TorusPoint>, Rat> certified_net(const TorusSubgroup& k, const Rat& radius,
                                                      const Weights& w = Weights(),
                                                      unsigned long cap = default_enumeration_cap);

/// Certified bracket lower ≤ d_H(K, L) ≤ upper for groups that may be
/// infinite: each infinite group is replaced by a finite inner net of
/// certified radius ≤ mesh/2, so upper − lower ≤ 2·mesh.
std::pair<Rat, Rat> hausdorff_bounds(const TorusSubgroup& k, const TorusSubgroup& l,
                                     const Rat& mesh, const Weights& w = Weights(),
                                     unsigned long cap = default_enumeration_cap);

/// Largest pairwise distance of a nonempty finite point set.
Rat diameter(const std::vector<TorusPoint>& points, const Weights& w = Weights());

/// True iff A is a quotient of K: dual(A) must embed into the torsion
/// part of Z^N/Λ.
bool quotient_exists(const TorusSubgroup& k, const FinAbelian& a);

/// A surjective homomorphism from a finite torus subgroup onto a finite
/// abelian group, stored as an explicit value table. Codomain elements
/// are tuples (a1,...,am) against the invariant factors. The table is
/// checked at construction: it must cover exactly elements(domain), be a
/// homomorphism, and be surjective.
class FiniteQuotientMap {
  public:
    FiniteQuotientMap(TorusSubgroup domain, FinAbelian codomain,
                      std::map<TorusPoint, std::vector<Int>> assignment,
                      unsigned long cap = default_enumeration_cap);

    const TorusSubgroup& domain() const { return domain_; }
    const FinAbelian& codomain() const { return codomain_; }
    const std::map<TorusPoint, std::vector<Int>>& assignment() const { return assignment_; }

    /// Value at a domain element; throws Errc::out_of_range otherwise.
    const std::vector<Int>& value(const TorusPoint& x) const;

  private:
    TorusSubgroup domain_;
    FinAbelian codomain_;
    std::map<TorusPoint, std::vector<Int>> assignment_;
};

/// Preimage of the codomain identity, sorted.
std::vector<TorusPoint> kernel(const FiniteQuotientMap& phi);

/// Transfers φ : K → A to a nearby finite subgroup L. With δ the least
/// distance between distinct kernel cosets of φ, every element of L must
/// be strictly within δ/4 of a unique coset and d_H(L, K) < δ/4; the
/// induced assignment is then verified to be a surjective homomorphism.
/// Failures throw distinct codes: transfer_ambiguous (tie between two
/// cosets), transfer_too_far (element not within δ/4), transfer_not_close
/// (d_H bound fails), not_homomorphism, not_surjective.
FiniteQuotientMap transfer_quotient(const FiniteQuotientMap& phi, const TorusSubgroup& l,
                                    const Weights& w = Weights(),
                                    unsigned long cap = default_enumeration_cap);

}  // namespace toral
