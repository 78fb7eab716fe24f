#pragma once

/// Finite abelian groups presented by their invariant-factor chain
/// d1 | d2 | ... | dm (each >= 2, empty chain = trivial group). The chain
/// is the canonical form, so isomorphism testing is operator==. All
/// constructors normalize through Smith normal form.

#include <cstddef>
#include <map>
#include <vector>

#include "toral/lattice.hpp"
#include "toral/numeric.hpp"

namespace toral {

class TorusSubgroup;

class FinAbelian {
  public:
    /// The trivial group.
    FinAbelian() = default;

    /// The direct sum of Z/m for the given moduli (each >= 1), normalized
    /// to the invariant-factor chain. Moduli equal to 1 contribute nothing.
    static FinAbelian of(const std::vector<Int>& moduli);

    const std::vector<Int>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return factors_.empty(); }

    bool operator==(const FinAbelian& other) const = default;

  private:
    std::vector<Int> factors_;
};

/// A finitely generated abelian group Z^free_rank ⊕ torsion.
struct FgAbelian {
    std::size_t free_rank = 0;
    FinAbelian torsion;

    bool operator==(const FgAbelian& other) const = default;
};

/// Z^n / L by Smith normal form of the basis.
FgAbelian quotient_group(std::size_t n, const Lattice& l);

/// Pontryagin dual. Finite abelian groups are self-dual, so this returns
/// its argument; it exists so callers never hard-code that fact.
FinAbelian dual(const FinAbelian& a);

/// True iff A is isomorphic to a subgroup of B. Decided per prime: the
/// p-exponent partition of A must fit inside that of B componentwise
/// (both sorted decreasingly), equivalently the Young diagram of A's
/// partition is contained in B's.
bool embeds(const FinAbelian& a, const FinAbelian& b);

/// True iff A is a quotient of B, computed as embeds(dual(A), dual(B)).
bool is_quotient(const FinAbelian& a, const FinAbelian& b);

Int order(const FinAbelian& a);

inline constexpr unsigned long default_enumeration_cap = 1000000;

/// All elements as coefficient tuples (a1,...,am), 0 <= ai < di, in
/// lexicographic order. Throws Errc::cap_exceeded past the cap.
std::vector<std::vector<Int>> enumerate_elements(const FinAbelian& a,
                                                 unsigned long cap = default_enumeration_cap);

/// For each prime p dividing the order, the positive exponents v_p(di)
/// in chain order (ascending).
std::map<Int, std::vector<unsigned>> primary_decomposition(const FinAbelian& a);

/// A subgroup of the torus isomorphic to A: ambient m = number of
/// invariant factors (1 for the trivial group), annihilator diag(d1..dm).
TorusSubgroup realize_in_torus(const FinAbelian& a);

}  // namespace toral
