#pragma once

/// Integer lattices in Z^N with a canonical Hermite-normal-form basis, plus
/// the normal-form and lattice-algebra operations everything else is built
/// on. Canonical form means lattice equality is plain operator==.

#include <cstddef>
#include <optional>
#include <vector>

#include "toral/intmatrix.hpp"

namespace toral {

/// A sublattice of Z^N. The basis is always in canonical row-style HNF:
/// rows independent, each row's leading entry (pivot) positive, entries
/// above a pivot reduced to [0, pivot), pivot columns strictly increasing.
/// Rank 0 (empty basis) is a legal value.
class Lattice {
  public:
    /// Rank-0 lattice in Z^ambient.
    explicit Lattice(std::size_t ambient);

    /// The full lattice Z^ambient.
    static Lattice full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t rank() const { return basis_.rows(); }
    const IntMatrix& basis() const { return basis_; }

    /// Column of the leading entry of basis row r.
    std::size_t pivot_col(std::size_t r) const;

    bool operator==(const Lattice& other) const = default;

  private:
    friend Lattice hnf(const IntMatrix&);
    Lattice(std::size_t ambient, IntMatrix canonical_basis)
        : ambient_(ambient), basis_(std::move(canonical_basis)) {}

    std::size_t ambient_;
    IntMatrix basis_;
};

/// Canonical HNF basis of the row span of `generators`. The ambient
/// dimension is the column count, which must be at least 1.
Lattice hnf(const IntMatrix& generators);

/// Reduce a matrix in place to canonical HNF, dropping zero rows.
IntMatrix hnf_matrix(IntMatrix m);

struct SnfResult {
    IntMatrix u, d, v;  // u * input * v = d
};

/// Smith normal form: D = U·m·V with U, V unimodular, D diagonal and
/// d1 | d2 | ..., all diagonal entries nonnegative.
SnfResult snf(const IntMatrix& m);

/// True iff v lies in L (integer combination of basis rows).
bool member(const Lattice& l, const std::vector<Int>& v);

/// Coefficients expressing v over the basis rows, or nullopt when v is
/// outside L. Empty vector for rank 0 and v = 0.
std::optional<std::vector<Int>> member_coeffs(const Lattice& l, const std::vector<Int>& v);

/// Largest sublattice of Z^N with the same rational span: span_Q(L) ∩ Z^N.
Lattice saturation(const Lattice& l);

/// Group index [sup : sub]; nullopt means infinite (rank drop). Throws
/// Errc::not_a_sublattice when sub is not contained in sup.
std::optional<Int> index(const Lattice& sub, const Lattice& sup);

/// {v in Z^rows : v · m = 0} as a canonical lattice in Z^rows.
Lattice integer_kernel(const IntMatrix& m);

Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_intersection(const Lattice& a, const Lattice& b);

}  // namespace toral
