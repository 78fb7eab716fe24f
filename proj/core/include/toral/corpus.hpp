#pragma once

/// Deterministic corpora for the oracle test suites and the CLI's
/// gen-corpus command. All randomness flows through Rng, which fixes the
/// engine (mt19937_64) and the reduction scheme, so a seed pins the
/// byte-exact corpus on every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "toral/finabelian.hpp"
#include "toral/intmatrix.hpp"
#include "toral/lattice.hpp"
#include "toral/multitab.hpp"
#include "toral/numeric.hpp"
#include "toral/torusgroup.hpp"

namespace toral {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Draw in {0, ..., bound-1}; bound >= 1. Reduction by modulo: the
    /// tiny bias is irrelevant for corpus generation and keeps the
    /// sequence portable.
    std::uint64_t below(std::uint64_t bound);

    /// Inclusive range draw.
    long range(long lo, long hi);

  private:
    std::mt19937_64 engine_;
};

IntMatrix random_matrix(std::size_t rows, std::size_t cols, long max_abs, Rng& rng);

/// Lattice in a random ambient 1..max_ambient spanned by a random number
/// of rows with entries in [-max_abs, max_abs].
Lattice random_lattice(std::size_t max_ambient, long max_abs, Rng& rng);

/// Rational in [0, 1) with denominator exactly den.
Rat random_rational(unsigned long den, Rng& rng);

/// Point whose coordinates all have denominator den.
TorusPoint random_point(std::size_t ambient, unsigned long den, Rng& rng);

/// Finite subgroup generated by one or two points over a common
/// denominator <= max_den, redrawn until the order bound holds (a single
/// generator always does when max_den <= max_order).
TorusSubgroup random_finite_subgroup(std::size_t ambient, unsigned long max_den,
                                     unsigned long max_order, Rng& rng);

/// Every invariant-factor chain with product <= max_order, the trivial
/// chain first, ordered by order and then lexicographically.
std::vector<FinAbelian> abelian_chains(unsigned long max_order);

/// Multiplication table of the direct sum against g's invariant factors,
/// tuples labeled lexicographically with the identity at 1.
FiniteGroupTable table_of(const FinAbelian& g);

/// Uniform-ish permutation of {1..k} with 1 fixed (Fisher-Yates on 2..k).
std::vector<unsigned> random_permutation_fixing_one(std::size_t k, Rng& rng);

/// Random group of order <= max_order (abelian chains plus the
/// non-abelian catalog entries that fit), randomly relabeled.
FiniteGroupTable random_table(std::size_t max_order, Rng& rng);

/// All groups of order <= bound up to isomorphism, for bound <= 8:
/// the abelian chains plus S3, D4 and the quaternion group (14 tables at
/// bound 8). Ordered by order, abelian first.
std::vector<FiniteGroupTable> small_group_catalog(std::size_t bound);

}  // namespace toral
