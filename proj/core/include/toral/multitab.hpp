#pragma once

/// Finite windows of multiplication tables over the labels {1..k} with 1
/// as the identity: validation against the group axioms, word evaluation,
/// equation/inequation solving, relabeling, embedding tests, and the
/// bridge from abelian tables to integer lattices.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toral/lattice.hpp"

namespace toral {

/// A partially known k×k window of a multiplication table. Entry 0 means
/// undefined; defined entries are labels in ℕ and may exceed k (the table
/// is a window into a table over all of ℕ).
class PartialTable {
  public:
    explicit PartialTable(std::size_t size) : size_(size), entries_(size * size, 0) {}
    PartialTable(std::size_t size, std::vector<std::vector<unsigned>> rows);

    std::size_t size() const { return size_; }
    unsigned entry(unsigned i, unsigned j) const;  // 1-based, 0 = undefined
    void set(unsigned i, unsigned j, unsigned value);

    bool operator==(const PartialTable& other) const = default;

  private:
    std::size_t size_;
    std::vector<unsigned> entries_;
};

/// A complete multiplication table of a group on {1..k} with identity 1.
/// Construction checks totality/closure, the identity law, associativity
/// and inverses, and throws Errc::invalid_argument otherwise.
class FiniteGroupTable {
  public:
    FiniteGroupTable(std::size_t size, std::vector<std::vector<unsigned>> rows);

    std::size_t size() const { return size_; }
    unsigned entry(unsigned i, unsigned j) const { return entries_[(i - 1) * size_ + (j - 1)]; }
    unsigned inverse(unsigned a) const;

    bool operator==(const FiniteGroupTable& other) const = default;

  private:
    std::size_t size_;
    std::vector<unsigned> entries_;
};

/// Validation outcome: ok, or the first violated constraint in prose.
struct TableCheck {
    bool ok = true;
    std::string violation;
};

/// Full group-axiom check of a total table given as rows (all entries in
/// 1..k): identity, associativity, inverses.
TableCheck validate_full(std::size_t size, const std::vector<std::vector<unsigned>>& rows);

/// Local consistency of a partial window: identity row/column where
/// defined, cancellation along defined lines, associativity on fully
/// defined triples. Absent entries are "not yet violated".
TableCheck validate_partial(const PartialTable& t);

/// One letter of a word: a variable x_index or a constant label, with
/// exponent +1 or -1.
struct Letter {
    enum class Kind { variable, constant };
    Kind kind;
    unsigned id;
    int exp;

    bool operator==(const Letter& other) const = default;
};

inline Letter var_letter(unsigned index, int exp = 1) {
    return Letter{Letter::Kind::variable, index, exp};
}
inline Letter const_letter(unsigned label, int exp = 1) {
    return Letter{Letter::Kind::constant, label, exp};
}

/// A word over variables and group constants; empty evaluates to 1.
using Word = std::vector<Letter>;

/// Finitely many equations (must evaluate to 1) and inequations (must
/// not).
struct EqSystem {
    std::vector<Word> equations;
    std::vector<Word> inequations;
};

/// Left-to-right evaluation; assignment[i-1] is the value of x_i.
/// Throws Errc::unbound_variable / Errc::constant_out_of_range.
unsigned eval_word(const Word& w, const std::vector<unsigned>& assignment,
                   const FiniteGroupTable& g);

/// Constraint triple (i, j, m): the table must satisfy i·j = m.
struct CellConstraint {
    unsigned i, j, m;
};

/// True iff g satisfies every constraint. i and j must be within the
/// table; m larger than the table trivially fails.
bool in_basic_clopen(const FiniteGroupTable& g, const std::vector<CellConstraint>& constraints);

inline constexpr unsigned long default_search_cap = 10000000;

/// Lexicographically first assignment over {1..k}^v solving the system,
/// or nullopt. The scan is a depth-first walk in lexicographic order with
/// sound prefix pruning (a word all of whose variables are bound decides
/// every extension), so the result is identical to a full scan. The cap
/// bounds the a-priori search space k^v.
std::optional<std::vector<unsigned>> solve_system(const EqSystem& s, const FiniteGroupTable& g,
                                                  unsigned long cap = default_search_cap);

/// Number of variables mentioned by the system (highest index).
std::size_t system_variables(const EqSystem& s);

/// Relabels g along a permutation φ of {1..k} with φ(1) = 1:
/// result(i, j) = φ(g(φ⁻¹(i), φ⁻¹(j))). perm[i-1] = φ(i).
/// Throws Errc::permutation_invalid.
FiniteGroupTable push_forward(const FiniteGroupTable& g, const std::vector<unsigned>& perm);

/// True iff an injective homomorphism h → g exists. Backtracking over
/// images with forced closure propagation; deterministic.
bool embeds_table(const FiniteGroupTable& h, const FiniteGroupTable& g,
                  unsigned long cap = default_search_cap);

/// The equation/inequation system whose solvability in g is equivalent to
/// embeds_table(h, g): one variable per label of h, all multiplication
/// constraints as equations and pairwise distinctness as inequations.
EqSystem embedding_system(const FiniteGroupTable& h);

struct FinitePredicates {
    bool abelian = true;
    std::vector<unsigned> torsion_orders;  // order of each label, in label order
    bool divisible = true;
};

/// Commutativity, element orders, and divisibility within the window:
/// for every n ≤ k and e ≤ exponent there is m with m^e = n.
FinitePredicates finite_predicates(const FiniteGroupTable& g);

/// For abelian g on labels {1..k}: the full relation lattice
/// Φ_k = {x ∈ Z^k : ∏ n^{x(n)} = 1 in g}, generated by e_1 and the rows
/// e_i + e_j − e_{g(i,j)}. Always full rank; Z^k/Φ_k is isomorphic to g.
/// Throws Errc::non_abelian otherwise.
Lattice phi_lattice(const FiniteGroupTable& g);

}  // namespace toral
