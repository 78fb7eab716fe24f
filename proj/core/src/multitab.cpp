#include "toral/multitab.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "toral/error.hpp"

namespace toral {

namespace {

std::vector<unsigned> flatten_rows(std::size_t size,
                                   const std::vector<std::vector<unsigned>>& rows) {
    if (rows.size() != size)
        throw Error(Errc::invalid_argument, "table: row count does not match size");
    std::vector<unsigned> flat;
    flat.reserve(size * size);
    for (const auto& row : rows) {
        if (row.size() != size)
            throw Error(Errc::invalid_argument, "table: ragged row");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return flat;
}

std::string cell(unsigned i, unsigned j) {
    std::ostringstream os;
    os << "(" << i << "," << j << ")";
    return os.str();
}

}  // namespace

PartialTable::PartialTable(std::size_t size, std::vector<std::vector<unsigned>> rows)
    : size_(size), entries_(flatten_rows(size, rows)) {}

unsigned PartialTable::entry(unsigned i, unsigned j) const {
    if (i < 1 || i > size_ || j < 1 || j > size_)
        throw Error(Errc::out_of_range, "partial table: cell out of range");
    return entries_[(i - 1) * size_ + (j - 1)];
}

void PartialTable::set(unsigned i, unsigned j, unsigned value) {
    if (i < 1 || i > size_ || j < 1 || j > size_)
        throw Error(Errc::out_of_range, "partial table: cell out of range");
    entries_[(i - 1) * size_ + (j - 1)] = value;
}

TableCheck validate_full(std::size_t size, const std::vector<std::vector<unsigned>>& rows) {
    std::vector<unsigned> t = flatten_rows(size, rows);
    auto at = [&](unsigned i, unsigned j) { return t[(i - 1) * size + (j - 1)]; };
    if (size == 0) return {false, "table must have at least the identity"};
    for (unsigned i = 1; i <= size; ++i)
        for (unsigned j = 1; j <= size; ++j)
            if (at(i, j) < 1 || at(i, j) > size)
                return {false, "entry " + cell(i, j) + " outside {1..k}"};
    for (unsigned j = 1; j <= size; ++j) {
        if (at(1, j) != j) return {false, "identity row broken at " + cell(1, j)};
        if (at(j, 1) != j) return {false, "identity column broken at " + cell(j, 1)};
    }
    for (unsigned i = 1; i <= size; ++i)
        for (unsigned j = 1; j <= size; ++j)
            for (unsigned l = 1; l <= size; ++l)
                if (at(at(i, j), l) != at(i, at(j, l)))
                    return {false, "associativity fails on (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(l) + ")"};
    for (unsigned i = 1; i <= size; ++i) {
        bool has_inverse = false;
        for (unsigned j = 1; j <= size && !has_inverse; ++j)
            if (at(i, j) == 1 && at(j, i) == 1) has_inverse = true;
        if (!has_inverse) return {false, "no inverse for " + std::to_string(i)};
    }
    return {};
}

TableCheck validate_partial(const PartialTable& t) {
    const unsigned k = static_cast<unsigned>(t.size());
    for (unsigned j = 1; j <= k; ++j) {
        if (t.entry(1, j) != 0 && t.entry(1, j) != j)
            return {false, "identity row broken at " + cell(1, j)};
        if (t.entry(j, 1) != 0 && t.entry(j, 1) != j)
            return {false, "identity column broken at " + cell(j, 1)};
    }
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j1 = 1; j1 <= k; ++j1)
            for (unsigned j2 = j1 + 1; j2 <= k; ++j2) {
                if (t.entry(i, j1) != 0 && t.entry(i, j1) == t.entry(i, j2))
                    return {false, "cancellation fails in row " + std::to_string(i) + ": " +
                                       cell(i, j1) + " = " + cell(i, j2)};
                if (t.entry(j1, i) != 0 && t.entry(j1, i) == t.entry(j2, i))
                    return {false, "cancellation fails in column " + std::to_string(i) + ": " +
                                       cell(j1, i) + " = " + cell(j2, i)};
            }
    // Associativity on triples whose intermediate products stay inside the
    // window and are defined.
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j)
            for (unsigned l = 1; l <= k; ++l) {
                unsigned ij = t.entry(i, j), jl = t.entry(j, l);
                if (ij == 0 || jl == 0 || ij > k || jl > k) continue;
                unsigned left = t.entry(ij, l), right = t.entry(i, jl);
                if (left != 0 && right != 0 && left != right)
                    return {false, "associativity fails on (" + std::to_string(i) + "," +
                                       std::to_string(j) + "," + std::to_string(l) + ")"};
            }
    return {};
}

FiniteGroupTable::FiniteGroupTable(std::size_t size, std::vector<std::vector<unsigned>> rows)
    : size_(size), entries_(flatten_rows(size, rows)) {
    TableCheck check = validate_full(size, rows);
    if (!check.ok) throw Error(Errc::invalid_argument, "group table: " + check.violation);
}

unsigned FiniteGroupTable::inverse(unsigned a) const {
    for (unsigned j = 1; j <= size_; ++j)
        if (entry(a, j) == 1) return j;
    throw Error(Errc::out_of_range, "inverse: label out of range");
}

unsigned eval_word(const Word& w, const std::vector<unsigned>& assignment,
                   const FiniteGroupTable& g) {
    unsigned acc = 1;
    for (const Letter& letter : w) {
        unsigned value;
        if (letter.kind == Letter::Kind::variable) {
            if (letter.id < 1 || letter.id > assignment.size())
                throw Error(Errc::unbound_variable,
                            "eval_word: unbound variable x" + std::to_string(letter.id));
            value = assignment[letter.id - 1];
        } else {
            if (letter.id < 1 || letter.id > g.size())
                throw Error(Errc::constant_out_of_range,
                            "eval_word: constant " + std::to_string(letter.id) + " out of range");
            value = letter.id;
        }
        if (letter.exp == -1) value = g.inverse(value);
        acc = g.entry(acc, value);
    }
    return acc;
}

bool in_basic_clopen(const FiniteGroupTable& g, const std::vector<CellConstraint>& constraints) {
    for (const CellConstraint& c : constraints) {
        if (c.i < 1 || c.i > g.size() || c.j < 1 || c.j > g.size())
            throw Error(Errc::out_of_range, "in_basic_clopen: index out of range");
        if (c.m > g.size() || g.entry(c.i, c.j) != c.m) return false;
    }
    return true;
}

std::size_t system_variables(const EqSystem& s) {
    std::size_t v = 0;
    auto scan = [&](const std::vector<Word>& words) {
        for (const Word& w : words)
            for (const Letter& letter : w)
                if (letter.kind == Letter::Kind::variable && letter.id > v) v = letter.id;
    };
    scan(s.equations);
    scan(s.inequations);
    return v;
}

namespace {

unsigned max_bound_variable(const Word& w) {
    unsigned top = 0;
    for (const Letter& letter : w)
        if (letter.kind == Letter::Kind::variable && letter.id > top) top = letter.id;
    return top;
}

struct SystemSolver {
    const FiniteGroupTable& g;
    // Words bucketed by the highest variable they mention, so each can be
    // tested as soon as that variable is bound (empty-variable words at 0).
    std::vector<std::vector<const Word*>> eq_by_depth, ineq_by_depth;
    std::vector<unsigned> assignment;
    std::size_t vars;

    SystemSolver(const EqSystem& s, const FiniteGroupTable& table)
        : g(table), vars(system_variables(s)) {
        eq_by_depth.resize(vars + 1);
        ineq_by_depth.resize(vars + 1);
        for (const Word& w : s.equations) eq_by_depth[max_bound_variable(w)].push_back(&w);
        for (const Word& w : s.inequations) ineq_by_depth[max_bound_variable(w)].push_back(&w);
        assignment.assign(vars, 1);
    }

    bool consistent_at(std::size_t depth) {
        std::vector<unsigned> bound(assignment.begin(), assignment.begin() + depth);
        for (const Word* w : eq_by_depth[depth])
            if (eval_word(*w, bound, g) != 1) return false;
        for (const Word* w : ineq_by_depth[depth])
            if (eval_word(*w, bound, g) == 1) return false;
        return true;
    }

    bool search(std::size_t depth) {
        if (depth > vars) return true;
        if (depth == 0) return consistent_at(0) && search(1);
        for (unsigned candidate = 1; candidate <= g.size(); ++candidate) {
            assignment[depth - 1] = candidate;
            if (consistent_at(depth) && search(depth + 1)) return true;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<unsigned>> solve_system(const EqSystem& s, const FiniteGroupTable& g,
                                                  unsigned long cap) {
    std::size_t vars = system_variables(s);
    Int space;
    mpz_ui_pow_ui(space.get_mpz_t(), g.size(), vars);
    if (space > cap) throw Error(Errc::cap_exceeded, "solve_system: search space exceeds cap");
    SystemSolver solver(s, g);
    if (!solver.search(0)) return std::nullopt;
    return solver.assignment;
}

FiniteGroupTable push_forward(const FiniteGroupTable& g, const std::vector<unsigned>& perm) {
    const std::size_t k = g.size();
    if (perm.size() != k)
        throw Error(Errc::permutation_invalid, "push_forward: permutation length mismatch");
    std::vector<unsigned> inverse_perm(k, 0);
    for (unsigned i = 1; i <= k; ++i) {
        unsigned image = perm[i - 1];
        if (image < 1 || image > k || inverse_perm[image - 1] != 0)
            throw Error(Errc::permutation_invalid, "push_forward: not a permutation of {1..k}");
        inverse_perm[image - 1] = i;
    }
    if (perm[0] != 1)
        throw Error(Errc::permutation_invalid, "push_forward: permutation must fix 1");
    std::vector<std::vector<unsigned>> rows(k, std::vector<unsigned>(k));
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j)
            rows[i - 1][j - 1] = perm[g.entry(inverse_perm[i - 1], inverse_perm[j - 1]) - 1];
    FiniteGroupTable out(k, rows);
    for (unsigned a = 1; a <= k; ++a)
        for (unsigned b = 1; b <= k; ++b)
            if (out.entry(perm[a - 1], perm[b - 1]) != perm[g.entry(a, b) - 1])
                throw Error(Errc::invalid_argument, "push_forward: relabeling not isomorphic");
    return out;
}

namespace {

/// Partial injective homomorphism search with forced closure: whenever
/// both factors of a product have images, the product's image is forced.
struct EmbedSearch {
    const FiniteGroupTable& h;
    const FiniteGroupTable& g;
    std::vector<unsigned> image;   // image[a-1], 0 = unset
    std::vector<bool> used;        // codomain labels already taken

    EmbedSearch(const FiniteGroupTable& hh, const FiniteGroupTable& gg)
        : h(hh), g(gg), image(hh.size(), 0), used(gg.size(), false) {}

    bool assign(unsigned a, unsigned value, std::vector<unsigned>& trail) {
        if (image[a - 1] != 0) return image[a - 1] == value;
        if (used[value - 1]) return false;
        image[a - 1] = value;
        used[value - 1] = true;
        trail.push_back(a);
        return true;
    }

    bool propagate(std::vector<unsigned>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (unsigned a = 1; a <= h.size(); ++a) {
                if (image[a - 1] == 0) continue;
                for (unsigned b = 1; b <= h.size(); ++b) {
                    if (image[b - 1] == 0) continue;
                    unsigned product = h.entry(a, b);
                    unsigned forced = g.entry(image[a - 1], image[b - 1]);
                    if (image[product - 1] == 0) {
                        if (!assign(product, forced, trail)) return false;
                        changed = true;
                    } else if (image[product - 1] != forced) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void unwind(std::vector<unsigned>& trail, std::size_t mark) {
        while (trail.size() > mark) {
            unsigned a = trail.back();
            trail.pop_back();
            used[image[a - 1] - 1] = false;
            image[a - 1] = 0;
        }
    }

    bool search(std::vector<unsigned>& trail) {
        unsigned next = 0;
        for (unsigned a = 1; a <= h.size(); ++a)
            if (image[a - 1] == 0) {
                next = a;
                break;
            }
        if (next == 0) return true;
        for (unsigned candidate = 1; candidate <= g.size(); ++candidate) {
            std::size_t mark = trail.size();
            if (assign(next, candidate, trail) && propagate(trail) && search(trail)) return true;
            unwind(trail, mark);
        }
        return false;
    }
};

}  // namespace

bool embeds_table(const FiniteGroupTable& h, const FiniteGroupTable& g, unsigned long cap) {
    Int space;
    mpz_ui_pow_ui(space.get_mpz_t(), g.size(), h.size());
    if (space > cap) throw Error(Errc::cap_exceeded, "embeds_table: search space exceeds cap");
    if (h.size() > g.size()) return false;
    if (g.size() % h.size() != 0) return false;  // Lagrange
    EmbedSearch search(h, g);
    std::vector<unsigned> trail;
    if (!search.assign(1, 1, trail)) return false;
    if (!search.propagate(trail)) return false;
    return search.search(trail);
}

EqSystem embedding_system(const FiniteGroupTable& h) {
    EqSystem s;
    const unsigned k = static_cast<unsigned>(h.size());
    // x_1 must be the identity of the target.
    s.equations.push_back(Word{var_letter(1)});
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j)
            s.equations.push_back(
                Word{var_letter(i), var_letter(j), var_letter(h.entry(i, j), -1)});
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = i + 1; j <= k; ++j)
            s.inequations.push_back(Word{var_letter(i), var_letter(j, -1)});
    return s;
}

FinitePredicates finite_predicates(const FiniteGroupTable& g) {
    FinitePredicates out;
    const unsigned k = static_cast<unsigned>(g.size());
    for (unsigned i = 1; i <= k && out.abelian; ++i)
        for (unsigned j = 1; j <= k; ++j)
            if (g.entry(i, j) != g.entry(j, i)) {
                out.abelian = false;
                break;
            }
    unsigned exponent = 1;
    for (unsigned i = 1; i <= k; ++i) {
        unsigned power = i, ord = 1;
        while (power != 1) {
            power = g.entry(power, i);
            ++ord;
        }
        out.torsion_orders.push_back(ord);
        exponent = static_cast<unsigned>(std::lcm(exponent, ord));
    }
    for (unsigned n = 1; n <= k && out.divisible; ++n)
        for (unsigned e = 1; e <= exponent; ++e) {
            bool hit = false;
            for (unsigned m = 1; m <= k && !hit; ++m) {
                unsigned power = 1;
                for (unsigned step = 0; step < e; ++step) power = g.entry(power, m);
                hit = power == n;
            }
            if (!hit) {
                out.divisible = false;
                break;
            }
        }
    return out;
}

Lattice phi_lattice(const FiniteGroupTable& g) {
    if (!finite_predicates(g).abelian)
        throw Error(Errc::non_abelian, "phi_lattice: table is not abelian");
    const std::size_t k = g.size();
    IntMatrix gens(0, k);
    std::vector<Int> row(k, Int(0));
    row[0] = 1;
    gens.append_row(row);
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j) {
            std::fill(row.begin(), row.end(), Int(0));
            row[i - 1] += 1;
            row[j - 1] += 1;
            row[g.entry(i, j) - 1] -= 1;
            gens.append_row(row);
        }
    return hnf(gens);
}

}  // namespace toral
