#pragma once

// Shared builders and independent oracles for the test suites. Everything
// here recomputes from first principles: no helper may call the library
// function it is meant to check.

#include <algorithm>
#include <map>
#include <vector>

#include "toral/corpus.hpp"
#include "toral/finabelian.hpp"
#include "toral/intmatrix.hpp"
#include "toral/multitab.hpp"
#include "toral/torusgroup.hpp"

namespace toral::testing {

inline Rat rq(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline TorusPoint pt(std::vector<Rat> coords) { return TorusPoint(coords); }

/// Random unimodular matrix: identity churned by elementary row ops.
inline IntMatrix random_unimodular(std::size_t n, Rng& rng) {
    IntMatrix u = IntMatrix::identity(n);
    for (std::size_t step = 0; step < 3 * n + 2; ++step) {
        std::size_t a = rng.below(n), b = rng.below(n);
        switch (rng.below(3)) {
            case 0:
                if (a != b) u.add_row_multiple(a, b, Int(rng.range(-3, 3)));
                break;
            case 1:
                u.swap_rows(a, b);
                break;
            default:
                u.negate_row(a);
        }
    }
    return u;
}

/// Group-axiom check by definition, independent of validate_full.
inline bool naive_group_axioms(std::size_t k, const std::vector<std::vector<unsigned>>& rows) {
    if (k == 0 || rows.size() != k) return false;
    for (const auto& row : rows) {
        if (row.size() != k) return false;
        for (unsigned v : row)
            if (v < 1 || v > k) return false;
    }
    auto at = [&](unsigned i, unsigned j) { return rows[i - 1][j - 1]; };
    for (unsigned j = 1; j <= k; ++j)
        if (at(1, j) != j || at(j, 1) != j) return false;
    for (unsigned i = 1; i <= k; ++i)
        for (unsigned j = 1; j <= k; ++j)
            for (unsigned l = 1; l <= k; ++l)
                if (at(at(i, j), l) != at(i, at(j, l))) return false;
    for (unsigned i = 1; i <= k; ++i) {
        bool inv = false;
        for (unsigned j = 1; j <= k && !inv; ++j) inv = at(i, j) == 1 && at(j, i) == 1;
        if (!inv) return false;
    }
    return true;
}

/// Plain odometer scan over all assignments, the oracle for solve_system.
inline std::optional<std::vector<unsigned>> naive_solve(const EqSystem& s,
                                                        const FiniteGroupTable& g) {
    std::size_t vars = system_variables(s);
    std::vector<unsigned> assignment(vars, 1);
    while (true) {
        bool ok = true;
        for (const Word& w : s.equations)
            if (eval_word(w, assignment, g) != 1) {
                ok = false;
                break;
            }
        if (ok)
            for (const Word& w : s.inequations)
                if (eval_word(w, assignment, g) == 1) {
                    ok = false;
                    break;
                }
        if (ok) return assignment;
        std::size_t i = vars;
        while (i > 0) {
            if (++assignment[i - 1] <= g.size()) break;
            assignment[i - 1] = 1;
            --i;
        }
        if (i == 0) return std::nullopt;
    }
}

/// Abstract finite abelian group as tuples against a modulus chain.
struct ChainGroup {
    std::vector<unsigned long> moduli;

    unsigned long size() const {
        unsigned long n = 1;
        for (unsigned long d : moduli) n *= d;
        return n;
    }
    std::vector<unsigned long> element(unsigned long index) const {
        std::vector<unsigned long> tuple(moduli.size());
        for (std::size_t i = moduli.size(); i-- > 0;) {
            tuple[i] = index % moduli[i];
            index /= moduli[i];
        }
        return tuple;
    }
    unsigned long index_of(const std::vector<unsigned long>& tuple) const {
        unsigned long index = 0;
        for (std::size_t i = 0; i < moduli.size(); ++i) index = index * moduli[i] + tuple[i];
        return index;
    }
    unsigned long add(unsigned long a, unsigned long b) const {
        std::vector<unsigned long> x = element(a), y = element(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % moduli[i];
        return index_of(x);
    }
    unsigned long scale(unsigned long n, unsigned long a) const {
        std::vector<unsigned long> x = element(a);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] * n) % moduli[i];
        return index_of(x);
    }
    unsigned long order_of(unsigned long a) const {
        unsigned long acc = a, ord = 1;
        while (acc != 0) {
            acc = add(acc, a);
            ++ord;
        }
        return ord;
    }
};

inline ChainGroup chain_group(const FinAbelian& g) {
    ChainGroup out;
    for (const Int& d : g.invariant_factors()) out.moduli.push_back(d.get_ui());
    return out;
}

/// Brute-force search for an injective homomorphism H -> A over images of
/// H's canonical generators, pruning by element order and by kernel
/// triviality on the subgroup generated so far.
inline bool oracle_embeds(const FinAbelian& h, const FinAbelian& a) {
    ChainGroup hg = chain_group(h), ag = chain_group(a);
    std::size_t r = hg.moduli.size();
    std::vector<unsigned long> images(r, 0);
    // kernel check on the product of the first `depth` cyclic factors
    auto injective_prefix = [&](std::size_t depth) {
        ChainGroup prefix{std::vector<unsigned long>(hg.moduli.begin(),
                                                     hg.moduli.begin() + depth)};
        for (unsigned long y = 1; y < prefix.size(); ++y) {
            std::vector<unsigned long> tuple = prefix.element(y);
            unsigned long value = 0;
            for (std::size_t i = 0; i < depth; ++i)
                value = ag.add(value, ag.scale(tuple[i], images[i]));
            if (value == 0) return false;
        }
        return true;
    };
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == r) return true;
        for (unsigned long candidate = 0; candidate < ag.size(); ++candidate) {
            if (ag.scale(hg.moduli[depth], candidate) != 0) continue;
            images[depth] = candidate;
            if (injective_prefix(depth + 1) && self(self, depth + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

/// Brute-force search for a surjective homomorphism H -> A, pruning by
/// element order and by the largest subgroup the remaining generators
/// could still add.
inline bool oracle_surjects(const FinAbelian& h, const FinAbelian& a) {
    ChainGroup hg = chain_group(h), ag = chain_group(a);
    std::size_t r = hg.moduli.size();
    unsigned long target = ag.size();
    std::vector<unsigned long> images(r, 0);
    auto generated = [&](std::size_t depth) {
        std::vector<bool> seen(target, false);
        seen[0] = true;
        unsigned long count = 1;
        std::vector<unsigned long> queue{0};
        while (!queue.empty()) {
            unsigned long x = queue.back();
            queue.pop_back();
            for (std::size_t i = 0; i < depth; ++i) {
                unsigned long y = ag.add(x, images[i]);
                if (!seen[y]) {
                    seen[y] = true;
                    ++count;
                    queue.push_back(y);
                }
            }
        }
        return count;
    };
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        unsigned long reach = generated(depth);
        unsigned long best = reach;
        for (std::size_t i = depth; i < r; ++i) best *= hg.moduli[i];
        if (best < target) return false;
        if (depth == r) return reach == target;
        for (unsigned long candidate = 0; candidate < ag.size(); ++candidate) {
            if (ag.scale(hg.moduli[depth], candidate) != 0) continue;
            images[depth] = candidate;
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0);
}

/// The finite subgroup's own multiplication table: elements sorted (zero
/// first), labels 1-based. Built from raw point addition only.
inline FiniteGroupTable table_of_subgroup(const TorusSubgroup& k) {
    std::vector<TorusPoint> elems = elements(k);
    auto label = [&](const TorusPoint& x) {
        return static_cast<unsigned>(
            std::lower_bound(elems.begin(), elems.end(), x) - elems.begin() + 1);
    };
    std::vector<std::vector<unsigned>> rows(elems.size(), std::vector<unsigned>(elems.size()));
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
            rows[a][b] = label(elems[a] + elems[b]);
    return FiniteGroupTable(elems.size(), rows);
}

/// Brute-force surjective homomorphism existence from a group given only
/// by its table onto an abstract A, branching over images of a greedy
/// generating set with forced closure.
inline bool oracle_table_surjects(const FiniteGroupTable& t, const FinAbelian& a) {
    ChainGroup ag = chain_group(a);
    unsigned long target = ag.size();
    const unsigned k = static_cast<unsigned>(t.size());
    std::vector<unsigned> ord(k + 1, 0);
    for (unsigned i = 1; i <= k; ++i) {
        unsigned acc = i, o = 1;
        while (acc != 1) {
            acc = t.entry(acc, i);
            ++o;
        }
        ord[i] = o;
    }
    std::vector<unsigned long> image(k + 1, 0);
    std::vector<bool> assigned(k + 1, false);
    assigned[1] = true;
    auto close = [&](std::vector<unsigned>& trail) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (unsigned i = 1; i <= k; ++i) {
                if (!assigned[i]) continue;
                for (unsigned j = 1; j <= k; ++j) {
                    if (!assigned[j]) continue;
                    unsigned p = t.entry(i, j);
                    unsigned long forced = ag.add(image[i], image[j]);
                    if (!assigned[p]) {
                        assigned[p] = true;
                        image[p] = forced;
                        trail.push_back(p);
                        changed = true;
                    } else if (image[p] != forced) {
                        return false;
                    }
                }
            }
        }
        return true;
    };
    auto rec = [&](auto&& self) -> bool {
        unsigned next = 0;
        for (unsigned i = 1; i <= k; ++i)
            if (!assigned[i]) {
                next = i;
                break;
            }
        if (next == 0) {
            std::vector<bool> hit(target, false);
            unsigned long count = 0;
            for (unsigned i = 1; i <= k; ++i)
                if (!hit[image[i]]) {
                    hit[image[i]] = true;
                    ++count;
                }
            return count == target;
        }
        for (unsigned long candidate = 0; candidate < target; ++candidate) {
            if (ag.scale(ord[next], candidate) != 0) continue;
            std::vector<unsigned> trail{next};
            assigned[next] = true;
            image[next] = candidate;
            if (close(trail) && self(self)) return true;
            for (unsigned i : trail) assigned[i] = false;
        }
        return false;
    };
    return rec(rec);
}

/// Invariant factors recovered from element orders alone: for each prime,
/// the partition is reconstructed from the counts of elements killed by
/// successive p-powers; partitions are then aligned at their largest
/// parts and multiplied across primes.
inline std::vector<Int> invariants_from_orders(const FiniteGroupTable& t) {
    const unsigned k = static_cast<unsigned>(t.size());
    std::vector<unsigned long> ord(k + 1, 0);
    for (unsigned i = 1; i <= k; ++i) {
        unsigned acc = i;
        unsigned long o = 1;
        while (acc != 1) {
            acc = t.entry(acc, i);
            ++o;
        }
        ord[i] = o;
    }
    std::map<unsigned long, std::vector<unsigned>> partitions;  // prime -> parts desc
    unsigned long m = k;
    for (unsigned long p = 2; p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        std::vector<unsigned long> killed;  // killed[j] = #elements of order dividing p^j
        killed.push_back(1);
        for (unsigned j = 1;; ++j) {
            unsigned long pj = 1;
            for (unsigned s = 0; s < j; ++s) pj *= p;
            unsigned long count = 0;
            for (unsigned i = 1; i <= k; ++i)
                if (pj % ord[i] == 0) ++count;
            killed.push_back(count);
            if (count == killed[j - 1]) break;  // stabilized: exponent reached
        }
        std::vector<unsigned> count_ge;  // #parts >= j, for j = 1, 2, ...
        for (std::size_t j = 1; j + 1 < killed.size(); ++j) {
            unsigned long ratio = killed[j] / killed[j - 1];
            unsigned log = 0;
            while (ratio > 1) {
                ratio /= p;
                ++log;
            }
            count_ge.push_back(log);
        }
        std::vector<unsigned> parts;  // descending
        for (unsigned i = 1; !count_ge.empty() && i <= count_ge[0]; ++i) {
            unsigned value = 0;
            for (unsigned j = 0; j < count_ge.size(); ++j)
                if (count_ge[j] >= i) value = j + 1;
            parts.push_back(value);
        }
        if (!parts.empty()) partitions[p] = parts;
    }
    std::size_t rank = 0;
    for (const auto& [p, parts] : partitions) rank = std::max(rank, parts.size());
    std::vector<Int> factors(rank, Int(1));  // descending while building
    for (const auto& [p, parts] : partitions)
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Int pe(1);
            for (unsigned s = 0; s < parts[i]; ++s) pe *= static_cast<unsigned long>(p);
            factors[i] *= pe;
        }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

}  // namespace toral::testing
