#include "toral/corpus.hpp"

#include <algorithm>

#include "toral/error.hpp"

namespace toral {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(Errc::invalid_argument, "Rng::below: bound must be positive");
    return engine_() % bound;
}

long Rng::range(long lo, long hi) {
    if (lo > hi) throw Error(Errc::invalid_argument, "Rng::range: empty range");
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

IntMatrix random_matrix(std::size_t rows, std::size_t cols, long max_abs, Rng& rng) {
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Int(rng.range(-max_abs, max_abs));
    return m;
}

Lattice random_lattice(std::size_t max_ambient, long max_abs, Rng& rng) {
    std::size_t ambient = 1 + rng.below(max_ambient);
    std::size_t rows = rng.below(ambient + 2);
    return hnf(random_matrix(rows, ambient, max_abs, rng));
}

Rat random_rational(unsigned long den, Rng& rng) {
    return make_rat(Int(static_cast<unsigned long>(rng.below(den))), Int(den));
}

TorusPoint random_point(std::size_t ambient, unsigned long den, Rng& rng) {
    std::vector<Rat> coords;
    coords.reserve(ambient);
    for (std::size_t n = 0; n < ambient; ++n) coords.push_back(random_rational(den, rng));
    return TorusPoint(coords);
}

TorusSubgroup random_finite_subgroup(std::size_t ambient, unsigned long max_den,
                                     unsigned long max_order, Rng& rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        unsigned long den = 1 + rng.below(max_den);
        std::size_t generators = attempt < 8 ? 1 + rng.below(2) : 1;
        std::vector<TorusPoint> points;
        for (std::size_t g = 0; g < generators; ++g)
            points.push_back(random_point(ambient, den, rng));
        TorusSubgroup k = generated_subgroup(ambient, points);
        std::optional<Int> n = order(k);
        if (n && *n <= max_order) return k;
    }
    return generated_subgroup(ambient, {});
}

namespace {

void chains_rec(unsigned long remaining, unsigned long prev, std::vector<Int>& current,
                std::vector<std::vector<Int>>& out) {
    if (remaining == 1) {
        out.push_back(current);
        return;
    }
    for (unsigned long d = prev; d <= remaining; d += prev) {
        if (d < 2 || remaining % d != 0) continue;
        current.push_back(Int(d));
        chains_rec(remaining / d, d, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<FinAbelian> abelian_chains(unsigned long max_order) {
    std::vector<FinAbelian> groups;
    for (unsigned long total = 1; total <= max_order; ++total) {
        std::vector<std::vector<Int>> chains;
        std::vector<Int> current;
        chains_rec(total, 1, current, chains);
        std::sort(chains.begin(), chains.end());
        for (const auto& chain : chains) groups.push_back(FinAbelian::of(chain));
    }
    return groups;
}

FiniteGroupTable table_of(const FinAbelian& g) {
    const std::vector<Int>& factors = g.invariant_factors();
    std::vector<unsigned long> moduli;
    unsigned long size = 1;
    for (const Int& d : factors) {
        moduli.push_back(d.get_ui());
        size *= moduli.back();
    }
    auto label = [&](const std::vector<unsigned long>& tuple) {
        unsigned long index = 0;
        for (std::size_t i = 0; i < tuple.size(); ++i) index = index * moduli[i] + tuple[i];
        return static_cast<unsigned>(index + 1);
    };
    std::vector<std::vector<unsigned long>> tuples;
    tuples.reserve(size);
    std::vector<unsigned long> tuple(moduli.size(), 0);
    for (unsigned long n = 0; n < size; ++n) {
        tuples.push_back(tuple);
        for (std::size_t i = moduli.size(); i-- > 0;) {
            if (++tuple[i] < moduli[i]) break;
            tuple[i] = 0;
        }
    }
    std::vector<std::vector<unsigned>> rows(size, std::vector<unsigned>(size));
    std::vector<unsigned long> sum(moduli.size());
    for (unsigned long a = 0; a < size; ++a)
        for (unsigned long b = 0; b < size; ++b) {
            for (std::size_t i = 0; i < moduli.size(); ++i)
                sum[i] = (tuples[a][i] + tuples[b][i]) % moduli[i];
            rows[a][b] = label(sum);
        }
    return FiniteGroupTable(size, rows);
}

std::vector<unsigned> random_permutation_fixing_one(std::size_t k, Rng& rng) {
    std::vector<unsigned> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = static_cast<unsigned>(i + 1);
    for (std::size_t i = k; i > 2; --i) {
        std::size_t j = 1 + rng.below(i - 1);  // target slot in 2..i
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

namespace {

FiniteGroupTable symmetric3() {
    std::vector<std::vector<unsigned>> perms = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                                {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    auto find = [&](const std::vector<unsigned>& p) {
        for (std::size_t n = 0; n < perms.size(); ++n)
            if (perms[n] == p) return static_cast<unsigned>(n + 1);
        return 0u;
    };
    std::vector<std::vector<unsigned>> rows(6, std::vector<unsigned>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::vector<unsigned> composed(3);
            for (unsigned x = 0; x < 3; ++x) composed[x] = perms[a][perms[b][x] - 1];
            rows[a][b] = find(composed);
        }
    return FiniteGroupTable(6, rows);
}

FiniteGroupTable dihedral4() {
    auto label = [](unsigned r, unsigned s) { return 1 + r + 4 * s; };
    std::vector<std::vector<unsigned>> rows(8, std::vector<unsigned>(8));
    for (unsigned r1 = 0; r1 < 4; ++r1)
        for (unsigned s1 = 0; s1 < 2; ++s1)
            for (unsigned r2 = 0; r2 < 4; ++r2)
                for (unsigned s2 = 0; s2 < 2; ++s2) {
                    unsigned r = s1 ? (r1 + 4 - r2) % 4 : (r1 + r2) % 4;
                    rows[label(r1, s1) - 1][label(r2, s2) - 1] = label(r, (s1 + s2) % 2);
                }
    return FiniteGroupTable(8, rows);
}

FiniteGroupTable quaternion8() {
    // Axes 0 = 1, 1 = i, 2 = j, 3 = k; label = 2*axis + (sign < 0 ? 2 : 1).
    static const unsigned axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::vector<std::vector<unsigned>> rows(8, std::vector<unsigned>(8));
    for (unsigned a1 = 0; a1 < 4; ++a1)
        for (int s1 : {1, -1})
            for (unsigned a2 = 0; a2 < 4; ++a2)
                for (int s2 : {1, -1}) {
                    unsigned la = 2 * a1 + (s1 < 0 ? 2 : 1);
                    unsigned lb = 2 * a2 + (s2 < 0 ? 2 : 1);
                    int s = s1 * s2 * sign[a1][a2];
                    rows[la - 1][lb - 1] = 2 * axis[a1][a2] + (s < 0 ? 2 : 1);
                }
    return FiniteGroupTable(8, rows);
}

std::vector<FiniteGroupTable> nonabelian_catalog(std::size_t bound) {
    std::vector<FiniteGroupTable> out;
    if (bound >= 6) out.push_back(symmetric3());
    if (bound >= 8) {
        out.push_back(dihedral4());
        out.push_back(quaternion8());
    }
    return out;
}

}  // namespace

FiniteGroupTable random_table(std::size_t max_order, Rng& rng) {
    std::vector<FiniteGroupTable> pool;
    for (const FinAbelian& g : abelian_chains(max_order)) pool.push_back(table_of(g));
    for (FiniteGroupTable& t : nonabelian_catalog(std::min<std::size_t>(max_order, 8)))
        pool.push_back(std::move(t));
    FiniteGroupTable picked = pool[rng.below(pool.size())];
    return push_forward(picked, random_permutation_fixing_one(picked.size(), rng));
}

std::vector<FiniteGroupTable> small_group_catalog(std::size_t bound) {
    if (bound > 8)
        throw Error(Errc::invalid_argument, "small_group_catalog: catalog stops at order 8");
    std::vector<FiniteGroupTable> out;
    std::vector<FiniteGroupTable> nonab = nonabelian_catalog(bound);
    for (std::size_t n = 1; n <= bound; ++n) {
        for (const FinAbelian& g : abelian_chains(n))
            if (toral::order(g) == n) out.push_back(table_of(g));
        for (const FiniteGroupTable& t : nonab)
            if (t.size() == n) out.push_back(t);
    }
    return out;
}

}  // namespace toral
