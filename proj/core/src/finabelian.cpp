#include "toral/finabelian.hpp"

#include "toral/error.hpp"
#include "toral/torusgroup.hpp"

namespace toral {

FinAbelian FinAbelian::of(const std::vector<Int>& moduli) {
    for (const Int& m : moduli)
        if (m < 1) throw Error(Errc::invalid_argument, "moduli must be positive");
    IntMatrix diag(moduli.size(), moduli.size());
    for (std::size_t i = 0; i < moduli.size(); ++i) diag.at(i, i) = moduli[i];
    SnfResult s = snf(diag);
    FinAbelian out;
    for (std::size_t i = 0; i < moduli.size(); ++i)
        if (s.d.at(i, i) > 1) out.factors_.push_back(s.d.at(i, i));
    return out;
}

FgAbelian quotient_group(std::size_t n, const Lattice& l) {
    if (l.ambient() != n) throw Error(Errc::ambient_mismatch, "quotient_group: ambient mismatch");
    SnfResult s = snf(l.basis());
    std::vector<Int> diag;
    for (std::size_t i = 0; i < l.rank(); ++i) diag.push_back(s.d.at(i, i));
    return FgAbelian{n - l.rank(), FinAbelian::of(diag)};
}

FinAbelian dual(const FinAbelian& a) { return a; }

std::map<Int, std::vector<unsigned>> primary_decomposition(const FinAbelian& a) {
    std::map<Int, std::vector<unsigned>> out;
    for (const Int& d : a.invariant_factors()) {
        Int rest = d;
        for (Int p = 2; p * p <= rest; ++p) {
            if (rest % p != 0) continue;
            unsigned e = 0;
            while (rest % p == 0) {
                rest /= p;
                ++e;
            }
            out[p].push_back(e);
        }
        if (rest > 1) out[rest].push_back(1);
    }
    return out;
}

bool embeds(const FinAbelian& a, const FinAbelian& b) {
    auto pa = primary_decomposition(a);
    auto pb = primary_decomposition(b);
    for (const auto& [p, lam] : pa) {
        auto it = pb.find(p);
        const std::vector<unsigned> empty;
        const std::vector<unsigned>& mu = it == pb.end() ? empty : it->second;
        if (lam.size() > mu.size()) return false;
        // chains are ascending in p-exponent, so align the largest parts
        for (std::size_t i = 0; i < lam.size(); ++i)
            if (lam[lam.size() - 1 - i] > mu[mu.size() - 1 - i]) return false;
    }
    return true;
}

bool is_quotient(const FinAbelian& a, const FinAbelian& b) { return embeds(dual(a), dual(b)); }

Int order(const FinAbelian& a) {
    Int n = 1;
    for (const Int& d : a.invariant_factors()) n *= d;
    return n;
}

std::vector<std::vector<Int>> enumerate_elements(const FinAbelian& a, unsigned long cap) {
    if (order(a) > cap) throw Error(Errc::cap_exceeded, "enumerate_elements: order exceeds cap");
    const auto& d = a.invariant_factors();
    std::vector<std::vector<Int>> out;
    std::vector<Int> cur(d.size(), Int(0));
    while (true) {
        out.push_back(cur);
        std::size_t i = d.size();
        while (i > 0) {
            --i;
            ++cur[i];
            if (cur[i] < d[i]) break;
            cur[i] = 0;
            if (i == 0) return out;
        }
        if (d.empty()) return out;
    }
}

TorusSubgroup realize_in_torus(const FinAbelian& a) {
    if (a.is_trivial()) return ann_of_lattice(Lattice::full(1));
    const auto& d = a.invariant_factors();
    IntMatrix diag(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) diag.at(i, i) = d[i];
    return ann_of_lattice(hnf(diag));
}

}  // namespace toral
