#include "toral/torusgroup.hpp"

#include <algorithm>
#include <set>

#include "toral/error.hpp"

namespace toral {

namespace {

/// Smith data of the annihilator: x ∈ K iff x = V·z mod 1 with the first
/// rank(Λ) entries of z in (1/d_i)·Z and the rest free.
struct AnnSnf {
    IntMatrix v;
    std::vector<Int> diag;
};

AnnSnf ann_snf(const TorusSubgroup& k) {
    SnfResult s = snf(k.annihilator().basis());
    AnnSnf out{std::move(s.v), {}};
    out.diag.reserve(k.annihilator().rank());
    for (std::size_t i = 0; i < k.annihilator().rank(); ++i) out.diag.push_back(s.d.at(i, i));
    return out;
}

TorusPoint apply_columns(const IntMatrix& v, const std::vector<Rat>& z) {
    std::vector<Rat> x(v.rows(), Rat(0));
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < z.size(); ++j)
            if (v.at(i, j) != 0 && z[j] != 0) x[i] += Rat(v.at(i, j)) * z[j];
    return TorusPoint(x);
}

/// Advances a mixed-radix counter; false once it wraps around to zero.
bool advance(std::vector<Int>& counter, const std::vector<Int>& radix) {
    for (std::size_t i = counter.size(); i > 0;) {
        --i;
        if (++counter[i] < radix[i]) return true;
        counter[i] = 0;
    }
    return false;
}

Rat directed_hausdorff(const std::vector<TorusPoint>& from, const std::vector<TorusPoint>& to,
                       const Weights& w) {
    Rat worst(0);
    for (const TorusPoint& p : from) {
        Rat best;
        bool first = true;
        for (const TorusPoint& q : to) {
            Rat d = torus_dist(p, q, w);
            if (first || d < best) {
                best = d;
                first = false;
            }
        }
        if (best > worst) worst = best;
    }
    return worst;
}

Rat hausdorff_of_sets(const std::vector<TorusPoint>& a, const std::vector<TorusPoint>& b,
                      const Weights& w) {
    Rat d1 = directed_hausdorff(a, b, w);
    Rat d2 = directed_hausdorff(b, a, w);
    return d1 > d2 ? d1 : d2;
}

}  // namespace

std::pair<std::vector<TorusPoint>, Rat> certified_net(const TorusSubgroup& k, const Rat& radius,
                                                      const Weights& w, unsigned long cap) {
    if (radius <= 0) throw Error(Errc::invalid_argument, "certified_net: radius must be positive");
    if (is_totally_disconnected(k)) return {elements(k, cap), Rat(0)};
    AnnSnf s = ann_snf(k);
    const std::size_t n = k.ambient(), r = s.diag.size();
    // Lipschitz constant of t ↦ V·(0, t): weighted column sums of the
    // free columns of V.
    Rat lip(0);
    for (std::size_t i = 0; i < n; ++i) {
        Int row_sum(0);
        for (std::size_t j = r; j < n; ++j) row_sum += abs(s.v.at(i, j));
        if (row_sum != 0) lip += w.at(i + 1) * Rat(row_sum);
    }
    Int m = rat_ceil(lip / (2 * radius));
    if (m < 1) m = 1;
    Rat certified = lip / (2 * Rat(m));

    Int count(1);
    for (const Int& d : s.diag) count *= d;
    for (std::size_t j = r; j < n; ++j) count *= m;
    if (count > cap)
        throw Error(Errc::cap_exceeded, "certified_net: mesh too small for the cap");

    std::vector<Int> radix = s.diag;
    radix.insert(radix.end(), n - r, m);
    std::vector<TorusPoint> net;
    std::vector<Int> y(n, Int(0));
    do {
        std::vector<Rat> z(n);
        for (std::size_t i = 0; i < r; ++i) z[i] = make_rat(y[i], s.diag[i]);
        for (std::size_t i = r; i < n; ++i) z[i] = make_rat(y[i], m);
        net.push_back(apply_columns(s.v, z));
    } while (advance(y, radix));
    std::sort(net.begin(), net.end());
    net.erase(std::unique(net.begin(), net.end()), net.end());
    return {std::move(net), certified};
}

Lattice annihilator_of(const TorusSubgroup& k) { return k.annihilator(); }

TorusSubgroup ann_of_lattice(const Lattice& l) { return TorusSubgroup(l); }

std::optional<Int> order(const TorusSubgroup& k) {
    const Lattice& l = k.annihilator();
    if (l.rank() != k.ambient()) return std::nullopt;
    Int n(1);
    for (std::size_t i = 0; i < l.rank(); ++i) n *= l.basis().at(i, i);
    return n;
}

std::vector<TorusPoint> elements(const TorusSubgroup& k, unsigned long cap) {
    auto n = order(k);
    if (!n) throw Error(Errc::infinite_group, "elements: group is infinite");
    if (*n > cap) throw Error(Errc::cap_exceeded, "elements: order exceeds cap");
    AnnSnf s = ann_snf(k);
    std::vector<TorusPoint> out;
    std::vector<Int> y(s.diag.size(), Int(0));
    do {
        std::vector<Rat> z(s.diag.size());
        for (std::size_t i = 0; i < s.diag.size(); ++i) z[i] = make_rat(y[i], s.diag[i]);
        out.push_back(apply_columns(s.v, z));
    } while (advance(y, s.diag));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::size_t> support(const TorusSubgroup& k) {
    std::vector<std::size_t> out;
    for (std::size_t n = 0; n < k.ambient(); ++n) {
        std::vector<Int> e(k.ambient(), Int(0));
        e[n] = 1;
        if (!member(k.annihilator(), e)) out.push_back(n + 1);
    }
    return out;
}

TorusSubgroup project(const TorusSubgroup& k, std::size_t n) {
    if (n < 1 || n > k.ambient()) throw Error(Errc::out_of_range, "project: bad coordinate count");
    IntMatrix head(n, k.ambient());
    for (std::size_t i = 0; i < n; ++i) head.at(i, i) = 1;
    Lattice cut = lattice_intersection(k.annihilator(), hnf(head));
    IntMatrix trunc(cut.rank(), n);
    for (std::size_t r = 0; r < cut.rank(); ++r)
        for (std::size_t c = 0; c < n; ++c) trunc.at(r, c) = cut.basis().at(r, c);
    return TorusSubgroup(hnf(trunc));
}

TorusSubgroup identity_component(const TorusSubgroup& k) {
    return TorusSubgroup(saturation(k.annihilator()));
}

Int component_count(const TorusSubgroup& k) {
    return *index(k.annihilator(), saturation(k.annihilator()));
}

bool is_totally_disconnected(const TorusSubgroup& k) {
    return k.annihilator().rank() == k.ambient();
}

TorusDecomposition decompose(const TorusSubgroup& k) {
    AnnSnf s = ann_snf(k);
    const std::size_t n = k.ambient(), r = s.diag.size();
    TorusDecomposition out{{}, IntMatrix(n, n - r)};
    for (std::size_t i = 0; i < r; ++i) {
        if (s.diag[i] == 1) continue;
        std::vector<Rat> z(r, Rat(0));
        z[i] = make_rat(1, s.diag[i]);
        out.finite_generators.push_back(apply_columns(s.v, z));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = r; j < n; ++j) out.directions.at(i, j - r) = s.v.at(i, j);
    return out;
}

TorusSubgroup subgroup_from_parts(std::size_t ambient, const std::vector<TorusPoint>& points,
                                  const IntMatrix& directions) {
    for (const TorusPoint& p : points)
        if (p.ambient() != ambient)
            throw Error(Errc::ambient_mismatch, "subgroup_from_parts: point ambient mismatch");
    if (directions.cols() > 0 && directions.rows() != ambient)
        throw Error(Errc::ambient_mismatch, "subgroup_from_parts: direction rows mismatch");

    // Points: λ annihilates x_1..x_k iff (λ, μ) kills the stacked system
    // λ·(m·x_i) − m·μ_i = 0 for the common denominator m.
    std::vector<Rat> all;
    for (const TorusPoint& p : points)
        for (const CirclePoint& c : p.coords()) all.push_back(c.value());
    Int m = common_denominator(all);
    const std::size_t kpts = points.size();
    IntMatrix system(ambient + kpts, kpts);
    for (std::size_t j = 0; j < kpts; ++j) {
        for (std::size_t i = 0; i < ambient; ++i) {
            Rat scaled = Rat(m) * points[j].coord(i).value();
            system.at(i, j) = scaled.get_num();  // exact: m clears every denominator
        }
        system.at(ambient + j, j) = -m;
    }
    Lattice ann_points = Lattice::full(ambient);
    if (kpts > 0) {
        Lattice ker = integer_kernel(system);
        IntMatrix gens(0, ambient);
        for (std::size_t r = 0; r < ker.rank(); ++r) {
            std::vector<Int> row = ker.basis().row(r);
            gens.append_row(std::vector<Int>(row.begin(), row.begin() + ambient));
        }
        ann_points = gens.rows() > 0 ? hnf(gens) : Lattice(ambient);
    }

    Lattice ann_dirs = directions.cols() > 0 ? integer_kernel(directions) : Lattice::full(ambient);
    return TorusSubgroup(lattice_intersection(ann_points, ann_dirs));
}

TorusSubgroup generated_subgroup(std::size_t ambient, const std::vector<TorusPoint>& points) {
    return subgroup_from_parts(ambient, points, IntMatrix(ambient, 0));
}

Rat hausdorff_dist(const TorusSubgroup& k, const TorusSubgroup& l, const Weights& w,
                   unsigned long cap) {
    if (k.ambient() != l.ambient())
        throw Error(Errc::ambient_mismatch, "hausdorff_dist: ambient mismatch");
    return hausdorff_of_sets(elements(k, cap), elements(l, cap), w);
}

std::pair<Rat, Rat> hausdorff_bounds(const TorusSubgroup& k, const TorusSubgroup& l,
                                     const Rat& mesh, const Weights& w, unsigned long cap) {
    if (k.ambient() != l.ambient())
        throw Error(Errc::ambient_mismatch, "hausdorff_bounds: ambient mismatch");
    if (mesh <= 0) throw Error(Errc::invalid_argument, "hausdorff_bounds: mesh must be positive");
    auto [net_k, tau_k] = certified_net(k, mesh / 2, w, cap);
    auto [net_l, tau_l] = certified_net(l, mesh / 2, w, cap);
    Rat d = hausdorff_of_sets(net_k, net_l, w);
    Rat slack = tau_k + tau_l;
    Rat lower = d - slack;
    if (lower < 0) lower = 0;
    return {lower, d + slack};
}

Rat diameter(const std::vector<TorusPoint>& points, const Weights& w) {
    if (points.empty()) throw Error(Errc::invalid_argument, "diameter of an empty set");
    Rat worst(0);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            Rat d = torus_dist(points[i], points[j], w);
            if (d > worst) worst = d;
        }
    return worst;
}

bool quotient_exists(const TorusSubgroup& k, const FinAbelian& a) {
    FgAbelian q = quotient_group(k.ambient(), k.annihilator());
    return embeds(dual(a), q.torsion);
}

FiniteQuotientMap::FiniteQuotientMap(TorusSubgroup domain, FinAbelian codomain,
                                     std::map<TorusPoint, std::vector<Int>> assignment,
                                     unsigned long cap)
    : domain_(std::move(domain)), codomain_(std::move(codomain)),
      assignment_(std::move(assignment)) {
    std::vector<TorusPoint> elems = elements(domain_, cap);
    if (assignment_.size() != elems.size())
        throw Error(Errc::invalid_argument, "quotient map: assignment must cover the domain");
    const auto& d = codomain_.invariant_factors();
    for (const auto& [x, val] : assignment_) {
        if (val.size() != d.size())
            throw Error(Errc::length_mismatch, "quotient map: value tuple length mismatch");
        for (std::size_t i = 0; i < d.size(); ++i)
            if (val[i] < 0 || val[i] >= d[i])
                throw Error(Errc::out_of_range, "quotient map: value out of range");
    }
    for (const TorusPoint& x : elems)
        if (!assignment_.count(x))
            throw Error(Errc::invalid_argument, "quotient map: assignment missing an element");
    for (const TorusPoint& x : elems)
        for (const TorusPoint& y : elems) {
            const auto& vx = assignment_.at(x);
            const auto& vy = assignment_.at(y);
            const auto& vxy = assignment_.at(x + y);
            for (std::size_t i = 0; i < d.size(); ++i)
                if ((vx[i] + vy[i]) % d[i] != vxy[i])
                    throw Error(Errc::not_homomorphism, "quotient map: not a homomorphism");
        }
    std::set<std::vector<Int>> image;
    for (const auto& [x, val] : assignment_) image.insert(val);
    if (Int(image.size()) != order(codomain_))
        throw Error(Errc::not_surjective, "quotient map: not surjective");
}

const std::vector<Int>& FiniteQuotientMap::value(const TorusPoint& x) const {
    auto it = assignment_.find(x);
    if (it == assignment_.end())
        throw Error(Errc::out_of_range, "quotient map: point outside the domain");
    return it->second;
}

std::vector<TorusPoint> kernel(const FiniteQuotientMap& phi) {
    std::vector<Int> zero(phi.codomain().invariant_factors().size(), Int(0));
    std::vector<TorusPoint> out;
    for (const auto& [x, val] : phi.assignment())
        if (val == zero) out.push_back(x);
    return out;
}

FiniteQuotientMap transfer_quotient(const FiniteQuotientMap& phi, const TorusSubgroup& l,
                                    const Weights& w, unsigned long cap) {
    const TorusSubgroup& k = phi.domain();
    if (k.ambient() != l.ambient())
        throw Error(Errc::ambient_mismatch, "transfer_quotient: ambient mismatch");
    std::vector<TorusPoint> elems_l = elements(l, cap);

    // Kernel cosets of φ are exactly its fibers.
    std::map<std::vector<Int>, std::vector<TorusPoint>> cosets;
    for (const auto& [x, val] : phi.assignment()) cosets[val].push_back(x);
    std::vector<const std::vector<Int>*> values;
    std::vector<const std::vector<TorusPoint>*> fibers;
    for (const auto& [val, pts] : cosets) {
        values.push_back(&val);
        fibers.push_back(&pts);
    }

    std::optional<Rat> delta;
    for (std::size_t i = 0; i < fibers.size(); ++i)
        for (std::size_t j = i + 1; j < fibers.size(); ++j)
            for (const TorusPoint& p : *fibers[i])
                for (const TorusPoint& q : *fibers[j]) {
                    Rat d = torus_dist(p, q, w);
                    if (!delta || d < *delta) delta = d;
                }

    std::map<TorusPoint, std::vector<Int>> induced;
    for (const TorusPoint& y : elems_l) {
        std::size_t best = 0;
        Rat best_dist;
        bool tie = false, first = true;
        for (std::size_t i = 0; i < fibers.size(); ++i) {
            Rat dist;
            bool inner_first = true;
            for (const TorusPoint& p : *fibers[i]) {
                Rat d = torus_dist(y, p, w);
                if (inner_first || d < dist) {
                    dist = d;
                    inner_first = false;
                }
            }
            if (first || dist < best_dist) {
                best = i;
                best_dist = dist;
                tie = false;
                first = false;
            } else if (dist == best_dist) {
                tie = true;
            }
        }
        if (tie)
            throw Error(Errc::transfer_ambiguous,
                        "transfer_quotient: element equidistant from two cosets");
        if (delta && best_dist * 4 >= *delta)
            throw Error(Errc::transfer_too_far,
                        "transfer_quotient: element not within delta/4 of a coset");
        induced[y] = *values[best];
    }

    if (delta) {
        std::vector<TorusPoint> elems_k = elements(k, cap);
        Rat dh = hausdorff_of_sets(elems_l, elems_k, w);
        if (dh * 4 >= *delta)
            throw Error(Errc::transfer_not_close,
                        "transfer_quotient: d_H(L, K) is not below delta/4");
    }

    const auto& d = phi.codomain().invariant_factors();
    for (const TorusPoint& x : elems_l)
        for (const TorusPoint& y : elems_l) {
            const auto& vx = induced.at(x);
            const auto& vy = induced.at(y);
            const auto& vxy = induced.at(x + y);
            for (std::size_t i = 0; i < d.size(); ++i)
                if ((vx[i] + vy[i]) % d[i] != vxy[i])
                    throw Error(Errc::not_homomorphism,
                                "transfer_quotient: induced map is not a homomorphism");
        }
    std::set<std::vector<Int>> image;
    for (const auto& [x, val] : induced) image.insert(val);
    if (Int(image.size()) != order(phi.codomain()))
        throw Error(Errc::not_surjective, "transfer_quotient: induced map is not surjective");

    return FiniteQuotientMap(l, phi.codomain(), std::move(induced), cap);
}

}  // namespace toral
