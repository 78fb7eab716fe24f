#include "toral/approx.hpp"

#include "toral/error.hpp"

namespace toral {

namespace {

Rat int_rat(const Int& n) { return Rat(n); }

/// Weighted distance cannot exceed the plain sum of coordinate errors as
/// long as the weights sum to at most this constant times the dimension.
Rat weight_sum(const Weights& w, std::size_t n) {
    Rat s(0);
    for (std::size_t i = 1; i <= n; ++i) s += w.at(i);
    return s;
}

std::vector<Rat> flatten(const std::vector<TorusPoint>& points) {
    std::vector<Rat> out;
    for (const TorusPoint& p : points)
        for (const CirclePoint& c : p.coords()) out.push_back(c.value());
    return out;
}

}  // namespace

DirichletResult dirichlet(const std::vector<Rat>& alphas, const Int& big_q,
                          unsigned long scan_cap) {
    if (alphas.empty()) throw Error(Errc::invalid_argument, "dirichlet: need d >= 1");
    if (big_q < 1) throw Error(Errc::invalid_argument, "dirichlet: need Q >= 1");
    Int q_max;
    mpz_pow_ui(q_max.get_mpz_t(), big_q.get_mpz_t(), alphas.size());
    unsigned long scanned = 0;
    for (Int q = 1; q <= q_max; ++q) {
        if (scanned++ >= scan_cap)
            throw Error(Errc::cap_exceeded, "dirichlet: scan cap exceeded");
        Rat limit = make_rat(1, q * big_q);
        DirichletResult res;
        res.q = q;
        bool ok = true;
        for (const Rat& a : alphas) {
            Int p = round_half_even(int_rat(q) * a);
            Rat err = abs(a - make_rat(p, q));
            if (err >= limit) {
                ok = false;
                break;
            }
            res.p.push_back(p);
            res.bound_check.push_back(err);
        }
        if (ok) return res;
    }
    throw Error(Errc::cap_exceeded, "dirichlet: range exhausted");  // unreachable by pigeonhole
}

std::vector<TorusPoint> epsilon_net(const TorusSubgroup& k, const Rat& epsilon, const Weights& w,
                                    unsigned long cap) {
    if (epsilon <= 0) throw Error(Errc::invalid_argument, "epsilon_net: epsilon must be positive");
    return certified_net(k, epsilon / 4, w, cap).first;
}

std::pair<TorusSubgroup, ApproxCertificate> finite_approx(const TorusSubgroup& k,
                                                          const Rat& epsilon, const Weights& w,
                                                          const ApproxCaps& caps, bool shortcut) {
    if (epsilon <= 0)
        throw Error(Errc::invalid_argument, "finite_approx: epsilon must be positive");
    const std::size_t n = k.ambient();
    ApproxCertificate cert;
    cert.input = k;
    cert.epsilon = epsilon;
    cert.weights = w;
    cert.shortcut = shortcut;
    cert.net = epsilon_net(k, epsilon, w, caps.enumeration);
    const std::size_t net_size = cert.net.size();
    if (net_size * n > caps.max_dimension)
        throw Error(Errc::cap_exceeded, "finite_approx: net dimension k*N exceeds cap");

    // M above both 2Nk/ε and 2k·(Σ weights)/ε; the two coincide for any
    // weights bounded by 1 per coordinate.
    Rat m_bound = int_rat(Int(2) * Int(n) * Int(net_size)) / epsilon;
    Rat m_weighted = Rat(2) * int_rat(Int(net_size)) * weight_sum(w, n) / epsilon;
    if (m_weighted > m_bound) m_bound = m_weighted;
    cert.big_m = rat_floor(m_bound) + 1;

    std::vector<Rat> alphas = flatten(cert.net);
    if (shortcut) {
        cert.dirichlet.q = common_denominator(alphas);
        for (const Rat& a : alphas) {
            Rat scaled = a * int_rat(cert.dirichlet.q);
            cert.dirichlet.p.push_back(scaled.get_num());
            cert.dirichlet.bound_check.emplace_back(0);
        }
    } else {
        cert.dirichlet = dirichlet(alphas, cert.big_m, caps.max_scan);
    }

    std::vector<TorusPoint> approximants;
    for (std::size_t i = 0; i < net_size; ++i) {
        std::vector<Rat> coords(n);
        for (std::size_t c = 0; c < n; ++c)
            coords[c] = make_rat(cert.dirichlet.p[i * n + c], cert.dirichlet.q);
        approximants.emplace_back(coords);
    }
    TorusSubgroup l = generated_subgroup(n, approximants);
    cert.output = l;

    Rat per_point = epsilon / int_rat(Int(2) * cert.dirichlet.q * Int(net_size));
    for (std::size_t i = 0; i < net_size; ++i)
        if (torus_dist(cert.net[i], approximants[i], w) >= per_point)
            throw Error(Errc::certificate_invalid, "finite_approx: per-point bound failed");

    if (is_totally_disconnected(k)) {
        cert.exact = true;
        cert.dh_mesh = Rat(0);
        cert.dh_lower = cert.dh_upper = hausdorff_dist(l, k, w, caps.enumeration);
    } else {
        cert.exact = false;
        cert.dh_mesh = epsilon / 16;
        auto [lo, hi] = hausdorff_bounds(l, k, cert.dh_mesh, w, caps.enumeration);
        cert.dh_lower = lo;
        cert.dh_upper = hi;
    }
    if (cert.dh_upper >= epsilon)
        throw Error(Errc::certificate_invalid, "finite_approx: d_H bound failed");
    return {l, cert};
}

bool verify_certificate(const ApproxCertificate& cert, const ApproxCaps& caps) {
    try {
        const std::size_t n = cert.input.ambient();
        if (cert.epsilon <= 0) return false;
        if (cert.output.ambient() != n) return false;

        // Net: reproducible and made of points of the input group.
        if (cert.net != epsilon_net(cert.input, cert.epsilon, cert.weights, caps.enumeration))
            return false;
        const std::size_t net_size = cert.net.size();

        // M strictly above 2Nk/ε.
        if (int_rat(cert.big_m) * cert.epsilon <= int_rat(Int(2) * Int(n) * Int(net_size)))
            return false;

        // Dirichlet block: shape, q range, per-coordinate bounds.
        const DirichletResult& dr = cert.dirichlet;
        if (dr.q < 1) return false;
        if (dr.p.size() != net_size * n || dr.bound_check.size() != net_size * n) return false;
        if (!cert.shortcut) {
            Int q_max;
            mpz_pow_ui(q_max.get_mpz_t(), cert.big_m.get_mpz_t(), net_size * n);
            if (dr.q > q_max) return false;
        }
        std::vector<Rat> alphas = flatten(cert.net);
        Rat limit = make_rat(1, dr.q * cert.big_m);
        for (std::size_t i = 0; i < alphas.size(); ++i) {
            Rat err = abs(alphas[i] - make_rat(dr.p[i], dr.q));
            if (err != dr.bound_check[i]) return false;
            if (err >= limit) return false;
        }

        // Output is the subgroup generated by the approximants.
        std::vector<TorusPoint> approximants;
        for (std::size_t i = 0; i < net_size; ++i) {
            std::vector<Rat> coords(n);
            for (std::size_t c = 0; c < n; ++c) coords[c] = make_rat(dr.p[i * n + c], dr.q);
            approximants.emplace_back(coords);
        }
        if (generated_subgroup(n, approximants) != cert.output) return false;

        // Per-point bound from the density proof.
        Rat per_point = cert.epsilon / int_rat(Int(2) * dr.q * Int(net_size));
        for (std::size_t i = 0; i < net_size; ++i)
            if (torus_dist(cert.net[i], approximants[i], cert.weights) >= per_point) return false;

        // Recorded Hausdorff data must replay bit-exactly and beat ε.
        if (cert.exact) {
            if (cert.dh_mesh != 0) return false;
            Rat d = hausdorff_dist(cert.output, cert.input, cert.weights, caps.enumeration);
            if (d != cert.dh_lower || d != cert.dh_upper) return false;
        } else {
            if (cert.dh_mesh <= 0) return false;
            auto [lo, hi] = hausdorff_bounds(cert.output, cert.input, cert.dh_mesh, cert.weights,
                                             caps.enumeration);
            if (lo != cert.dh_lower || hi != cert.dh_upper) return false;
        }
        return cert.dh_upper < cert.epsilon;
    } catch (...) {
        return false;
    }
}

}  // namespace toral
