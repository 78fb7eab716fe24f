#pragma once

/// Simultaneous Diophantine approximation and the finite-subgroup density
/// construction: given a compact subgroup K of the torus and a rational
/// ε > 0, produce a finite subgroup L with d_H(L, K) < ε and a certificate
/// recording every inequality the construction relies on. Certificates are
/// replayable: verify_certificate re-derives each bound in exact
/// arithmetic.

#include <utility>
#include <vector>

#include "toral/circle.hpp"
#include "toral/numeric.hpp"
#include "toral/torusgroup.hpp"

namespace toral {

/// Runtime guards for the approximation pipeline. Exceeding one raises
/// Errc::cap_exceeded rather than degrading silently.
struct ApproxCaps {
    /// Largest allowed Dirichlet dimension k·N (net size times ambient).
    unsigned long max_dimension = 24;
    /// Largest number of denominators q the Dirichlet scan may examine.
    unsigned long max_scan = 10000000;
    /// Element/net enumeration bound.
    unsigned long enumeration = default_enumeration_cap;
};

struct DirichletResult {
    std::vector<Int> p;
    Int q{1};
    std::vector<Rat> bound_check;  // |alpha_i - p_i/q|, in input order
};

/// Smallest q in 1..Q^d with |alpha_i - p_i/q| strictly below 1/(qQ) for
/// every coordinate, p_i the nearest integer to q·alpha_i (ties to even).
/// The strict bound is what the ascending scan tests; the returned errors
/// in particular satisfy the non-strict pigeonhole bound. Throws
/// Errc::cap_exceeded once scan_cap candidates were examined fruitlessly.
DirichletResult dirichlet(const std::vector<Rat>& alphas, const Int& big_q,
                          unsigned long scan_cap = ApproxCaps{}.max_scan);

/// Rational points of K forming an ε/2-net (certified covering radius is
/// in fact ≤ ε/4). Finite K returns exactly its elements.
std::vector<TorusPoint> epsilon_net(const TorusSubgroup& k, const Rat& epsilon,
                                    const Weights& w = Weights(),
                                    unsigned long cap = default_enumeration_cap);

/// Everything finite_approx did, in replayable form. dh_lower/dh_upper
/// bracket d_H(output, input); they coincide (and dh_mesh is 0) when the
/// input is finite and the distance exact.
struct ApproxCertificate {
    TorusSubgroup input{1};
    TorusSubgroup output{1};
    Rat epsilon;
    Weights weights;
    std::vector<TorusPoint> net;
    Int big_m{0};  // the integer M > 2Nk/ε used as the Dirichlet quality
    DirichletResult dirichlet;
    bool shortcut = false;
    bool exact = true;
    Rat dh_mesh;
    Rat dh_lower;
    Rat dh_upper;
};

/// The density construction: ε/2-net of K, M = smallest integer above
/// 2Nk/ε (enlarged if the weights sum past N), simultaneous approximation
/// of the net at quality Q = M in dimension d = kN, and the subgroup L
/// generated by the rational approximants p/q. Checks the per-point bound
/// d(x_i, y_i) < ε/(2qk) and d_H(L, K) < ε (exactly for finite K,
/// bracketed otherwise) before returning. With shortcut = true the
/// Dirichlet scan is skipped and q is the net's common denominator, so the
/// approximants are the net itself; the certificate records the mode.
std::pair<TorusSubgroup, ApproxCertificate> finite_approx(const TorusSubgroup& k,
                                                          const Rat& epsilon,
                                                          const Weights& w = Weights(),
                                                          const ApproxCaps& caps = ApproxCaps{},
                                                          bool shortcut = false);

/// Replays a certificate: net membership and reproducibility, the M bound,
/// the Dirichlet inequalities, the per-point bounds, the generated-group
/// identity, and the recorded d_H values (recomputed bit-exactly). Returns
/// false on any mismatch; never throws.
bool verify_certificate(const ApproxCertificate& cert, const ApproxCaps& caps = ApproxCaps{});

}  // namespace toral
