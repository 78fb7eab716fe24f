#include "toral/lattice.hpp"

#include <limits>

#include "toral/error.hpp"

namespace toral {

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

}  // namespace

Lattice::Lattice(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {
    if (ambient == 0) throw Error(Errc::invalid_argument, "lattice ambient must be positive");
}

Lattice Lattice::full(std::size_t ambient) {
    Lattice l(ambient);
    l.basis_ = IntMatrix::identity(ambient);
    return l;
}

std::size_t Lattice::pivot_col(std::size_t r) const {
    for (std::size_t c = 0; c < ambient_; ++c)
        if (basis_.at(r, c) != 0) return c;
    throw Error(Errc::out_of_range, "pivot_col: zero basis row");
}

IntMatrix hnf_matrix(IntMatrix a) {
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        // Euclid on the column below pivot_row until one nonzero entry remains.
        while (true) {
            std::size_t best = npos;
            for (std::size_t r = pivot_row; r < rows; ++r) {
                if (a.at(r, c) == 0) continue;
                if (best == npos || cmpabs(a.at(r, c), a.at(best, c)) < 0) best = r;
            }
            if (best == npos) break;
            a.swap_rows(pivot_row, best);
            if (a.at(pivot_row, c) < 0) a.negate_row(pivot_row);
            bool clean = true;
            for (std::size_t r = pivot_row + 1; r < rows; ++r) {
                if (a.at(r, c) == 0) continue;
                a.add_row_multiple(r, pivot_row, -floor_div(a.at(r, c), a.at(pivot_row, c)));
                if (a.at(r, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pivot_row < rows && a.at(pivot_row, c) != 0) {
            for (std::size_t r = 0; r < pivot_row; ++r) {
                if (a.at(r, c) == 0) continue;
                a.add_row_multiple(r, pivot_row, -floor_div(a.at(r, c), a.at(pivot_row, c)));
            }
            ++pivot_row;
        }
    }
    IntMatrix out(pivot_row, cols);
    for (std::size_t r = 0; r < pivot_row; ++r)
        for (std::size_t c = 0; c < cols; ++c) out.at(r, c) = a.at(r, c);
    return out;
}

Lattice hnf(const IntMatrix& generators) {
    if (generators.cols() == 0)
        throw Error(Errc::invalid_argument, "hnf: ambient must be positive");
    return Lattice(generators.cols(), hnf_matrix(generators));
}

SnfResult snf(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    SnfResult res{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
    IntMatrix& a = res.d;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Bring a minimal-absolute-value nonzero entry of the trailing block
        // to (t, t); stop when the block is zero.
        std::size_t br = npos, bc = npos;
        for (std::size_t r = t; r < rows; ++r)
            for (std::size_t c = t; c < cols; ++c) {
                if (a.at(r, c) == 0) continue;
                if (br == npos || cmpabs(a.at(r, c), a.at(br, bc)) < 0) {
                    br = r;
                    bc = c;
                }
            }
        if (br == npos) break;
        a.swap_rows(t, br);
        res.u.swap_rows(t, br);
        a.swap_cols(t, bc);
        res.v.swap_cols(t, bc);
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            res.u.negate_row(t);
        }
        bool dirty = false;
        for (std::size_t r = t + 1; r < rows; ++r) {
            if (a.at(r, t) == 0) continue;
            Int q = floor_div(a.at(r, t), a.at(t, t));
            a.add_row_multiple(r, t, -q);
            res.u.add_row_multiple(r, t, -q);
            if (a.at(r, t) != 0) dirty = true;
        }
        for (std::size_t c = t + 1; c < cols; ++c) {
            if (a.at(t, c) == 0) continue;
            Int q = floor_div(a.at(t, c), a.at(t, t));
            a.add_col_multiple(c, t, -q);
            res.v.add_col_multiple(c, t, -q);
            if (a.at(t, c) != 0) dirty = true;
        }
        if (dirty) continue;
        // Row and column t are clear; enforce divisibility into the rest.
        bool fixed = false;
        for (std::size_t r = t + 1; r < rows && !fixed; ++r)
            for (std::size_t c = t + 1; c < cols && !fixed; ++c)
                if (a.at(r, c) % a.at(t, t) != 0) {
                    a.add_row_multiple(t, r, Int(1));
                    res.u.add_row_multiple(t, r, Int(1));
                    fixed = true;
                }
        if (!fixed) ++t;
    }
    return res;
}

std::optional<std::vector<Int>> member_coeffs(const Lattice& l, const std::vector<Int>& v) {
    if (v.size() != l.ambient()) throw Error(Errc::length_mismatch, "member: length mismatch");
    std::vector<Int> rem = v;
    std::vector<Int> coeffs(l.rank());
    for (std::size_t r = 0; r < l.rank(); ++r) {
        std::size_t p = l.pivot_col(r);
        for (std::size_t c = 0; c < p; ++c)
            if (rem[c] != 0) return std::nullopt;
        Int q, rmod;
        mpz_fdiv_qr(q.get_mpz_t(), rmod.get_mpz_t(), rem[p].get_mpz_t(),
                    l.basis().at(r, p).get_mpz_t());
        if (rmod != 0) return std::nullopt;
        coeffs[r] = q;
        for (std::size_t c = p; c < l.ambient(); ++c) rem[c] -= q * l.basis().at(r, c);
    }
    for (const Int& x : rem)
        if (x != 0) return std::nullopt;
    return coeffs;
}

bool member(const Lattice& l, const std::vector<Int>& v) {
    return member_coeffs(l, v).has_value();
}

Lattice integer_kernel(const IntMatrix& m) {
    if (m.rows() == 0) throw Error(Errc::invalid_argument, "integer_kernel: zero rows");
    SnfResult s = snf(m);
    IntMatrix gens(0, m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        bool diag_zero = r >= m.cols() || s.d.at(r, r) == 0;
        if (diag_zero) gens.append_row(s.u.row(r));
    }
    if (gens.rows() == 0) return Lattice(m.rows());
    return hnf(gens);
}

Lattice saturation(const Lattice& l) {
    if (l.rank() == 0) return l;
    // Orthogonal complement taken twice: kernels are saturated, and the
    // double complement recovers span_Q(L) ∩ Z^N.
    Lattice perp = integer_kernel(l.basis().transpose());
    if (perp.rank() == 0) return Lattice::full(l.ambient());
    return integer_kernel(perp.basis().transpose());
}

std::optional<Int> index(const Lattice& sub, const Lattice& sup) {
    if (sub.ambient() != sup.ambient())
        throw Error(Errc::ambient_mismatch, "index: ambient mismatch");
    IntMatrix coeffs(sub.rank(), sup.rank());
    for (std::size_t r = 0; r < sub.rank(); ++r) {
        auto c = member_coeffs(sup, sub.basis().row(r));
        if (!c) throw Error(Errc::not_a_sublattice, "index: sub is not contained in sup");
        coeffs.set_row(r, *c);
    }
    if (sub.rank() != sup.rank()) return std::nullopt;
    return abs(determinant(coeffs));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
    if (a.ambient() != b.ambient())
        throw Error(Errc::ambient_mismatch, "lattice_sum: ambient mismatch");
    return hnf(IntMatrix::stack(a.basis(), b.basis()));
}

Lattice lattice_intersection(const Lattice& a, const Lattice& b) {
    if (a.ambient() != b.ambient())
        throw Error(Errc::ambient_mismatch, "lattice_intersection: ambient mismatch");
    if (a.rank() == 0 || b.rank() == 0) return Lattice(a.ambient());
    // (u, v)·stack(A, B) = 0 means u·A = -v·B, so u·A runs over A ∩ B.
    Lattice ker = integer_kernel(IntMatrix::stack(a.basis(), b.basis()));
    IntMatrix gens(0, a.ambient());
    for (std::size_t r = 0; r < ker.rank(); ++r) {
        std::vector<Int> row = ker.basis().row(r);
        std::vector<Int> u(row.begin(), row.begin() + a.rank());
        gens.append_row(multiply(u, a.basis()));
    }
    if (gens.rows() == 0) return Lattice(a.ambient());
    return hnf(gens);
}

}  // namespace toral
