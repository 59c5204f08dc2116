#pragma once

/*
 * Interval pairwise comparison matrices (IPCMs) over a scale.
 *
 * Three consistency conditions are provided, from strongest to weakest:
 *   - Liu's consistency: the boundary matrices L and R are consistent PCMs.
 *     Depends on the labelling of the alternatives.
 *   - approximate consistency: some relabelling is Liu-consistent.
 *   - [G]-consistency: a_ij ⊙ a_jk ⊙ a_ki = a_ik ⊙ a_kj ⊙ a_ji for every triple;
 *     invariant under relabelling.
 * plus the consistency index I (G-mean of triad distances) and the
 * indeterminacy index Δ (G-mean of entry widths).
 */

#include <alo_ipcm/alo_group.hpp>
#include <alo_ipcm/interval.hpp>
#include <alo_ipcm/pcm.hpp>

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace alo {

/// Raw endpoints of an IPCM entry.
struct Bounds {
    double lo;
    double hi;

    friend bool operator==(const Bounds&, const Bounds&) = default;
};

class Ipcm {
public:
    /// Row-major entries. Endpoints must lie in the domain with lo <= hi;
    /// diagonal entries within tau of [e, e] are snapped to it, others
    /// rejected. Reciprocity is not required at construction.
    Ipcm(Scale g, std::size_t n, std::vector<Bounds> entries, Tolerance tol = default_tolerance)
        : scale_(std::move(g)), n_(n), v_(std::move(entries))
    {
        if (n_ < 2) throw InvalidArgument("an interval comparison matrix needs at least two alternatives");
        if (v_.size() != n_ * n_) throw InvalidArgument("entry count does not match the matrix order");
        for (const auto& b : v_) make_interval(scale_, b.lo, b.hi, tol);
        const double e = scale_.raw_identity();
        for (std::size_t i = 0; i < n_; ++i) {
            Bounds& d = v_[i * n_ + i];
            if (!scale_.raw_equal(d.lo, e, tol) || !scale_.raw_equal(d.hi, e, tol)) {
                throw InvalidArgument("diagonal entry " + std::to_string(i + 1) + " is not [e, e]");
            }
            d = {e, e};
        }
    }

    static Ipcm from_rows(Scale g, const std::vector<std::vector<Bounds>>& rows, Tolerance tol = default_tolerance)
    {
        const std::size_t n = rows.size();
        std::vector<Bounds> flat;
        flat.reserve(n * n);
        for (const auto& r : rows) {
            if (r.size() != n) throw InvalidArgument("interval comparison matrix must be square");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return Ipcm(std::move(g), n, std::move(flat), tol);
    }

    /// The point IPCM [a_ij, a_ij].
    static Ipcm from_pcm(const Pcm& a)
    {
        std::vector<Bounds> flat;
        flat.reserve(a.raw_entries().size());
        for (double x : a.raw_entries()) flat.push_back({x, x});
        return Ipcm(a.scale(), a.order(), std::move(flat));
    }

    const Scale& scale() const noexcept { return scale_; }
    std::size_t order() const noexcept { return n_; }

    double lo(std::size_t i, std::size_t j) const { return v_[i * n_ + j].lo; }
    double hi(std::size_t i, std::size_t j) const { return v_[i * n_ + j].hi; }
    const Bounds& bounds(std::size_t i, std::size_t j) const { return v_.at(i * n_ + j); }
    const std::vector<Bounds>& raw_entries() const noexcept { return v_; }

    GInterval at(std::size_t i, std::size_t j) const
    {
        const Bounds& b = bounds(i, j);
        return GInterval(scale_, scale_.element(b.lo), scale_.element(b.hi));
    }

private:
    Scale scale_;
    std::size_t n_;
    std::vector<Bounds> v_;
};

/// ã_ji = recip(ã_ij) for all i < j; equivalently a_ij^- ⊙ a_ji^+ = a_ij^+ ⊙ a_ji^- = e.
inline bool is_reciprocal(const Ipcm& a, Tolerance tol = default_tolerance)
{
    const Scale& g = a.scale();
    for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = i + 1; j < a.order(); ++j) {
            if (!g.raw_equal(a.lo(j, i), g.raw_inv(a.hi(i, j)), tol)) return false;
            if (!g.raw_equal(a.hi(j, i), g.raw_inv(a.lo(i, j)), tol)) return false;
        }
    }
    return true;
}

namespace detail {

inline void require_reciprocal(const Ipcm& a, Tolerance tol)
{
    if (!is_reciprocal(a, tol)) throw NotReciprocal("interval comparison matrix is not reciprocal");
}

/// Liu's condition on the relabelled matrix ã_{σ(i)σ(j)}, read in place.
inline bool liu_under(const Ipcm& a, const std::vector<std::size_t>& s, Tolerance tol)
{
    const Scale& g = a.scale();
    const std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const Bounds& ij = a.bounds(s[i], s[j]);
                const Bounds& jk = a.bounds(s[j], s[k]);
                const Bounds& ik = a.bounds(s[i], s[k]);
                if (!g.raw_equal(ik.lo, g.raw_op(ij.lo, jk.lo), tol)) return false;
                if (!g.raw_equal(ik.hi, g.raw_op(ij.hi, jk.hi), tol)) return false;
            }
        }
    }
    return true;
}

} // namespace detail

/// When every entry is a point, the underlying PCM; otherwise nullopt.
inline std::optional<Pcm> degenerates_to_pcm(const Ipcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const Scale& g = a.scale();
    std::vector<double> pts;
    pts.reserve(a.raw_entries().size());
    for (const auto& b : a.raw_entries()) {
        if (!g.raw_equal(b.lo, b.hi, tol)) return std::nullopt;
        pts.push_back(b.lo);
    }
    return Pcm(g, a.order(), std::move(pts), tol);
}

/// ã^σ_ij = ã_{σ(i)σ(j)}
inline Ipcm permute(const Ipcm& a, const Permutation& sigma)
{
    const std::size_t n = a.order();
    if (sigma.size() != n) throw InvalidArgument("permutation size does not match the matrix order");
    std::vector<Bounds> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = a.bounds(sigma[i], sigma[j]);
    }
    return Ipcm(a.scale(), n, std::move(out));
}

/// Boundary matrices of ã^σ: L takes lower endpoints above the diagonal
/// and upper endpoints below it; R the reverse.
struct LrPair {
    Pcm l;
    Pcm r;
};

inline LrPair lr(const Ipcm& a, const std::optional<Permutation>& sigma = std::nullopt,
                 Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const std::size_t n = a.order();
    const Permutation s = sigma ? *sigma : Permutation::identity(n);
    if (s.size() != n) throw InvalidArgument("permutation size does not match the matrix order");
    const double e = a.scale().raw_identity();
    std::vector<double> l(n * n), r(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Bounds& b = a.bounds(s[i], s[j]);
            if (i < j) {
                l[i * n + j] = b.lo;
                r[i * n + j] = b.hi;
            } else if (i > j) {
                l[i * n + j] = b.hi;
                r[i * n + j] = b.lo;
            } else {
                l[i * n + j] = e;
                r[i * n + j] = e;
            }
        }
    }
    return {Pcm(a.scale(), n, std::move(l), tol), Pcm(a.scale(), n, std::move(r), tol)};
}

/// Liu's consistency: L and R are both consistent PCMs.
inline bool is_liu_consistent(const Ipcm& a, Tolerance tol = default_tolerance)
{
    const LrPair p = lr(a, std::nullopt, tol);
    return is_consistent(p.l, tol) && is_consistent(p.r, tol);
}

/// Liu's consistency in interval form: ã_ik = ã_ij ⊙ ã_jk for all i < j < k.
inline bool is_liu_consistent_interval_form(const Ipcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const Scale& g = a.scale();
    const std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!interval_equal(g, a.at(i, k), imul(g, a.at(i, j), a.at(j, k)), tol)) return false;
            }
        }
    }
    return true;
}

inline constexpr std::size_t default_permutation_cap = 8;

struct ApproxConsistency {
    bool consistent = false;
    /// Lexicographically smallest σ with ã^σ Liu-consistent.
    std::optional<Permutation> witness;
};

/// Exhaustive search over all n! relabellings, in lexicographic order.
inline ApproxConsistency is_approx_consistent(const Ipcm& a, Tolerance tol = default_tolerance,
                                              std::size_t permutation_cap = default_permutation_cap)
{
    detail::require_reciprocal(a, tol);
    const std::size_t n = a.order();
    if (n > permutation_cap) {
        throw OrderTooLargeForSearch("order " + std::to_string(n) + " exceeds the permutation search cap "
                                     + std::to_string(permutation_cap));
    }
    std::vector<std::size_t> s(n);
    std::iota(s.begin(), s.end(), std::size_t{0});
    do {
        if (detail::liu_under(a, s, tol)) return {true, Permutation(s)};
    } while (std::next_permutation(s.begin(), s.end()));
    return {false, std::nullopt};
}

/// Endpoint form of the triple condition over every (i, j, k), reciprocal or not:
///   a_ij^± ⊙ a_jk^± ⊙ a_ki^± = a_ik^± ⊙ a_kj^± ⊙ a_ji^±
inline bool is_full_consistent_all_triples(const Ipcm& a, Tolerance tol = default_tolerance)
{
    const Scale& g = a.scale();
    const std::size_t n = a.order();
    auto prod3 = [&g](double x, double y, double z) { return g.raw_op(g.raw_op(x, y), z); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                const double l1 = prod3(a.lo(i, j), a.lo(j, k), a.lo(k, i));
                const double l2 = prod3(a.lo(i, k), a.lo(k, j), a.lo(j, i));
                if (!g.raw_equal(l1, l2, tol)) return false;
                const double h1 = prod3(a.hi(i, j), a.hi(j, k), a.hi(k, i));
                const double h2 = prod3(a.hi(i, k), a.hi(k, j), a.hi(j, i));
                if (!g.raw_equal(h1, h2, tol)) return false;
            }
        }
    }
    return true;
}

/// Reduced form valid for reciprocal matrices:
///   a_ik^- ⊙ a_ik^+ = a_ij^- ⊙ a_ij^+ ⊙ a_jk^- ⊙ a_jk^+  for i < j < k.
inline bool is_full_consistent_reduced(const Ipcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const Scale& g = a.scale();
    const std::size_t n = a.order();
    auto both = [&](std::size_t i, std::size_t j) { return g.raw_op(a.lo(i, j), a.hi(i, j)); };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!g.raw_equal(both(i, k), g.raw_op(both(i, j), both(j, k)), tol)) return false;
            }
        }
    }
    return true;
}

/// [G]-consistency. Uses the reduced i < j < k form when the matrix is
/// reciprocal, the full triple check otherwise.
inline bool is_full_consistent(const Ipcm& a, Tolerance tol = default_tolerance)
{
    return is_reciprocal(a, tol) ? is_full_consistent_reduced(a, tol) : is_full_consistent_all_triples(a, tol);
}

/// Local inconsistency of one triad i < j < k.
struct TriadDistance {
    std::size_t i, j, k; // zero-based
    GInterval ijk;       // [a_ij^- ⊙ a_jk^- ⊙ a_ki^-, a_ij^+ ⊙ a_jk^+ ⊙ a_ki^+]
    GInterval ikj;       // [a_ik^- ⊙ a_kj^- ⊙ a_ji^-, a_ik^+ ⊙ a_kj^+ ⊙ a_ji^+]
    GroupElement distance;   // d(ã_ijk, ã_ikj) = max of the endpoint distances
    GroupElement simplified; // max{a_ijk^- ÷ a_ikj^-, a_ikj^- ÷ a_ijk^-}
};

using TriadDistanceTable = std::vector<TriadDistance>;

inline TriadDistanceTable triads(const Ipcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const Scale& g = a.scale();
    const std::size_t n = a.order();
    TriadDistanceTable out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const GInterval ijk = imul(g, imul(g, a.at(i, j), a.at(j, k)), a.at(k, i));
                const GInterval ikj = imul(g, imul(g, a.at(i, k), a.at(k, j)), a.at(j, i));
                const GroupElement p = div(g, ijk.lo(), ikj.lo());
                const GroupElement q = div(g, ikj.lo(), ijk.lo());
                out.push_back(TriadDistance{i, j, k, ijk, ikj, idistance(g, ijk, ikj),
                                            p.value() >= q.value() ? p : q});
            }
        }
    }
    return out;
}

/// I: the G-mean of the n(n-1)(n-2)/6 triad distances. Equals e exactly
/// for [G]-consistent matrices.
inline GroupElement consistency_index(const Ipcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    if (a.order() < 3) throw OrderTooSmall("consistency index needs order n >= 3");
    const TriadDistanceTable t = triads(a, tol);
    std::vector<GroupElement> d;
    d.reserve(t.size());
    for (const auto& row : t) d.push_back(row.distance);
    return mean(a.scale(), d);
}

/// δ(ã_ij) = d(a_ij^-, a_ij^+) = a_ij^+ ÷ a_ij^-
inline GroupElement entry_indeterminacy(const Ipcm& a, std::size_t i, std::size_t j)
{
    if (i >= a.order() || j >= a.order()) throw InvalidArgument("entry index out of range");
    const Scale& g = a.scale();
    return div(g, g.element(a.hi(i, j)), g.element(a.lo(i, j)));
}

/// Δ from the upper triangle only: (⊙_{i<j} δ_ij^(2))^(1/(n(n-1))).
/// Relies on δ_ij = δ_ji, hence on reciprocity.
inline GroupElement indeterminacy_index(const Ipcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const Scale& g = a.scale();
    const std::size_t n = a.order();
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += g.to_additive(int_pow(g, entry_indeterminacy(a, i, j), 2));
        }
    }
    return g.from_additive(sum / static_cast<double>(n * (n - 1)));
}

/// Δ as the G-mean of δ over all off-diagonal entries.
inline GroupElement indeterminacy_index_all_entries(const Ipcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const Scale& g = a.scale();
    const std::size_t n = a.order();
    std::vector<GroupElement> d;
    d.reserve(n * (n - 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) d.push_back(distance(g, g.element(a.lo(i, j)), g.element(a.hi(i, j))));
        }
    }
    return mean(g, d);
}

/// Both endpoints of every entry mapped through an isomorphism.
inline Ipcm transport(const Ipcm& a, const IsoMap& m)
{
    if (!(a.scale() == m.source())) throw ScaleMismatch("isomorphism source differs from the matrix scale");
    const Scale& t = m.target();
    std::vector<Bounds> out;
    out.reserve(a.raw_entries().size());
    for (const auto& b : a.raw_entries()) {
        out.push_back({t.element(m.raw_forward(b.lo)).value(), t.element(m.raw_forward(b.hi)).value()});
    }
    return Ipcm(t, a.order(), std::move(out));
}

} // namespace alo
