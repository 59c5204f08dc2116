#pragma once

// Closed intervals [lo, hi] over an Alo-group and their arithmetic.

#include <alo_ipcm/alo_group.hpp>

#include <algorithm>
#include <string>

namespace alo {

class GInterval {
public:
    /// Validates scale membership of both endpoints and lo <= hi (up to tau).
    /// Endpoints are stored as given, even when they differ by less than tau.
    GInterval(const Scale& g, const GroupElement& lo, const GroupElement& hi, Tolerance tol = default_tolerance)
        : lo_(lo), hi_(hi)
    {
        g.check(lo);
        g.check(hi);
        if (g.strictly_less(hi, lo, tol)) {
            throw OrderViolation("interval lower endpoint " + std::to_string(lo.value())
                                 + " exceeds upper endpoint " + std::to_string(hi.value()));
        }
    }

    const GroupElement& lo() const noexcept { return lo_; }
    const GroupElement& hi() const noexcept { return hi_; }
    ScaleTag scale() const noexcept { return lo_.scale(); }

private:
    GroupElement lo_;
    GroupElement hi_;
};

inline GInterval make_interval(const Scale& g, const GroupElement& lo, const GroupElement& hi,
                               Tolerance tol = default_tolerance)
{
    return GInterval(g, lo, hi, tol);
}

inline GInterval make_interval(const Scale& g, double lo, double hi, Tolerance tol = default_tolerance)
{
    return GInterval(g, g.element(lo), g.element(hi), tol);
}

inline GInterval point_interval(const Scale& g, const GroupElement& a) { return GInterval(g, a, a); }

inline bool is_point(const Scale& g, const GInterval& iv, Tolerance tol = default_tolerance)
{
    return g.equal(iv.lo(), iv.hi(), tol);
}

/// Endpoint-wise equality.
inline bool interval_equal(const Scale& g, const GInterval& a, const GInterval& b, Tolerance tol = default_tolerance)
{
    return g.equal(a.lo(), b.lo(), tol) && g.equal(a.hi(), b.hi(), tol);
}

/// [hi^(-1), lo^(-1)]. Not an inverse under imul unless the interval is a point.
inline GInterval recip_interval(const Scale& g, const GInterval& iv)
{
    return GInterval(g, inv(g, iv.hi()), inv(g, iv.lo()));
}

/// Image {x ⊙ y : x in a, y in b}; the operation is increasing in both
/// arguments, so the image is [a.lo ⊙ b.lo, a.hi ⊙ b.hi].
inline GInterval imul(const Scale& g, const GInterval& a, const GInterval& b)
{
    return GInterval(g, op(g, a.lo(), b.lo()), op(g, a.hi(), b.hi()));
}

/// [a.lo ÷ b.hi, a.hi ÷ b.lo]
inline GInterval idiv(const Scale& g, const GInterval& a, const GInterval& b)
{
    return GInterval(g, div(g, a.lo(), b.hi()), div(g, a.hi(), b.lo()));
}

/// Strict partial order: a lies entirely below b.
inline bool ilt(const Scale& g, const GInterval& a, const GInterval& b, Tolerance tol = default_tolerance)
{
    return g.strictly_less(a.hi(), b.lo(), tol);
}

inline bool ile(const Scale& g, const GInterval& a, const GInterval& b, Tolerance tol = default_tolerance)
{
    return interval_equal(g, a, b, tol) || ilt(g, a, b, tol);
}

/// max{||lo||, ||hi||}; a point of G.
inline GroupElement inorm(const Scale& g, const GInterval& iv)
{
    const GroupElement a = norm(g, iv.lo());
    const GroupElement b = norm(g, iv.hi());
    return a.value() >= b.value() ? a : b;
}

/// max{d(a.lo, b.lo), d(a.hi, b.hi)}
inline GroupElement idistance(const Scale& g, const GInterval& a, const GInterval& b)
{
    const GroupElement dl = distance(g, a.lo(), b.lo());
    const GroupElement dh = distance(g, a.hi(), b.hi());
    return dl.value() >= dh.value() ? dl : dh;
}

} // namespace alo
