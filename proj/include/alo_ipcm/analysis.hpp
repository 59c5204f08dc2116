#pragma once

// Joint reading of the consistency index I and the indeterminacy index Δ.

#include <alo_ipcm/alo_group.hpp>
#include <alo_ipcm/ipcm.hpp>

#include <algorithm>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace alo {

struct IndexPoint {
    std::string label;
    GroupElement consistency;   // I
    GroupElement indeterminacy; // Δ
};

/// Acceptance thresholds on a reference scale; both must be >= e.
class Thresholds {
public:
    Thresholds(const Scale& g, const GroupElement& consistency, const GroupElement& indeterminacy,
               Tolerance tol = default_tolerance)
        : consistency_(consistency), indeterminacy_(indeterminacy)
    {
        if (!g.less_equal(g.identity(), consistency, tol) || !g.less_equal(g.identity(), indeterminacy, tol)) {
            throw InvalidArgument("thresholds must not be below the identity of the " + std::string(g.name())
                                  + " scale");
        }
    }

    const GroupElement& consistency() const noexcept { return consistency_; }
    const GroupElement& indeterminacy() const noexcept { return indeterminacy_; }

private:
    GroupElement consistency_;
    GroupElement indeterminacy_;
};

/// (I, Δ) on the matrix's own scale, then mapped to `reference`.
inline IndexPoint evaluate(std::string label, const Ipcm& a, const Scale& reference,
                           Tolerance tol = default_tolerance)
{
    const IsoMap m = IsoMap::between(a.scale(), reference);
    return {std::move(label), m.apply(consistency_index(a, tol)), m.apply(indeterminacy_index(a, tol))};
}

enum class Verdict { accept, reject };

inline std::string_view to_string(Verdict v) { return v == Verdict::accept ? "accept" : "reject"; }

/// Accept iff I <= t_I and Δ <= t_Δ (boundary accepts).
inline Verdict classify(const Scale& g, const IndexPoint& p, const Thresholds& t, Tolerance tol = default_tolerance)
{
    const bool ok = g.less_equal(p.consistency, t.consistency(), tol)
                    && g.less_equal(p.indeterminacy, t.indeterminacy(), tol);
    return ok ? Verdict::accept : Verdict::reject;
}

enum class Dominance { p_dominates, q_dominates, equal, incomparable };

inline std::string_view to_string(Dominance d)
{
    switch (d) {
    case Dominance::p_dominates: return "p_dominates";
    case Dominance::q_dominates: return "q_dominates";
    case Dominance::equal: return "equal";
    case Dominance::incomparable: return "incomparable";
    }
    return "incomparable";
}

/// Quadrant comparison: a point dominates another when it is no worse on
/// both axes and strictly better (beyond tau) on at least one.
inline Dominance dominance(const Scale& g, const IndexPoint& p, const IndexPoint& q,
                           Tolerance tol = default_tolerance)
{
    auto cmp = [&](const GroupElement& x, const GroupElement& y) {
        if (g.strictly_less(x, y, tol)) return -1;
        if (g.strictly_less(y, x, tol)) return 1;
        return 0;
    };
    const int ci = cmp(p.consistency, q.consistency);
    const int cd = cmp(p.indeterminacy, q.indeterminacy);
    if (ci == 0 && cd == 0) return Dominance::equal;
    if (ci <= 0 && cd <= 0) return Dominance::p_dominates;
    if (ci >= 0 && cd >= 0) return Dominance::q_dominates;
    return Dominance::incomparable;
}

/// Six significant digits.
inline std::string format_value(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

/// Tab-separated rows (label, I, delta[, verdict]) ordered by label.
inline std::string plot_data(const Scale& g, std::span<const IndexPoint> points,
                             const std::optional<Thresholds>& t = std::nullopt, Tolerance tol = default_tolerance)
{
    for (const auto& p : points) {
        g.check(p.consistency);
        g.check(p.indeterminacy);
    }
    std::vector<const IndexPoint*> sorted;
    sorted.reserve(points.size());
    for (const auto& p : points) sorted.push_back(&p);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const IndexPoint* a, const IndexPoint* b) { return a->label < b->label; });

    std::string out = t ? "label\tI\tdelta\tverdict\n" : "label\tI\tdelta\n";
    for (const IndexPoint* p : sorted) {
        out += p->label;
        out += '\t';
        out += format_value(p->consistency.value());
        out += '\t';
        out += format_value(p->indeterminacy.value());
        if (t) {
            out += '\t';
            out += to_string(classify(g, *p, *t, tol));
        }
        out += '\n';
    }
    return out;
}

} // namespace alo
