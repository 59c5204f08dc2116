#pragma once

// Real-valued pairwise comparison matrices over a scale.

#include <alo_ipcm/alo_group.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace alo {

/// Bijection on {0, ..., n-1}. Printed and parsed one-based.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> zero_based) : map_(std::move(zero_based))
    {
        std::vector<bool> seen(map_.size(), false);
        for (std::size_t v : map_) {
            if (v >= map_.size() || seen[v]) throw InvalidArgument("permutation is not a bijection");
            seen[v] = true;
        }
    }

    static Permutation identity(std::size_t n)
    {
        std::vector<std::size_t> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = i;
        return Permutation(std::move(m));
    }

    static Permutation from_one_based(std::span<const std::size_t> images)
    {
        std::vector<std::size_t> m;
        m.reserve(images.size());
        for (std::size_t v : images) {
            if (v == 0) throw InvalidArgument("one-based permutation contains 0");
            m.push_back(v - 1);
        }
        return Permutation(std::move(m));
    }

    static Permutation from_one_based(std::initializer_list<std::size_t> images)
    {
        return from_one_based(std::span<const std::size_t>(images.begin(), images.size()));
    }

    std::size_t size() const noexcept { return map_.size(); }
    std::size_t operator[](std::size_t i) const { return map_.at(i); }
    const std::vector<std::size_t>& zero_based() const noexcept { return map_; }

    std::vector<std::size_t> one_based() const
    {
        std::vector<std::size_t> out(map_);
        for (auto& v : out) ++v;
        return out;
    }

    /// "1 3 2"
    std::string to_string() const
    {
        std::string s;
        for (std::size_t i = 0; i < map_.size(); ++i) {
            if (i != 0) s += ' ';
            s += std::to_string(map_[i] + 1);
        }
        return s;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.map_ <=> b.map_; }

private:
    std::vector<std::size_t> map_;
};

class Pcm {
public:
    /// Row-major entries. Every entry must lie in the scale's domain; diagonal
    /// entries within tau of the identity are snapped to it, others rejected.
    /// Reciprocity is not required here; it is checked by the operations
    /// that need it.
    Pcm(Scale g, std::size_t n, std::vector<double> entries, Tolerance tol = default_tolerance)
        : scale_(std::move(g)), n_(n), v_(std::move(entries))
    {
        if (n_ < 2) throw InvalidArgument("a comparison matrix needs at least two alternatives");
        if (v_.size() != n_ * n_) throw InvalidArgument("entry count does not match the matrix order");
        for (double x : v_) scale_.element(x);
        const double e = scale_.raw_identity();
        for (std::size_t i = 0; i < n_; ++i) {
            double& d = v_[i * n_ + i];
            if (!scale_.raw_equal(d, e, tol)) {
                throw InvalidArgument("diagonal entry " + std::to_string(i + 1) + " is not the identity");
            }
            d = e;
        }
    }

    static Pcm from_rows(Scale g, const std::vector<std::vector<double>>& rows, Tolerance tol = default_tolerance)
    {
        const std::size_t n = rows.size();
        std::vector<double> flat;
        flat.reserve(n * n);
        for (const auto& r : rows) {
            if (r.size() != n) throw InvalidArgument("comparison matrix must be square");
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return Pcm(std::move(g), n, std::move(flat), tol);
    }

    const Scale& scale() const noexcept { return scale_; }
    std::size_t order() const noexcept { return n_; }

    double raw(std::size_t i, std::size_t j) const { return v_[i * n_ + j]; }
    GroupElement at(std::size_t i, std::size_t j) const { return scale_.element(v_.at(i * n_ + j)); }
    const std::vector<double>& raw_entries() const noexcept { return v_; }

private:
    Scale scale_;
    std::size_t n_;
    std::vector<double> v_;
};

/// a_ji = a_ij^(-1) for all i < j.
inline bool is_reciprocal(const Pcm& a, Tolerance tol = default_tolerance)
{
    const Scale& g = a.scale();
    for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = i + 1; j < a.order(); ++j) {
            if (!g.raw_equal(a.raw(j, i), g.raw_inv(a.raw(i, j)), tol)) return false;
        }
    }
    return true;
}

namespace detail {

inline void require_reciprocal(const Pcm& a, Tolerance tol)
{
    if (!is_reciprocal(a, tol)) throw NotReciprocal("comparison matrix is not reciprocal");
}

} // namespace detail

/// a_ik = a_ij ⊙ a_jk for all i < j < k; sufficient for reciprocal matrices.
inline bool is_consistent(const Pcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const Scale& g = a.scale();
    const std::size_t n = a.order();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (!g.raw_equal(a.raw(i, k), g.raw_op(a.raw(i, j), a.raw(j, k)), tol)) return false;
            }
        }
    }
    return true;
}

/// G-mean over all triads i < j < k of d(a_ik, a_ij ⊙ a_jk).
inline GroupElement consistency_index(const Pcm& a, Tolerance tol = default_tolerance)
{
    detail::require_reciprocal(a, tol);
    const std::size_t n = a.order();
    if (n < 3) throw OrderTooSmall("consistency index needs order n >= 3");
    const Scale& g = a.scale();
    std::vector<GroupElement> d;
    d.reserve(n * (n - 1) * (n - 2) / 6);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                d.push_back(distance(g, a.at(i, k), op(g, a.at(i, j), a.at(j, k))));
            }
        }
    }
    return mean(g, d);
}

/// b_ij = a_{σ(i)σ(j)}
inline Pcm permute(const Pcm& a, const Permutation& sigma)
{
    const std::size_t n = a.order();
    if (sigma.size() != n) throw InvalidArgument("permutation size does not match the matrix order");
    std::vector<double> out(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = a.raw(sigma[i], sigma[j]);
    }
    return Pcm(a.scale(), n, std::move(out));
}

/// Entrywise image under an isomorphism.
inline Pcm transport(const Pcm& a, const IsoMap& m)
{
    if (!(a.scale() == m.source())) throw ScaleMismatch("isomorphism source differs from the matrix scale");
    std::vector<double> out;
    out.reserve(a.raw_entries().size());
    for (double x : a.raw_entries()) out.push_back(m.target().element(m.raw_forward(x)).value());
    return Pcm(m.target(), a.order(), std::move(out));
}

} // namespace alo
