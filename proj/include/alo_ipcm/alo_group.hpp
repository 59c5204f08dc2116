#pragma once

/*
 * Real continuous Abelian linearly ordered groups (Alo-groups) over an open
 * interval of the real line, the three built-in preference scales and the
 * isomorphisms between them.
 *
 * Every scale is isomorphic to the additive group (R, +). Each Scale carries
 * a canonical, strictly increasing pair to_additive/from_additive; roots,
 * means and tolerant comparisons are evaluated in those coordinates.
 */

#include <alo_ipcm/error.hpp>

#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace alo {

/// Absolute tolerance applied in additive coordinates.
struct Tolerance {
    double tau = 1e-9;
};

inline constexpr Tolerance default_tolerance{};

enum class ScaleId { multiplicative, additive, fuzzy, custom };

inline std::string_view to_string(ScaleId id)
{
    switch (id) {
    case ScaleId::multiplicative: return "multiplicative";
    case ScaleId::additive: return "additive";
    case ScaleId::fuzzy: return "fuzzy";
    case ScaleId::custom: return "custom";
    }
    return "custom";
}

/// Parses the serialized identifier of a built-in scale.
inline std::optional<ScaleId> parse_scale_id(std::string_view s)
{
    if (s == "multiplicative") return ScaleId::multiplicative;
    if (s == "additive") return ScaleId::additive;
    if (s == "fuzzy") return ScaleId::fuzzy;
    return std::nullopt;
}

/// Identity of a scale. Custom scales get a process-unique key.
struct ScaleTag {
    ScaleId id = ScaleId::additive;
    std::uint64_t key = 0;

    friend bool operator==(const ScaleTag&, const ScaleTag&) = default;
};

class Scale;

/// A value of some scale, guaranteed to lie strictly inside its domain.
/// Only a Scale can mint one.
class GroupElement {
public:
    double value() const noexcept { return value_; }
    ScaleTag scale() const noexcept { return tag_; }

private:
    friend class Scale;
    GroupElement(double v, ScaleTag t) noexcept : value_(v), tag_(t) {}

    double value_;
    ScaleTag tag_;
};

namespace detail {

inline double logit(double x) { return std::log(x) - std::log1p(-x); }

inline double logistic(double y)
{
    if (y >= 0.0) return 1.0 / (1.0 + std::exp(-y));
    const double e = std::exp(y);
    return e / (1.0 + e);
}

inline std::uint64_t next_custom_key()
{
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
}

} // namespace detail

/// Descriptor of a real continuous Alo-group (G, op, <=) with G an open
/// interval. Cheap to copy; immutable.
class Scale {
public:
    using Map = std::function<double(double)>;

    static Scale multiplicative() { return Scale(ScaleId::multiplicative); }
    static Scale additive() { return Scale(ScaleId::additive); }
    static Scale fuzzy() { return Scale(ScaleId::fuzzy); }

    static Scale from_id(ScaleId id)
    {
        if (id == ScaleId::custom) throw InvalidArgument("custom scales cannot be built from an identifier");
        return Scale(id);
    }

    /// A scale defined by an order isomorphism with (R, +). The group
    /// operation, inverse, roots, norm and distance are all obtained by
    /// transport through the given pair. Both maps must be strictly
    /// increasing and mutually inverse on (lo, hi).
    static Scale custom(std::string name, double lo, double hi, Map to_additive, Map from_additive)
    {
        if (!(lo < hi)) throw InvalidArgument("custom scale domain must satisfy lo < hi");
        if (!to_additive || !from_additive) throw InvalidArgument("custom scale requires both maps");
        Scale s(ScaleId::custom);
        s.key_ = detail::next_custom_key();
        s.custom_ = std::make_shared<const Custom>(
            Custom{std::move(name), lo, hi, std::move(to_additive), std::move(from_additive)});
        return s;
    }

    ScaleId id() const noexcept { return id_; }
    ScaleTag tag() const noexcept { return {id_, key_}; }

    std::string_view name() const noexcept
    {
        return custom_ ? std::string_view(custom_->name) : to_string(id_);
    }

    double domain_lo() const noexcept
    {
        switch (id_) {
        case ScaleId::multiplicative: return 0.0;
        case ScaleId::additive: return -std::numeric_limits<double>::infinity();
        case ScaleId::fuzzy: return 0.0;
        case ScaleId::custom: return custom_->lo;
        }
        return 0.0;
    }

    double domain_hi() const noexcept
    {
        switch (id_) {
        case ScaleId::multiplicative: return std::numeric_limits<double>::infinity();
        case ScaleId::additive: return std::numeric_limits<double>::infinity();
        case ScaleId::fuzzy: return 1.0;
        case ScaleId::custom: return custom_->hi;
        }
        return 0.0;
    }

    bool contains(double x) const noexcept
    {
        return std::isfinite(x) && domain_lo() < x && x < domain_hi();
    }

    GroupElement element(double x) const
    {
        if (!contains(x)) {
            throw DomainError("value " + std::to_string(x) + " is outside the open domain of the "
                              + std::string(name()) + " scale");
        }
        return GroupElement(x, tag());
    }

    GroupElement identity() const { return GroupElement(raw_identity(), tag()); }

    /// Throws ScaleMismatch unless `a` belongs to this scale.
    void check(const GroupElement& a) const
    {
        if (!(a.scale() == tag())) {
            throw ScaleMismatch("element tagged with a different scale than " + std::string(name()));
        }
    }

    // Untagged arithmetic on raw values. Callers guarantee domain membership.

    double raw_identity() const
    {
        switch (id_) {
        case ScaleId::multiplicative: return 1.0;
        case ScaleId::additive: return 0.0;
        case ScaleId::fuzzy: return 0.5;
        case ScaleId::custom: return custom_->from_additive(0.0);
        }
        return 0.0;
    }

    double raw_op(double a, double b) const
    {
        switch (id_) {
        case ScaleId::multiplicative: return a * b;
        case ScaleId::additive: return a + b;
        case ScaleId::fuzzy: {
            const double ab = a * b;
            return ab / (ab + (1.0 - a) * (1.0 - b));
        }
        case ScaleId::custom: return custom_->from_additive(custom_->to_additive(a) + custom_->to_additive(b));
        }
        return 0.0;
    }

    double raw_inv(double a) const
    {
        switch (id_) {
        case ScaleId::multiplicative: return 1.0 / a;
        case ScaleId::additive: return -a;
        case ScaleId::fuzzy: return 1.0 - a;
        case ScaleId::custom: return custom_->from_additive(-custom_->to_additive(a));
        }
        return 0.0;
    }

    double raw_to_additive(double a) const
    {
        switch (id_) {
        case ScaleId::multiplicative: return std::log(a);
        case ScaleId::additive: return a;
        case ScaleId::fuzzy: return detail::logit(a);
        case ScaleId::custom: return custom_->to_additive(a);
        }
        return 0.0;
    }

    double raw_from_additive(double y) const
    {
        switch (id_) {
        case ScaleId::multiplicative: return std::exp(y);
        case ScaleId::additive: return y;
        case ScaleId::fuzzy: return detail::logistic(y);
        case ScaleId::custom: return custom_->from_additive(y);
        }
        return 0.0;
    }

    double to_additive(const GroupElement& a) const
    {
        check(a);
        return raw_to_additive(a.value());
    }

    GroupElement from_additive(double y) const { return element(raw_from_additive(y)); }

    bool raw_equal(double a, double b, Tolerance tol = default_tolerance) const
    {
        return std::abs(raw_to_additive(a) - raw_to_additive(b)) <= tol.tau;
    }

    /// Tolerant equality: |to_additive(a) - to_additive(b)| <= tau.
    bool equal(const GroupElement& a, const GroupElement& b, Tolerance tol = default_tolerance) const
    {
        check(a);
        check(b);
        return raw_equal(a.value(), b.value(), tol);
    }

    /// a <= b, allowing a to exceed b by at most tau in additive coordinates.
    bool less_equal(const GroupElement& a, const GroupElement& b, Tolerance tol = default_tolerance) const
    {
        return to_additive(a) <= to_additive(b) + tol.tau;
    }

    /// a < b by more than tau in additive coordinates.
    bool strictly_less(const GroupElement& a, const GroupElement& b, Tolerance tol = default_tolerance) const
    {
        return to_additive(a) < to_additive(b) - tol.tau;
    }

    friend bool operator==(const Scale& a, const Scale& b) noexcept { return a.tag() == b.tag(); }

private:
    struct Custom {
        std::string name;
        double lo;
        double hi;
        Map to_additive;
        Map from_additive;
    };

    explicit Scale(ScaleId id) noexcept : id_(id) {}

    ScaleId id_;
    std::uint64_t key_ = 0;
    std::shared_ptr<const Custom> custom_;
};

inline GroupElement op(const Scale& g, const GroupElement& a, const GroupElement& b)
{
    g.check(a);
    g.check(b);
    return g.element(g.raw_op(a.value(), b.value()));
}

inline GroupElement inv(const Scale& g, const GroupElement& a)
{
    g.check(a);
    return g.element(g.raw_inv(a.value()));
}

/// a ÷ b = a ⊙ b^(-1)
inline GroupElement div(const Scale& g, const GroupElement& a, const GroupElement& b)
{
    g.check(a);
    g.check(b);
    return g.element(g.raw_op(a.value(), g.raw_inv(b.value())));
}

/// Integer power by repeated group operation; negative exponents invert
/// the |z|-power.
inline GroupElement int_pow(const Scale& g, const GroupElement& a, long long z)
{
    g.check(a);
    const bool negative = z < 0;
    unsigned long long n = negative ? 0ULL - static_cast<unsigned long long>(z) : static_cast<unsigned long long>(z);
    double result = g.raw_identity();
    double base = a.value();
    while (n != 0) {
        if (n & 1ULL) result = g.raw_op(result, base);
        n >>= 1;
        if (n != 0) base = g.raw_op(base, base);
    }
    if (negative) result = g.raw_inv(result);
    return g.element(result);
}

/// The unique x with x^(n) = a, computed by transport through the additive
/// coordinates.
inline GroupElement nth_root(const Scale& g, const GroupElement& a, long long n)
{
    g.check(a);
    if (n < 1) throw InvalidArgument("root index must be a positive integer");
    return g.from_additive(g.raw_to_additive(a.value()) / static_cast<double>(n));
}

inline GroupElement rational_pow(const Scale& g, const GroupElement& a, long long m, long long n)
{
    if (n < 1) throw InvalidArgument("rational power denominator must be a positive integer");
    return nth_root(g, int_pow(g, a, m), n);
}

/// G-mean: the n-th root of the ⊙-fold of the elements. The fold is
/// accumulated in additive coordinates so that long products neither
/// overflow (multiplicative) nor saturate to 1 (fuzzy).
inline GroupElement mean(const Scale& g, std::span<const GroupElement> elements)
{
    if (elements.empty()) throw EmptyInput("mean of an empty list");
    for (const auto& e : elements) g.check(e);
    if (elements.size() == 1) return elements.front();
    double sum = 0.0;
    for (const auto& e : elements) sum += g.raw_to_additive(e.value());
    return g.from_additive(sum / static_cast<double>(elements.size()));
}

/// ||a|| = max{a, a^(-1)}
inline GroupElement norm(const Scale& g, const GroupElement& a)
{
    g.check(a);
    const double i = g.raw_inv(a.value());
    return g.element(a.value() >= i ? a.value() : i);
}

/// d(a, b) = ||a ÷ b||
inline GroupElement distance(const Scale& g, const GroupElement& a, const GroupElement& b)
{
    return norm(g, div(g, a, b));
}

/// Order and group isomorphism between two scales.
class IsoMap {
public:
    using Map = Scale::Map;

    IsoMap(Scale source, Scale target, Map forward, Map backward)
        : source_(std::move(source)), target_(std::move(target)), forward_(std::move(forward)),
          backward_(std::move(backward))
    {
    }

    /// h(x) = x / (1 + x), multiplicative -> fuzzy.
    static IsoMap multiplicative_to_fuzzy()
    {
        return IsoMap(Scale::multiplicative(), Scale::fuzzy(), [](double x) { return x / (1.0 + x); },
                      [](double y) { return y / (1.0 - y); });
    }

    /// g(x) = e^x / (1 + e^x), additive -> fuzzy.
    static IsoMap additive_to_fuzzy()
    {
        return IsoMap(Scale::additive(), Scale::fuzzy(), detail::logistic, detail::logit);
    }

    static IsoMap multiplicative_to_additive()
    {
        return IsoMap(Scale::multiplicative(), Scale::additive(), [](double x) { return std::log(x); },
                      [](double y) { return std::exp(y); });
    }

    /// target.from_additive ∘ source.to_additive
    static IsoMap canonical(const Scale& source, const Scale& target)
    {
        return IsoMap(
            source, target, [s = source, t = target](double x) { return t.raw_from_additive(s.raw_to_additive(x)); },
            [s = source, t = target](double y) { return s.raw_from_additive(t.raw_to_additive(y)); });
    }

    /// Preferred map between two scales: the closed-form built-ins (or their
    /// inverses) where one exists, the identity for equal scales, otherwise
    /// the canonical transport.
    static IsoMap between(const Scale& source, const Scale& target)
    {
        if (source == target) {
            return IsoMap(source, target, [](double x) { return x; }, [](double y) { return y; });
        }
        const auto s = source.id();
        const auto t = target.id();
        using enum ScaleId;
        if (s == multiplicative && t == fuzzy) return multiplicative_to_fuzzy();
        if (s == fuzzy && t == multiplicative) return multiplicative_to_fuzzy().inverse();
        if (s == additive && t == fuzzy) return additive_to_fuzzy();
        if (s == fuzzy && t == additive) return additive_to_fuzzy().inverse();
        if (s == multiplicative && t == additive) return multiplicative_to_additive();
        if (s == additive && t == multiplicative) return multiplicative_to_additive().inverse();
        return canonical(source, target);
    }

    IsoMap inverse() const { return IsoMap(target_, source_, backward_, forward_); }

    const Scale& source() const noexcept { return source_; }
    const Scale& target() const noexcept { return target_; }

    double raw_forward(double x) const { return forward_(x); }
    double raw_backward(double y) const { return backward_(y); }

    GroupElement apply(const GroupElement& a) const
    {
        source_.check(a);
        return target_.element(forward_(a.value()));
    }

    GroupElement apply_inverse(const GroupElement& b) const
    {
        target_.check(b);
        return source_.element(backward_(b.value()));
    }

private:
    Scale source_;
    Scale target_;
    Map forward_;
    Map backward_;
};

inline GroupElement iso_apply(const IsoMap& m, const GroupElement& a) { return m.apply(a); }

} // namespace alo
