#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace symsearch {

/// Exact step-cost arithmetic. Path costs are sums of non-negative rationals,
/// so equality comparisons in tests and metrics are exact.
using Cost = boost::rational<std::int64_t>;

/// Renders a cost as "p" for integers and "p/q" otherwise.
inline std::string format_cost(const Cost& c) {
    std::string s = std::to_string(c.numerator());
    if (c.denominator() != 1) {
        s += '/';
        s += std::to_string(c.denominator());
    }
    return s;
}

/// Parses "p" or "p/q" with p >= 0, q > 0. Returns nullopt on anything else,
/// including overflow; never throws.
inline std::optional<Cost> parse_cost(std::string_view text) {
    auto digits = [](std::string_view t) -> std::optional<std::int64_t> {
        if (t.empty() || t.size() > 18) return std::nullopt;
        std::int64_t v = 0;
        for (char ch : t) {
            if (ch < '0' || ch > '9') return std::nullopt;
            v = v * 10 + (ch - '0');
        }
        return v;
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto p = digits(text);
        if (!p) return std::nullopt;
        return Cost(*p);
    }
    auto p = digits(text.substr(0, slash));
    auto q = digits(text.substr(slash + 1));
    if (!p || !q || *q == 0) return std::nullopt;
    return Cost(*p, *q);
}

}  // namespace symsearch
