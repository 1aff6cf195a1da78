#pragma once

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace obf {

namespace detail {

inline double parse_double(std::string_view sv, const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), v);
    if (ec != std::errc() || ptr != sv.data() + sv.size())
        throw std::invalid_argument(std::string(what) + ": bad number '" + std::string(sv) + "'");
    return v;
}

inline std::vector<std::string_view> split(std::string_view sv, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        auto pos = sv.find(sep);
        if (pos == std::string_view::npos) {
            parts.push_back(sv);
            return parts;
        }
        parts.push_back(sv.substr(0, pos));
        sv.remove_prefix(pos + 1);
    }
}

} // namespace detail

// Grid specification grammar:
//   lin:start:stop:count   count points, evenly spaced
//   log:start:stop:count   count points, evenly spaced in log (start,stop > 0)
//   v1,v2,...              explicit comma-separated values
// Endpoints are hit exactly; count = 1 degenerates to {start}.
inline std::vector<double> parse_grid(std::string_view spec) {
    if (spec.empty())
        throw std::invalid_argument("grid: empty specification");
    const bool lin = spec.rfind("lin:", 0) == 0;
    const bool lg = spec.rfind("log:", 0) == 0;
    if (lin || lg) {
        auto parts = detail::split(spec.substr(4), ':');
        if (parts.size() != 3)
            throw std::invalid_argument("grid: expected start:stop:count after '" + std::string(spec.substr(0, 4)) + "'");
        const double start = detail::parse_double(parts[0], "grid start");
        const double stop = detail::parse_double(parts[1], "grid stop");
        const double countf = detail::parse_double(parts[2], "grid count");
        const long count = static_cast<long>(countf);
        if (count < 1 || static_cast<double>(count) != countf)
            throw std::invalid_argument("grid: count must be a positive integer");
        if (lg && (!(start > 0.0) || !(stop > 0.0)))
            throw std::invalid_argument("grid: log spacing needs positive endpoints");
        std::vector<double> g;
        g.reserve(static_cast<std::size_t>(count));
        if (count == 1) {
            g.push_back(start);
            return g;
        }
        for (long i = 0; i < count; ++i) {
            const double t = static_cast<double>(i) / static_cast<double>(count - 1);
            if (lg)
                g.push_back(std::exp(std::log(start) + t * (std::log(stop) - std::log(start))));
            else
                g.push_back(start + t * (stop - start));
        }
        // force exact endpoints (log spacing rounds)
        g.front() = start;
        g.back() = stop;
        return g;
    }
    std::vector<double> g;
    for (auto part : detail::split(spec, ','))
        g.push_back(detail::parse_double(part, "grid value"));
    return g;
}

enum class SweepVariable { Rate, Lambda, Radius, Alpha, Epsilon };

inline const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::Rate: return "rate";
        case SweepVariable::Lambda: return "lambda";
        case SweepVariable::Radius: return "radius";
        case SweepVariable::Alpha: return "alpha";
        case SweepVariable::Epsilon: return "epsilon";
    }
    return "?";
}

inline SweepVariable parse_sweep_variable(std::string_view name) {
    if (name == "rate" || name == "x") return SweepVariable::Rate;
    if (name == "lambda") return SweepVariable::Lambda;
    if (name == "radius") return SweepVariable::Radius;
    if (name == "alpha") return SweepVariable::Alpha;
    if (name == "epsilon") return SweepVariable::Epsilon;
    throw std::invalid_argument("sweep: unknown variable '" + std::string(name) + "'");
}

// A swept variable plus its grid; the fixed remainder of the configuration
// lives with the caller.  Grids must be strictly increasing so emitted rows
// are in a canonical order.
struct SweepSpec {
    SweepVariable variable;
    std::vector<double> grid;

    SweepSpec(SweepVariable variable_, std::vector<double> grid_)
        : variable(variable_), grid(std::move(grid_)) {
        if (grid.empty())
            throw std::invalid_argument("sweep: empty grid");
        for (std::size_t i = 1; i < grid.size(); ++i)
            if (!(grid[i] > grid[i - 1]))
                throw std::invalid_argument("sweep: grid must be strictly increasing");
    }
};

} // namespace obf
