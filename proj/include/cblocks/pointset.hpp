#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cblocks {

/// Subset of the marked points {1..n}; bit (i-1) stands for point i.
using PointSet = std::uint32_t;

inline constexpr int kMaxPoints = 24;

inline PointSet full_set(int n)
{
    return n >= 32 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

inline int count(PointSet s)
{
    return std::popcount(s);
}

inline bool contains(PointSet s, int point)
{
    return (s >> (point - 1)) & 1u;
}

inline PointSet singleton(int point)
{
    return PointSet{1} << (point - 1);
}

/// 1-based members in increasing order.
inline std::vector<int> members(PointSet s)
{
    std::vector<int> out;
    for (int i = 0; s; ++i, s >>= 1)
        if (s & 1u)
            out.push_back(i + 1);
    return out;
}

/// "1,4,5"
inline std::string format_points(PointSet s)
{
    std::string out;
    for (int p : members(s)) {
        if (!out.empty())
            out += ',';
        out += std::to_string(p);
    }
    return out;
}

}  // namespace cblocks
