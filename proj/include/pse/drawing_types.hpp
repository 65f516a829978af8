#pragma once

#include "pse/geometry.hpp"

namespace pse {

enum class PointKind { GeneralRandom, OneSidedConvex };

struct PointSet {
    std::vector<Pt> pts;
    PointKind kind = PointKind::GeneralRandom;
};

/// A straight-line drawing of a plane graph: exact rational coordinates for
/// every vertex plus the assignment of point-set indices to vertices.
struct Drawing {
    std::vector<Pt> coords;
    std::vector<int> s_assignment;  // s_assignment[i] = vertex placed exactly on S[i]
};

}  // namespace pse
