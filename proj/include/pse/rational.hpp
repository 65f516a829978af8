#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pse {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class Err {
    NonPlanar,
    InvalidRotation,
    UnknownOuterFace,
    TooSmall,
    NotMaximal,
    NotInternal,
    ChainNotMaximal,
    AuditCapExceeded,
    LeafNode,
    Not4Connected,
    BadDesignation,
    InvalidStabber,
    SidePathTooShort,
    PathsNotInduced,
    PathsIntersect,
    NotOneSidedConvex,
    SubgraphTooSmall,
    NotStarShaped,
    BoundaryChord,
    PointSetTooLarge,
    BadInput,
    Internal,
};

class Error : public std::runtime_error {
public:
    Err code;
    Error(Err c, const std::string& what) : std::runtime_error(what), code(c) {}
};

[[noreturn]] inline void fail(Err c, const std::string& what) { throw Error(c, what); }

inline void require(bool cond, Err c, const std::string& what) {
    if (!cond) fail(c, what);
}

struct Pt {
    Rat x, y;

    Pt() = default;
    Pt(Rat px, Rat py) : x(std::move(px)), y(std::move(py)) {}

    bool operator==(const Pt& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Pt& o) const { return !(*this == o); }

    Pt operator+(const Pt& o) const { return {x + o.x, y + o.y}; }
    Pt operator-(const Pt& o) const { return {x - o.x, y - o.y}; }
    Pt operator*(const Rat& s) const { return {x * s, y * s}; }
};

/// Twice the signed area of triangle (a,b,c); >0 for a counterclockwise turn.
inline Rat cross(const Pt& a, const Pt& b, const Pt& c) {
    return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

inline int sgn(const Rat& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

inline int orient(const Pt& a, const Pt& b, const Pt& c) { return sgn(cross(a, b, c)); }

/// Serialize exactly, as "num" or "num/den".
inline std::string rat_to_string(const Rat& r) { return r.str(); }

/// Parse "num", "num/den", or a plain decimal like "-12.625" exactly.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail(Err::BadInput, "empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) return Rat(s);
    auto dot = s.find('.');
    if (dot == std::string::npos) return Rat(s);
    std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos)
        fail(Err::BadInput, "bad decimal literal: " + s);
    bool neg = !head.empty() && head[0] == '-';
    if (head == "-" || head.empty()) head = neg ? "-0" : "0";
    BigInt ip(head);
    BigInt frac = tail.empty() ? BigInt(0) : BigInt(tail);
    BigInt den = 1;
    for (size_t i = 0; i < tail.size(); ++i) den *= 10;
    if (neg) frac = -frac;
    BigInt num = ip * den + frac;
    return Rat(num, den);
}

/// Conservative double bounds: lo <= r <= hi, for float-space pruning only.
inline std::pair<double, double> rat_bounds(const Rat& r) {
    double d = r.convert_to<double>();
    if (!std::isfinite(d)) {
        double inf = std::numeric_limits<double>::infinity();
        return {-inf, inf};
    }
    double slack = std::abs(d) * 1e-9 + 1e-300;
    return {d - slack, d + slack};
}

}  // namespace pse
