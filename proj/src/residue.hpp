#pragma once

// Fixed-denominator arithmetic for the exhaustive searches. Every enumeration
// here visits d^q residues, so q is far too small for the modulus to overflow
// before the search itself becomes infeasible.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubicmate/angle.hpp"
#include "cubicmate/errors.hpp"

namespace cubicmate::detail {

using Residue = std::uint64_t;

inline Residue ipow(Residue base, int exp) {
    Residue r = 1;
    for (int k = 0; k < exp; k++) {
        r *= base;
    }
    return r;
}

/// d^q - 1, the common denominator of all angles of exact m_d-period q.
inline Residue cycle_modulus(int d, int q) {
    int limit = d == 2 ? 62 : 38;
    if (q < 1 || q > limit) {
        throw Error(ErrorKind::InvalidArgument, "period " + std::to_string(q) + " outside the searchable range");
    }
    return ipow(static_cast<Residue>(d), q) - 1;
}

/// Open counterclockwise arc (start, end) on Z/M.
inline bool in_open_arc(Residue x, Residue start, Residue end, Residue modulus) {
    Residue off = (x + modulus - start) % modulus;
    Residue len = (end + modulus - start) % modulus;
    if (len == 0) {
        return off != 0;
    }
    return off != 0 && off < len;
}

inline bool residue_chords_linked(Residue a1, Residue b1, Residue a2, Residue b2, Residue modulus) {
    if (a2 == a1 || a2 == b1 || b2 == a1 || b2 == b1) {
        return false;
    }
    return in_open_arc(a2, a1, b1, modulus) != in_open_arc(b2, a1, b1, modulus);
}

/// All m_d-cycles of exact period q as residues over d^q - 1, each in orbit
/// order starting from its smallest element, ordered by that element.
std::vector<std::vector<Residue>> exact_period_cycles(int d, int q);

/// Rotation number of a single cycle given in orbit order, or nullopt if the
/// cycle is not a rotation set. Returned as an Angle p/q.
std::optional<Angle> cycle_rotation_number(const std::vector<Residue> &cycle, int d, Residue modulus);

std::vector<Angle> to_angles(const std::vector<Residue> &residues, Residue modulus);

}  // namespace cubicmate::detail
