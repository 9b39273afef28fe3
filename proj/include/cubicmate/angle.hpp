#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cubicmate {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An exact point of the circle R/Z, stored as a reduced fraction num/den
/// with 0 <= num < den. Rotation numbers p/q are also residues mod 1 and use
/// the same type.
class Angle {
   public:
    Angle() : num_(0), den_(1) {
    }
    /// Reduces num/den modulo 1. Negative numerators wrap around.
    Angle(Integer num, Integer den);
    Angle(long long num, long long den) : Angle(Integer(num), Integer(den)) {
    }

    /// Accepts "num/den", an optional leading '-', and a bare integer.
    static Angle parse(std::string_view text);

    const Integer &num() const {
        return num_;
    }
    const Integer &den() const {
        return den_;
    }
    bool is_zero() const {
        return num_ == 0;
    }
    Rational value() const {
        return Rational(num_, den_);
    }
    std::string str() const;

    Angle operator-() const;
    friend Angle operator+(const Angle &a, const Angle &b);
    friend Angle operator-(const Angle &a, const Angle &b);

    friend bool operator==(const Angle &a, const Angle &b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    /// Order of representatives in [0, 1).
    friend std::strong_ordering operator<=>(const Angle &a, const Angle &b);

   private:
    Integer num_;
    Integer den_;
};

/// Multiplication by d on the circle.
Angle map_md(const Angle &a, int d);

/// The d preimages (a + j)/d, sorted increasing.
std::vector<Angle> preimages_md(const Angle &a, int d);

/// Open arc traversed counterclockwise from start to end. start == end is the
/// whole circle minus that point.
struct Arc {
    Angle start;
    Angle end;

    friend bool operator==(const Arc &, const Arc &) = default;
};

/// Length in (0, 1].
Rational arc_length(const Arc &arc);
bool in_arc(const Angle &x, const Arc &arc);
/// Counterclockwise distance (x - from) mod 1.
Angle ccw_offset(const Angle &from, const Angle &x);

/// Unordered pair of distinct angles, stored with first() < second().
class Chord {
   public:
    Chord(Angle a, Angle b);

    const Angle &first() const {
        return first_;
    }
    const Angle &second() const {
        return second_;
    }
    bool contains(const Angle &x) const {
        return x == first_ || x == second_;
    }
    Chord negated() const {
        return Chord(-first_, -second_);
    }
    Chord mapped(int d) const {
        return Chord(map_md(first_, d), map_md(second_, d));
    }

    friend bool operator==(const Chord &, const Chord &) = default;

   private:
    Angle first_;
    Angle second_;
};

/// True iff exactly one endpoint of c2 lies strictly between the endpoints of
/// c1. Chords sharing an endpoint are unlinked.
bool chords_linked(const Chord &c1, const Chord &c2);

struct Orbit {
    int preperiod = 0;
    int period = 0;
    /// Forward orbit up to (not including) the first repetition: the
    /// preperiodic tail followed by one copy of the cycle.
    std::vector<Angle> points;

    bool is_periodic() const {
        return preperiod == 0;
    }
    std::vector<Angle> cycle() const {
        return {points.begin() + preperiod, points.end()};
    }
};

Orbit orbit_md(const Angle &a, int d);

/// Sorts increasing and removes duplicates.
std::vector<Angle> sorted_unique(std::vector<Angle> angles);
std::vector<Angle> negated(const std::vector<Angle> &angles);
std::string join(const std::vector<Angle> &angles, std::string_view sep = ", ");

}  // namespace cubicmate
