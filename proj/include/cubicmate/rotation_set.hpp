#pragma once

#include <optional>
#include <vector>

#include "cubicmate/angle.hpp"

namespace cubicmate {

/// A complementary arc of a finite invariant set. multiplicity is the number
/// of times m_d wraps the arc around the circle beyond its image gap; it is
/// floor(d * length) except for the single-point set, whose only gap has
/// multiplicity d - 1.
struct Gap {
    Arc arc;
    Rational length;
    int multiplicity = 0;

    bool is_major() const {
        return multiplicity >= 1;
    }
};

struct Signature {
    int s1 = 0;
    int s2 = 0;

    friend bool operator==(const Signature &, const Signature &) = default;
};

/// A finite m_d-invariant set together with its gap decomposition. rho() is
/// present exactly when the set is a rotation set.
class RotationSet {
   public:
    /// Throws Error(NotInvariant) unless m_d maps the points onto themselves.
    static RotationSet from_points(std::vector<Angle> points, int degree);

    int degree() const {
        return degree_;
    }
    const std::vector<Angle> &points() const {
        return points_;
    }
    size_t size() const {
        return points_.size();
    }
    const std::optional<Angle> &rho() const {
        return rho_;
    }
    bool is_rotation_set() const {
        return rho_.has_value();
    }
    const std::vector<Gap> &gaps() const {
        return gaps_;
    }
    bool contains(const Angle &x) const;
    RotationSet negated() const;

    friend bool operator==(const RotationSet &a, const RotationSet &b) {
        return a.degree_ == b.degree_ && a.points_ == b.points_;
    }

   private:
    RotationSet() = default;

    int degree_ = 2;
    std::vector<Angle> points_;
    std::optional<Angle> rho_;
    std::vector<Gap> gaps_;
};

/// Gap criterion: the complement holds d - 1 disjoint arcs of length 1/d.
/// Throws Error(NotInvariant) for sets that are not m_d-invariant.
bool is_rotation_set(const std::vector<Angle> &points, int d);

/// Throws Error(NotRotationSet) when X has no rotation number.
Angle rotation_number(const RotationSet &X);

Signature signature(const RotationSet &X);
std::vector<Gap> major_gaps(const RotationSet &X);

/// The unique doubling rotation set with rotation number rho.
RotationSet m2_rotation_set(const Angle &rho);

/// The unique tripling rotation set made of two q-cycles with rotation number
/// p/q and s1 points in [0, 1/2). s1 must be odd with 1 <= s1 <= 2q - 1.
RotationSet m3_two_cycle_rotation_set(const Angle &rho, int s1);

/// Every two-cycle tripling rotation set whose cycles have period q, for any
/// rotation number with denominator q. Sorted by (rho, s1).
std::vector<RotationSet> m3_two_cycle_rotation_sets(int q);

/// Partition into m_d-cycles, each sorted, ordered by smallest element.
std::vector<std::vector<Angle>> decompose_cycles(const RotationSet &X);

/// Each gap of c1 meets c2 and each gap of c2 meets c1.
bool superlinked(const std::vector<Angle> &c1, const std::vector<Angle> &c2);

}  // namespace cubicmate
