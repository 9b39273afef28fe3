#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cubicmate/angle.hpp"
#include "cubicmate/rotation_set.hpp"

namespace cubicmate {

enum class Sign { Plus, Minus };

inline Sign flip(Sign s) {
    return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
inline char sign_char(Sign s) {
    return s == Sign::Plus ? '+' : '-';
}

/// A limb of the cubic slice, addressed by the internal angle t0 at which it
/// is attached to the main component and the side it lies on.
struct LimbId {
    Angle t0;
    Sign sign = Sign::Plus;

    /// "t0+" or "t0-", e.g. "18/31+".
    static LimbId parse(std::string_view text);
    std::string str() const;

    friend bool operator==(const LimbId &, const LimbId &) = default;
};

/// (rho, k, sign): rotation number of t0 under doubling, 1-based position of
/// t0 in X_rho sorted from 0, and the side.
struct LimbData {
    Angle rho;
    int k = 1;
    Sign sign = Sign::Plus;

    std::string str() const;

    friend bool operator==(const LimbData &, const LimbData &) = default;
};

struct NoRotationNumber {
    friend bool operator==(const NoRotationNumber &, const NoRotationNumber &) = default;
};
struct StrictlyPreperiodic {
    friend bool operator==(const StrictlyPreperiodic &, const StrictlyPreperiodic &) = default;
};

using LimbDataResult = std::variant<LimbData, NoRotationNumber, StrictlyPreperiodic>;

LimbDataResult limb_data(const LimbId &limb);
LimbId data_to_limb(const LimbData &data);

/// (t0, s) -> (-t0, s); the two limbs at t0 = 0 are exchanged.
LimbId conjugate_limb(const LimbId &limb);
/// (t0, s) -> (t0, -s).
LimbId swap_sign(const LimbId &limb);
/// nullopt when t0 has no rotation number.
std::optional<LimbId> complementary_limb(const LimbId &limb);

struct LabeledChord {
    Chord chord;
    /// Internal angle 2^j t0 of the boundary point the pair lands on.
    Angle label;

    friend bool operator==(const LabeledChord &, const LabeledChord &) = default;
};

/// External angles of the alpha-periodic cycle of a limb.
struct ThetaSet {
    LimbId limb;
    int period = 1;
    std::vector<Angle> angles;
    /// Arc(eta, eta') cut off by the pair landing at the critical-limb root.
    Arc critical_gap;
    /// P_j = m3^j {eta, eta'}, labeled 2^j t0.
    std::vector<LabeledChord> pairs;
    Angle root_theta;
    Angle root_theta_prime;
};

/// Passing parameter-ray pair of the exhaustive search over
/// i / (3 (3^q - 1)).
struct RootCandidate {
    Angle theta;
    Angle theta_prime;
};

/// Throws PreperiodicArgument for strictly preperiodic t0 and AmbiguousSearch
/// when the root search does not return exactly one candidate.
ThetaSet theta_of_limb(const LimbId &limb);

/// Every candidate of the root search, in increasing order of theta.
std::vector<RootCandidate> root_search(const LimbId &limb);
/// Theta from the two-cycle tripling rotation set, or nullopt when t0 has no
/// rotation number.
std::optional<std::vector<Angle>> theta_from_rotation_set(const LimbId &limb);

std::pair<Angle, Angle> root_parameter_rays(const LimbId &limb);
/// (theta + 1/3, theta' - 1/3).
std::pair<Angle, Angle> critical_limb_root_rays(const Angle &theta, const Angle &theta_prime);
std::vector<LabeledChord> alpha_chords(const LimbId &limb);

/// Theta(l1) == -Theta(l2).
bool limb_condition(const LimbId &l1, const LimbId &l2);

/// Position (q + 1) / 2 in X_rho. Throws NotInRotationSet when the orbit of
/// theta is not a doubling rotation set and EvenPeriod for even q.
bool balanced(const Angle &theta);

/// Landing data of a map on the parameter ray of angle theta in a limb with
/// strictly preperiodic internal argument.
struct PreperiodicLimbRays {
    Angle param_angle;
    std::vector<Angle> cocritical_class;
    std::vector<Angle> critical_class;
    std::vector<Angle> critical_value_class;

    /// No validation of theta.
    static PreperiodicLimbRays from_parameter_angle(const Angle &theta);
};

/// Throws CoPeriodicAngle when 3 theta is periodic but theta is not, and
/// InvalidArgument when theta is fixed by tripling.
PreperiodicLimbRays preperiodic_limb_rays(const Angle &theta);

}  // namespace cubicmate
