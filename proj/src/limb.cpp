#include "cubicmate/limb.hpp"

#include <algorithm>
#include <numeric>

#include "cubicmate/errors.hpp"
#include "residue.hpp"

namespace cubicmate {

using detail::Residue;

namespace {

constexpr int kMaxSearchPeriod = 16;

bool is_periodic_t0(const Angle &t0) {
    return orbit_md(t0, 2).is_periodic();
}

void require_periodic(const LimbId &limb) {
    if (!is_periodic_t0(limb.t0)) {
        throw Error(ErrorKind::PreperiodicArgument,
                    limb.str() + " has a strictly preperiodic internal angle; no alpha cycle is defined");
    }
}

/// Rank of each entry among the sorted values.
template <typename T>
std::vector<size_t> ranks(const std::vector<T> &values) {
    std::vector<size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
    std::vector<size_t> rank(values.size());
    for (size_t r = 0; r < order.size(); r++) {
        rank[order[r]] = r;
    }
    return rank;
}

bool has_exact_period(Residue x, int q, Residue modulus) {
    Residue y = x;
    for (int n = 1; n < q; n++) {
        y = (3 * y) % modulus;
        if (y == x) {
            return false;
        }
    }
    return (3 * y) % modulus == x;
}

/// Root rays of the two limbs at internal angle 0.
RootCandidate zero_limb_root(Sign sign) {
    if (sign == Sign::Plus) {
        return {Angle(4, 6), Angle(5, 6)};
    }
    return {Angle(1, 6), Angle(2, 6)};
}

}  // namespace

LimbId LimbId::parse(std::string_view text) {
    if (text.size() < 2 || (text.back() != '+' && text.back() != '-')) {
        throw std::invalid_argument("limb '" + std::string(text) + "' must be an angle followed by + or -");
    }
    Sign sign = text.back() == '+' ? Sign::Plus : Sign::Minus;
    return LimbId{Angle::parse(text.substr(0, text.size() - 1)), sign};
}

std::string LimbId::str() const {
    return t0.str() + sign_char(sign);
}

std::string LimbData::str() const {
    return "(" + rho.str() + ", " + std::to_string(k) + ", " + sign_char(sign) + ")";
}

LimbDataResult limb_data(const LimbId &limb) {
    Orbit orbit = orbit_md(limb.t0, 2);
    if (!orbit.is_periodic()) {
        return StrictlyPreperiodic{};
    }
    RotationSet X = RotationSet::from_points(orbit.points, 2);
    if (!X.is_rotation_set()) {
        return NoRotationNumber{};
    }
    auto it = std::lower_bound(X.points().begin(), X.points().end(), limb.t0);
    int k = static_cast<int>(it - X.points().begin()) + 1;
    return LimbData{*X.rho(), k, limb.sign};
}

LimbId data_to_limb(const LimbData &data) {
    RotationSet X = m2_rotation_set(data.rho);
    if (data.k < 1 || data.k > static_cast<int>(X.size())) {
        throw Error(ErrorKind::InvalidArgument, "position " + std::to_string(data.k) + " outside 1.." +
                                                    std::to_string(X.size()) + " for rotation number " +
                                                    data.rho.str());
    }
    return LimbId{X.points()[data.k - 1], data.sign};
}

LimbId conjugate_limb(const LimbId &limb) {
    if (limb.t0.is_zero()) {
        return swap_sign(limb);
    }
    return LimbId{-limb.t0, limb.sign};
}

LimbId swap_sign(const LimbId &limb) {
    return LimbId{limb.t0, flip(limb.sign)};
}

std::optional<LimbId> complementary_limb(const LimbId &limb) {
    auto result = limb_data(limb);
    const auto *data = std::get_if<LimbData>(&result);
    if (data == nullptr) {
        return std::nullopt;
    }
    if (limb.t0.is_zero()) {
        return limb;
    }
    return data_to_limb(LimbData{-data->rho, data->k, flip(data->sign)});
}

std::vector<RootCandidate> root_search(const LimbId &limb) {
    Orbit orbit = orbit_md(limb.t0, 2);
    if (!orbit.is_periodic()) {
        throw Error(ErrorKind::PreperiodicArgument,
                    limb.str() + " has a strictly preperiodic internal angle; no alpha cycle is defined");
    }
    if (limb.t0.is_zero()) {
        return {zero_limb_root(limb.sign)};
    }
    int q = orbit.period;
    if (q > kMaxSearchPeriod) {
        throw Error(ErrorKind::InvalidArgument,
                    "period " + std::to_string(q) + " exceeds the root search limit " + std::to_string(kMaxSearchPeriod));
    }

    const Residue n = detail::cycle_modulus(3, q);
    const Residue m = 3 * n;
    const Residue half = m / 2;
    const Residue marked = limb.sign == Sign::Plus ? 0 : half;
    const std::vector<size_t> label_rank = ranks(orbit.points);
    const size_t nq = static_cast<size_t>(q);

    std::vector<RootCandidate> found;
    std::vector<std::pair<Residue, Residue>> chords(nq);
    std::vector<Residue> ends(2 * nq);
    std::vector<Residue> keys(nq);

    // eta = i/m + 1/3 lies over 3^q - 1 only when i = 1 mod 3.
    for (Residue i = 1; i < m; i += 3) {
        Residue eta = (i + n) % m;
        Residue eta_prime = (i + 1 + m - n) % m;
        if (!has_exact_period(eta, q, m) || !has_exact_period(eta_prime, q, m)) {
            continue;
        }

        Residue a = eta;
        Residue b = eta_prime;
        for (size_t j = 0; j < nq; j++) {
            chords[j] = {a, b};
            ends[2 * j] = a;
            ends[2 * j + 1] = b;
            a = (3 * a) % m;
            b = (3 * b) % m;
        }
        std::vector<Residue> sorted_ends = ends;
        std::sort(sorted_ends.begin(), sorted_ends.end());
        if (std::adjacent_find(sorted_ends.begin(), sorted_ends.end()) != sorted_ends.end()) {
            continue;
        }

        bool ok = true;
        for (size_t u = 0; u < nq && ok; u++) {
            for (size_t v = u + 1; v < nq && ok; v++) {
                ok = !detail::residue_chords_linked(chords[u].first, chords[u].second, chords[v].first,
                                                    chords[v].second, m);
            }
        }
        if (!ok) {
            continue;
        }

        bool has_half = detail::in_open_arc(half, eta, eta_prime, m);
        bool has_zero = detail::in_open_arc(0, eta, eta_prime, m);
        if (limb.sign == Sign::Plus ? !(has_half && !has_zero) : !(has_zero && !has_half)) {
            continue;
        }

        // All pairs bound one common complementary region: no pair has other
        // endpoints on both of its sides.
        for (size_t j = 0; j < nq && ok; j++) {
            bool left = false;
            bool right = false;
            for (Residue x : ends) {
                left = left || detail::in_open_arc(x, chords[j].first, chords[j].second, m);
                right = right || detail::in_open_arc(x, chords[j].second, chords[j].first, m);
            }
            ok = !(left && right);
        }
        if (!ok) {
            continue;
        }

        for (size_t j = 0; j < nq; j++) {
            keys[j] = std::min((chords[j].first + m - marked) % m, (chords[j].second + m - marked) % m);
        }
        if (ranks(keys) != label_rank) {
            continue;
        }

        found.push_back(RootCandidate{Angle(Integer(i), Integer(m)), Angle(Integer(i + 1), Integer(m))});
    }
    return found;
}

std::optional<std::vector<Angle>> theta_from_rotation_set(const LimbId &limb) {
    auto result = limb_data(limb);
    if (std::holds_alternative<StrictlyPreperiodic>(result)) {
        throw Error(ErrorKind::PreperiodicArgument,
                    limb.str() + " has a strictly preperiodic internal angle; no alpha cycle is defined");
    }
    const auto *data = std::get_if<LimbData>(&result);
    if (data == nullptr) {
        return std::nullopt;
    }
    int q = data->rho.den().convert_to<int>();
    int s1 = data->sign == Sign::Plus ? 2 * data->k - 1 : 2 * q - (2 * data->k - 1);
    return m3_two_cycle_rotation_set(data->rho, s1).points();
}

std::pair<Angle, Angle> critical_limb_root_rays(const Angle &theta, const Angle &theta_prime) {
    Angle third(1, 3);
    return {theta + third, theta_prime - third};
}

ThetaSet theta_of_limb(const LimbId &limb) {
    require_periodic(limb);
    auto candidates = root_search(limb);
    if (candidates.size() != 1) {
        std::string listed;
        for (const auto &c : candidates) {
            listed += " (" + c.theta.str() + ", " + c.theta_prime.str() + ")";
        }
        throw Error(ErrorKind::AmbiguousSearch,
                    std::to_string(candidates.size()) + " root candidates for " + limb.str() + ":" + listed);
    }

    ThetaSet out;
    out.limb = limb;
    out.root_theta = candidates.front().theta;
    out.root_theta_prime = candidates.front().theta_prime;
    auto [eta, eta_prime] = critical_limb_root_rays(out.root_theta, out.root_theta_prime);
    out.critical_gap = Arc{eta, eta_prime};

    Orbit orbit = orbit_md(limb.t0, 2);
    out.period = orbit.period;
    Angle a = eta;
    Angle b = eta_prime;
    for (const auto &label : orbit.points) {
        out.pairs.push_back(LabeledChord{Chord(a, b), label});
        out.angles.push_back(a);
        out.angles.push_back(b);
        a = map_md(a, 3);
        b = map_md(b, 3);
    }
    out.angles = sorted_unique(std::move(out.angles));

    if (auto route_a = theta_from_rotation_set(limb); route_a && *route_a != out.angles) {
        throw Error(ErrorKind::InternalNonUnique, "rotation-set and root-search angle sets differ for " + limb.str() +
                                                      ": {" + join(*route_a) + "} vs {" + join(out.angles) + "}");
    }
    return out;
}

std::pair<Angle, Angle> root_parameter_rays(const LimbId &limb) {
    ThetaSet theta = theta_of_limb(limb);
    return {theta.root_theta, theta.root_theta_prime};
}

std::vector<LabeledChord> alpha_chords(const LimbId &limb) {
    return theta_of_limb(limb).pairs;
}

bool limb_condition(const LimbId &l1, const LimbId &l2) {
    return theta_of_limb(l1).angles == negated(theta_of_limb(l2).angles);
}

bool balanced(const Angle &theta) {
    auto result = limb_data(LimbId{theta, Sign::Plus});
    const auto *data = std::get_if<LimbData>(&result);
    if (data == nullptr) {
        throw Error(ErrorKind::NotInRotationSet, theta.str() + " does not lie in a doubling rotation set");
    }
    int q = data->rho.den().convert_to<int>();
    if (q % 2 == 0) {
        throw Error(ErrorKind::EvenPeriod, theta.str() + " has even period " + std::to_string(q));
    }
    return data->k == (q + 1) / 2;
}

PreperiodicLimbRays PreperiodicLimbRays::from_parameter_angle(const Angle &theta) {
    Angle third(1, 3);
    PreperiodicLimbRays rays;
    rays.param_angle = theta;
    rays.cocritical_class = {theta};
    rays.critical_class = sorted_unique({theta - third, theta + third});
    rays.critical_value_class = {map_md(theta, 3)};
    return rays;
}

PreperiodicLimbRays preperiodic_limb_rays(const Angle &theta) {
    Orbit orbit = orbit_md(theta, 3);
    if (orbit.preperiod == 0 && orbit.period == 1) {
        throw Error(ErrorKind::InvalidArgument, theta.str() + " is fixed by tripling");
    }
    if (orbit.preperiod == 1) {
        throw Error(ErrorKind::CoPeriodicAngle,
                    theta.str() + " is co-periodic; its parameter ray lands at a parabolic root");
    }
    return PreperiodicLimbRays::from_parameter_angle(theta);
}

}  // namespace cubicmate
