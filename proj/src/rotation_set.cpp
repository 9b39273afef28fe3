#include "cubicmate/rotation_set.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "cubicmate/errors.hpp"
#include "residue.hpp"

namespace cubicmate {

namespace detail {

std::vector<std::vector<Residue>> exact_period_cycles(int d, int q) {
    Residue modulus = cycle_modulus(d, q);
    std::vector<bool> visited(modulus, false);
    std::vector<std::vector<Residue>> cycles;
    for (Residue x = 0; x < modulus; x++) {
        if (visited[x]) {
            continue;
        }
        std::vector<Residue> orbit;
        Residue y = x;
        do {
            visited[y] = true;
            orbit.push_back(y);
            y = (y * static_cast<Residue>(d)) % modulus;
        } while (y != x);
        if (static_cast<int>(orbit.size()) == q) {
            cycles.push_back(std::move(orbit));
        }
    }
    return cycles;
}

std::optional<Angle> cycle_rotation_number(const std::vector<Residue> &cycle, int d, Residue modulus) {
    std::vector<Residue> sorted = cycle;
    std::sort(sorted.begin(), sorted.end());
    size_t n = sorted.size();

    Residue total = 0;
    if (n == 1) {
        total = static_cast<Residue>(d - 1);
    } else {
        for (size_t i = 0; i < n; i++) {
            Residue gap = i + 1 < n ? sorted[i + 1] - sorted[i] : modulus - sorted[i] + sorted[0];
            total += (static_cast<Residue>(d) * gap) / modulus;
        }
    }
    if (total < static_cast<Residue>(d - 1)) {
        return std::nullopt;
    }

    auto index_of = [&](Residue v) {
        return static_cast<size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };
    size_t advance = 0;
    for (size_t i = 0; i < n; i++) {
        size_t j = index_of((sorted[i] * static_cast<Residue>(d)) % modulus);
        size_t s = (j + n - i) % n;
        if (i == 0) {
            advance = s;
        } else if (s != advance) {
            throw Error(ErrorKind::NotRotationSet, "gap criterion holds but points advance unevenly");
        }
    }
    return Angle(static_cast<long long>(advance), static_cast<long long>(n));
}

std::vector<Angle> to_angles(const std::vector<Residue> &residues, Residue modulus) {
    std::vector<Angle> out;
    out.reserve(residues.size());
    for (Residue r : residues) {
        out.emplace_back(Integer(r), Integer(modulus));
    }
    return sorted_unique(std::move(out));
}

}  // namespace detail

namespace {

int as_int(const Rational &r) {
    return boost::multiprecision::numerator(r).convert_to<int>() / boost::multiprecision::denominator(r).convert_to<int>();
}

int denominator_of(const Angle &rho) {
    if (rho.den() > 64) {
        throw Error(ErrorKind::InvalidArgument, "rotation number denominator too large: " + rho.str());
    }
    return rho.den().convert_to<int>();
}

}  // namespace

RotationSet RotationSet::from_points(std::vector<Angle> points, int degree) {
    if (degree < 2) {
        throw Error(ErrorKind::InvalidArgument, "degree must be at least 2");
    }
    points = sorted_unique(std::move(points));
    if (points.empty()) {
        throw Error(ErrorKind::InvalidArgument, "empty point set");
    }
    size_t n = points.size();

    std::vector<size_t> image(n);
    std::vector<bool> hit(n, false);
    for (size_t i = 0; i < n; i++) {
        Angle y = map_md(points[i], degree);
        auto it = std::lower_bound(points.begin(), points.end(), y);
        if (it == points.end() || *it != y) {
            throw Error(ErrorKind::NotInvariant, points[i].str() + " maps to " + y.str() + " outside the set");
        }
        image[i] = static_cast<size_t>(it - points.begin());
        hit[image[i]] = true;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
        throw Error(ErrorKind::NotInvariant, "m_d does not map the set onto itself");
    }

    RotationSet X;
    X.degree_ = degree;
    X.points_ = std::move(points);

    int total = 0;
    for (size_t i = 0; i < n; i++) {
        size_t j = (i + 1) % n;
        Arc arc{X.points_[i], X.points_[j]};
        Rational length = arc_length(arc);
        Arc image_arc{X.points_[image[i]], X.points_[image[j]]};
        int multiplicity = as_int(Rational(degree) * length - arc_length(image_arc));
        total += multiplicity;
        X.gaps_.push_back(Gap{arc, length, multiplicity});
    }

    if (total >= degree - 1) {
        size_t advance = image[0];
        for (size_t i = 1; i < n; i++) {
            if ((image[i] + n - i) % n != advance) {
                throw Error(ErrorKind::NotRotationSet, "gap criterion holds but points advance unevenly");
            }
        }
        X.rho_ = Angle(static_cast<long long>(advance), static_cast<long long>(n));
    }
    return X;
}

bool RotationSet::contains(const Angle &x) const {
    return std::binary_search(points_.begin(), points_.end(), x);
}

RotationSet RotationSet::negated() const {
    return from_points(cubicmate::negated(points_), degree_);
}

bool is_rotation_set(const std::vector<Angle> &points, int d) {
    return RotationSet::from_points(points, d).is_rotation_set();
}

Angle rotation_number(const RotationSet &X) {
    if (!X.rho()) {
        throw Error(ErrorKind::NotRotationSet, "{" + join(X.points()) + "} has no rotation number");
    }
    return *X.rho();
}

Signature signature(const RotationSet &X) {
    Angle half(1, 2);
    int below = static_cast<int>(std::count_if(X.points().begin(), X.points().end(), [&](const Angle &a) { return a < half; }));
    return Signature{below, static_cast<int>(X.size())};
}

std::vector<Gap> major_gaps(const RotationSet &X) {
    std::vector<Gap> out;
    for (const auto &gap : X.gaps()) {
        if (gap.is_major()) {
            out.push_back(gap);
        }
    }
    return out;
}

RotationSet m2_rotation_set(const Angle &rho) {
    int q = denominator_of(rho);
    detail::Residue modulus = detail::cycle_modulus(2, q);
    std::vector<RotationSet> hits;
    for (const auto &cycle : detail::exact_period_cycles(2, q)) {
        auto r = detail::cycle_rotation_number(cycle, 2, modulus);
        if (r && *r == rho) {
            hits.push_back(RotationSet::from_points(detail::to_angles(cycle, modulus), 2));
        }
    }
    if (hits.size() != 1) {
        throw Error(ErrorKind::InternalNonUnique,
                    std::to_string(hits.size()) + " doubling rotation sets with rotation number " + rho.str());
    }
    return hits.front();
}

std::vector<RotationSet> m3_two_cycle_rotation_sets(int q) {
    static std::mutex mutex;
    static std::map<int, std::vector<RotationSet>> memo;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = memo.find(q);
        if (it != memo.end()) {
            return it->second;
        }
    }

    detail::Residue modulus = detail::cycle_modulus(3, q);
    // A sub-cycle of a rotation set is itself a rotation set with the same
    // rotation number, so only rotation cycles can pair up.
    std::vector<std::pair<Angle, std::vector<Angle>>> rotation_cycles;
    for (const auto &cycle : detail::exact_period_cycles(3, q)) {
        if (auto r = detail::cycle_rotation_number(cycle, 3, modulus)) {
            rotation_cycles.emplace_back(*r, detail::to_angles(cycle, modulus));
        }
    }

    std::vector<RotationSet> found;
    for (size_t i = 0; i < rotation_cycles.size(); i++) {
        for (size_t j = i + 1; j < rotation_cycles.size(); j++) {
            if (rotation_cycles[i].first != rotation_cycles[j].first) {
                continue;
            }
            std::vector<Angle> pts = rotation_cycles[i].second;
            pts.insert(pts.end(), rotation_cycles[j].second.begin(), rotation_cycles[j].second.end());
            RotationSet X = RotationSet::from_points(std::move(pts), 3);
            if (X.is_rotation_set()) {
                found.push_back(std::move(X));
            }
        }
    }
    std::sort(found.begin(), found.end(), [](const RotationSet &a, const RotationSet &b) {
        if (*a.rho() != *b.rho()) {
            return *a.rho() < *b.rho();
        }
        return signature(a).s1 < signature(b).s1;
    });

    std::lock_guard<std::mutex> lock(mutex);
    memo.emplace(q, found);
    return found;
}

RotationSet m3_two_cycle_rotation_set(const Angle &rho, int s1) {
    int q = denominator_of(rho);
    if (s1 % 2 == 0 || s1 < 1 || s1 > 2 * q - 1) {
        throw Error(ErrorKind::InvalidSignature,
                    "s1 = " + std::to_string(s1) + " for rotation number " + rho.str() + " (need odd, 1.." +
                        std::to_string(2 * q - 1) + ")");
    }
    std::vector<RotationSet> hits;
    for (const auto &X : m3_two_cycle_rotation_sets(q)) {
        if (*X.rho() == rho && signature(X).s1 == s1) {
            hits.push_back(X);
        }
    }
    if (hits.size() != 1) {
        throw Error(ErrorKind::InternalNonUnique, std::to_string(hits.size()) +
                                                      " two-cycle tripling rotation sets with rotation number " +
                                                      rho.str() + " and s1 = " + std::to_string(s1));
    }
    return hits.front();
}

std::vector<std::vector<Angle>> decompose_cycles(const RotationSet &X) {
    const auto &pts = X.points();
    std::vector<bool> visited(pts.size(), false);
    std::vector<std::vector<Angle>> cycles;
    for (size_t i = 0; i < pts.size(); i++) {
        if (visited[i]) {
            continue;
        }
        std::vector<Angle> cycle;
        Angle x = pts[i];
        do {
            auto k = static_cast<size_t>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
            visited[k] = true;
            cycle.push_back(x);
            x = map_md(x, X.degree());
        } while (x != pts[i]);
        cycles.push_back(sorted_unique(std::move(cycle)));
    }

    if (X.degree() == 3 && X.is_rotation_set() && cycles.size() == 2 && !superlinked(cycles[0], cycles[1])) {
        throw Error(ErrorKind::NotRotationSet, "cycles of a two-cycle rotation set are not superlinked");
    }
    return cycles;
}

namespace {

bool every_gap_meets(const std::vector<Angle> &c, const std::vector<Angle> &other) {
    for (size_t i = 0; i < c.size(); i++) {
        Arc gap{c[i], c[(i + 1) % c.size()]};
        bool meets = std::any_of(other.begin(), other.end(), [&](const Angle &x) { return in_arc(x, gap); });
        if (!meets) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool superlinked(const std::vector<Angle> &c1, const std::vector<Angle> &c2) {
    auto a = sorted_unique(c1);
    auto b = sorted_unique(c2);
    return every_gap_meets(a, b) && every_gap_meets(b, a);
}

}  // namespace cubicmate
