#include "cubicmate/angle.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/integer/common_factor_rt.hpp>

#include "cubicmate/errors.hpp"

namespace cubicmate {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotInvariant:
            return "NotInvariant";
        case ErrorKind::NotRotationSet:
            return "NotRotationSet";
        case ErrorKind::InvalidSignature:
            return "InvalidSignature";
        case ErrorKind::InternalNonUnique:
            return "InternalNonUnique";
        case ErrorKind::PreperiodicArgument:
            return "PreperiodicArgument";
        case ErrorKind::AmbiguousSearch:
            return "AmbiguousSearch";
        case ErrorKind::NotInRotationSet:
            return "NotInRotationSet";
        case ErrorKind::EvenPeriod:
            return "EvenPeriod";
        case ErrorKind::CoPeriodicAngle:
            return "CoPeriodicAngle";
        case ErrorKind::InconsistentLamination:
            return "InconsistentLamination";
        case ErrorKind::MissingMarkers:
            return "MissingMarkers";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
    }
    return "Unknown";
}

Angle::Angle(Integer num, Integer den) {
    if (den == 0) {
        throw std::invalid_argument("angle with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    num %= den;
    if (num < 0) {
        num += den;
    }
    Integer g = boost::multiprecision::gcd(num, den);
    if (g == 0) {
        g = 1;
    }
    num_ = num / g;
    den_ = den / g;
    if (num_ == 0) {
        den_ = 1;
    }
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw std::invalid_argument("malformed angle '" + std::string(whole) + "'");
    }
    return Integer(std::string(digits));
}

}  // namespace

Angle Angle::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    Integer num;
    Integer den = 1;
    if (slash == std::string_view::npos) {
        num = parse_integer(body, text);
    } else {
        num = parse_integer(body.substr(0, slash), text);
        den = parse_integer(body.substr(slash + 1), text);
        if (den == 0) {
            throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        }
    }
    return Angle(negative ? Integer(-num) : num, den);
}

std::string Angle::str() const {
    if (num_ == 0) {
        return "0";
    }
    return num_.str() + "/" + den_.str();
}

Angle Angle::operator-() const {
    return Angle(-num_, den_);
}

Angle operator+(const Angle &a, const Angle &b) {
    return Angle(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Angle operator-(const Angle &a, const Angle &b) {
    return Angle(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

std::strong_ordering operator<=>(const Angle &a, const Angle &b) {
    Integer lhs = a.num_ * b.den_;
    Integer rhs = b.num_ * a.den_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

Angle map_md(const Angle &a, int d) {
    return Angle(a.num() * d, a.den());
}

std::vector<Angle> preimages_md(const Angle &a, int d) {
    std::vector<Angle> out;
    out.reserve(d);
    for (int j = 0; j < d; j++) {
        out.emplace_back(a.num() + j * a.den(), a.den() * d);
    }
    return out;
}

Angle ccw_offset(const Angle &from, const Angle &x) {
    return x - from;
}

Rational arc_length(const Arc &arc) {
    if (arc.start == arc.end) {
        return Rational(1);
    }
    return ccw_offset(arc.start, arc.end).value();
}

bool in_arc(const Angle &x, const Arc &arc) {
    if (x == arc.start) {
        return false;
    }
    if (arc.start == arc.end) {
        return true;
    }
    return ccw_offset(arc.start, x) < ccw_offset(arc.start, arc.end);
}

Chord::Chord(Angle a, Angle b) {
    if (a == b) {
        throw Error(ErrorKind::InvalidArgument, "chord endpoints coincide at " + a.str());
    }
    if (b < a) {
        std::swap(a, b);
    }
    first_ = std::move(a);
    second_ = std::move(b);
}

bool chords_linked(const Chord &c1, const Chord &c2) {
    if (c1.contains(c2.first()) || c1.contains(c2.second())) {
        return false;
    }
    Arc side{c1.first(), c1.second()};
    return in_arc(c2.first(), side) != in_arc(c2.second(), side);
}

Orbit orbit_md(const Angle &a, int d) {
    std::map<Angle, int> seen;
    Orbit orbit;
    Angle x = a;
    while (true) {
        auto [it, inserted] = seen.emplace(x, static_cast<int>(orbit.points.size()));
        if (!inserted) {
            orbit.preperiod = it->second;
            orbit.period = static_cast<int>(orbit.points.size()) - it->second;
            return orbit;
        }
        orbit.points.push_back(x);
        x = map_md(x, d);
    }
}

std::vector<Angle> sorted_unique(std::vector<Angle> angles) {
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
    return angles;
}

std::vector<Angle> negated(const std::vector<Angle> &angles) {
    std::vector<Angle> out;
    out.reserve(angles.size());
    for (const auto &a : angles) {
        out.push_back(-a);
    }
    return sorted_unique(std::move(out));
}

std::string join(const std::vector<Angle> &angles, std::string_view sep) {
    std::ostringstream out;
    for (size_t k = 0; k < angles.size(); k++) {
        if (k) {
            out << sep;
        }
        out << angles[k].str();
    }
    return out.str();
}

}  // namespace cubicmate
