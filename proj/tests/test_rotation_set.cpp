#include <doctest.h>

#include <algorithm>
#include <functional>

#include "cubicmate/errors.hpp"
#include "cubicmate/limb.hpp"
#include "cubicmate/rotation_set.hpp"
#include "oracle.hpp"

using namespace cubicmate;

namespace {

Angle A(long long n, long long d) {
    return Angle(n, d);
}

std::vector<Angle> over(std::initializer_list<long long> nums, long long den) {
    std::vector<Angle> out;
    for (long long n : nums) {
        out.emplace_back(n, den);
    }
    return sorted_unique(out);
}

std::vector<Angle> from_oracle(const std::vector<oracle::Frac> &fs) {
    std::vector<Angle> out;
    for (const auto &f : fs) {
        out.emplace_back(f.n, f.d);
    }
    return sorted_unique(out);
}

ErrorKind kind_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("is_rotation_set") {
    CHECK(is_rotation_set(over({1, 2, 4}, 7), 2));
    CHECK(is_rotation_set(over({0, 1}, 2), 3));
    CHECK_FALSE(is_rotation_set(over({1, 2, 4, 8, 7, 5}, 9), 2));
    CHECK(kind_of([] { is_rotation_set(over({1, 2}, 7), 2); }) == ErrorKind::NotInvariant);
    CHECK(kind_of([] { is_rotation_set(over({0, 1}, 3), 3); }) == ErrorKind::NotInvariant);
}

TEST_CASE("rotation_number") {
    CHECK(rotation_number(RotationSet::from_points(over({5, 9, 10, 18, 20}, 31), 2)) == A(2, 5));
    CHECK(rotation_number(RotationSet::from_points(over({0, 1}, 2), 3)) == A(0, 1));
    CHECK(rotation_number(RotationSet::from_points(over({1, 2, 3, 6}, 8), 3)) == A(1, 2));
    auto X = RotationSet::from_points(over({1, 2, 4, 8, 7, 5}, 9), 2);
    CHECK_FALSE(X.rho().has_value());
    CHECK(kind_of([&] { rotation_number(X); }) == ErrorKind::NotRotationSet);
}

TEST_CASE("signature") {
    CHECK(signature(RotationSet::from_points(over({1, 2, 3, 6}, 8), 3)) == Signature{3, 4});
    CHECK(signature(RotationSet::from_points(over({0, 1}, 2), 3)) == Signature{1, 2});
    auto theta = theta_of_limb(LimbId::parse("18/31+"));
    CHECK(signature(RotationSet::from_points(theta.angles, 3)) == Signature{7, 10});
}

TEST_CASE("gaps and multiplicities") {
    auto X = RotationSet::from_points(over({0, 1}, 2), 3);
    auto majors = major_gaps(X);
    REQUIRE(majors.size() == 2);
    CHECK(majors[0].multiplicity == 1);
    CHECK(majors[1].multiplicity == 1);

    auto single = RotationSet::from_points({A(0, 1)}, 3);
    REQUIRE(single.gaps().size() == 1);
    CHECK(single.gaps()[0].multiplicity == 2);
    CHECK(single.gaps()[0].length == 1);
}

TEST_CASE("m2_rotation_set") {
    CHECK(m2_rotation_set(A(2, 5)).points() == over({5, 9, 10, 18, 20}, 31));
    CHECK(m2_rotation_set(A(3, 5)).points() == over({11, 13, 21, 22, 26}, 31));
    CHECK(m2_rotation_set(A(0, 1)).points() == std::vector<Angle>{A(0, 1)});
}

TEST_CASE("m2 rotation sets agree with the oracle and with negation") {
    for (int q = 1; q <= 9; q++) {
        auto expected = oracle::doubling_rotation_cycles(q);
        for (int p = 0; p < q; p++) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            auto X = m2_rotation_set(A(p, q));
            auto matches = std::count_if(expected.begin(), expected.end(), [&](const auto &e) {
                return e.first == std::make_pair<int64_t, int64_t>(p, q) && from_oracle(e.second) == X.points();
            });
            CHECK(matches == 1);
            CHECK(m2_rotation_set(-A(p, q)).points() == negated(X.points()));
        }
    }
}

TEST_CASE("m3_two_cycle_rotation_set") {
    CHECK(m3_two_cycle_rotation_set(A(1, 2), 3).points() == over({1, 2, 3, 6}, 8));
    CHECK(m3_two_cycle_rotation_set(A(0, 1), 1).points() == over({0, 1}, 2));
    CHECK(m3_two_cycle_rotation_set(A(1, 3), 5).points() == over({1, 2, 3, 6, 9, 18}, 26));
    CHECK(kind_of([] { m3_two_cycle_rotation_set(A(1, 3), 4); }) == ErrorKind::InvalidSignature);
    CHECK(kind_of([] { m3_two_cycle_rotation_set(A(1, 3), 7); }) == ErrorKind::InvalidSignature);
    CHECK(kind_of([] { m3_two_cycle_rotation_set(A(1, 3), -1); }) == ErrorKind::InvalidSignature);
}

TEST_CASE("two-cycle tripling sets: counting, oracle, gap uniqueness") {
    for (int q = 1; q <= 6; q++) {
        auto brute = oracle::tripling_two_cycle_sets(q);
        for (int p = 0; p < q; p++) {
            if (std::gcd(p, q) != 1) {
                continue;
            }
            std::vector<RotationSet> sets;
            for (int s1 = 1; s1 <= 2 * q - 1; s1 += 2) {
                auto X = m3_two_cycle_rotation_set(A(p, q), s1);
                CHECK(rotation_number(X) == A(p, q));
                CHECK(signature(X) == Signature{s1, 2 * q});
                int total = 0;
                for (const auto &g : major_gaps(X)) {
                    total += g.multiplicity;
                }
                CHECK(total == 2);
                auto hits = std::count_if(brute.begin(), brute.end(), [&](const oracle::TriplingSet &t) {
                    return t.rho == std::make_pair<int64_t, int64_t>(p, q) && t.s1 == s1;
                });
                CHECK(hits == 1);
                for (const auto &t : brute) {
                    if (t.rho == std::make_pair<int64_t, int64_t>(p, q) && t.s1 == s1) {
                        CHECK(from_oracle(t.points) == X.points());
                    }
                }
                sets.push_back(X);
            }
            CHECK(sets.size() == static_cast<size_t>(q));
            for (size_t i = 0; i < sets.size(); i++) {
                for (size_t j = i + 1; j < sets.size(); j++) {
                    CHECK_FALSE(sets[i] == sets[j]);
                    std::vector<Arc> gi;
                    std::vector<Arc> gj;
                    for (const auto &g : major_gaps(sets[i])) {
                        gi.push_back(g.arc);
                    }
                    for (const auto &g : major_gaps(sets[j])) {
                        gj.push_back(g.arc);
                    }
                    CHECK(gi != gj);
                }
            }
        }
        // Even signatures never occur.
        for (const auto &t : brute) {
            CHECK(t.s1 % 2 == 1);
        }
    }
}

TEST_CASE("decompose_cycles") {
    auto X = RotationSet::from_points(over({1, 2, 3, 6}, 8), 3);
    auto cs = decompose_cycles(X);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0] == over({1, 3}, 8));
    CHECK(cs[1] == over({2, 6}, 8));
    CHECK(superlinked(cs[0], cs[1]));

    auto Z = decompose_cycles(RotationSet::from_points(over({0, 1}, 2), 3));
    CHECK(Z == std::vector<std::vector<Angle>>{{A(0, 1)}, {A(1, 2)}});

    auto T = decompose_cycles(RotationSet::from_points(over({1, 2, 3, 6, 9, 18}, 26), 3));
    CHECK(T == std::vector<std::vector<Angle>>{over({1, 3, 9}, 26), over({2, 6, 18}, 26)});
}

TEST_CASE("cycles of two-cycle rotation sets are superlinked") {
    for (int q = 1; q <= 5; q++) {
        for (const auto &X : m3_two_cycle_rotation_sets(q)) {
            auto cs = decompose_cycles(X);
            REQUIRE(cs.size() == 2);
            CHECK(superlinked(cs[0], cs[1]));
        }
    }
    CHECK_FALSE(superlinked(over({1, 3}, 8), over({5, 7}, 8)));
}
