#include <set>

#include "common.hpp"
#include "oracles.hpp"

using namespace hyperreg;

TEST_CASE("coordinate spread elements")
{
    const auto f = field_q(3);
    const Plane j0 = spread_element(f, CirclePoint::finite(elt(0)));
    const Plane jinf = spread_element(f, CirclePoint::infinity());
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 6; ++c) {
            CHECK(j0.at(r, c) == (c == r ? 1 : 0));
            CHECK(jinf.at(r, c) == (c == r + 3 ? 1 : 0));
        }
    }
}

TEST_CASE("spread elements are pairwise disjoint and determine their label")
{
    for (unsigned q : {2u, 3u}) {
        const auto f = field_q(q);
        const auto labels = circle_points(f);
        CHECK(labels.size() == q * q * q + 1);
        std::vector<Plane> planes;
        for (auto m : labels) {
            planes.push_back(spread_element(f, m));
        }
        std::set<PlaneKey> keys;
        for (std::size_t i = 0; i < planes.size(); ++i) {
            keys.insert(planes[i].key());
            for (std::size_t j = i + 1; j < planes.size(); ++j) {
                CHECK(meet_dim(f, planes[i], planes[j]) == -1);
            }
        }
        CHECK(keys.size() == planes.size());
    }
}

TEST_CASE("build_spread partitions the points")
{
    for (unsigned q : {2u, 3u, 4u, 5u}) {
        CAPTURE(q);
        const auto f = field_q(q);
        const auto s = build_spread(f);
        CHECK(s.size() == q * q * q + 1);
        std::vector<int> hits(s.size(), 0);
        std::uint64_t total = 0;
        for (const auto& p : all_points(f)) {
            ++hits[s.slot(s.locate(p))];
            ++total;
        }
        CHECK(total == (q * q * q + 1) * (q * q + q + 1));
        for (int h : hits) {
            CHECK(h == int(q * q + q + 1));
        }
    }
    CHECK(formulas::point_count(2) == 63);
    CHECK(formulas::point_count(3) == 364);
}

TEST_CASE("locate")
{
    const auto f = field_q(2);
    const auto s = build_spread(f);
    CHECK(s.locate(*ProjPoint::from_vector(f, {1, 1, 0, 0, 0, 0})) == CirclePoint::finite(elt(0)));
    CHECK(s.locate(*ProjPoint::from_vector(f, {0, 0, 0, 0, 1, 1})) == CirclePoint::infinity());

    // Agrees with exhaustive incidence search on all 63 points.
    for (const auto& p : all_points(f)) {
        std::vector<CirclePoint> containing;
        for (auto m : circle_points(f)) {
            if (incidence(f, p, s.element(m))) {
                containing.push_back(m);
            }
        }
        REQUIRE(containing.size() == 1);
        CHECK(s.locate(p) == containing.front());
    }
    // locate(J(m) points) = m
    for (unsigned q : {2u, 3u}) {
        const auto g = field_q(q);
        const auto t = build_spread(g);
        for (auto m : circle_points(g)) {
            for (const auto& p : plane_points(g, t.element(m))) {
                CHECK(t.locate(p) == m);
            }
        }
    }
}

TEST_CASE("spread elements match the oracle's point sets")
{
    for (unsigned p : {2u, 3u}) {
        const auto f = make_field(p, 1);
        const auto& m = f.cubic_modulus();
        oracle::PrimeCubic o{p, {m[0], m[1], m[2], m[3]}};
        const auto s = build_spread(f);
        for (unsigned label = 0; label <= f.order(); ++label) {
            const CirclePoint cp = label == f.order() ? CirclePoint::infinity() : CirclePoint::finite(elt(label));
            std::vector<std::uint32_t> codes;
            for (const auto& pt : plane_points(f, s.element(cp))) {
                codes.push_back(vector_code(f, pt.coords));
            }
            std::sort(codes.begin(), codes.end());
            CHECK(codes == oracle::spread_element_points(o, label));
        }
    }
}

TEST_CASE("slots and labels")
{
    const auto f = field_q(2);
    const auto s = build_spread(f);
    CHECK(s.slot(CirclePoint::infinity()) == 8);
    CHECK(s.at_slot(8).is_infinity());
    CHECK(s.at_slot(3) == CirclePoint::finite(elt(3)));
    CHECK(to_string(CirclePoint::infinity()) == "inf");
    CHECK(to_string(CirclePoint::finite(elt(5))) == "5");
    CHECK(CirclePoint::finite(elt(4095)) < CirclePoint::infinity());
}

TEST_CASE("field-reduction spread is regular")
{
    CHECK(check_regularity(build_spread(field_q(2))));
    CHECK(check_regularity(build_spread(field_q(3))));
}
