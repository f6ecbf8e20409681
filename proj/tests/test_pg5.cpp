#include <random>
#include <set>
#include <unordered_set>

#include "common.hpp"
#include "oracles.hpp"

using namespace hyperreg;

namespace {

Vec6 unit(int i)
{
    Vec6 v{};
    v[i] = 1;
    return v;
}

ProjPoint pt(const FieldCtx& ctx, const Vec6& v) { return *ProjPoint::from_vector(ctx, v); }

// Random invertible 3x3 recombination of a plane's basis.
std::array<Vec6, 3> recombine(const FieldCtx& ctx, const Plane& pl, std::mt19937& rng)
{
    std::uniform_int_distribution<unsigned> coef(0, ctx.q() - 1);
    while (true) {
        std::array<Coord, 9> m{};
        for (auto& c : m) {
            c = Coord(coef(rng));
        }
        std::array<Vec6, 3> rows{};
        for (int r = 0; r < 3; ++r) {
            for (int j = 0; j < 6; ++j) {
                Coord v = 0;
                for (int k = 0; k < 3; ++k) {
                    v = ctx.base_add(v, ctx.base_mul(m[r * 3 + k], pl.at(k, j)));
                }
                rows[r][j] = v;
            }
        }
        std::array<Coord, 36> flat{};
        for (int r = 0; r < 3; ++r) {
            std::copy(rows[r].begin(), rows[r].end(), flat.begin() + r * 6);
        }
        if (rank_of(ctx, flat, 3) == 3) {
            return rows;
        }
    }
}

}  // namespace

TEST_CASE("points normalize to a leading 1")
{
    const auto f = field_q(5);
    const auto p = pt(f, {0, 3, 1, 4, 0, 2});
    CHECK(p.coords[0] == 0);
    CHECK(p.coords[1] == 1);
    CHECK(pt(f, p.coords) == p);  // idempotent
    CHECK(pt(f, {0, 1, 2, 3, 0, 4}) == pt(f, {0, 2, 4, 1, 0, 3}));
    CHECK_FALSE(ProjPoint::from_vector(f, Vec6{}).has_value());
}

TEST_CASE("plane_from_points")
{
    const auto f = field_q(3);
    const auto pl = plane_from_points(f, pt(f, unit(0)), pt(f, unit(1)), pt(f, unit(2)));
    for (int r = 0; r < 3; ++r) {
        CHECK(pl.row(r) == unit(r));
    }
    CHECK(pl.pivots() == std::array<int, 3>{0, 1, 2});

    const auto p = pt(f, {1, 2, 0, 0, 1, 1});
    CHECK_THROWS_AS(plane_from_points(f, p, p, pt(f, unit(5))), std::invalid_argument);
    // Collinear: third point on the line of the first two.
    const auto q1 = pt(f, unit(0)), q2 = pt(f, unit(3));
    CHECK_THROWS_AS(plane_from_points(f, q1, q2, pt(f, {1, 0, 0, 2, 0, 0})), std::invalid_argument);

    // Permutations give the same key.
    const auto a = pt(f, {1, 1, 0, 2, 0, 1}), b = pt(f, {0, 1, 2, 0, 1, 0}), c = pt(f, {0, 0, 1, 1, 1, 1});
    const auto k = plane_from_points(f, a, b, c).key();
    CHECK(plane_from_points(f, b, c, a).key() == k);
    CHECK(plane_from_points(f, c, a, b).key() == k);
    CHECK(plane_from_points(f, c, b, a).key() == k);
}

TEST_CASE("RREF key is invariant under basis recombination")
{
    std::mt19937 rng(12345);
    for (unsigned q : {2u, 3u, 4u, 5u, 7u}) {
        CAPTURE(q);
        const auto f = field_q(q);
        PlaneEnumeration planes(f);
        std::uniform_int_distribution<std::uint64_t> pick(0, planes.size() - 1);
        for (int trial = 0; trial < 1000; ++trial) {
            const Plane pl = planes.at(pick(rng));
            CHECK(Plane::span(f, recombine(f, pl, rng)).key() == pl.key());
        }
    }
}

TEST_CASE("incidence")
{
    const auto f = field_q(2);
    const auto spread = build_spread(f);
    const Plane& j0 = spread.element(CirclePoint::finite(elt(0)));
    const Plane& j1 = spread.element(CirclePoint::finite(elt(1)));
    for (const auto& p : plane_points(f, j0)) {
        CHECK(incidence(f, p, j0));
    }
    for (const auto& p : plane_points(f, j1)) {
        CHECK_FALSE(incidence(f, p, j0));
    }
    PlaneEnumeration planes(f);
    for (std::uint64_t i = 0; i < planes.size(); i += 97) {
        const Plane pl = planes.at(i);
        int count = 0;
        for (const auto& p : all_points(f)) {
            count += incidence(f, p, pl);
        }
        CHECK(count == 7);
    }
}

TEST_CASE("meet_dim")
{
    const auto f = field_q(3);
    const auto spread = build_spread(f);
    const Plane& a = spread.elements()[4];
    CHECK(meet_dim(f, a, a) == 2);
    CHECK(meet_dim(f, spread.elements()[0], spread.elements()[1]) == -1);
    CHECK(meet_dim(f, spread.elements()[3], spread.elements().back()) == -1);

    // Share exactly the rows e1, e2.
    const auto p = Plane::span(f, {unit(0), unit(1), unit(2)});
    const auto l = Plane::span(f, {unit(0), unit(1), unit(4)});
    CHECK(meet_dim(f, p, l) == 1);
    // Share only e1.
    const auto m = Plane::span(f, {unit(0), unit(3), unit(4)});
    CHECK(meet_dim(f, p, m) == 0);
    CHECK(meet_dim(f, l, m) == 1);  // e1 and e5
}

TEST_CASE("plane enumeration counts and distinctness")
{
    for (auto [q, expected] : {std::pair{2u, 1395ull}, std::pair{3u, 33880ull}}) {
        CAPTURE(q);
        const auto f = field_q(q);
        PlaneEnumeration planes(f);
        CHECK(planes.size() == expected);
        CHECK(planes.size() == formulas::total_planes(q));
        std::unordered_set<PlaneKey, PlaneKeyHash> keys;
        std::uint64_t n = 0;
        planes.for_each([&](const Plane& pl) {
            keys.insert(pl.key());
            ++n;
        });
        CHECK(n == expected);
        CHECK(keys.size() == expected);
    }
    CHECK(PlaneEnumeration(field_q(4)).size() == 376805);
    CHECK(PlaneEnumeration(field_q(5)).size() == 2558556);
}

TEST_CASE("enumeration matches the point-set oracle at q = 2")
{
    const auto f = field_q(2);
    const auto expected = oracle::planes_as_point_sets(2);
    REQUIRE(expected.size() == 1395);
    std::set<std::vector<std::uint32_t>> got;
    PlaneEnumeration(f).for_each([&](const Plane& pl) {
        std::vector<std::uint32_t> codes;
        for (const auto& p : plane_points(f, pl)) {
            codes.push_back(vector_code(f, p.coords));
        }
        std::sort(codes.begin(), codes.end());
        got.insert(codes);
    });
    CHECK(got == expected);
}

TEST_CASE("enumerated planes are in RREF, ordinals are stable under chunking")
{
    const auto f = field_q(3);
    PlaneEnumeration planes(f);
    std::vector<PlaneKey> whole;
    planes.for_each([&](const Plane& pl) { whole.push_back(pl.key()); });

    for (std::uint64_t i = 0; i < whole.size(); i += 331) {
        CHECK(planes.at(i).key() == whole[i]);
        PlaneKey k = whole[i];
        CHECK(rref_in_place(f, k, 3) == 3);
        CHECK(k == whole[i]);
    }

    std::vector<PlaneKey> chunked;
    const std::uint64_t cuts[] = {0, 1, 7, 1000, 5000, 5001, 20000, 33879, 33880};
    for (std::size_t c = 0; c + 1 < std::size(cuts); ++c) {
        planes.for_each(cuts[c], cuts[c + 1], [&](const Plane& pl) { chunked.push_back(pl.key()); });
    }
    CHECK(chunked == whole);
    CHECK_THROWS_AS(planes.at(planes.size()), std::out_of_range);
}

TEST_CASE("every plane has q^2+q+1 distinct points")
{
    for (unsigned q : {2u, 3u}) {
        const auto f = field_q(q);
        PlaneEnumeration planes(f);
        for (std::uint64_t i = 0; i < 100; ++i) {
            const Plane pl = planes.at(i * (planes.size() / 100));
            const auto pts = plane_points(f, pl);
            std::set<ProjPoint> distinct(pts.begin(), pts.end());
            CHECK(distinct.size() == q * q + q + 1);
            for (const auto& p : pts) {
                CHECK(pt(f, p.coords) == p);
                CHECK(incidence(f, p, pl));
            }
        }
    }
}

TEST_CASE("all_points")
{
    for (unsigned q : {2u, 3u, 4u}) {
        const auto f = field_q(q);
        const auto pts = all_points(f);
        CHECK(pts.size() == formulas::point_count(q));
        std::set<ProjPoint> distinct(pts.begin(), pts.end());
        CHECK(distinct.size() == pts.size());
        for (const auto& p : pts) {
            CHECK(pt(f, p.coords) == p);
        }
    }
}

TEST_CASE("plane key hex form")
{
    const auto f = field_q(16);
    PlaneEnumeration planes(f);
    const Plane pl = planes.at(planes.size() - 12345);
    const std::string hex = to_hex(pl.key());
    CHECK(hex.size() == 18);
    CHECK(plane_key_from_hex(hex) == pl.key());
    CHECK_THROWS_AS(plane_key_from_hex("12"), std::invalid_argument);
    CHECK_THROWS_AS(plane_key_from_hex("00000000000000000g"), std::invalid_argument);
}
