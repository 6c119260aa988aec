#include <catch_amalgamated.hpp>

#include <set>

#include "eisen/root_systems.hpp"
#include "oracles.hpp"

using eisen::CartanLabel;
using eisen::ParabolicDatum;
using eisen::Root;

namespace
{

std::vector<CartanLabel> all_types_up_to(int max_rank)
{
    std::vector<CartanLabel> out;
    for (char t : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
        for (int n = 1; n <= max_rank; ++n) {
            if (eisen::is_valid_type(t, n)) {
                out.push_back({t, n});
            }
        }
    }
    return out;
}

std::size_t closed_form_count(CartanLabel l)
{
    const auto n = static_cast<std::size_t>(l.rank);
    switch (l.type) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
    default: return 0;
    }
}

bool contains(const std::vector<Root> &roots, const Root &r)
{
    return std::find(roots.begin(), roots.end(), r) != roots.end();
}

} // namespace

TEST_CASE("small root systems", "[roots]")
{
    CHECK(eisen::build_root_system('A', 1).positive_roots() == std::vector<Root>{{1}});
    CHECK(eisen::build_root_system('A', 2).positive_roots() == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}});
    // alpha = alpha_0 short, beta = alpha_1 long
    CHECK(eisen::build_root_system('G', 2).positive_roots() ==
          std::vector<Root>{{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
}

TEST_CASE("positive roots agree with the root-string oracle", "[roots][property]")
{
    for (const auto &l : all_types_up_to(8)) {
        const auto rs = eisen::build_root_system(l.type, l.rank);
        const auto expected = oracle::positive_roots_by_strings(rs.cartan_matrix());
        const std::set<Root> got(rs.positive_roots().begin(), rs.positive_roots().end());
        INFO(eisen::to_string(l));
        CHECK(got == expected);
        CHECK(rs.positive_roots().size() == closed_form_count(l));
        for (const auto &r : rs.positive_roots()) {
            CHECK(std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }));
        }
        CHECK(rs.simple_roots().size() == static_cast<std::size_t>(l.rank));
    }
}

TEST_CASE("Cartan matrices follow Bourbaki numbering", "[roots]")
{
    const auto b3 = eisen::build_root_system('B', 3);
    CHECK(b3.cartan(1, 2) == -2);
    CHECK(b3.cartan(2, 1) == -1);
    const auto c3 = eisen::build_root_system('C', 3);
    CHECK(c3.cartan(1, 2) == -1);
    CHECK(c3.cartan(2, 1) == -2);
    const auto g2 = eisen::build_root_system('G', 2);
    CHECK(g2.cartan(1, 0) == -3);
    CHECK(g2.cartan(0, 1) == -1);
    const auto e6 = eisen::build_root_system('E', 6);
    CHECK(e6.cartan(1, 3) == -1);
    CHECK(e6.cartan(1, 2) == 0);
}

TEST_CASE("positive roots are ordered by height then coefficients", "[roots]")
{
    for (const auto &l : all_types_up_to(6)) {
        const auto rs = eisen::build_root_system(l.type, l.rank);
        const auto &roots = rs.positive_roots();
        for (std::size_t k = 1; k < roots.size(); ++k) {
            const int h0 = std::accumulate(roots[k - 1].begin(), roots[k - 1].end(), 0);
            const int h1 = std::accumulate(roots[k].begin(), roots[k].end(), 0);
            CHECK((h0 < h1 || (h0 == h1 && roots[k - 1] < roots[k])));
        }
    }
}

TEST_CASE("invalid types", "[roots][errors]")
{
    CHECK_THROWS_AS(eisen::build_root_system('H', 2), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::build_root_system('A', 0), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::build_root_system('B', 1), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::build_root_system('C', 2), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::build_root_system('D', 3), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::build_root_system('E', 5), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::build_root_system('E', 9), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::build_root_system('F', 3), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::build_root_system('G', 3), eisen::InvalidTypeError);
    CHECK_THROWS_AS(eisen::enumerate_table({{'A', 2}, {'Q', 1}}), eisen::InvalidTypeError);
}

TEST_CASE("Weyl group orders", "[weyl]")
{
    const std::vector<std::pair<CartanLabel, std::uint64_t>> known{
        {{'A', 1}, 2},   {{'A', 2}, 6},   {{'A', 3}, 24},   {{'A', 4}, 120},  {{'B', 2}, 8},
        {{'B', 3}, 48},  {{'B', 4}, 384}, {{'C', 3}, 48},   {{'D', 4}, 192},  {{'F', 4}, 1152},
        {{'G', 2}, 12},  {{'E', 6}, 51840}, {{'E', 7}, 2903040}, {{'E', 8}, 696729600}};
    for (const auto &[l, order] : known) {
        INFO(eisen::to_string(l));
        CHECK(eisen::weyl_group_order(eisen::build_root_system(l.type, l.rank)) == order);
    }
}

TEST_CASE("generated Weyl orders match the degree product", "[weyl][property]")
{
    for (const auto &l : all_types_up_to(6)) {
        INFO(eisen::to_string(l));
        CHECK(eisen::weyl_group_order_generated(eisen::build_root_system(l.type, l.rank)) ==
              eisen::weyl_order_closed_form(l.type, l.rank));
    }
}

TEST_CASE("Weyl generation respects the element cap", "[weyl][errors]")
{
    const auto e6 = eisen::build_root_system('E', 6);
    CHECK_THROWS_AS(eisen::weyl_group_order_generated(e6, 1000), eisen::ResourceError);
    CHECK_THROWS_AS(eisen::weyl_group_order(eisen::build_root_system('A', 4), 100), eisen::ResourceError);
    CHECK(eisen::weyl_group_order(eisen::build_root_system('A', 4), 120) == 120);
}

TEST_CASE("Levi types", "[levi]")
{
    using V = std::vector<CartanLabel>;
    CHECK(eisen::levi_type({eisen::build_root_system('A', 2), 0}) == V{{'A', 1}});
    CHECK(eisen::levi_type({eisen::build_root_system('G', 2), 1}) == V{{'A', 1}});
    CHECK(eisen::levi_type({eisen::build_root_system('A', 3), 1}) == V{{'A', 1}, {'A', 1}});
    CHECK(eisen::levi_type({eisen::build_root_system('A', 1), 0}).empty());
    CHECK(eisen::levi_type({eisen::build_root_system('B', 4), 0}) == V{{'B', 3}});
    CHECK(eisen::levi_type({eisen::build_root_system('C', 4), 0}) == V{{'C', 3}});
    CHECK(eisen::levi_type({eisen::build_root_system('B', 3), 0}) == V{{'B', 2}});
    CHECK(eisen::levi_type({eisen::build_root_system('D', 5), 0}) == V{{'D', 4}});
    CHECK(eisen::levi_type({eisen::build_root_system('D', 5), 4}) == V{{'A', 4}});
    CHECK(eisen::levi_type({eisen::build_root_system('E', 7), 6}) == V{{'E', 6}});
    CHECK(eisen::levi_type({eisen::build_root_system('E', 8), 7}) == V{{'E', 7}});
    CHECK(eisen::levi_type({eisen::build_root_system('E', 6), 5}) == V{{'D', 5}});
    CHECK(eisen::levi_type({eisen::build_root_system('F', 4), 0}) == V{{'C', 3}});
    CHECK(eisen::levi_type({eisen::build_root_system('F', 4), 3}) == V{{'B', 3}});
    CHECK(eisen::levi_type({eisen::build_root_system('F', 4), 1}) == V{{'A', 1}, {'A', 2}});
    CHECK(eisen::levi_string(eisen::levi_type({eisen::build_root_system('A', 3), 1})) == "A1xA1");
    CHECK(eisen::levi_string({}) == "1");
}

TEST_CASE("parabolic datum validation", "[levi][errors]")
{
    const auto a2 = eisen::build_root_system('A', 2);
    CHECK_THROWS_AS(ParabolicDatum(a2, 2), eisen::PreconditionError);
    CHECK_THROWS_AS(ParabolicDatum(a2, -1), eisen::PreconditionError);
}

TEST_CASE("nilradical gradings", "[decomposition]")
{
    const auto a2 = eisen::nilradical_decomposition({eisen::build_root_system('A', 2), 0});
    CHECK(a2.m() == 1);
    CHECK(a2.dimensions() == std::vector<int>{2});

    const auto g2_long = eisen::nilradical_decomposition({eisen::build_root_system('G', 2), 1});
    CHECK(g2_long.dimensions() == std::vector<int>{4, 1});
    CHECK(g2_long.levels[0].roots == std::vector<Root>{{0, 1}, {1, 1}, {2, 1}, {3, 1}});
    CHECK(g2_long.levels[1].roots == std::vector<Root>{{3, 2}});
    CHECK(g2_long.levels[1].a == 2);

    const auto g2_short = eisen::nilradical_decomposition({eisen::build_root_system('G', 2), 0});
    CHECK(g2_short.dimensions() == std::vector<int>{2, 1, 2});

    const auto a1 = eisen::nilradical_decomposition({eisen::build_root_system('A', 1), 0});
    CHECK(a1.m() == 1);
    CHECK(a1.dimensions() == std::vector<int>{1});
}

TEST_CASE("grading invariants for every maximal parabolic up to rank 6", "[decomposition][property]")
{
    for (const auto &l : all_types_up_to(6)) {
        const auto rs = eisen::build_root_system(l.type, l.rank);
        for (int i = 0; i < l.rank; ++i) {
            const ParabolicDatum p(rs, i);
            const auto d = eisen::nilradical_decomposition(p);
            const auto levi = p.levi_roots();
            INFO(eisen::to_string(l) << " removed " << i);

            int total = 0;
            std::set<Root> seen;
            for (std::size_t j = 0; j < d.levels.size(); ++j) {
                CHECK(d.levels[j].a == static_cast<int>(j) + 1);
                CHECK(d.levels[j].dimension == static_cast<int>(d.levels[j].roots.size()));
                total += d.levels[j].dimension;
                for (const auto &r : d.levels[j].roots) {
                    CHECK(p.coefficient(r) == d.levels[j].a);
                    CHECK(seen.insert(r).second);
                }
            }
            CHECK(static_cast<std::size_t>(total) == rs.positive_roots().size() - levi.size());

            // Levi roots are closed under addition inside the positive roots.
            for (const auto &x : levi) {
                for (const auto &y : levi) {
                    Root sum(x.size());
                    for (std::size_t k = 0; k < x.size(); ++k) {
                        sum[k] = x[k] + y[k];
                    }
                    if (contains(rs.positive_roots(), sum)) {
                        CHECK(contains(levi, sum));
                    }
                }
            }

            // The Levi subsystem is the root system of levi_type.
            std::size_t levi_count = 0;
            for (const auto &c : eisen::levi_type(p)) {
                levi_count += closed_form_count(c);
            }
            CHECK(levi_count == levi.size());
        }
    }
}

TEST_CASE("decomposition tables", "[table]")
{
    CHECK(eisen::enumerate_table({}).empty());

    const auto a2 = eisen::enumerate_table({{'A', 2}});
    REQUIRE(a2.size() == 2);
    for (const auto &row : a2) {
        CHECK(row.m == 1);
        CHECK(row.dims == std::vector<int>{2});
        CHECK(row.a == std::vector<int>{1});
    }

    const auto g2 = eisen::enumerate_table({{'G', 2}});
    REQUIRE(g2.size() == 2);
    CHECK(g2[0].removed_index == 0);
    CHECK(g2[0].dims == std::vector<int>{2, 1, 2});
    CHECK(g2[0].a == std::vector<int>{1, 2, 3});
    CHECK(g2[1].dims == std::vector<int>{4, 1});

    const auto both = eisen::enumerate_table({{'G', 2}, {'A', 2}});
    REQUIRE(both.size() == 4);
    CHECK(both[0].system == CartanLabel{'G', 2});
    CHECK(both[3].system == CartanLabel{'A', 2});
    CHECK(both[3].removed_index == 1);
}
