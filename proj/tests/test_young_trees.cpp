#include "hurwitz/characters.hpp"
#include "hurwitz/young_trees.hpp"

#include <doctest.h>

#include <set>

using namespace hurwitz;

namespace {

Partition ones(int n) { return Partition::rectangle(1, n); }

std::vector<Box> cells(const Partition& lambda)
{
    std::vector<Box> out;
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j)
            out.push_back({i, j});
    return out;
}

}  // namespace

TEST_SUITE("young_trees")
{
    TEST_CASE("induced graph only joins unblocked collinear boxes")
    {
        CHECK(induced_graph(Partition{3}, {{1, 1}, {1, 3}}).edges.size() == 1);
        BoxGraph path = induced_graph(Partition{3}, {{1, 1}, {1, 2}, {1, 3}});
        CHECK(path.edges.size() == 2);
        CHECK(path.is_tree());
        CHECK(induced_graph(Partition{2, 2}, {{1, 1}, {2, 2}}).edges.empty());
        CHECK_FALSE(induced_graph(Partition{2, 2}, {{1, 1}, {2, 2}}).is_tree());
        CHECK_FALSE(induced_graph(Partition{2, 2}, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}).is_tree());
        CHECK_THROWS_AS(induced_graph(Partition{2}, {{2, 1}}), DomainError);
        CHECK_THROWS_AS(induced_graph(Partition{2}, {{1, 1}, {1, 1}}), DomainError);
    }

    TEST_CASE("tree enumeration examples")
    {
        CHECK(enumerate_trees(Partition{3}, 2).size() == 3);
        CHECK(enumerate_trees(Partition{2, 2}, 2).size() == 4);
        for (int d = 1; d <= 6; ++d)
            CHECK(enumerate_trees(ones(d), d).size() == 1);
        CHECK_THROWS_AS(enumerate_trees(Partition{2}, 3), DomainError);
        CHECK_THROWS_AS(enumerate_trees(Partition{2}, 0), DomainError);
    }

    TEST_CASE("vert and weight")
    {
        for (const YoungTree& t : enumerate_trees(Partition{5}, 4)) {
            CHECK(vert(t) == 0);
            if (is_straight(t))
                CHECK(weight(t) == 6);
        }
        CHECK(vert(enumerate_trees(ones(5), 5).front()) == 4);

        YoungTree elbow{induced_graph(Partition{2, 2}, {{1, 1}, {2, 1}, {2, 2}})};
        REQUIRE(elbow.graph.is_tree());
        CHECK(vert(elbow) == 1);
        CHECK(weight(elbow) == 1);

        for (const YoungTree& t : enumerate_trees(Partition{3, 2}, 1)) {
            CHECK(vert(t) == 0);
            CHECK(weight(t) == 1);
        }
    }

    TEST_CASE("tree formula examples")
    {
        for (int d = 2; d <= 8; ++d) {
            for (int r = 2; r <= d; ++r) {
                Integer row = factorial(static_cast<unsigned>(d)) / (r * factorial(static_cast<unsigned>(d - r)));
                CHECK(f_via_trees(Partition{d}, r) == row);
                CHECK(f_via_trees(ones(d), r) == (r % 2 ? row : Integer(-row)));
            }
        }
        CHECK(f_via_trees(Partition{2, 2}, 2) == 0);
        CHECK(f_via_trees(Partition{3, 2, 1}, 1) == 6);
    }

    TEST_CASE("tree formula equals the central character for r >= 2")
    {
        CharCache cache;
        for (int d = 2; d <= 8; ++d)
            for (const Partition& lambda : enumerate_partitions(d))
                for (int r = 2; r <= d; ++r)
                    CHECK(f_via_trees(lambda, r) == central_character(Partition::cycle_class(r, d), lambda, cache));
    }

    TEST_CASE("closed forms agree with the tree formula")
    {
        CHECK(frobenius_f(2, Partition{2, 1}) == 0);
        CHECK(frobenius_f(2, Partition{6}) == 15);
        CHECK(frobenius_f(3, Partition{3}) == 2);
        CHECK(frobenius_f(4, Partition{4}) == 6);
        CHECK_THROWS_AS(frobenius_f(5, Partition{5}), DomainError);
        CharCache cache;
        for (int d = 2; d <= 10; ++d) {
            for (const Partition& lambda : enumerate_partitions(d)) {
                for (int r = 2; r <= std::min(4, d); ++r) {
                    Integer via_chars = central_character(Partition::cycle_class(r, d), lambda, cache);
                    CHECK(frobenius_f(r, lambda) == via_chars);
                    if (d <= 8)
                        CHECK(frobenius_f(r, lambda) == f_via_trees(lambda, r));
                }
            }
        }
    }

    TEST_CASE("straightening is injective onto the hook")
    {
        CHECK(straighten(Partition{3, 3}, {1, 2}) == Box{1, 2});
        CHECK(straighten(Partition{3, 3}, {2, 1}) == Box{2, 1});
        CHECK(straighten(Partition{3, 3}, {2, 2}) == Box{1, 4});
        CHECK(straighten(Partition{3, 3}, {2, 3}) == Box{1, 5});
        CHECK_THROWS_AS(straighten(Partition{3, 3}, {3, 1}), DomainError);
        for (int d = 1; d <= 8; ++d) {
            for (const Partition& lambda : enumerate_partitions(d)) {
                Partition hook = straightened_shape(lambda);
                CHECK(hook == Partition{d + 1 - lambda.length()} + ones(lambda.length() - 1));
                std::set<Box> image;
                for (const Box& b : cells(lambda)) {
                    Box s = straighten(lambda, b);
                    CHECK_NOTHROW(require_inside(hook, s));
                    image.insert(s);
                }
                CHECK(image.size() == static_cast<std::size_t>(d));
            }
        }
    }

    TEST_CASE("straight tree counts")
    {
        CHECK(count_straight_trees(Partition{2, 2}, 2) == 4);
        for (int d = 2; d <= 8; ++d)
            for (int r = 2; r <= d; ++r)
                CHECK(count_straight_trees(Partition{d}, r) == binomial(d, r));

        for (int d = 1; d <= 8; ++d) {
            for (const Partition& lambda : enumerate_partitions(d)) {
                for (int r = 1; r <= d; ++r) {
                    auto trees = enumerate_trees(lambda, r);
                    Integer straight = 0;
                    for (const YoungTree& t : trees) {
                        if (is_straight(t))
                            ++straight;
                        else
                            CHECK(weight(t) <= factorial(static_cast<unsigned>(r - 2)));
                    }
                    CHECK(straight == count_straight_trees(lambda, r));
                    CHECK(Integer(static_cast<unsigned long>(trees.size())) <= binomial(d, r));
                    CHECK(count_straight_trees(lambda, r) <= count_straight_trees(straightened_shape(lambda), r));
                }
            }
        }
    }

    TEST_CASE("straight count bound with a short first row and column")
    {
        // lambda_1 <= d-3, lambda'_1 <= 4 and 5 <= r <= d-3: the straight count stays below C(d-3, r)
        for (int d = 8; d <= 12; ++d) {
            for (const Partition& lambda : enumerate_partitions(d)) {
                if (lambda[0] > d - 3 || lambda.length() > 4)
                    continue;
                for (int r = 5; r <= d - 3; ++r)
                    CHECK(count_straight_trees(lambda, r) <= binomial(d - 3, r));
            }
        }
    }
}
