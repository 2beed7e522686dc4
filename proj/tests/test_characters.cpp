#include "hurwitz/characters.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>

using namespace hurwitz;

namespace {

Partition ones(int n) { return Partition::rectangle(1, n); }

int fixed_points(const std::array<int, 3>& p)
{
    int n = 0;
    for (int i = 0; i < 3; ++i)
        n += p[static_cast<std::size_t>(i)] == i;
    return n;
}

}  // namespace

TEST_SUITE("characters")
{
    TEST_CASE("S(3) standard representation from permutation matrices")
    {
        // trace of the permutation matrix minus the trivial summand
        std::array<int, 3> p{0, 1, 2};
        std::map<Partition, int> by_class;
        do {
            std::array<bool, 3> seen{};
            std::vector<int> cycles;
            for (int i = 0; i < 3; ++i) {
                int len = 0;
                for (int j = i; !seen[static_cast<std::size_t>(j)]; j = p[static_cast<std::size_t>(j)]) {
                    seen[static_cast<std::size_t>(j)] = true;
                    ++len;
                }
                if (len)
                    cycles.push_back(len);
            }
            by_class[Partition(cycles)] = fixed_points(p) - 1;
        } while (std::next_permutation(p.begin(), p.end()));
        for (const auto& [mu, value] : by_class)
            CHECK(chi(Partition{2, 1}, mu, default_cache()) == value);
        CHECK(chi(Partition{2, 1}, Partition{2, 1}, default_cache()) == 0);
    }

    TEST_CASE("trivial, sign and small irreducibles")
    {
        CharCache cache;
        for (int d = 1; d <= 9; ++d) {
            for (const Partition& mu : enumerate_partitions(d)) {
                const int m1 = mu.multiplicity(1), m2 = mu.multiplicity(2);
                CHECK(chi(Partition{d}, mu, cache) == 1);
                CHECK(chi(ones(d), mu, cache) == (colength(mu) % 2 ? -1 : 1));
                if (d >= 2)
                    CHECK(chi(Partition{d - 1, 1}, mu, cache) == m1 - 1);
                if (d >= 4) {
                    CHECK(chi(Partition{d - 2, 2}, mu, cache) == m1 * (m1 - 1) / 2 + m2 - m1);
                    CHECK(chi(Partition{d - 2, 1, 1}, mu, cache) == (m1 - 1) * (m1 - 2) / 2 - m2);
                }
            }
        }
    }

    TEST_CASE("identity class gives the dimension")
    {
        CharCache cache;
        for (int d = 1; d <= 10; ++d)
            for (const Partition& lambda : enumerate_partitions(d))
                CHECK(chi(lambda, ones(d), cache) == dimension(lambda));
    }

    TEST_CASE("column and row orthogonality")
    {
        CharCache cache;
        for (int d = 1; d <= 7; ++d) {
            const auto& ps = enumerate_partitions(d);
            for (const Partition& mu : ps) {
                for (const Partition& nu : ps) {
                    Integer col = 0;
                    for (const Partition& lambda : ps)
                        col += chi(lambda, mu, cache) * chi(lambda, nu, cache);
                    CHECK(col == (mu == nu ? z(mu) : Integer(0)));
                }
            }
            for (const Partition& a : ps) {
                Rational row = 0;
                for (const Partition& mu : ps)
                    row += make_rational(chi(a, mu, cache) * chi(a, mu, cache), z(mu));
                CHECK(row == 1);
            }
        }
    }

    TEST_CASE("conjugation sign rule and integrality of central characters")
    {
        CharCache cache;
        for (int d = 1; d <= 8; ++d) {
            for (const Partition& lambda : enumerate_partitions(d)) {
                for (const Partition& mu : enumerate_partitions(d)) {
                    Integer sign = colength(mu) % 2 ? -1 : 1;
                    CHECK(chi(lambda, mu, cache) == sign * chi(conjugate(lambda), mu, cache));
                    CHECK_NOTHROW(central_character(mu, lambda, cache));
                }
            }
        }
    }

    TEST_CASE("central character and ratio examples")
    {
        CharCache cache;
        for (int d = 2; d <= 8; ++d) {
            for (int r = 2; r <= d; ++r)
                CHECK(central_character(Partition::cycle_class(r, d), Partition{d}, cache) ==
                      factorial(static_cast<unsigned>(d)) / (r * factorial(static_cast<unsigned>(d - r))));
            for (const Partition& lambda : enumerate_partitions(d))
                CHECK(central_character(ones(d), lambda, cache) == 1);
        }
        CHECK(central_character(Partition{2, 1}, Partition{2, 1}, cache) == 0);
        CHECK(character_ratio(Partition{2, 2}, Partition{2, 1, 1}, cache) == 0);
        CHECK(character_ratio(Partition{6}, Partition{3, 2, 1}, cache) == 1);
        for (int r = 2; r <= 5; ++r)
            CHECK(abs(character_ratio(Partition{6, 1}, Partition::cycle_class(r, 7), cache)) == make_rational(7 - r - 1, 6));
        CHECK_THROWS_AS(chi(Partition{2, 1}, Partition{2, 2}, cache), DomainError);
    }

    TEST_CASE("cache hits agree with fresh evaluation")
    {
        CharCache warm, cold;
        for (const Partition& lambda : enumerate_partitions(9))
            for (const Partition& mu : enumerate_partitions(9))
                chi(lambda, mu, warm);
        CHECK(warm.size() > 0);
        for (const Partition& lambda : enumerate_partitions(9)) {
            for (const Partition& mu : enumerate_partitions(9)) {
                auto hit = warm.find(lambda, mu);
                if (hit)
                    CHECK(*hit == chi(lambda, mu, cold));
            }
        }
    }

    TEST_CASE("degree ceiling")
    {
        CharCache small(6);
        CHECK_THROWS_AS(chi(Partition{7}, Partition{7}, small), DomainError);
    }
}
