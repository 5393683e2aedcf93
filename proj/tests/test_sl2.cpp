#include "sympbranch/sl2.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace sympbranch;

namespace {

SkewShape shape(std::vector<int> mu, std::vector<int> lambda)
{
    return SkewShape(DominantWeight(std::move(mu)), DominantWeight(std::move(lambda)));
}

SL2Decomposition decomp(std::initializer_list<std::pair<int, long long>> parts)
{
    SL2Decomposition d;
    for (const auto& [k, m] : parts) d.add(k, m);
    return d;
}

}  // namespace

TEST_CASE("irreducible characters")
{
    CHECK(sl2_char(0) == LaurentPoly::one());
    CHECK(sl2_char(1) == LaurentPoly::monomial(-1) + LaurentPoly::monomial(1));
    CHECK(sl2_char(2) == LaurentPoly::monomial(-2) + LaurentPoly::one() + LaurentPoly::monomial(2));
    for (int k = 0; k <= 6; ++k) CHECK(sl2_char(k).value_at_one() == k + 1);
    CHECK_THROWS_AS(sl2_char(-1), std::invalid_argument);
}

TEST_CASE("Clebsch-Gordan rule")
{
    CHECK(clebsch_gordan(1, 1) == decomp({{0, 1}, {2, 1}}));
    CHECK(clebsch_gordan(5, 0) == decomp({{5, 1}}));
    CHECK(clebsch_gordan(2, 1) == decomp({{1, 1}, {3, 1}}));

    // character product oracle
    for (int a = 0; a <= 5; ++a) {
        for (int b = 0; b <= 5; ++b) {
            CHECK(clebsch_gordan(a, b).character() == sl2_char(a) * sl2_char(b));
        }
    }
}

TEST_CASE("module of a branching shape")
{
    const auto m = l_module(shape({2, 0}, {2, 1, 0}));
    CHECK(m.factors() == std::vector<int>{0, 1, 0});
    CHECK(m.dimension() == 2);

    const auto big = l_module(shape({2, 0}, {4, 2, 0}));
    CHECK(big.factors() == std::vector<int>{2, 2, 0});
    CHECK(big.dimension() == 9);

    CHECK(l_module(SkewShape::zero(3)) == LModule({0, 0, 0}));
    CHECK(l_module(SkewShape::zero(3)).dimension() == 1);
    CHECK_THROWS_AS(l_module(shape({3}, {1, 0})), std::invalid_argument);
}

TEST_CASE("diagonal restriction")
{
    CHECK(restrict_to_diagonal(LModule({0, 1, 0})) == decomp({{1, 1}}));
    CHECK(restrict_to_diagonal(LModule({1, 1})) == decomp({{0, 1}, {2, 1}}));

    // the (2,2,0) decomposition, checked against its character first
    const auto dec = restrict_to_diagonal(LModule({2, 2, 0}));
    CHECK(dec.character() == sl2_char(2) * sl2_char(2) * sl2_char(0));
    CHECK(dec == decomp({{0, 1}, {2, 1}, {4, 1}}));
    CHECK(dec.dimension() == 9);

    // character and total dimension agree for every small factor vector
    for (int a = 0; a <= 4; ++a) {
        for (int b = 0; b <= 4; ++b) {
            for (int c = 0; c <= 4; ++c) {
                const LModule m({a, b, c});
                const auto d = restrict_to_diagonal(m);
                CHECK(d.dimension() == m.dimension());
                CHECK(d.character() == sl2_char(a) * sl2_char(b) * sl2_char(c));
            }
        }
    }
}

TEST_CASE("Cartan component")
{
    CHECK(cartan_component(1, 1) == 2);
    CHECK(cartan_component(0, 7) == 7);
    CHECK(cartan_component(3, 2) == 5);
}

TEST_CASE("multiplicity dimensions")
{
    CHECK(dim_mult_space(shape({2, 0}, {2, 1, 0})) == 2);
    CHECK(dim_mult_space(shape({2, 0}, {4, 2, 0})) == 9);
    CHECK(dim_mult_space(shape({3}, {1, 0})) == 0);
}

TEST_CASE("Cartan product of the section 3.2 pair cannot be surjective")
{
    const auto p = shape({2, 0}, {2, 1, 0});
    const auto q = shape({0, 0}, {2, 1, 0});
    const auto sum = add_shapes(p, q);
    CHECK(dim_mult_space(p) * dim_mult_space(q) < dim_mult_space(sum));
}
