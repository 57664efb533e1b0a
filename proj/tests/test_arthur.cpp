#include <catch2/catch_amalgamated.hpp>

#include <branchlaw/arthur.hpp>

using namespace branchlaw;

namespace {
const CuspidalSymbol one("1", 1);
const CuspidalSymbol two("2", 1, "2^");
}  // namespace

TEST_CASE("products hold sorted unitary factors only", "[arthur]") {
    ArthurTypeRep x;
    x.add(SpehRep(one, 1, 3));
    x.add(SpehRep(one, 2, 1));
    x.add(SpehRep(one, 1, 3));
    CHECK(x.size() == 3);
    CHECK(x.dimension() == 8);
    CHECK(std::is_sorted(x.factors().begin(), x.factors().end()));
    CHECK_THROWS_AS(x.add(SpehRep(one, 1, 1, 2)), std::invalid_argument);

    CHECK(x.remove_one(SpehRep(one, 1, 3)));
    CHECK(x.remove_one(SpehRep(one, 1, 3)));
    CHECK_FALSE(x.remove_one(SpehRep(one, 1, 3)));
    CHECK(x.size() == 1);
}

TEST_CASE("cuspidal and generic products are recognized", "[arthur]") {
    ArthurTypeRep cusp;
    cusp.add(SpehRep(one, 1, 1));
    cusp.add(SpehRep(two, 1, 1, 0, Rat(1, 2)));
    CHECK(cusp.all_cuspidal());
    CHECK(cusp.generic());

    ArthurTypeRep gen;
    gen.add(SpehRep(one, 3, 1));
    CHECK(gen.generic());
    CHECK_FALSE(gen.all_cuspidal());

    ArthurTypeRep neither;
    neither.add(SpehRep(one, 1, 2));
    CHECK_FALSE(neither.generic());
    CHECK_FALSE(neither.all_cuspidal());

    CHECK(ArthurTypeRep().all_cuspidal());
    CHECK(ArthurTypeRep().generic());
}

TEST_CASE("the parameter form round-trips the factor list", "[arthur]") {
    ArthurTypeRep x;
    x.add(SpehRep(one, 2, 3));
    x.add(SpehRep(two, 1, 1));
    const ArthurParameter p = arthur_parameter(x);
    CHECK(p.dimension() == x.dimension());
    CHECK(arthur_type_rep(p) == x);
}

TEST_CASE("the combined shape stacks every factor's rows", "[arthur]") {
    ArthurTypeRep x;
    x.add(SpehRep(one, 1, 2));
    x.add(SpehRep(one, 2, 1));
    const Multisegment u = zelevinsky_union(x);
    Multisegment want;
    want.add(Segment(one, Rat(-1, 2), Rat(1, 2)));
    want.add(Segment(one, Rat(-1, 2), Rat(-1, 2)));
    want.add(Segment(one, Rat(1, 2), Rat(1, 2)));
    CHECK(u == want);
    CHECK(cuspidal_support(x) == support(u));
}

TEST_CASE("support helpers deduplicate and test membership", "[arthur]") {
    const Support sup{{one, Rat(0)}, {one, Rat(0)}, {one, Rat(1)}};
    CHECK(cuspidal_support_set(sup).size() == 2);
    CHECK(cupp_z_contains(sup, ShiftedCuspidal{one, Rat(1)}));
    CHECK(cupp_z_contains(sup, ShiftedCuspidal{one, Rat(2)}));
    CHECK_FALSE(cupp_z_contains(sup, ShiftedCuspidal{one, Rat(1, 2)}));
    CHECK_FALSE(cupp_z_contains(sup, ShiftedCuspidal{two, Rat(0)}));
}

TEST_CASE("levels add over factors and the highest derivative drops columns",
          "[arthur]") {
    ArthurTypeRep x;
    x.add(SpehRep(one, 2, 2));
    x.add(SpehRep(two, 3, 1));
    CHECK(level(x) == 5);

    const ArthurTypeRep dropped = highest_derivative(x);
    // The d = 1 factor vanishes; the other loses a column.
    REQUIRE(dropped.size() == 1);
    CHECK(dropped.factors()[0].m == 2);
    CHECK(dropped.factors()[0].d == 1);
}

TEST_CASE("dualizing swaps partner lines and negates twists", "[arthur]") {
    ArthurTypeRep x;
    x.add(SpehRep(two, 2, 3, 0, Rat(1, 2)));
    const ArthurTypeRep y = dualize(x);
    REQUIRE(y.size() == 1);
    CHECK(y.factors()[0].rho.name == "2^");
    CHECK(y.factors()[0].m == 2);
    CHECK(y.factors()[0].d == 3);
    CHECK(y.factors()[0].twist == Rat(-1, 2));
    CHECK(dualize(y) == x);
}

TEST_CASE("fresh lines avoid every name already in scope", "[arthur]") {
    ArthurTypeRep a, b;
    a.add(SpehRep(CuspidalSymbol("#f1", 1), 1, 1));
    b.add(SpehRep(CuspidalSymbol("#f3", 2, "#f9"), 1, 1));
    const CuspidalSymbol fresh = mint_fresh_symbol(2, a, b);
    CHECK(fresh.name == "#f2");
    CHECK(fresh.rank == 2);
    const CuspidalSymbol next = mint_fresh_symbol(1, {"#f1", "#f2"});
    CHECK(next.name == "#f3");
}
