#include <catch2/catch_amalgamated.hpp>

#include <branchlaw/ext_indices.hpp>

#include "oracles.hpp"

using namespace branchlaw;

namespace {
const CuspidalSymbol one("1", 1);
const CuspidalSymbol sigma("s", 1);

ArthurTypeRep rep(std::initializer_list<SpehRep> fs) {
    ArthurTypeRep x;
    for (const SpehRep& f : fs) x.add(f);
    return x;
}

// The one-parameter family whose candidate set was frozen from the
// enumeration oracle: first side u(1,e), u(e-2,1), and a second line's
// character; second side u(e-1,1), u(1,e-1).
ArthurTypeRep family_m(int e) {
    return rep({SpehRep(one, 1, e), SpehRep(one, e - 2, 1), SpehRep(sigma, 1, 1)});
}
ArthurTypeRep family_n(int e) {
    return rep({SpehRep(one, e - 1, 1), SpehRep(one, 1, e - 1)});
}

std::vector<oracle::PlainFactor> plain(const ArthurTypeRep& x) {
    std::vector<oracle::PlainFactor> out;
    for (const SpehRep& f : x)
        out.push_back({f.rho.name, f.rho.rank, f.twist, f.m, f.d});
    return out;
}
}  // namespace

TEST_CASE("candidate degrees match the grid oracle on the frozen family",
          "[ext-indices]") {
    const std::map<int, std::set<std::int64_t>> frozen = {
        {3, {2, 3}}, {4, {2, 4}}, {5, {2, 5}}};
    for (const auto& [e, expected] : frozen) {
        const ArthurTypeRep m = family_m(e);
        const ArthurTypeRep n = family_n(e);
        REQUIRE(m.dimension() == n.dimension() + 1);
        CHECK(candidate_derivative_indices(m, n) == expected);
        CHECK(oracle::candidate_indices(plain(m), plain(n)) == expected);
    }
}

TEST_CASE("candidate degrees match the grid oracle on small random products",
          "[ext-indices]") {
    // Every corank-one pair drawn from a small hand-picked pool.
    const std::vector<ArthurTypeRep> pool = {
        rep({SpehRep(one, 1, 2)}),
        rep({SpehRep(one, 2, 1)}),
        rep({SpehRep(one, 1, 3)}),
        rep({SpehRep(one, 2, 2)}),
        rep({SpehRep(one, 1, 1), SpehRep(one, 1, 2)}),
        rep({SpehRep(one, 1, 1), SpehRep(one, 1, 1), SpehRep(one, 1, 1)}),
        rep({SpehRep(one, 1, 1)}),
        rep({SpehRep(sigma, 1, 1), SpehRep(one, 1, 2)}),
    };
    for (const ArthurTypeRep& m : pool)
        for (const ArthurTypeRep& n : pool) {
            if (m.dimension() != n.dimension() + 1) continue;
            const auto got = candidate_derivative_indices(m, n);
            const auto want = oracle::candidate_indices(plain(m), plain(n));
            CHECK(got == want);
        }
}

TEST_CASE("the candidate filter rejects wrong coranks", "[ext-indices]") {
    CHECK_THROWS_AS(candidate_derivative_indices(rep({SpehRep(one, 1, 2)}),
                                                 rep({SpehRep(one, 1, 2)})),
                    DimensionError);
}

TEST_CASE("two generic sides force the unconditional degree", "[ext-indices]") {
    const auto idx = generic_ext_index(rep({SpehRep(one, 2, 1)}),
                                       rep({SpehRep(one, 1, 1)}));
    REQUIRE(idx);
    CHECK(*idx == 2);

    // The candidate filter never rules the forced degree out.
    const auto cands = candidate_derivative_indices(rep({SpehRep(one, 2, 1)}),
                                                    rep({SpehRep(one, 1, 1)}));
    CHECK(cands.count(*idx) == 1);
}

TEST_CASE("a generic first side needs the right tempered complement",
          "[ext-indices]") {
    // Second side u(1,2): its column drop leaves the character at zero, whose
    // generic envelope must sit inside the first side.
    const ArthurTypeRep n = rep({SpehRep(one, 1, 2)});

    const auto hit = generic_ext_index(
        rep({SpehRep(one, 1, 1), SpehRep(one, 1, 1), SpehRep(one, 1, 1)}), n);
    REQUIRE(hit);
    CHECK(*hit == 2);  // one more than the second side's level

    // A single long row is generic but does not contain the envelope.
    CHECK_FALSE(generic_ext_index(rep({SpehRep(one, 3, 1)}), n).has_value());

    // Containment with a twisted leftover factor is not tempered.
    CHECK_FALSE(generic_ext_index(
                    rep({SpehRep(one, 1, 1), SpehRep(one, 1, 1, 0, Rat(1)),
                         SpehRep(one, 1, 1, 0, Rat(-1))}),
                    n)
                    .has_value());
}

TEST_CASE("a generic second side mirrors the containment test", "[ext-indices]") {
    const auto idx = generic_ext_index(rep({SpehRep(one, 1, 3)}),
                                       rep({SpehRep(one, 2, 1)}));
    REQUIRE(idx);
    CHECK(*idx == 1);  // the first side's level
}

TEST_CASE("the closed forms need a generic side and the right corank",
          "[ext-indices]") {
    CHECK_THROWS_AS(generic_ext_index(rep({SpehRep(one, 1, 3)}),
                                      rep({SpehRep(one, 1, 2)})),
                    std::domain_error);
    CHECK_THROWS_AS(generic_ext_index(rep({SpehRep(one, 2, 1)}),
                                      rep({SpehRep(one, 2, 1)})),
                    DimensionError);
}
