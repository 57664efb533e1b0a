#include <catch2/catch_amalgamated.hpp>

#include <branchlaw/relevance.hpp>

using namespace branchlaw;

namespace {
const CuspidalSymbol one("1", 1);

ArthurTypeRep rep(std::initializer_list<SpehRep> fs) {
    ArthurTypeRep x;
    for (const SpehRep& f : fs) x.add(f);
    return x;
}
}  // namespace

TEST_CASE("a factor pairs with its neighbor of adjacent column count", "[relevance]") {
    const ArthurTypeRep m = rep({SpehRep(one, 1, 2)});
    const ArthurTypeRep n = rep({SpehRep(one, 1, 3)});
    const auto w = relevant(m, n);
    REQUIRE(w);
    REQUIRE(w->q_pairs.size() == 1);
    CHECK(w->q_pairs[0].first.d == 2);
    CHECK(w->q_pairs[0].second.d == 3);
    CHECK(w->p_pairs.empty());
    CHECK(validate_witness(*w, m, n));

    const auto back = relevant(n, m);
    REQUIRE(back);
    CHECK(back->p_pairs.size() == 1);
    CHECK(back->q_pairs.empty());
}

TEST_CASE("pairing requires equal row count, line, and twist", "[relevance]") {
    CHECK_FALSE(relevant(rep({SpehRep(one, 1, 2)}), rep({SpehRep(one, 2, 1)})));
    CHECK_FALSE(relevant(rep({SpehRep(one, 1, 2)}),
                         rep({SpehRep(one, 1, 3, 0, Rat(1, 2))})));
    CHECK_FALSE(relevant(rep({SpehRep(one, 1, 2)}),
                         rep({SpehRep(CuspidalSymbol("2", 1), 1, 3)})));
    CHECK_FALSE(relevant(rep({SpehRep(one, 1, 2)}), rep({SpehRep(one, 1, 4)})));
}

TEST_CASE("only cuspidal-column factors may stand free", "[relevance]") {
    CHECK(relevant(rep({SpehRep(one, 3, 1)}), rep({SpehRep(one, 1, 1, 0, Rat(5))})));
    CHECK(relevant(ArthurTypeRep(), rep({SpehRep(one, 2, 1)})));
    CHECK(relevant(rep({SpehRep(one, 1, 1)}), ArthurTypeRep()));
    CHECK_FALSE(relevant(rep({SpehRep(one, 1, 2)}), ArthurTypeRep()));
    CHECK(relevant(ArthurTypeRep(), ArthurTypeRep()));
}

TEST_CASE("the motivating pair is relevant with the expected matching", "[relevance]") {
    const ArthurTypeRep m = rep({SpehRep(one, 1, 3), SpehRep(one, 1, 1), SpehRep(one, 1, 1)});
    const ArthurTypeRep n = rep({SpehRep(one, 1, 2), SpehRep(one, 2, 1)});

    const auto w = relevant(m, n);
    REQUIRE(w);
    CHECK(validate_witness(*w, m, n));
    REQUIRE(w->p_pairs.size() == 1);
    CHECK(w->p_pairs[0].first == SpehRep(one, 1, 3));
    CHECK(w->p_pairs[0].second == SpehRep(one, 1, 2));
    CHECK(w->q_pairs.empty());
    REQUIRE(w->free_m.size() == 2);
    CHECK(w->free_m[0] == SpehRep(one, 1, 1));
    CHECK(w->free_m[1] == SpehRep(one, 1, 1));
    REQUIRE(w->free_n.size() == 1);
    CHECK(w->free_n[0] == SpehRep(one, 2, 1));

    SECTION("the accelerated matcher finds an equivalent witness") {
        const auto fast = relevant_fast(m, n);
        REQUIRE(fast);
        CHECK(validate_witness(*fast, m, n));
        CHECK(fast->p_pairs == w->p_pairs);
        CHECK(fast->free_n == w->free_n);
    }
    SECTION("the degree bookkeeping across the matching balances at two") {
        CHECK(ext_index_formula_check(*w) == 2);
    }
}

TEST_CASE("witness validation rejects mismatched matchings", "[relevance]") {
    const ArthurTypeRep m = rep({SpehRep(one, 1, 2)});
    const ArthurTypeRep n = rep({SpehRep(one, 1, 3)});
    RelevanceWitness w;
    w.q_pairs.emplace_back(SpehRep(one, 1, 2), SpehRep(one, 1, 3));
    CHECK(validate_witness(w, m, n));

    SECTION("a pair listed under the wrong direction fails") {
        RelevanceWitness bad;
        bad.p_pairs.emplace_back(SpehRep(one, 1, 2), SpehRep(one, 1, 3));
        CHECK_FALSE(validate_witness(bad, m, n));
    }
    SECTION("leftover factors fail") {
        CHECK_FALSE(validate_witness(RelevanceWitness{}, m, n));
    }
    SECTION("free factors with several columns fail") {
        RelevanceWitness bad;
        bad.free_m.push_back(SpehRep(one, 1, 2));
        bad.free_n.push_back(SpehRep(one, 1, 3));
        CHECK_FALSE(validate_witness(bad, m, n));
    }
}

TEST_CASE("the degree bookkeeping rejects pairs of wrong corank", "[relevance]") {
    // Both free factors cuspidal with equal dimension: sides balance only if
    // the first exceeds the second by one.
    RelevanceWitness w;
    w.free_m.push_back(SpehRep(one, 1, 1));
    w.free_n.push_back(SpehRep(one, 1, 1));
    CHECK_THROWS_AS(ext_index_formula_check(w), DimensionError);

    RelevanceWitness ok;
    ok.free_m.push_back(SpehRep(CuspidalSymbol("c", 2), 1, 1));
    ok.free_n.push_back(SpehRep(one, 1, 1));
    CHECK(ext_index_formula_check(ok) == 1);
}

TEST_CASE("both matchers agree across a spread of small products", "[relevance]") {
    const std::vector<ArthurTypeRep> pool = {
        rep({SpehRep(one, 1, 1)}),
        rep({SpehRep(one, 1, 2)}),
        rep({SpehRep(one, 2, 1)}),
        rep({SpehRep(one, 1, 3)}),
        rep({SpehRep(one, 1, 1), SpehRep(one, 1, 2)}),
        rep({SpehRep(one, 1, 1), SpehRep(one, 1, 1)}),
        rep({SpehRep(one, 2, 2)}),
        rep({SpehRep(one, 1, 2), SpehRep(one, 1, 2)}),
    };
    for (const ArthurTypeRep& m : pool)
        for (const ArthurTypeRep& n : pool) {
            const auto slow = relevant(m, n);
            const auto fast = relevant_fast(m, n);
            CHECK(slow.has_value() == fast.has_value());
            if (slow) CHECK(validate_witness(*slow, m, n));
            if (fast) CHECK(validate_witness(*fast, m, n));
            CHECK(slow.has_value() == relevant(n, m).has_value());
        }
}

TEST_CASE("oversized second sides are rejected up front", "[relevance]") {
    ArthurTypeRep m, n;
    for (int i = 0; i < 65; ++i) n.add(SpehRep(one, 1, 1, 0, Rat(i)));
    CHECK_THROWS_AS(relevant(m, n), std::invalid_argument);
}
