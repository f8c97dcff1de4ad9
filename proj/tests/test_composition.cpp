#include <doctest.h>

#include <algorithm>

#include <quandlekit/composition.hpp>
#include <quandlekit/constructions.hpp>

#include "oracles.hpp"

using namespace quandlekit;

namespace {

const std::vector<std::string> kNames{"a", "b", "c"};

OpTable alex(int n, int mult) {
    FiniteGroup g = cyclic(n);
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = (mult * i) % n;
    return alexander_quandle(g, GroupAutomorphism(g, Permutation(im)));
}

}  // namespace

TEST_CASE("word reduction") {
    OpWord w;
    w.append(0, 2).append(1, -1).append(1, 1).append(0, -2);
    CHECK(w.empty());
    CHECK(w.str(kNames) == "e");

    OpWord v;
    v.append(0, 1).append(0, 1).append(1, -3);
    CHECK(v.syllables() == std::vector<Syllable>{{0, 2}, {1, -3}});
    CHECK(v.str(kNames) == "a^2 b^-3");
    CHECK(v.inverse().str(kNames) == "b^3 a^-2");
    CHECK(v.inverse().inverse() == v);

    OpWord built({{0, 1}, {1, 0}, {0, 1}});  // zero exponent dropped, a a merge
    CHECK(built.syllables() == std::vector<Syllable>{{0, 2}});

    CHECK_THROWS_AS(OpWord().append(-1, 1), ValidationError);
}

TEST_CASE("word parsing") {
    CHECK(OpWord::parse("e", kNames).empty());
    CHECK(OpWord::parse("", kNames).empty());
    CHECK(OpWord::parse("a^2 b^-1", kNames).syllables() ==
          std::vector<Syllable>{{0, 2}, {1, -1}});
    CHECK(OpWord::parse("a a b^0 c", kNames).syllables() ==
          std::vector<Syllable>{{0, 2}, {2, 1}});
    // Round trip through str().
    OpWord w = OpWord::parse("b^-2 a c^3", kNames);
    CHECK(OpWord::parse(w.str(kNames), kNames) == w);

    CHECK_THROWS_AS(OpWord::parse("d", kNames), ValidationError);
    CHECK_THROWS_AS(OpWord::parse("a^x", kNames), ValidationError);
    CHECK_THROWS_AS(OpWord::parse("a^2y", kNames), ValidationError);
    CHECK_THROWS_AS(OpWord::parse("a^", kNames), ValidationError);
}

TEST_CASE("composition of tables") {
    OpTable t3 = trivial_quandle(3);
    OpTable r3 = dihedral_quandle(3);
    OpTable j3 = catalog("J3").table;

    CHECK(compose(t3, r3) == r3);
    CHECK(compose(r3, t3) == r3);
    CHECK(compose(r3, r3) == t3);
    CHECK(compose(j3, j3) == t3);

    // The mixed product in both orders, as printed.
    OpTable r3j3 = OpTable::from_rows({{0, 2, 1}, {1, 1, 0}, {2, 0, 2}});
    CHECK(compose(r3, j3) == r3j3);
    CHECK(compose(j3, r3) == r3j3);
    CHECK(axioms_report(r3j3).classification ==
          Classification::idempotent_right_quasigroup);

    CHECK_THROWS_AS(compose(t3, trivial_quandle(4)), PreconditionError);

    // Columns compose as permutations, left factor first.
    for (int b = 0; b < 3; ++b)
        CHECK(inner_map(compose(r3, j3), b) ==
              inner_map(r3, b).then(inner_map(j3, b)));

    // Composing quandles always preserves idempotency and bijective columns.
    for (const auto& e1 : catalog())
        for (const auto& e2 : catalog()) {
            if (e1.table.size() != e2.table.size()) continue;
            AxiomReport rep = axioms_report(compose(e1.table, e2.table));
            CHECK(rep.idempotent);
            CHECK(rep.right_quasigroup);
        }
}

TEST_CASE("powers") {
    OpTable a2 = catalog("Z5-Alex2").table;
    CHECK(power(a2, 1) == a2);
    CHECK(power(a2, 0) == trivial_quandle(5));
    CHECK(power(a2, 2) == OpTable::from_rows({{0, 2, 4, 1, 3},
                                              {4, 1, 3, 0, 2},
                                              {3, 0, 2, 4, 1},
                                              {2, 4, 1, 3, 0},
                                              {1, 3, 0, 2, 4}}));
    CHECK(power(a2, 3) == OpTable::from_rows({{0, 3, 1, 4, 2},
                                              {3, 1, 4, 2, 0},
                                              {1, 4, 2, 0, 3},
                                              {4, 2, 0, 3, 1},
                                              {2, 0, 3, 1, 4}}));
    CHECK(power(a2, 4) == trivial_quandle(5));
    CHECK(power(a2, -1) == right_inverse(a2));
    CHECK(power(a2, 3) == power(a2, -1));

    // The square of the Alexander quandle on Z5 with multiplier 2 is the
    // dihedral quandle in disguise: 4a + 2b = -a + 2b mod 5.
    CHECK(power(a2, 2) == dihedral_quandle(5));

    // Exponent addition is a homomorphism for self-distributive tables.
    for (const OpTable& t : {a2, dihedral_quandle(3), catalog("Q6").table})
        for (int i = -3; i <= 3; ++i)
            for (int j = -3; j <= 3; ++j)
                CHECK(power(t, i + j) == compose(power(t, i), power(t, j)));
}

TEST_CASE("order-4 catalog power relations") {
    OpTable q0 = catalog("Q0").table;
    for (const char* name : {"Q1", "Q3", "Q4", "Q5"})
        CHECK(power(catalog(name).table, 2) == q0);
    for (const char* name : {"Q2", "Q6"})
        CHECK(power(catalog(name).table, 3) == q0);
    CHECK(is_isomorphic(power(catalog("Q2").table, 2), catalog("Q2").table)
              .has_value());
    CHECK(is_isomorphic(power(catalog("Q6").table, 2), catalog("Q6").table)
              .has_value());
}

TEST_CASE("distributivity") {
    OpTable t3 = trivial_quandle(3);
    OpTable r3 = dihedral_quandle(3);
    OpTable j3 = catalog("J3").table;

    // Everything distributes over the trivial operation and vice versa.
    for (const OpTable& t : {r3, j3}) {
        CHECK(distributes_over(t, t3));
        CHECK(distributes_over(t3, t));
        CHECK(distributes_over(t, t));  // self-distributivity
    }
    // Every permutation of three points is an automorphism of R3, so the
    // columns of J3 all respect R3; the converse direction fails.
    CHECK(distributes_over(j3, r3));
    CHECK_FALSE(distributes_over(r3, j3));
    CHECK_FALSE(distributivity_counterexample(j3, r3).has_value());

    auto witness = distributivity_counterexample(r3, j3);
    REQUIRE(witness.has_value());
    auto [a, b, c] = *witness;
    CHECK(r3.at(j3.at(a, b), c) != j3.at(r3.at(a, c), r3.at(b, c)));
    // Lexicographically first violation.
    bool earlier_clean = true;
    for (int x = 0; x < 3 && earlier_clean; ++x)
        for (int y = 0; y < 3 && earlier_clean; ++y)
            for (int z = 0; z < 3 && earlier_clean; ++z) {
                if (std::array<int, 3>{x, y, z} >= *witness) { earlier_clean = false; break; }
                CHECK(r3.at(j3.at(x, y), z) == j3.at(r3.at(x, z), r3.at(y, z)));
            }

    CHECK_THROWS_AS(distributes_over(t3, trivial_quandle(4)), PreconditionError);

    // Mutual distributivity makes the composite a quandle and symmetric.
    OpTable a2 = alex(7, 2);
    OpTable a3 = alex(7, 3);
    REQUIRE(distributes_over(a2, a3));
    REQUIRE(distributes_over(a3, a2));
    CHECK(compose(a2, a3) == compose(a3, a2));
    CHECK(is_quandle(compose(a2, a3)));
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n)
            CHECK(distributes_over(power(a2, m), power(a3, n)));
}

TEST_CASE("word operations") {
    OpTable a2 = catalog("Z5-Alex2").table;
    CHECK(word_operation({a2}, OpWord()) == trivial_quandle(5));
    CHECK(word_operation({a2}, OpWord().append(0, 4)) == trivial_quandle(5));

    // Single-generator words collapse to powers of the exponent sum.
    for (int i = -3; i <= 3; ++i)
        for (int j = -3; j <= 3; ++j) {
            OpWord w;
            w.append(0, i);
            w.append(0, j);
            CHECK(word_operation({a2}, w) == power(a2, i + j));
        }

    // Conj and Core of the quaternions commute as letters.
    OpTable conj = conj_quandle(quaternion8());
    OpTable core = core_quandle(quaternion8());
    OpWord ab = OpWord().append(0, 1).append(1, 1);
    OpWord ba = OpWord().append(1, 1).append(0, 1);
    CHECK(word_operation({conj, core}, ab) == word_operation({conj, core}, ba));

    // A longer word agrees with the hand-folded chain.
    OpWord w = OpWord::parse("a^2 b^-1 a", {"a", "b"});
    OpTable expect = compose(compose(power(conj, 2), power(core, -1)), conj);
    CHECK(word_operation({conj, core}, w) == expect);

    CHECK_THROWS_AS(word_operation({}, OpWord()), PreconditionError);
    CHECK_THROWS_AS(word_operation({a2, trivial_quandle(3)}, OpWord()),
                    PreconditionError);
    CHECK_THROWS_AS(word_operation({a2}, OpWord().append(1, 1)), ValidationError);
}

TEST_CASE("closure groups") {
    QuandleGroup lone = closure_group({trivial_quandle(4)});
    CHECK(lone.order() == 1);
    CHECK(closure_is_abelian(lone));
    CHECK(closure_iso_type(lone) == "Z1");

    QuandleGroup r3 = closure_group({dihedral_quandle(3)});
    CHECK(r3.order() == 2);
    CHECK(r3.index_of(trivial_quandle(3)) == 0);
    CHECK(r3.index_of(dihedral_quandle(3)) == 1);
    CHECK(r3.product(1, 1) == 0);
    CHECK(closure_iso_type(r3) == "Z2");

    QuandleGroup a2 = closure_group({catalog("Z5-Alex2").table});
    CHECK(a2.order() == 4);
    CHECK(closure_is_abelian(a2));
    CHECK(closure_iso_type(a2) == "Z4");

    CHECK_THROWS_AS(closure_group({}), PreconditionError);
    CHECK_THROWS_AS(closure_group({dihedral_quandle(3), trivial_quandle(4)}),
                    PreconditionError);
    // Non-quandle generator.
    CHECK_THROWS_AS(closure_group({OpTable::from_rows({{1, 1}, {1, 1}})}),
                    PreconditionError);
    // Conj and Core of S3 are not mutually distributive.
    CHECK_THROWS_AS(
        closure_group({conj_quandle(symmetric(3)), core_quandle(symmetric(3))}),
        PreconditionError);
}

TEST_CASE("closure groups satisfy the group laws") {
    std::vector<QuandleGroup> closures;
    closures.push_back(closure_group({catalog("Z5-Alex2").table}));
    closures.push_back(closure_group(
        {conj_quandle(quaternion8()), core_quandle(quaternion8())}));
    closures.push_back(closure_group({alex(7, 2), alex(7, 3)}));

    for (const QuandleGroup& g : closures) {
        const int m = g.order();
        CHECK(g.element(0) == trivial_quandle(g.element(0).size()));
        for (int i = 0; i < m; ++i) {
            // Identity and inverses.
            CHECK(g.product(0, i) == i);
            CHECK(g.product(i, 0) == i);
            CHECK(g.element(g.inverse(i)) == right_inverse(g.element(i)));
            // Every element is a quandle and its word reproduces it.
            CHECK(is_quandle(g.element(i)));
            CHECK(word_operation(g.generators(), g.word(i)) == g.element(i));
            for (int j = 0; j < m; ++j) {
                // The product matrix is really composition.
                CHECK(g.element(g.product(i, j)) ==
                      compose(g.element(i), g.element(j)));
                CHECK(g.product(i, j) == g.product(j, i));
                for (int k = 0; k < m; ++k)
                    CHECK(g.product(g.product(i, j), k) ==
                          g.product(i, g.product(j, k)));
            }
        }
        CHECK(closure_is_abelian(g));
        CHECK(g.to_group().order() == m);
    }
}

TEST_CASE("closure of conj and core of the quaternions") {
    QuandleGroup g = closure_group(
        {conj_quandle(quaternion8()), core_quandle(quaternion8())});
    CHECK(g.order() == 4);
    CHECK(closure_is_abelian(g));
    CHECK(closure_iso_type(g) == "Z2xZ2");
    CHECK(group_isomorphic(g.to_group(), abelianization(quaternion8())));
}

TEST_CASE("n-quandle detection") {
    CHECK(n_quandle_order(trivial_quandle(6)) == 1);
    CHECK(n_quandle_order(core_quandle(symmetric(3))) == 2);
    CHECK(n_quandle_order(catalog("Z5-Alex2").table) == 4);
    CHECK(n_quandle_order(dihedral_quandle(3)) == 2);
    CHECK(n_quandle_order(catalog("J3").table) == 2);
    CHECK(n_quandle_order(catalog("Q6").table) == 3);
    CHECK_THROWS_AS(n_quandle_order(OpTable::from_rows({{0, 0}, {0, 1}})),
                    PreconditionError);

    // The detected order divides the lcm bound and is attained.
    for (const auto& entry : catalog()) {
        auto k = n_quandle_order(entry.table);
        REQUIRE(k.has_value());
        CHECK(power(entry.table, *k) == trivial_quandle(entry.table.size()));
        for (int i = 1; i < *k; ++i)
            CHECK(power(entry.table, i) != trivial_quandle(entry.table.size()));
    }
}
