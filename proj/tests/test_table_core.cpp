#include <doctest.h>

#include <algorithm>
#include <random>

#include <quandlekit/constructions.hpp>
#include <quandlekit/op_table.hpp>

#include "oracles.hpp"

using namespace quandlekit;

namespace {

const std::vector<std::vector<int>> kR3{{0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
const std::vector<std::vector<int>> kJ3{{0, 0, 0}, {2, 1, 1}, {1, 2, 2}};

// Constant-column groupoid x*y = sigma(x): a rack exactly when sigma is a
// permutation, a quandle only for the identity.
OpTable constant_column_table(const Permutation& sigma) {
    const int n = sigma.size();
    std::vector<int> entries(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            entries[static_cast<std::size_t>(a) * n + b] = sigma(a);
    return OpTable(n, std::move(entries));
}

}  // namespace

TEST_CASE("permutation basics") {
    Permutation id = Permutation::identity(4);
    CHECK(id.is_identity());
    CHECK(id.order() == 1);

    Permutation p({1, 2, 0, 3});  // 3-cycle
    CHECK(p.order() == 3);
    CHECK(p.cycle_type() == std::vector<int>{3, 1});
    CHECK(p.pow(3) == id);
    CHECK(p.pow(-1) == p.inverse());
    CHECK(p.then(p.inverse()).is_identity());
    CHECK(p.inverse().then(p).is_identity());

    Permutation q({1, 0, 2, 3});
    // then() is left-to-right: (p then q)(x) = q(p(x)).
    CHECK(p.then(q)(0) == q(p(0)));
    CHECK(p.then(q)(2) == q(p(2)));

    CHECK(Permutation({1, 0}).pow(5) == Permutation({1, 0}));
    CHECK(Permutation({1, 0}).pow(-4).is_identity());
}

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(Permutation({0, 0}), ValidationError);
    CHECK_THROWS_AS(Permutation({1, 2}), ValidationError);
    CHECK_THROWS_AS(Permutation({-1, 0}), ValidationError);
}

TEST_CASE("table construction and shape errors") {
    OpTable r3 = OpTable::from_rows(kR3);
    CHECK(r3.size() == 3);
    CHECK(r3.at(0, 1) == 2);
    CHECK(r3.rows() == kR3);
    CHECK(r3.column_images(0) == std::vector<int>{0, 2, 1});

    CHECK_THROWS_AS(OpTable(3, {0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(OpTable(2, {0, 1, 2, 5}), ValidationError);
    CHECK_THROWS_AS(OpTable(2, {0, 1, -1, 0}), ValidationError);
    CHECK_THROWS_AS(OpTable::from_rows({{0, 1}, {0}}), ValidationError);
    CHECK_THROWS_AS(OpTable::from_rows({}), ValidationError);
    CHECK_THROWS_AS(OpTable(0, {}), ValidationError);
}

TEST_CASE("axiom classification on known tables") {
    CHECK(axioms_report(trivial_quandle(1)).classification == Classification::quandle);
    CHECK(is_quandle(OpTable::from_rows(kR3)));
    CHECK(is_quandle(OpTable::from_rows(kJ3)));

    // Composite of R3 and J3 as printed: idempotent right quasigroup, not
    // self-distributive.
    OpTable r3j3 = OpTable::from_rows({{0, 2, 1}, {1, 1, 0}, {2, 0, 2}});
    AxiomReport rep = axioms_report(r3j3);
    CHECK(rep.idempotent);
    CHECK(rep.right_quasigroup);
    CHECK_FALSE(rep.self_distributive);
    CHECK(rep.classification == Classification::idempotent_right_quasigroup);
    CHECK_FALSE(is_rack(r3j3));

    // Constant-column table from a 3-cycle: rack but not quandle.
    OpTable perm_rack = constant_column_table(Permutation({1, 2, 0}));
    AxiomReport pr = axioms_report(perm_rack);
    CHECK(pr.classification == Classification::rack);
    CHECK(is_rack(perm_rack));
    CHECK_FALSE(is_quandle(perm_rack));

    // x*y = x*x collapses columns: idempotent groupoid.
    OpTable proj = OpTable::from_rows({{0, 0}, {1, 1}});
    CHECK(axioms_report(proj).classification == Classification::quandle);
    OpTable idem = OpTable::from_rows({{0, 0, 0}, {1, 1, 1}, {0, 0, 2}});
    CHECK(axioms_report(idem).classification == Classification::idempotent_groupoid);

    OpTable junk = OpTable::from_rows({{1, 1}, {1, 1}});
    CHECK(axioms_report(junk).classification == Classification::groupoid);
}

TEST_CASE("axiom flags agree with the naive checks on random tables") {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 6;
        OpTable t = (trial % 2 == 0) ? oracle::random_groupoid(n, rng)
                                     : oracle::random_right_quasigroup(n, rng);
        AxiomReport rep = axioms_report(t);
        CHECK(rep.idempotent == oracle::idempotent(t));
        CHECK(rep.right_quasigroup == oracle::right_quasigroup(t));
        CHECK(rep.self_distributive == oracle::self_distributive(t));
        CHECK(is_rack(t) == oracle::is_rack(t));
        CHECK(is_quandle(t) == oracle::is_quandle(t));
    }
}

TEST_CASE("right inverse tables") {
    OpTable r3 = OpTable::from_rows(kR3);
    CHECK(right_inverse(r3) == r3);  // dihedral operations are involutory

    OpTable t4 = trivial_quandle(4);
    CHECK(right_inverse(t4) == t4);

    for (const auto& entry : catalog()) {
        const OpTable& t = entry.table;
        OpTable inv = right_inverse(t);
        CHECK(right_inverse(inv) == t);
        for (int a = 0; a < t.size(); ++a) {
            for (int b = 0; b < t.size(); ++b) {
                CHECK(inv.at(t.at(a, b), b) == a);
                CHECK(t.at(inv.at(a, b), b) == a);
            }
        }
    }

    OpTable not_rq = OpTable::from_rows({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(right_inverse(not_rq), PreconditionError);
}

TEST_CASE("rack identities for the two operations") {
    // (x*y) /* y == x, (x /* y) * y == x, and the mirrored distributivities.
    std::vector<OpTable> racks{OpTable::from_rows(kR3), OpTable::from_rows(kJ3),
                               constant_column_table(Permutation({1, 2, 0})),
                               catalog("Z5-Alex2").table};
    for (const auto& t : racks) {
        REQUIRE(is_rack(t));
        OpTable inv = right_inverse(t);
        const int n = t.size();
        CHECK(is_rack(inv));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    CHECK(t.at(inv.at(x, y), z) == inv.at(t.at(x, z), t.at(y, z)));
                    CHECK(inv.at(t.at(x, y), z) == t.at(inv.at(x, z), inv.at(y, z)));
                }
    }
}

TEST_CASE("inner maps and the inner group") {
    OpTable r3 = OpTable::from_rows(kR3);
    CHECK(inner_map(r3, 0) == Permutation({0, 2, 1}));
    CHECK(inner_map(trivial_quandle(3), 1).is_identity());
    CHECK(inner_map(OpTable::from_rows(kJ3), 0) == Permutation({0, 2, 1}));
    CHECK_THROWS_AS(inner_map(r3, 3), ValidationError);
    CHECK_THROWS_AS(inner_map(r3, -1), ValidationError);

    // Orders cross-checked against a plain breadth-first closure.
    auto closure_order = [](const OpTable& t) {
        std::vector<std::vector<int>> gens;
        for (int b = 0; b < t.size(); ++b) gens.push_back(t.column_images(b));
        return oracle::permutation_closure_order(gens);
    };

    InnerGroup trivial_inner = inner_group(trivial_quandle(5));
    CHECK(trivial_inner.elements.size() == 1);
    CHECK(trivial_inner.generators.size() == 5);

    // The three columns of R3 are the three transpositions, which generate
    // all six permutations.
    InnerGroup r3_inner = inner_group(r3);
    CHECK(static_cast<int>(r3_inner.elements.size()) == closure_order(r3));
    CHECK(r3_inner.elements.size() == 6);

    InnerGroup j3_inner = inner_group(OpTable::from_rows(kJ3));
    CHECK(static_cast<int>(j3_inner.elements.size()) == closure_order(OpTable::from_rows(kJ3)));
    CHECK(j3_inner.elements.size() == 2);

    for (const auto& entry : catalog()) {
        InnerGroup ig = inner_group(entry.table);
        CHECK(static_cast<int>(ig.elements.size()) == closure_order(entry.table));
        CHECK(std::is_sorted(ig.elements.begin(), ig.elements.end()));
        // Closure under composition and inverses.
        for (const auto& p : ig.elements) {
            CHECK(std::binary_search(ig.elements.begin(), ig.elements.end(), p.inverse()));
            for (const auto& q : ig.elements)
                CHECK(std::binary_search(ig.elements.begin(), ig.elements.end(), p.then(q)));
        }
    }
}

TEST_CASE("involutory detection") {
    CHECK(is_involutory(OpTable::from_rows(kR3)));
    CHECK(is_involutory(trivial_quandle(4)));
    CHECK(is_involutory(dihedral_quandle(7)));
    CHECK_FALSE(is_involutory(catalog("Z5-Alex2").table));
    CHECK_FALSE(is_involutory(catalog("Q6").table));
}

TEST_CASE("left-normed evaluation") {
    OpTable r3 = OpTable::from_rows(kR3);
    CHECK(evaluate_left_normed(r3, 0, {}) == 0);
    CHECK(evaluate_left_normed(r3, 0, {{1, 1}}) == 2);
    CHECK(evaluate_left_normed(r3, 0, {{1, 1}, {1, -1}}) == 0);
    CHECK(evaluate_left_normed(r3, 0, {{1, 1}, {2, 1}}) == r3.at(r3.at(0, 1), 2));

    // Negative signs agree with the right inverse table.
    OpTable alex = catalog("Z5-Alex2").table;
    OpTable inv = right_inverse(alex);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            CHECK(evaluate_left_normed(alex, a, {{b, -1}}) == inv.at(a, b));

    CHECK_THROWS_AS(evaluate_left_normed(r3, 3, {}), ValidationError);
    CHECK_THROWS_AS(evaluate_left_normed(r3, 0, {{5, 1}}), ValidationError);
    CHECK_THROWS_AS(evaluate_left_normed(r3, 0, {{1, 0}}), ValidationError);
    OpTable not_rq = OpTable::from_rows({{1, 1}, {1, 1}});
    CHECK_THROWS_AS(evaluate_left_normed(not_rq, 0, {{1, -1}}), PreconditionError);
    // Positive-only words do not need the right quasigroup property.
    CHECK(evaluate_left_normed(not_rq, 0, {{0, 1}}) == 1);
}

TEST_CASE("subquandle closure") {
    OpTable r3 = OpTable::from_rows(kR3);
    CHECK(subquandle_closure(r3, {0}) == std::vector<int>{0});
    CHECK(subquandle_closure(r3, {0, 1}) == std::vector<int>{0, 1, 2});

    for (const auto& entry : catalog()) {
        const OpTable& t = entry.table;
        for (int x = 0; x < t.size(); ++x)
            CHECK(subquandle_closure(t, {x}) == std::vector<int>{x});
        std::vector<int> all(t.size());
        std::iota(all.begin(), all.end(), 0);
        CHECK(subquandle_closure(t, all) == all);
        CHECK(subquandle_closure(t, {0, t.size() - 1}) ==
              oracle::closure(t, {0, t.size() - 1}));
    }

    CHECK_THROWS_AS(subquandle_closure(r3, {7}), ValidationError);
    CHECK(subquandle_closure(r3, {}).empty());
    OpTable r3j3 = OpTable::from_rows({{0, 2, 1}, {1, 1, 0}, {2, 0, 2}});
    CHECK_THROWS_AS(subquandle_closure(r3j3, {0}), PreconditionError);
}

TEST_CASE("rank of small quandles") {
    for (int n = 1; n <= 5; ++n)
        CHECK(rank(trivial_quandle(n)) == n);
    CHECK(rank(OpTable::from_rows(kR3)) == 2);
    CHECK(rank(dihedral_quandle(5)) == 2);
    for (const auto& entry : catalog())
        CHECK(rank(entry.table) == oracle::rank(entry.table));
    OpTable not_quandle = constant_column_table(Permutation({1, 2, 0}));
    CHECK_THROWS_AS(rank(not_quandle), PreconditionError);
}

TEST_CASE("isomorphism search on relabeled tables") {
    std::mt19937 rng(97);
    for (const auto& entry : catalog()) {
        const OpTable& t = entry.table;
        std::vector<int> sigma(t.size());
        std::iota(sigma.begin(), sigma.end(), 0);
        std::shuffle(sigma.begin(), sigma.end(), rng);
        OpTable relabeled = oracle::relabel(t, sigma);
        auto found = is_isomorphic(t, relabeled);
        REQUIRE(found.has_value());
        // Verify the returned map really is an isomorphism.
        for (int a = 0; a < t.size(); ++a)
            for (int b = 0; b < t.size(); ++b)
                CHECK((*found)(t.at(a, b)) == relabeled.at((*found)(a), (*found)(b)));
    }
}

TEST_CASE("isomorphism verdicts match the exhaustive search") {
    std::vector<OpTable> order3;
    std::vector<OpTable> order4;
    for (const auto& entry : catalog()) {
        if (entry.table.size() == 3) order3.push_back(entry.table);
        if (entry.table.size() == 4) order4.push_back(entry.table);
    }
    auto cross_check = [](const std::vector<OpTable>& tables) {
        for (const auto& a : tables)
            for (const auto& b : tables)
                CHECK(is_isomorphic(a, b).has_value() ==
                      oracle::isomorphism(a, b).has_value());
    };
    cross_check(order3);
    cross_check(order4);

    CHECK_FALSE(is_isomorphic(trivial_quandle(3), trivial_quandle(4)).has_value());
    CHECK_FALSE(is_isomorphic(OpTable::from_rows(kR3), OpTable::from_rows(kJ3)).has_value());

    // Also on arbitrary groupoids, not just quandles.
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 40; ++trial) {
        OpTable a = oracle::random_groupoid(4, rng);
        OpTable b = oracle::random_groupoid(4, rng);
        CHECK(is_isomorphic(a, b).has_value() == oracle::isomorphism(a, b).has_value());
        auto self = is_isomorphic(a, a);
        REQUIRE(self.has_value());
    }
}
