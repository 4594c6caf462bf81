#include "lattice.hpp"

#include "error.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>

using namespace wisealice::lattice;

TEST(Lattice, JoinExamples)
{
    EXPECT_EQ(join(atom(1), atom(2)), Element::Top);
    EXPECT_EQ(join(atom(1), atom(1)), atom(1));
    EXPECT_EQ(join(Element::Bottom, atom(3)), atom(3));
}

TEST(Lattice, MeetExamples)
{
    EXPECT_EQ(meet(atom(1), atom(3)), Element::Bottom);
    EXPECT_EQ(meet(Element::Top, atom(2)), atom(2));
    EXPECT_EQ(meet(atom(4), atom(4)), atom(4));
}

TEST(Lattice, OrthoExamples)
{
    EXPECT_EQ(ortho(atom(1)), atom(3));
    EXPECT_EQ(ortho(atom(4)), atom(2));
    EXPECT_EQ(ortho(Element::Top), Element::Bottom);
    EXPECT_EQ(ortho(ortho(atom(2))), atom(2));
}

TEST(Lattice, ValuateExamples)
{
    EXPECT_EQ(valuate(1, 3), 0);
    EXPECT_EQ(valuate(1, 1), 1);
    EXPECT_EQ(valuate(1, 2), 1);
    EXPECT_EQ(valuate(1, 4), 1);
    EXPECT_EQ(valuate(4, 2), 0);
}

TEST(Lattice, ValuateRejectsOutOfRange)
{
    EXPECT_THROW(valuate(0, 1), wisealice::InputError);
    EXPECT_THROW(valuate(1, 5), wisealice::InputError);
    EXPECT_THROW(atom(7), wisealice::InputError);
}

TEST(Lattice, OrderStructure)
{
    for (int k = 1; k <= 4; ++k) {
        EXPECT_TRUE(leq(Element::Bottom, atom(k)));
        EXPECT_TRUE(leq(atom(k), Element::Top));
        for (int j = 1; j <= 4; ++j)
            if (j != k)
                EXPECT_FALSE(leq(atom(j), atom(k)));
    }
}

// Every pair of distinct atoms is complementary (join I, meet O) but only the
// same-parity pairs are orthocomplements.
TEST(Lattice, DistinctAtomsComplementaryButNotOrthocomplements)
{
    for (int j = 1; j <= 4; ++j)
        for (int k = 1; k <= 4; ++k) {
            if (j == k)
                continue;
            EXPECT_EQ(join(atom(j), atom(k)), Element::Top);
            EXPECT_EQ(meet(atom(j), atom(k)), Element::Bottom);
            EXPECT_EQ(ortho(atom(j)) == atom(k), (j + k) % 2 == 0);
        }
}

TEST(Lattice, AuditLaws)
{
    const LawReport r = audit_laws();
    EXPECT_TRUE(r.join_commutative);
    EXPECT_TRUE(r.join_associative);
    EXPECT_TRUE(r.join_idempotent);
    EXPECT_TRUE(r.meet_commutative);
    EXPECT_TRUE(r.meet_associative);
    EXPECT_TRUE(r.meet_idempotent);
    EXPECT_TRUE(r.absorption);
    EXPECT_TRUE(r.de_morgan);
    EXPECT_TRUE(r.double_negation);
    EXPECT_TRUE(r.excluded_middle);
    EXPECT_TRUE(r.non_contradiction);
    EXPECT_TRUE(r.ortho_order_reversing);
    EXPECT_FALSE(r.distributive);
}

TEST(Lattice, DistributivityCounterexamplesAreExactlyDistinctAtomTriples)
{
    const LawReport r = audit_laws();
    ASSERT_EQ(r.distributivity_counterexamples.size(), 24u);
    std::set<std::tuple<int, int, int>> seen;
    for (const auto& c : r.distributivity_counterexamples) {
        EXPECT_NE(c.j, c.k);
        EXPECT_NE(c.k, c.l);
        EXPECT_NE(c.j, c.l);
        EXPECT_GE(std::min({c.j, c.k, c.l}), 1);
        EXPECT_EQ(c.left, atom(c.l));
        EXPECT_EQ(c.right, Element::Bottom);
        seen.insert({c.j, c.k, c.l});
    }
    EXPECT_EQ(seen.size(), 24u);

    const auto& first = r.distributivity_counterexamples.front();
    EXPECT_EQ(std::make_tuple(first.j, first.k, first.l), std::make_tuple(1, 2, 3));
}

TEST(Lattice, PredicateSumsBreakAdditivity)
{
    const LawReport r = audit_laws();
    for (int s : r.predicate_sums)
        EXPECT_EQ(s, 3);
    EXPECT_EQ(r.complement_sum_min, 1);
    EXPECT_EQ(r.complement_sum_max, 2);
}
