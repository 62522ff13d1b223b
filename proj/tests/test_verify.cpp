#include "schubert_fk/verify.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace schubert_fk;

TEST(Verify, HookExamples) {
    EXPECT_TRUE(check_hook_theorem(3, 1, {1, 1}).pass);
    EXPECT_TRUE(check_hook_theorem(4, 2, {2, 2}).pass);
    EXPECT_TRUE(check_hook_theorem(5, 2, {3, 2}).pass);
}

TEST(Verify, FailureCarriesCounterexample) {
    auto el = hook_expansion({2, 2}, 2, 4);
    el.add_canonical(canonicalize(parse_word("[(1,3),(2,4),(1,4)]")), 1);
    auto r = check_hook_theorem(4, 2, {2, 2}, el);
    EXPECT_FALSE(r.pass);
    ASSERT_FALSE(r.counterexample.is_null());
    EXPECT_EQ(r.counterexample["side"], "classical");
    EXPECT_TRUE(r.counterexample.contains("source"));
    EXPECT_EQ(r.params["element"], "explicit");
}

TEST(Verify, NegativeCoefficientIsReported) {
    auto el = hook_expansion({1, 1}, 1, 2);
    el.add_canonical(parse_word("[(1,2)]"), -2);
    auto r = check_hook_theorem(2, 1, {1, 1}, el);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.counterexample["side"], "positivity");
}

TEST(Verify, SpecExamples) {
    EXPECT_TRUE(check_two_by_two(4, 2).pass);
    EXPECT_TRUE(check_rectangles(4, 2, RectangleKind::rows, 2).pass);
    EXPECT_TRUE(check_relation_suite(3).pass);
    EXPECT_TRUE(check_relation_suite(4).pass);
    EXPECT_TRUE(check_vanishing(2, 2).pass);
}

TEST(Verify, VanishingCoversTheNonFittingShapes) {
    auto r = check_vanishing(2, 2);
    auto parts = r.notes["partitions"];
    EXPECT_NE(std::find(parts.begin(), parts.end(), "3"), parts.end());
    EXPECT_NE(std::find(parts.begin(), parts.end(), "1,1,1"), parts.end());
    EXPECT_EQ(std::find(parts.begin(), parts.end(), "2,2"), parts.end());
}

TEST(Verify, HookPlusBoxAtSmallRectangles) {
    auto r = check_hook_plus_box(5, 3, 2, 2);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.notes["negative_forest_classes"], 0);
    EXPECT_TRUE(check_hook_plus_box(5, 2, 1, 2).pass);
}

TEST(Verify, HookPlusBoxLedgerWitness) {
    // The column of three in a 3x2 rectangle yields a negative forest class.
    auto r = check_hook_plus_box(5, 3, 1, 2);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.counterexample["side"], "ledger");
    EXPECT_EQ(r.notes["negative_forest_classes"], 12);
}

TEST(Verify, SmallSuitesPass) {
    for (const char* suite : {"relations", "vanishing", "kill", "schur", "classes", "degenerate", "positivity"})
        for (const auto& r : run_tasks(suite_tasks(suite, 4))) EXPECT_TRUE(r.pass) << r.to_json(false).dump();
}

TEST(Verify, SuitesAreDeterministic) {
    auto a = run_tasks(suite_tasks("hook", 4));
    auto b = run_tasks(suite_tasks("hook", 4));
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].to_json(false), b[i].to_json(false));
}

TEST(Verify, ReportSchema) {
    auto j = check_grassmannian_schur(3).to_json(true);
    EXPECT_EQ(j["claim"], "grassmannian-schur");
    EXPECT_EQ(j["params"]["n"], 3);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_TRUE(j["counterexample"].is_null());
    EXPECT_TRUE(j.contains("seconds"));
    EXPECT_FALSE(check_grassmannian_schur(3).to_json(false).contains("seconds"));
}

TEST(Parallel, ThreadCountFromEnvironment) {
    setenv("SCHUBERT_FK_THREADS", "3", 1);
    EXPECT_EQ(thread_count(), 3u);
    setenv("SCHUBERT_FK_THREADS", "junk", 1);
    EXPECT_GE(thread_count(), 1u);
    unsetenv("SCHUBERT_FK_THREADS");
}

TEST(Parallel, MapKeepsOrder) {
    setenv("SCHUBERT_FK_THREADS", "4", 1);
    auto v = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); });
    unsetenv("SCHUBERT_FK_THREADS");
    for (std::size_t i = 0; i < v.size(); ++i) EXPECT_EQ(v[i], static_cast<int>(i * i));
}

TEST(Parallel, ExceptionsPropagate) {
    setenv("SCHUBERT_FK_THREADS", "2", 1);
    EXPECT_THROW(parallel_map<int>(10, [](std::size_t i) -> int { if (i == 7) throw Error("boom"); return 0; }), Error);
    unsetenv("SCHUBERT_FK_THREADS");
}

TEST(Verify, MutationGuardReportsAnAnnihilatedWord) {
    // x_24 x_14 x_13 acts as zero on every Schubert class of S_4, so adding it is invisible.
    auto r = check_mutation_guard(4, 2, {2, 2});
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.counterexample["mutation"], "[(2,4),(1,4),(1,3)]");
    EXPECT_EQ(r.notes["mutants"], 12);
    EXPECT_TRUE(OperatorMatrix::of(FKElement::word(parse_word("[(2,4),(1,4),(1,3)]")), 4, true).is_zero());
}
