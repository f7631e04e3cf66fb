#include <gtest/gtest.h>

#include "clawreconf/alternating.hpp"
#include "clawreconf/errors.hpp"
#include "clawreconf/fixtures.hpp"
#include "clawreconf/generators.hpp"
#include "clawreconf/resolution.hpp"
#include "clawreconf/sequencer.hpp"
#include "support.hpp"

namespace {

using namespace clawreconf;
using ref::id;
using ref::set;

void expect_valid(const Graph& g, const ReconfigSequence& seq, const IndependentSet& i, const IndependentSet& j,
                  Model model) {
    EXPECT_EQ(seq.model, model);
    EXPECT_EQ(seq.start, i);
    const auto bad = validate_sequence(g, seq);
    EXPECT_FALSE(bad) << "step " << bad->step << ": " << bad->rule;
    EXPECT_EQ(final_set(seq), j.vertices());
}

std::size_t moved_tokens(const IndependentSet& i, const IndependentSet& j) {
    return set_difference(i.vertices(), j.vertices()).size();
}

TEST(TsSequenceAcyclic, Examples) {
    const Graph p4 = fixture("P4");
    const auto i = set(p4, {"v0", "v2"});
    const auto j = set(p4, {"v1", "v3"});
    const auto seq = ts_sequence_acyclic(p4, i, j);
    expect_valid(p4, seq, i, j, Model::TS);
    EXPECT_EQ(seq.length(), 2u);
    EXPECT_EQ(seq.length(), *ref::reachable_distance(p4, i.vertices(), j.vertices(), Model::TS));

    EXPECT_EQ(ts_sequence_acyclic(p4, i, i).length(), 0u);

    const Graph p3 = fixture("P3");
    const auto walk = ts_sequence_acyclic(p3, set(p3, {"a"}), set(p3, {"c"}));
    EXPECT_EQ(walk.moves, (std::vector<Move>{{id(p3, "a"), id(p3, "b")}, {id(p3, "b"), id(p3, "c")}}));
}

TEST(TsSequenceAcyclic, Preconditions) {
    const Graph c6 = fixture("C6");
    EXPECT_THROW(ts_sequence_acyclic(c6, set(c6, {"v0", "v2", "v4"}), set(c6, {"v1", "v3", "v5"})),
                 PreconditionError);
    const Graph split = parse_graph("a b\nc d\n");
    EXPECT_THROW(ts_sequence_acyclic(split, set(split, {"a"}), set(split, {"c"})), PreconditionError);
}

TEST(TsSequenceAcyclic, BoundAndPotential) {
    Rng rng(71);
    std::size_t checked = 0;
    for (const Graph& g : ref::fuzz_graphs(250, 12, 72)) {
        const std::size_t k = rng.uniform(1, std::min<std::size_t>(4, ref::alpha(g)));
        const auto i = IndependentSet::make(g, *random_independent_set(g, k, rng));
        const auto j = IndependentSet::make(g, *random_independent_set(g, k, rng));
        if (!decompose_symdiff(g, i, j).cycles.empty()) continue;
        ++checked;
        std::vector<PotentialState> trace;
        const auto seq = ts_sequence_acyclic(g, i, j, &trace);
        expect_valid(g, seq, i, j, Model::TS);
        const auto diam = static_cast<std::size_t>(diameter(g));
        EXPECT_LE(seq.length(), 2 * moved_tokens(i, j) * diam);
        for (std::size_t t = 0; t < trace.size(); ++t) {
            EXPECT_GE(trace[t].md, 1);
            if (t > 0) EXPECT_LT(trace[t].phi, trace[t - 1].phi);
        }
        if (i != j) {
            ASSERT_FALSE(trace.empty());
            EXPECT_EQ(trace[0].phi,
                      static_cast<long long>((moved_tokens(i, j) - 1) * diam) + static_cast<long long>(trace[0].md));
        }
    }
    EXPECT_GT(checked, 150u);
}

TEST(TjSequenceNoEvenCycles, Examples) {
    const Graph claw = fixture("CLAW");
    const auto seq = tj_sequence_no_even_cycles(claw, set(claw, {"a", "b"}), set(claw, {"a", "c"}));
    EXPECT_EQ(seq.moves, (std::vector<Move>{{id(claw, "b"), id(claw, "c")}}));

    const Graph p4 = fixture("P4");
    const auto i = set(p4, {"v0", "v2"});
    const auto j = set(p4, {"v1", "v3"});
    const auto p = tj_sequence_no_even_cycles(p4, i, j);
    expect_valid(p4, p, i, j, Model::TJ);
    EXPECT_EQ(p.length(), 2u);

    const Graph c6 = fixture("C6");
    EXPECT_THROW(tj_sequence_no_even_cycles(c6, set(c6, {"v0", "v2", "v4"}), set(c6, {"v1", "v3", "v5"})),
                 PreconditionError);
}

TEST(TjSequenceNoEvenCycles, ExactLength) {
    Rng rng(81);
    std::size_t checked = 0;
    for (const Graph& g : ref::fuzz_graphs(250, 12, 82)) {
        const std::size_t k = rng.uniform(1, ref::alpha(g));
        const auto i = IndependentSet::make(g, *random_independent_set(g, k, rng));
        const auto j = IndependentSet::make(g, *random_independent_set(g, k, rng));
        if (!decompose_symdiff(g, i, j).cycles.empty()) continue;
        ++checked;
        const auto seq = tj_sequence_no_even_cycles(g, i, j);
        expect_valid(g, seq, i, j, Model::TJ);
        EXPECT_EQ(seq.length(), moved_tokens(i, j));
    }
    EXPECT_GT(checked, 150u);
}

TEST(TjSequenceNonmaximum, Examples) {
    const Graph p5 = fixture("P5");
    const auto i = set(p5, {"v1", "v3"});
    const auto j = set(p5, {"v0", "v2"});
    expect_valid(p5, tj_sequence_nonmaximum(p5, i, j), i, j, Model::TJ);
    EXPECT_EQ(tj_sequence_nonmaximum(p5, i, i).length(), 0u);
    const Graph c6 = fixture("C6");
    EXPECT_THROW(tj_sequence_nonmaximum(c6, set(c6, {"v0", "v2", "v4"}), set(c6, {"v1", "v3", "v5"})),
                 PreconditionError);
}

TEST(TjSequenceNonmaximum, CycleWithPendant) {
    // C6 with a path p q r hanging off the edge v0 v1: r is undominated, so
    // I is not maximum, and the 6-cycle unwinds through a token parked on r.
    const Graph g = parse_graph("v0 v1\nv1 v2\nv2 v3\nv3 v4\nv4 v5\nv5 v0\np v0\np v1\np q\nq r\n");
    const auto i = set(g, {"v0", "v2", "v4"});
    const auto j = set(g, {"v1", "v3", "v5"});
    ASSERT_FALSE(ref::has_claw(g));
    ASSERT_LT(i.size(), ref::alpha(g));
    ASSERT_EQ(extract_bad_cycles(g, i, j).size(), 1u);
    const auto seq = tj_sequence_nonmaximum(g, i, j);
    expect_valid(g, seq, i, j, Model::TJ);
    const auto ts = expand_jumps(g, seq);
    expect_valid(g, ts, i, j, Model::TS);

    // Dominating but not maximum: the augmenting path route.
    const Graph p5 = fixture("P5");
    const auto di = set(p5, {"v1", "v3"});
    ASSERT_TRUE(is_dominating(p5, di.vertices()));
    const auto dj = set(p5, {"v0", "v3"});
    expect_valid(p5, tj_sequence_nonmaximum(p5, di, dj), di, dj, Model::TJ);
}

TEST(TjSequenceNonmaximum, Fuzzed) {
    Rng rng(91);
    std::size_t checked = 0;
    std::size_t cyclic = 0;
    for (const Graph& g : ref::fuzz_graphs(300, 12, 92)) {
        const std::size_t a = ref::alpha(g);
        if (a < 2) continue;
        const std::size_t k = rng.uniform(1, a - 1);
        const auto i = IndependentSet::make(g, *random_independent_set(g, k, rng));
        const auto j = IndependentSet::make(g, *random_independent_set(g, k, rng));
        ++checked;
        cyclic += decompose_symdiff(g, i, j).cycles.empty() ? 0 : 1;
        const auto seq = tj_sequence_nonmaximum(g, i, j);
        expect_valid(g, seq, i, j, Model::TJ);
        expect_valid(g, expand_jumps(g, seq), i, j, Model::TS);
    }
    EXPECT_GT(checked, 200u);

    // Gadgets supply non-maximum sets whose difference is a cycle.
    GadgetParams p;
    p.max_length = 8;
    p.sparse_tokens = 0.8;
    for (const auto& gc : ref::gadget_cases(120, 93, p, 14)) {
        if (gc.i.size() == ref::alpha(gc.graph)) continue;
        ++cyclic;
        const auto seq = tj_sequence_nonmaximum(gc.graph, gc.i, gc.j);
        expect_valid(gc.graph, seq, gc.i, gc.j, Model::TJ);
        if (is_connected(gc.graph)) expect_valid(gc.graph, expand_jumps(gc.graph, seq), gc.i, gc.j, Model::TS);
    }
    EXPECT_GT(cyclic, 20u);
}

TEST(AssembleYesCertificate, NoCyclesIsAcyclicBuilder) {
    const Graph p4 = fixture("P4");
    const auto i = set(p4, {"v0", "v2"});
    const auto j = set(p4, {"v1", "v3"});
    EXPECT_EQ(assemble_yes_certificate(p4, i, j, Model::TS).moves, ts_sequence_acyclic(p4, i, j).moves);
}

TEST(AssembleYesCertificate, Fig1SingleTurn) {
    const Graph g = fixture("FIG1");
    const auto i = set(g, {"c0", "c2", "c4", "c6"});
    const auto j = set(g, {"c1", "c3", "c5", "c7"});
    const auto seq = assemble_yes_certificate(g, i, j, Model::TS);
    expect_valid(g, seq, i, j, Model::TS);
    const auto cycle = extract_bad_cycles(g, i, j).at(0);
    EXPECT_EQ(seq.moves, resolve_and_turn(g, i, cycle, *find_resolution(g, i, cycle)).moves);
    EXPECT_TRUE(ref::reachable_distance(g, i.vertices(), j.vertices(), Model::TS));
}

TEST(AssembleYesCertificate, TwoCycles) {
    // Two 4-cycles, each with a vertex seeing two consecutive cycle vertices;
    // those two vertices are adjacent, which keeps the graph claw-free.
    const Graph g = parse_graph(
        "a0 a1\na1 a2\na2 a3\na3 a0\ny a1\ny a2\n"
        "b0 b1\nb1 b2\nb2 b3\nb3 b0\nz b1\nz b2\ny z\n");
    ASSERT_FALSE(ref::has_claw(g));
    const auto i = set(g, {"a0", "a2", "b0", "b2"});
    const auto j = set(g, {"a1", "a3", "b1", "b3"});
    ASSERT_EQ(i.size(), ref::alpha(g));
    ASSERT_EQ(extract_bad_cycles(g, i, j).size(), 2u);
    for (Model model : {Model::TS, Model::TJ}) {
        expect_valid(g, assemble_yes_certificate(g, i, j, model), i, j, model);
    }
    EXPECT_TRUE(ref::reachable_distance(g, i.vertices(), j.vertices(), Model::TS));
}

TEST(ExpandJumps, SlidesStayAndJumpsExpand) {
    const Graph p5 = fixture("P5");
    const auto i = set(p5, {"v0"});
    const ReconfigSequence tj{Model::TJ, i, {{id(p5, "v0"), id(p5, "v4")}, {id(p5, "v4"), id(p5, "v3")}}};
    const auto ts = expand_jumps(p5, tj);
    expect_valid(p5, ts, i, set(p5, {"v3"}), Model::TS);
    EXPECT_EQ(ts.length(), 5u);
}

}  // namespace
