#include "bpmc/branching_process.hpp"
#include "bpmc/errors.hpp"
#include "bpmc/process_format.hpp"
#include "bpmc/rational.hpp"
#include "bpmc/sampler.hpp"
#include "bpmc/tree_prefix.hpp"

#include "support/corpus.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <random>

using namespace bpmc;
using namespace bpmc::testsupport;

TEST_CASE("rational parsing is exact") {
    CHECK(*parse_rational("9/10") == Rational(9) / 10);
    CHECK(*parse_rational("0.9") == Rational(9) / 10);
    CHECK(*parse_rational("1") == Rational(1));
    CHECK(*parse_rational("0.125") == Rational(1) / 8);
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("x").has_value());
    CHECK(to_ratio_string(Rational(27) / 100000) == "27/100000");
    CHECK(to_decimal_string(Rational(2) / 3, 6) == "0.666666");
}

TEST_CASE("simplest rational in an interval") {
    CHECK(simplest_rational_between(Rational(6665) / 10000, Rational(6667) / 10000) ==
          Rational(2) / 3);
    CHECK(simplest_rational_between(Rational(49999) / 100000, Rational(50001) / 100000) ==
          Rational(1) / 2);
    CHECK(simplest_rational_between(Rational(1) / 3, Rational(1) / 3) == Rational(1) / 3);
    CHECK(simplest_rational_between(Rational(0), Rational(1)) == Rational(0));
}

TEST_CASE("dyadic rounding brackets the value") {
    Rational q = Rational(2) / 3;
    Rational down = round_down_dyadic(q, 16);
    Rational up = round_up_dyadic(q, 16);
    CHECK(down <= q);
    CHECK(up >= q);
    CHECK(up - down <= Rational(2) / 65536);
}

TEST_CASE("intro process validates") {
    BranchingProcess bp = intro_process();
    CHECK_NOTHROW(validate(bp));
    CHECK(bp.type_count() == 3);
    CHECK(bp.rules().size() == 6);
    CHECK(bp.max_successors() == 2);
}

TEST_CASE("identity loop validates") {
    BranchingProcess bp = parse_process_text("types: X\nrule X -> 1 : X\n");
    CHECK_NOTHROW(validate(bp));
}

TEST_CASE("probability sums must be exactly one") {
    BranchingProcess bp(
        {"I", "B"},
        {Rule{0, Rational(1), {0}},
         Rule{1, Rational(1) / 2, {1}},
         Rule{1, Rational(2) / 5, {1, 1}}});  // B sums to 9/10
    CHECK_THROWS_AS(validate(bp), ProbabilitySumError);
    try {
        validate(bp);
    } catch (const ProbabilitySumError& e) {
        CHECK(e.type_name == "B");
    }
}

TEST_CASE("empty successor tuple and nonpositive probabilities are rejected") {
    BranchingProcess no_succ({"X"}, {Rule{0, Rational(1), {}}});
    CHECK_THROWS_AS(validate(no_succ), EmptySuccessorError);
    BranchingProcess zero_prob({"X"}, {Rule{0, Rational(0), {0}}, Rule{0, Rational(1), {0}}});
    CHECK_THROWS_AS(validate(zero_prob), NonPositiveProbabilityError);
}

TEST_CASE("perturbing any rule probability breaks validation") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 30; ++round) {
        BranchingProcess bp = random_process(rng);
        CHECK_NOTHROW(validate(bp));
        std::uniform_int_distribution<std::size_t> pick(0, bp.rules().size() - 1);
        std::vector<Rule> rules = bp.rules();
        rules[pick(rng)].probability += Rational(1) / 97;
        BranchingProcess broken(bp.types(), rules);
        CHECK_THROWS_AS(validate(broken), ProbabilitySumError);
    }
}

TEST_CASE("reachability on the intro process") {
    BranchingProcess bp = intro_process();
    CHECK(names_of(bp, reachable_types(bp, bp.type_index("I"))) ==
          std::vector<std::string>{"I", "B", "D"});
    CHECK(names_of(bp, reachable_types(bp, bp.type_index("D"))) == std::vector<std::string>{"D"});
    CHECK_THROWS_AS(bp.type_index("Q"), UnknownTypeError);
}

TEST_CASE("type 3 of the running example reaches exactly 1, 3, 4") {
    BranchingProcess bp = running_process();
    CHECK(names_of(bp, reachable_types(bp, bp.type_index("3"))) ==
          std::vector<std::string>{"1", "3", "4"});
}

TEST_CASE("adding a rule never shrinks reachability") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        BranchingProcess bp = random_process(rng);
        std::vector<Rule> rules = bp.rules();
        std::uniform_int_distribution<std::size_t> type_dist(0, bp.type_count() - 1);
        // The extended rule set no longer sums to 1; reachability ignores
        // probabilities, so compare on the raw structure.
        rules.push_back(Rule{type_dist(rng), Rational(1) / 2, {type_dist(rng)}});
        BranchingProcess extended(bp.types(), rules);
        for (std::size_t t = 0; t < bp.type_count(); ++t) {
            auto before = reachable_mask(bp, t);
            auto after = reachable_mask(extended, t);
            for (std::size_t y = 0; y < bp.type_count(); ++y) {
                if (before[y]) CHECK(after[y]);
            }
        }
    }
}

namespace {

// The Figure 1 prefix: root I with children (I, B); 1 -> 11 -> (111, 112);
// 2 -> (21, 22); 21 -> 211; 22 -> 221 labelled D.
TreePrefix figure_one_prefix(const BranchingProcess& bp) {
    const std::size_t I = bp.type_index("I");
    const std::size_t B = bp.type_index("B");
    const std::size_t D = bp.type_index("D");
    std::map<NodeAddress, TreePrefix::Node> nodes;
    nodes[{}] = {I, 2};
    nodes[{1}] = {I, 1};
    nodes[{2}] = {B, 2};
    nodes[{1, 1}] = {I, 2};
    nodes[{1, 1, 1}] = {I, 0};
    nodes[{1, 1, 2}] = {B, 0};
    nodes[{2, 1}] = {B, 1};
    nodes[{2, 2}] = {B, 1};
    nodes[{2, 1, 1}] = {B, 0};
    nodes[{2, 2, 1}] = {D, 0};
    return TreePrefix(nodes);
}

}  // namespace

TEST_CASE("prefix probability of the figure prefix is 27/100000") {
    BranchingProcess bp = intro_process();
    CHECK(prefix_probability(bp, figure_one_prefix(bp)) == Rational(27) / 100000);
}

TEST_CASE("single-node prefix has probability one") {
    BranchingProcess bp = intro_process();
    CHECK(prefix_probability(bp, TreePrefix::single_node(bp.type_index("I"))) == Rational(1));
}

TEST_CASE("two-level prefix B -> (B, B) has probability 3/10") {
    BranchingProcess bp = intro_process();
    const std::size_t B = bp.type_index("B");
    std::map<NodeAddress, TreePrefix::Node> nodes;
    nodes[{}] = {B, 2};
    nodes[{1}] = {B, 0};
    nodes[{2}] = {B, 0};
    CHECK(prefix_probability(bp, TreePrefix(nodes)) == Rational(3) / 10);
}

TEST_CASE("prefix not generated by the process is rejected") {
    BranchingProcess bp = intro_process();
    std::map<NodeAddress, TreePrefix::Node> nodes;
    nodes[{}] = {bp.type_index("I"), 1};
    nodes[{1}] = {bp.type_index("D"), 0};  // no rule I -> D
    CHECK_THROWS_AS(prefix_probability(bp, TreePrefix(nodes)), NotGeneratedError);
}

TEST_CASE("malformed prefixes are rejected at construction") {
    std::map<NodeAddress, TreePrefix::Node> no_root;
    no_root[{1}] = {0, 0};
    CHECK_THROWS_AS(TreePrefix{no_root}, std::invalid_argument);

    std::map<NodeAddress, TreePrefix::Node> missing_child;
    missing_child[{}] = {0, 2};
    missing_child[{1}] = {0, 0};
    CHECK_THROWS_AS(TreePrefix{missing_child}, std::invalid_argument);
}

TEST_CASE("one-level extension multiplies by the applied rule probability") {
    std::mt19937_64 rng(23);
    CorpusOptions opt;
    opt.max_types = 4;
    for (int round = 0; round < 25; ++round) {
        BranchingProcess bp = random_process(rng, opt);
        TreePrefix prefix = sample_prefix(bp, 0, 3, rng());
        Rational base = prefix_probability(bp, prefix);
        // Extend the lexicographically first leaf by its first rule.
        for (const auto& [address, node] : prefix.nodes()) {
            if (node.degree != 0) continue;
            std::size_t r = bp.rules_of(node.type).front();
            const Rule& rule = bp.rules()[r];
            auto nodes = prefix.nodes();
            nodes[address].degree = static_cast<std::uint32_t>(rule.successors.size());
            for (std::uint32_t k = 1; k <= rule.successors.size(); ++k) {
                NodeAddress child = address;
                child.push_back(k);
                nodes[child] = {rule.successors[k - 1], 0};
            }
            TreePrefix extended(nodes);
            CHECK(prefix_probability(bp, extended) == base * rule.probability);
            break;
        }
    }
}

TEST_CASE("full depth-d prefixes partition the space") {
    std::mt19937_64 rng(31);
    CorpusOptions opt;
    opt.max_types = 3;
    opt.max_arity = 2;
    for (int round = 0; round < 10; ++round) {
        BranchingProcess bp = random_process(rng, opt);
        for (unsigned depth = 0; depth <= 3; ++depth) {
            Rational total(0);
            for (const TreePrefix& prefix : enumerate_full_prefixes(bp, 0, depth)) {
                total += prefix_probability(bp, prefix);
            }
            CHECK(total == Rational(1));
        }
    }
}

TEST_CASE("process format reports malformed lines") {
    CHECK_THROWS_AS(parse_process_text("types: A\nrule A => 1 : A\n"), ParseError);
    CHECK_THROWS_AS(parse_process_text("rule A -> 1 : A\n"), ParseError);
    CHECK_THROWS_AS(parse_process_text("types: A\nrule A -> 1 : Q\n"), ParseError);
    CHECK_THROWS_AS(parse_process_text("types: A\nrule A -> 1 : A\ncolour A : -1\n"), ParseError);
    try {
        parse_process_text("types: A\nbogus\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("labels and colours parse into the model") {
    BranchingProcess bp = intro_process();
    CHECK(bp.has_labels());
    CHECK(bp.type_has_atom(bp.type_index("I"), "i"));
    CHECK(!bp.type_has_atom(bp.type_index("I"), "d"));
    CHECK(bp.proposition_alphabet() == std::vector<std::string>{"b", "d", "i"});
    CHECK(bp.has_total_colouring());
    CHECK(bp.colour(bp.type_index("B")) == 1);
}
