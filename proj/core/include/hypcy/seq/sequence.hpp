#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypcy/homology/intmatrix.hpp"

namespace hypcy {

struct SeqNode {
    std::string name;
    std::optional<FgAbGroup> known;
};

/// Map from node i to node i+1.
struct SeqArrow {
    enum class Tag { None, Zero, Injective, Surjective, Isomorphism };
    Tag tag = Tag::None;
    std::optional<int> rank;            // rank of the image
    std::optional<IntMatrix> matrix;    // explicit map between free groups
    int kernel_summand = 0;             // the kernel contains a direct summand of this rank
    std::string fact;                   // axiom the annotation comes from
};

struct SeqFact {
    std::string name;
    std::string source;
    std::vector<std::pair<std::string, std::string>> rank_equal;  // node names with equal rank
};

/**
 * A finite exact sequence n_0 -> n_1 -> ... -> n_{L-1}, exact at every
 * interior node.
 */
struct SequenceProblem {
    std::vector<SeqNode> nodes;
    std::vector<SeqArrow> arrows;
    std::vector<SeqFact> facts;

    int index_of(const std::string& name) const;  // -1 if absent
    /// Throws std::invalid_argument on malformed input.
    void validate() const;
    nlohmann::json to_json() const;
    static SequenceProblem from_json(const nlohmann::json& j);
};

struct Deduction {
    std::string rule;
    std::vector<std::string> inputs;  // node names
    std::string conclusion;
};

struct SolveResult {
    enum class Status { Solved, Underdetermined, Contradiction };
    Status status = Status::Underdetermined;
    std::vector<std::optional<FgAbGroup>> groups;  // per node
    std::vector<std::optional<int>> arrow_ranks;
    std::vector<Deduction> log;
    std::vector<std::string> residual;
    std::string witness;

    std::optional<FgAbGroup> group(const SequenceProblem& p, const std::string& name) const;
    nlohmann::json to_json(const SequenceProblem& p) const;
};

std::string to_string(SolveResult::Status s);

/// Deduction-only solver; never picks among several consistent answers.
SolveResult solve(const SequenceProblem& p);

}  // namespace hypcy
