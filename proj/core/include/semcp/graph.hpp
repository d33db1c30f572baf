#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "semcp/error.hpp"

namespace semcp {

enum class NodeKind { Continuous, Binary, Categorical, Action, Outcome };

struct NodeDef {
    std::string name;
    NodeKind kind = NodeKind::Continuous;
    int arity = 0; // categories for Categorical, actions for Action, else 0
};

/// Directed acyclic causal graph over covariates, one action node and one
/// outcome node. The action is never an ordinary parent: the nodes it acts
/// on are declared separately as intervention targets, so parent sets stay
/// purely structural.
///
/// Immutable after construction; safe to share across threads.
class CausalGraph {
public:
    CausalGraph(std::vector<NodeDef> nodes,
                std::vector<std::pair<std::string, std::string>> edges,
                std::vector<std::string> intervened);

    /// Parses the text graph format:
    ///   node <name> <cont|bin|cat:<k>|action|outcome>
    ///   edge <parent> -> <child>
    ///   intervene <action> => <target>
    /// '#' starts a comment. Throws Error with a line number on bad input.
    static CausalGraph parse(const std::string& text);
    static CausalGraph parse_file(const std::string& path);

    /// Inverse of parse() up to comments and ordering.
    std::string serialize() const;

    const std::vector<NodeDef>& nodes() const { return nodes_; }
    const std::vector<std::pair<std::string, std::string>>& edges() const { return edges_; }

    bool has_node(const std::string& name) const;
    const NodeDef& node(const std::string& name) const;

    /// Pa(node): declared in-neighbors, in declaration order.
    const std::vector<std::string>& parents(const std::string& node) const;
    const std::vector<std::string>& children(const std::string& node) const;

    /// Parents first, lexicographic among ready nodes so the order is
    /// reproducible across runs.
    std::vector<std::string> topological_order() const;

    /// Nodes the action intervenes on.
    const std::set<std::string>& intervened() const { return intervened_; }
    bool is_intervened(const std::string& node) const { return intervened_.count(node) > 0; }

    /// Name of the action node, empty if the graph has none.
    const std::string& action_node() const { return action_; }
    const std::string& outcome_node() const { return outcome_; }

    /// Intervened nodes plus everything downstream of them.
    std::set<std::string> action_affected() const;

    /// All descendants of `node` (excluding itself).
    std::set<std::string> descendants(const std::string& node) const;

private:
    void validate() const;
    std::size_t index(const std::string& name) const;

    std::vector<NodeDef> nodes_;
    std::vector<std::pair<std::string, std::string>> edges_;
    std::set<std::string> intervened_;
    std::string action_;
    std::string outcome_;
    std::map<std::string, std::size_t> by_name_;
    std::vector<std::vector<std::string>> parents_;
    std::vector<std::vector<std::string>> children_;
};

} // namespace semcp
