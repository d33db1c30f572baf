#include "semcp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>

namespace semcp {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        toks.push_back(t);
    }
    return toks;
}

NodeKind parse_kind(const std::string& s, int& arity, std::size_t lineno) {
    if (s == "cont") return NodeKind::Continuous;
    if (s == "bin") return NodeKind::Binary;
    if (s == "action") return NodeKind::Action;
    if (s == "outcome") return NodeKind::Outcome;
    if (s.rfind("cat:", 0) == 0) {
        arity = std::stoi(s.substr(4));
        if (arity < 2) throw Error("line " + std::to_string(lineno) + ": categorical arity must be >= 2");
        return NodeKind::Categorical;
    }
    throw Error("line " + std::to_string(lineno) + ": unknown node kind '" + s + "'");
}

std::string kind_str(const NodeDef& n) {
    switch (n.kind) {
    case NodeKind::Continuous: return "cont";
    case NodeKind::Binary: return "bin";
    case NodeKind::Categorical: return "cat:" + std::to_string(n.arity);
    case NodeKind::Action: return "action";
    case NodeKind::Outcome: return "outcome";
    }
    return "cont";
}

} // namespace

CausalGraph::CausalGraph(std::vector<NodeDef> nodes,
                         std::vector<std::pair<std::string, std::string>> edges,
                         std::vector<std::string> intervened)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (by_name_.count(nodes_[i].name))
            throw Error("duplicate node '" + nodes_[i].name + "'");
        by_name_[nodes_[i].name] = i;
        if (nodes_[i].kind == NodeKind::Action) {
            if (!action_.empty()) throw Error("more than one action node");
            action_ = nodes_[i].name;
        }
        if (nodes_[i].kind == NodeKind::Outcome) {
            if (!outcome_.empty()) throw Error("more than one outcome node");
            outcome_ = nodes_[i].name;
        }
    }
    for (const auto& t : intervened) intervened_.insert(t);
    parents_.resize(nodes_.size());
    children_.resize(nodes_.size());
    for (const auto& [p, c] : edges_) {
        parents_[index(c)].push_back(p);
        children_[index(p)].push_back(c);
    }
    validate();
}

std::size_t CausalGraph::index(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw Error("unknown node '" + name + "'");
    return it->second;
}

bool CausalGraph::has_node(const std::string& name) const { return by_name_.count(name) > 0; }

const NodeDef& CausalGraph::node(const std::string& name) const { return nodes_[index(name)]; }

const std::vector<std::string>& CausalGraph::parents(const std::string& node) const {
    return parents_[index(node)];
}

const std::vector<std::string>& CausalGraph::children(const std::string& node) const {
    return children_[index(node)];
}

void CausalGraph::validate() const {
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& e : edges_) {
        index(e.first);
        index(e.second);
        if (!seen.insert(e).second)
            throw Error("duplicate edge " + e.first + " -> " + e.second);
        if (e.first == e.second) throw Error("self loop on '" + e.first + "'");
    }
    for (const auto& t : intervened_) {
        index(t);
        if (t == action_) throw Error("action cannot intervene on itself");
    }
    if (!action_.empty() && !parents_[index(action_)].empty())
        throw Error("action node '" + action_ + "' must have no parents");
    // cycle check doubles as the reachability pass for topological_order
    topological_order();
}

std::vector<std::string> CausalGraph::topological_order() const {
    std::map<std::string, int> indeg;
    for (const auto& n : nodes_) indeg[n.name] = 0;
    for (const auto& e : edges_) indeg[e.second] += 1;
    std::set<std::string> ready; // ordered: lexicographic tie-break
    for (const auto& [name, d] : indeg)
        if (d == 0) ready.insert(name);
    std::vector<std::string> order;
    order.reserve(nodes_.size());
    while (!ready.empty()) {
        std::string n = *ready.begin();
        ready.erase(ready.begin());
        order.push_back(n);
        for (const auto& c : children_[index(n)]) {
            if (--indeg[c] == 0) ready.insert(c);
        }
    }
    if (order.size() != nodes_.size()) throw Error("cycle detected in graph");
    return order;
}

std::set<std::string> CausalGraph::descendants(const std::string& node) const {
    std::set<std::string> out;
    std::queue<std::string> q;
    q.push(node);
    while (!q.empty()) {
        auto n = q.front();
        q.pop();
        for (const auto& c : children_[index(n)])
            if (out.insert(c).second) q.push(c);
    }
    return out;
}

std::set<std::string> CausalGraph::action_affected() const {
    std::set<std::string> out;
    for (const auto& t : intervened_) {
        out.insert(t);
        auto d = descendants(t);
        out.insert(d.begin(), d.end());
    }
    return out;
}

CausalGraph CausalGraph::parse(const std::string& text) {
    std::vector<NodeDef> nodes;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::string> intervened;
    std::string action_name;

    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::set<std::string> declared;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (toks[0] == "node") {
            if (toks.size() != 3) throw Error(where + "expected 'node <name> <kind>'");
            NodeDef def;
            def.name = toks[1];
            def.kind = parse_kind(toks[2], def.arity, lineno);
            if (def.kind == NodeKind::Action) action_name = def.name;
            if (!declared.insert(def.name).second)
                throw Error(where + "duplicate node '" + def.name + "'");
            nodes.push_back(def);
        } else if (toks[0] == "edge") {
            if (toks.size() != 4 || toks[2] != "->")
                throw Error(where + "expected 'edge <parent> -> <child>'");
            if (!declared.count(toks[1])) throw Error(where + "undeclared node '" + toks[1] + "'");
            if (!declared.count(toks[3])) throw Error(where + "undeclared node '" + toks[3] + "'");
            edges.emplace_back(toks[1], toks[3]);
        } else if (toks[0] == "intervene") {
            if (toks.size() != 4 || toks[2] != "=>")
                throw Error(where + "expected 'intervene <action> => <target>'");
            if (toks[1] != action_name)
                throw Error(where + "'" + toks[1] + "' is not the declared action node");
            if (!declared.count(toks[3])) throw Error(where + "undeclared node '" + toks[3] + "'");
            intervened.push_back(toks[3]);
        } else {
            throw Error(where + "unknown directive '" + toks[0] + "'");
        }
    }
    try {
        return CausalGraph(std::move(nodes), std::move(edges), std::move(intervened));
    } catch (const Error& e) {
        throw Error(std::string("graph validation: ") + e.what());
    }
}

CausalGraph CausalGraph::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

std::string CausalGraph::serialize() const {
    std::ostringstream out;
    for (const auto& n : nodes_) out << "node " << n.name << " " << kind_str(n) << "\n";
    for (const auto& [p, c] : edges_) out << "edge " << p << " -> " << c << "\n";
    for (const auto& t : intervened_) out << "intervene " << action_ << " => " << t << "\n";
    return out.str();
}

} // namespace semcp
