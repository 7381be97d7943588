#include "dtx/tree.hpp"

#include "dtx/error.hpp"

#include <algorithm>
#include <set>

namespace dtx {

namespace {

std::string node_label(const Node& n, NodeId id) {
    return n.name.empty() ? "#" + std::to_string(id) : "'" + n.name + "'";
}

} // namespace

DecisionTree::DecisionTree(FeatureSpace space, std::vector<std::string> classes,
                           std::vector<Node> nodes, NodeId root)
    : space_(std::move(space)), classes_(std::move(classes)), nodes_(std::move(nodes)), root_(root) {
    validate_structure();
    build_paths();
}

std::optional<ClassId> DecisionTree::find_class(std::string_view name) const {
    auto it = std::find(classes_.begin(), classes_.end(), name);
    if (it == classes_.end()) return std::nullopt;
    return static_cast<ClassId>(it - classes_.begin());
}

void DecisionTree::validate_structure() {
    if (classes_.empty()) throw Error(ErrorKind::Schema, "tree declares no classes");
    {
        std::set<std::string> seen;
        for (const auto& c : classes_)
            if (!seen.insert(c).second)
                throw Error(ErrorKind::DuplicateName, "duplicate class name '" + c + "'");
    }
    if (root_ >= nodes_.size()) throw Error(ErrorKind::DanglingChild, "root refers to a missing node");

    for (NodeId id = 0; id < nodes_.size(); ++id) {
        Node& n = nodes_[id];
        n.parent = kNoNode;
        n.parent_edge = 0;
        if (n.is_leaf()) {
            if (n.leaf_class >= classes_.size())
                throw Error(ErrorKind::UnknownClass, "leaf " + node_label(n, id) + " has an unknown class");
            continue;
        }
        FeatureId f = *n.feature;
        if (f >= space_.size())
            throw Error(ErrorKind::UnknownFeature, "node " + node_label(n, id) + " tests an unknown feature");
        if (n.edges.empty())
            throw Error(ErrorKind::NonCoveringEdges, "node " + node_label(n, id) + " has no edges");
        const std::size_t dsize = space_[f].domain_size();
        ValueSet covered(dsize);
        for (const Edge& e : n.edges) {
            if (e.values.domain_size() != dsize)
                throw Error(ErrorKind::Schema, "edge of node " + node_label(n, id) +
                                                   " does not match the domain of '" + space_[f].name + "'");
            if (e.values.empty())
                throw Error(ErrorKind::Schema, "edge of node " + node_label(n, id) + " admits no value");
            if (e.child >= nodes_.size())
                throw Error(ErrorKind::DanglingChild, "node " + node_label(n, id) + " points to a missing child");
            if (covered.intersects(e.values))
                throw Error(ErrorKind::OverlappingEdges,
                            "non-disjoint edges at node " + node_label(n, id) + " on '" + space_[f].name + "'");
            covered |= e.values;
        }
        if (!covered.is_full())
            throw Error(ErrorKind::NonCoveringEdges,
                        "non-covering edges at node " + node_label(n, id) + " on '" + space_[f].name + "'");
    }

    // Cycle detection over the whole node table (white/grey/black).
    {
        enum Color : unsigned char { White, Grey, Black };
        std::vector<Color> color(nodes_.size(), White);
        for (NodeId start = 0; start < nodes_.size(); ++start) {
            if (color[start] != White) continue;
            std::vector<std::pair<NodeId, std::size_t>> stack{{start, 0}};
            color[start] = Grey;
            while (!stack.empty()) {
                auto& [id, next] = stack.back();
                const Node& n = nodes_[id];
                if (next < n.edges.size()) {
                    NodeId c = n.edges[next++].child;
                    if (color[c] == Grey)
                        throw Error(ErrorKind::Cycle, "cycle through node " + node_label(nodes_[c], c));
                    if (color[c] == White) {
                        color[c] = Grey;
                        stack.emplace_back(c, 0);
                    }
                } else {
                    color[id] = Black;
                    stack.pop_back();
                }
            }
        }
    }

    for (NodeId id = 0; id < nodes_.size(); ++id) {
        const Node& n = nodes_[id];
        for (std::size_t e = 0; e < n.edges.size(); ++e) {
            Node& c = nodes_[n.edges[e].child];
            if (c.parent != kNoNode)
                throw Error(ErrorKind::MultipleParents,
                            "node " + node_label(c, n.edges[e].child) + " has more than one parent");
            c.parent = id;
            c.parent_edge = e;
        }
    }

    std::vector<bool> reached(nodes_.size(), false);
    std::vector<NodeId> todo{root_};
    while (!todo.empty()) {
        NodeId id = todo.back();
        todo.pop_back();
        reached[id] = true;
        for (const Edge& e : nodes_[id].edges) todo.push_back(e.child);
    }
    for (NodeId id = 0; id < nodes_.size(); ++id)
        if (!reached[id])
            throw Error(ErrorKind::UnreachableNode,
                        "node " + node_label(nodes_[id], id) + " is not reachable from the root");
}

void DecisionTree::build_paths() {
    paths_.clear();
    leaf_path_.assign(nodes_.size(), kNoNode);

    std::vector<PathStep> steps;
    // Explicit stack: (node, next edge index).
    std::vector<std::pair<NodeId, std::size_t>> stack{{root_, 0}};
    while (!stack.empty()) {
        auto& [id, next] = stack.back();
        const Node& n = nodes_[id];
        if (n.is_leaf()) {
            TreePath p;
            p.index = paths_.size();
            p.steps = steps;
            p.leaf = id;
            p.prediction = n.leaf_class;
            p.tests_per_feature.assign(space_.size(), 0);
            for (const PathStep& s : steps) {
                const Node& sn = nodes_[s.node];
                p.literals.conjoin({*sn.feature, sn.edges[s.edge].values});
                ++p.tests_per_feature[*sn.feature];
            }
            if (!p.literals.satisfiable())
                throw Error(ErrorKind::EmptyPath, "path to leaf " + node_label(n, id) +
                                                      " tests a feature with contradictory edges");
            leaf_path_[id] = p.index;
            paths_.push_back(std::move(p));
            stack.pop_back();
            if (!steps.empty()) steps.pop_back();
            continue;
        }
        if (next < n.edges.size()) {
            std::size_t e = next++;
            steps.push_back({id, e});
            stack.emplace_back(n.edges[e].child, 0);
        } else {
            stack.pop_back();
            if (!steps.empty()) steps.pop_back();
        }
    }

    std::vector<std::size_t> per_class(classes_.size(), 0);
    for (TreePath& p : paths_) {
        std::size_t k = ++per_class[p.prediction];
        if (classes_.size() == 2)
            p.id = std::string(p.prediction == 1 ? "P" : "Q") + std::to_string(k);
        else
            p.id = "C" + std::to_string(p.prediction) + "." + std::to_string(k);
    }
}

const TreePath& DecisionTree::path_of_leaf(NodeId leaf) const {
    if (leaf >= leaf_path_.size() || leaf_path_[leaf] == kNoNode)
        throw Error(ErrorKind::InvalidArgument, "node is not a leaf of this tree");
    return paths_[leaf_path_[leaf]];
}

const TreePath* DecisionTree::find_path(std::string_view id) const {
    for (const auto& p : paths_)
        if (p.id == id) return &p;
    return nullptr;
}

std::vector<const TreePath*> DecisionTree::contrary_paths(ClassId target) const {
    std::vector<const TreePath*> out;
    for (const auto& p : paths_)
        if (p.prediction != target) out.push_back(&p);
    return out;
}

std::vector<const TreePath*> DecisionTree::paths_of_class(ClassId target) const {
    std::vector<const TreePath*> out;
    for (const auto& p : paths_)
        if (p.prediction == target) out.push_back(&p);
    return out;
}

void DecisionTree::check_owns(const TreePath& path) const {
    if (&path >= paths_.data() && &path < paths_.data() + paths_.size()) return;
    if (path.index < paths_.size()) {
        const TreePath& mine = paths_[path.index];
        if (mine.leaf == path.leaf && mine.steps == path.steps && mine.literals == path.literals &&
            mine.prediction == path.prediction)
            return;
    }
    throw Error(ErrorKind::ForeignPath, "path '" + path.id + "' does not belong to this tree");
}

std::size_t DecisionTree::depth() const {
    std::size_t d = 0;
    for (const auto& p : paths_) d = std::max(d, p.steps.size());
    return d;
}

Classification classify(const DecisionTree& tree, const Instance& x) {
    validate_instance(tree.space(), x);
    NodeId id = tree.root();
    while (!tree.node(id).is_leaf()) {
        const Node& n = tree.node(id);
        ValueId v = x.values[*n.feature];
        auto it = std::find_if(n.edges.begin(), n.edges.end(),
                               [v](const Edge& e) { return e.values.contains(v); });
        id = it->child; // edges partition the domain
    }
    const TreePath& p = tree.path_of_leaf(id);
    return {p.prediction, &p};
}

TreeBuilder::TreeBuilder(FeatureSpace space, std::vector<std::string> classes)
    : space_(std::move(space)), classes_(std::move(classes)) {}

NodeId TreeBuilder::leaf(ClassId cls, std::string name) {
    Node n;
    n.name = std::move(name);
    n.leaf_class = cls;
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
}

NodeId TreeBuilder::internal(FeatureId feature, std::vector<Edge> edges, std::string name) {
    Node n;
    n.name = std::move(name);
    n.feature = feature;
    n.edges = std::move(edges);
    nodes_.push_back(std::move(n));
    return nodes_.size() - 1;
}

NodeId TreeBuilder::split(FeatureId feature, const std::vector<NodeId>& children, std::string name) {
    std::vector<Edge> edges;
    for (ValueId v = 0; v < children.size(); ++v)
        edges.push_back({space_.single(feature, v), children[v]});
    return internal(feature, std::move(edges), std::move(name));
}

DecisionTree TreeBuilder::build(NodeId root) && {
    for (NodeId id = 0; id < nodes_.size(); ++id)
        if (nodes_[id].name.empty()) nodes_[id].name = "n" + std::to_string(id);
    return DecisionTree(std::move(space_), std::move(classes_), std::move(nodes_), root);
}

} // namespace dtx
