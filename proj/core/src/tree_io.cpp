#include "dtx/tree_io.hpp"

#include "dtx/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace dtx {

using json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text, std::string_view what) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Syntax, std::string(what) + ": syntax error at byte " +
                                           std::to_string(e.byte) + ": " + e.what());
    }
}

const json& member(const json& obj, const char* key, std::string_view where) {
    auto it = obj.find(key);
    if (it == obj.end())
        throw Error(ErrorKind::Schema, std::string(where) + ": missing \"" + key + "\"");
    return *it;
}

std::string as_string(const json& j, std::string_view where) {
    if (!j.is_string()) throw Error(ErrorKind::Schema, std::string(where) + ": expected a string");
    return j.get<std::string>();
}

const json& as_array(const json& j, std::string_view where) {
    if (!j.is_array()) throw Error(ErrorKind::Schema, std::string(where) + ": expected an array");
    return j;
}

ValueSet parse_values(const Feature& feat, const json& values, std::string_view where) {
    ValueSet set(feat.domain_size());
    for (const auto& v : as_array(values, where)) {
        auto name = as_string(v, where);
        auto id = feat.find_value(name);
        if (!id)
            throw Error(ErrorKind::UnknownValue,
                        std::string(where) + ": '" + name + "' is not a value of '" + feat.name + "'");
        set.insert(*id);
    }
    return set;
}

// Keys that denote ordinal / threshold tests in common tree dumps.
constexpr const char* kOrdinalKeys[] = {"op", "operator", "threshold", "lt", "le", "gt", "ge", "cmp"};

} // namespace

DecisionTree parse_tree(std::string_view text) {
    json doc = parse_json(text, "tree");
    if (!doc.is_object()) throw Error(ErrorKind::Schema, "tree: top level must be an object");

    std::vector<Feature> features;
    for (const auto& jf : as_array(member(doc, "features", "tree"), "features")) {
        if (!jf.is_object()) throw Error(ErrorKind::Schema, "features: entries must be objects");
        Feature f;
        f.name = as_string(member(jf, "name", "feature"), "feature name");
        for (const auto& v : as_array(member(jf, "domain", "feature '" + f.name + "'"), "domain"))
            f.domain.push_back(as_string(v, "domain of '" + f.name + "'"));
        features.push_back(std::move(f));
    }
    FeatureSpace space(std::move(features));

    std::vector<std::string> classes;
    for (const auto& c : as_array(member(doc, "classes", "tree"), "classes"))
        classes.push_back(as_string(c, "classes"));

    const json& jnodes = member(doc, "nodes", "tree");
    if (!jnodes.is_object()) throw Error(ErrorKind::Schema, "nodes: expected an object");

    std::map<std::string, NodeId> ids;
    for (auto it = jnodes.begin(); it != jnodes.end(); ++it) ids.emplace(it.key(), ids.size());

    auto child_id = [&](const std::string& name, std::string_view where) {
        auto it = ids.find(name);
        if (it == ids.end())
            throw Error(ErrorKind::DanglingChild, std::string(where) + ": no node named '" + name + "'");
        return it->second;
    };

    std::vector<Node> nodes(ids.size());
    for (auto it = jnodes.begin(); it != jnodes.end(); ++it) {
        const std::string where = "node '" + it.key() + "'";
        const json& jn = it.value();
        if (!jn.is_object()) throw Error(ErrorKind::Schema, where + ": expected an object");
        Node& n = nodes[ids.at(it.key())];
        n.name = it.key();
        const bool is_leaf = jn.contains("leaf");
        const bool is_test = jn.contains("feature") || jn.contains("edges");
        if (is_leaf == is_test)
            throw Error(ErrorKind::Schema, where + ": needs either \"leaf\" or \"feature\"/\"edges\"");
        if (is_leaf) {
            auto cname = as_string(jn["leaf"], where);
            auto pos = std::find(classes.begin(), classes.end(), cname);
            if (pos == classes.end())
                throw Error(ErrorKind::UnknownClass, where + ": unknown class '" + cname + "'");
            n.leaf_class = static_cast<ClassId>(pos - classes.begin());
            continue;
        }
        auto fname = as_string(member(jn, "feature", where), where);
        auto fid = space.find_feature(fname);
        if (!fid) throw Error(ErrorKind::UnknownFeature, where + ": unknown feature '" + fname + "'");
        n.feature = *fid;
        for (const auto& je : as_array(member(jn, "edges", where), where)) {
            if (!je.is_object()) throw Error(ErrorKind::Schema, where + ": edges must be objects");
            for (const char* key : kOrdinalKeys)
                if (je.contains(key))
                    throw Error(ErrorKind::UnsupportedLiteral,
                                where + ": unsupported literal kind \"" + key +
                                    "\" (only categorical value sets are supported)");
            Edge e;
            e.values = parse_values(space[*fid], member(je, "values", where), where);
            e.child = child_id(as_string(member(je, "child", where), where), where);
            n.edges.push_back(std::move(e));
        }
    }

    NodeId root = child_id(as_string(member(doc, "root", "tree"), "root"), "root");
    return DecisionTree(std::move(space), std::move(classes), std::move(nodes), root);
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open '" + file.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DecisionTree load_tree(const std::filesystem::path& file) {
    auto text = read_file(file);
    try {
        return parse_tree(text);
    } catch (const Error& e) {
        throw Error(e.kind(), file.string() + ": " + e.what());
    }
}

std::string serialize_tree(const DecisionTree& tree) {
    const FeatureSpace& space = tree.space();
    json doc = json::object();
    json features = json::array();
    for (const auto& f : space.features())
        features.push_back(json{{"name", f.name}, {"domain", f.domain}});
    doc["features"] = std::move(features);
    doc["classes"] = tree.classes();
    doc["root"] = tree.node(tree.root()).name;
    json nodes = json::object();
    for (NodeId id = 0; id < tree.node_count(); ++id) {
        const Node& n = tree.node(id);
        if (n.is_leaf()) {
            nodes[n.name] = json{{"leaf", tree.classes()[n.leaf_class]}};
            continue;
        }
        const Feature& f = space[*n.feature];
        json edges = json::array();
        for (const Edge& e : n.edges) {
            json values = json::array();
            for (auto v : e.values.values()) values.push_back(f.domain[v]);
            edges.push_back(json{{"values", std::move(values)}, {"child", tree.node(e.child).name}});
        }
        nodes[n.name] = json{{"feature", f.name}, {"edges", std::move(edges)}};
    }
    doc["nodes"] = std::move(nodes);
    return doc.dump(2) + "\n";
}

Instance parse_instance(const FeatureSpace& space, std::string_view json_text) {
    json doc = parse_json(json_text, "instance");
    if (!doc.is_array()) throw Error(ErrorKind::InvalidInstance, "instance: expected a JSON array of values");
    if (doc.size() != space.size())
        throw Error(ErrorKind::InvalidInstance, "instance: expected " + std::to_string(space.size()) +
                                                    " values, got " + std::to_string(doc.size()));
    Instance x;
    for (FeatureId f = 0; f < space.size(); ++f) {
        if (!doc[f].is_string()) throw Error(ErrorKind::InvalidInstance, "instance: values must be strings");
        auto name = doc[f].get<std::string>();
        auto v = space[f].find_value(name);
        if (!v)
            throw Error(ErrorKind::UnknownValue,
                        "instance: '" + name + "' is not a value of '" + space[f].name + "'");
        x.values.push_back(*v);
    }
    return x;
}

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_csv_line(std::string_view line, std::size_t lineno) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            out.push_back(was_quoted ? cur : trim(cur));
            cur.clear();
            was_quoted = false;
        } else {
            cur += c;
        }
    }
    if (quoted)
        throw Error(ErrorKind::Syntax, "csv line " + std::to_string(lineno) + ": unterminated quote");
    out.push_back(was_quoted ? cur : trim(cur));
    return out;
}

} // namespace

std::vector<Instance> parse_instances_csv(const FeatureSpace& space, std::string_view csv_text) {
    std::vector<std::vector<std::string>> rows;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= csv_text.size()) {
        auto nl = csv_text.find('\n', pos);
        auto line = csv_text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++lineno;
        if (!trim(line).empty()) rows.push_back(split_csv_line(line, lineno));
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    if (rows.empty()) throw Error(ErrorKind::InvalidInstance, "csv: missing header row");

    // Columns that do not name a feature (labels, ids) are ignored.
    const auto& header = rows.front();
    std::vector<std::optional<std::size_t>> column_of(space.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        auto f = space.find_feature(header[c]);
        if (!f) continue;
        if (column_of[*f])
            throw Error(ErrorKind::DuplicateName, "csv: column '" + header[c] + "' appears twice");
        column_of[*f] = c;
    }
    for (FeatureId f = 0; f < space.size(); ++f)
        if (!column_of[f])
            throw Error(ErrorKind::InvalidInstance, "csv: header lacks feature '" + space[f].name + "'");

    std::vector<Instance> out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.size() != header.size())
            throw Error(ErrorKind::InvalidInstance, "csv row " + std::to_string(r) + ": expected " +
                                                        std::to_string(header.size()) + " fields");
        Instance x;
        for (FeatureId f = 0; f < space.size(); ++f) {
            const auto& cell = row[*column_of[f]];
            auto v = space[f].find_value(cell);
            if (!v)
                throw Error(ErrorKind::UnknownValue, "csv row " + std::to_string(r) + ": '" + cell +
                                                         "' is not a value of '" + space[f].name + "'");
            x.values.push_back(*v);
        }
        out.push_back(std::move(x));
    }
    return out;
}

LiteralSet parse_literals(const FeatureSpace& space, std::string_view json_text) {
    json doc = parse_json(json_text, "explanation");
    if (!doc.is_object()) throw Error(ErrorKind::Schema, "explanation: expected a JSON object");
    std::vector<Literal> lits;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        auto f = space.find_feature(it.key());
        if (!f) throw Error(ErrorKind::UnknownFeature, "explanation: unknown feature '" + it.key() + "'");
        const std::string where = "explanation literal on '" + it.key() + "'";
        ValueSet allowed = it.value().is_string()
                               ? parse_values(space[*f], json::array({it.value()}), where)
                               : parse_values(space[*f], it.value(), where);
        if (allowed.empty()) throw Error(ErrorKind::InconsistentLiterals, where + ": admits no value");
        lits.push_back({*f, std::move(allowed)});
    }
    return LiteralSet(std::move(lits));
}

std::string literals_to_json(const FeatureSpace& space, const LiteralSet& lits) {
    json doc = json::object();
    for (const auto& l : lits) {
        const Feature& f = space[l.feature];
        auto vals = l.allowed.values();
        if (vals.size() == 1) {
            doc[f.name] = f.domain[vals.front()];
        } else {
            json arr = json::array();
            for (auto v : vals) arr.push_back(f.domain[v]);
            doc[f.name] = std::move(arr);
        }
    }
    return doc.dump();
}

} // namespace dtx
