#include "dtx/metrics.hpp"

#include "dtx/error.hpp"
#include "dtx/tree_io.hpp"
#include "dtx/xplain.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace dtx {

TreeReport tree_report(const DecisionTree& tree, std::string name) {
    TreeReport r;
    r.name = std::move(name);
    r.depth = tree.depth();
    r.nodes = tree.node_count();
    r.paths = tree.paths().size();
    r.space_size = tree.space().point_count();

    Rational sum_pct = 0;
    for (const TreePath& p : tree.paths()) {
        PathRecord rec;
        rec.id = p.id;
        rec.literal_count = p.literals.size();
        rec.points = path_point_count(tree.space(), p.literals);
        const RedundancyVerdict v = is_path_redundant(tree, p);
        rec.redundant = v.redundant;
        if (v.witness) rec.witness = tree.space()[*v.witness].name;
        rec.explanation_size = one_pi_explanation_path(tree, p).literals.size();
        if (rec.literal_count > 0)
            rec.redundant_literal_pct =
                Rational(100 * static_cast<long long>(rec.literal_count - rec.explanation_size),
                         static_cast<long long>(rec.literal_count));

        if (rec.redundant) {
            ++r.redundant_paths;
            r.redundant_points += rec.points;
            sum_pct += rec.redundant_literal_pct;
            if (!r.pct_min || rec.redundant_literal_pct < *r.pct_min) r.pct_min = rec.redundant_literal_pct;
            if (!r.pct_max || rec.redundant_literal_pct > *r.pct_max) r.pct_max = rec.redundant_literal_pct;
        }
        r.details.push_back(std::move(rec));
    }
    if (r.paths > 0)
        r.pct_redundant = Rational(100 * static_cast<long long>(r.redundant_paths), static_cast<long long>(r.paths));
    r.pct_coverage = Rational(BigInt(100) * r.redundant_points, r.space_size);
    if (r.redundant_paths > 0) r.pct_avg = sum_pct / static_cast<long long>(r.redundant_paths);
    return r;
}

long long display_pct(const Rational& pct) {
    BigInt q = boost::multiprecision::numerator(pct) / boost::multiprecision::denominator(pct);
    return static_cast<long long>(q);
}

std::vector<BatchRow> batch_report(const std::vector<std::filesystem::path>& files) {
    std::vector<BatchRow> rows;
    rows.reserve(files.size());
    for (const auto& file : files) {
        try {
            DecisionTree tree = load_tree(file);
            rows.emplace_back(tree_report(tree, file.stem().string()));
        } catch (const Error& e) {
            rows.emplace_back(BatchError{file.string(), e.what()});
        }
    }
    return rows;
}

namespace {

using json = nlohmann::ordered_json;

std::string exact(const Rational& q) {
    std::ostringstream ss;
    ss << boost::multiprecision::numerator(q);
    if (boost::multiprecision::denominator(q) != 1) ss << "/" << boost::multiprecision::denominator(q);
    return ss.str();
}

json pct_json(const std::optional<Rational>& q) {
    if (!q) return nullptr;
    return json{{"exact", exact(*q)}, {"display", display_pct(*q)}};
}

json report_json(const TreeReport& r) {
    json j;
    j["name"] = r.name;
    j["depth"] = r.depth;
    j["nodes"] = r.nodes;
    j["paths"] = r.paths;
    j["redundant_paths"] = r.redundant_paths;
    j["space_size"] = r.space_size.str();
    j["redundant_points"] = r.redundant_points.str();
    j["pct_redundant"] = pct_json(r.pct_redundant);
    j["pct_coverage"] = pct_json(r.pct_coverage);
    j["pct_min"] = pct_json(r.pct_min);
    j["pct_max"] = pct_json(r.pct_max);
    j["pct_avg"] = pct_json(r.pct_avg);
    json details = json::array();
    for (const auto& d : r.details) {
        details.push_back(json{{"path", d.id},
                               {"literals", d.literal_count},
                               {"explanation", d.explanation_size},
                               {"redundant", d.redundant},
                               {"witness", d.witness.empty() ? json(nullptr) : json(d.witness)},
                               {"points", d.points.str()}});
    }
    j["details"] = std::move(details);
    return j;
}

std::string cell(const std::optional<Rational>& q) {
    return q ? std::to_string(display_pct(*q)) : std::string("-");
}

} // namespace

std::string report_to_json(const std::vector<BatchRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) {
        if (const auto* r = std::get_if<TreeReport>(&row))
            arr.push_back(report_json(*r));
        else {
            const auto& e = std::get<BatchError>(row);
            arr.push_back(json{{"file", e.file}, {"error", e.message}});
        }
    }
    return arr.dump(2) + "\n";
}

std::string report_to_text(const std::vector<BatchRow>& rows) {
    std::vector<std::vector<std::string>> table;
    table.push_back({"Tree", "D", "#N", "#P", "%R", "%C", "%m", "%M", "%avg"});

    std::vector<const TreeReport*> ok;
    std::vector<const BatchError*> errors;
    for (const auto& row : rows) {
        if (const auto* r = std::get_if<TreeReport>(&row)) {
            ok.push_back(r);
            table.push_back({r->name, std::to_string(r->depth), std::to_string(r->nodes),
                             std::to_string(r->paths), cell(r->pct_redundant), cell(r->pct_coverage),
                             cell(r->pct_min), cell(r->pct_max), cell(r->pct_avg)});
        } else {
            errors.push_back(&std::get<BatchError>(row));
        }
    }

    if (ok.size() > 1) {
        // Column means; redundant-path statistics over trees where defined.
        auto mean = [&](auto get) -> std::optional<Rational> {
            Rational sum = 0;
            long long n = 0;
            for (const auto* r : ok)
                if (auto v = get(*r)) {
                    sum += *v;
                    ++n;
                }
            if (n == 0) return std::nullopt;
            return sum / n;
        };
        auto count_mean = [&](auto get) {
            Rational sum = 0;
            for (const auto* r : ok) sum += static_cast<long long>(get(*r));
            return std::to_string(display_pct(sum / static_cast<long long>(ok.size())));
        };
        table.push_back({"(mean)", count_mean([](const TreeReport& r) { return r.depth; }),
                         count_mean([](const TreeReport& r) { return r.nodes; }),
                         count_mean([](const TreeReport& r) { return r.paths; }),
                         cell(mean([](const TreeReport& r) { return std::optional<Rational>(r.pct_redundant); })),
                         cell(mean([](const TreeReport& r) { return std::optional<Rational>(r.pct_coverage); })),
                         cell(mean([](const TreeReport& r) { return r.pct_min; })),
                         cell(mean([](const TreeReport& r) { return r.pct_max; })),
                         cell(mean([](const TreeReport& r) { return r.pct_avg; }))});
    }

    // Display width in code points; tree names may be UTF-8.
    auto width = [](const std::string& s) {
        std::size_t w = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80) ++w;
        return w;
    };
    std::vector<std::size_t> widths(table.front().size(), 0);
    for (const auto& row : table)
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], width(row[c]));

    std::ostringstream out;
    out << "# D = max internal nodes on a root-leaf path; #N = all nodes; percentages truncated\n";
    for (const auto& row : table) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            const std::string pad(widths[c] - width(row[c]), ' ');
            if (c == 0)
                out << row[c] << pad;
            else
                out << "  " << pad << row[c];
        }
        out << "\n";
    }
    for (const auto* e : errors) out << "error: " << e->file << ": " << e->message << "\n";
    return out.str();
}

} // namespace dtx
