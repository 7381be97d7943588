#include "cli.hpp"

#include "dtx/error.hpp"
#include "dtx/metrics.hpp"
#include "dtx/mhs.hpp"
#include "dtx/oracle.hpp"
#include "dtx/random_tree.hpp"
#include "dtx/tree.hpp"
#include "dtx/tree_io.hpp"
#include "dtx/xplain.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace dtx::cli {

namespace {

using json = nlohmann::ordered_json;

struct Mismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    bool verify = false;
    std::string format = "json";
    std::uint64_t max_points = OracleBudget{}.max_points;
    std::size_t max_universe = OracleBudget{}.max_universe;

    std::vector<std::string> trees;
    std::string instance;
    std::string csv;
    std::string path_id;
    bool all = false;
    std::string mode = "restricted";
    std::optional<std::size_t> limit;
    std::string explanation;
    std::string class_name;
    std::uint64_t seed = 1;
    std::size_t random_trees = 100;
};

class Command {
public:
    Command(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

    bool text() const { return opts_.format == "text"; }

    const DecisionTree& tree() {
        if (!tree_) tree_ = std::make_unique<DecisionTree>(load_tree(opts_.trees.at(0)));
        return *tree_;
    }

    const Oracle& oracle() {
        if (!oracle_) oracle_ = std::make_unique<Oracle>(tree(), OracleBudget{opts_.max_points, opts_.max_universe});
        return *oracle_;
    }

    // Instances from -i or --csv, in input order.
    std::vector<Instance> instances() {
        if (!opts_.instance.empty()) return {parse_instance(tree().space(), opts_.instance)};
        return parse_instances_csv(tree().space(), read_file(opts_.csv));
    }

    bool has_instances() const { return !opts_.instance.empty() || !opts_.csv.empty(); }

    const TreePath& path_by_id(const std::string& id) {
        const TreePath* p = tree().find_path(id);
        if (p == nullptr) throw Error(ErrorKind::InvalidArgument, "no path named '" + id + "' in the tree");
        return *p;
    }

    ExplanationMode mode() const {
        if (opts_.mode == "unrestricted") return ExplanationMode::PathUnrestricted;
        return ExplanationMode::PathRestricted;
    }

    std::string lits_json(const LiteralSet& lits) { return literals_to_json(tree().space(), lits); }
    std::string lits_text(const LiteralSet& lits) { return to_string(lits, tree().space()); }
    const std::string& class_name(ClassId c) { return tree().classes().at(c); }

    // Sources named on the command line, resolved to what the chosen mode needs.
    std::vector<ExplanationSource> sources() {
        std::vector<ExplanationSource> out;
        if (!opts_.path_id.empty()) {
            if (mode() == ExplanationMode::PathUnrestricted)
                throw UsageError("--mode unrestricted needs an instance (-i or --csv), not --path");
            out.emplace_back(path_by_id(opts_.path_id).index);
            return out;
        }
        for (auto& x : instances()) {
            if (mode() == ExplanationMode::PathRestricted)
                out.emplace_back(classify(tree(), x).path->index);
            else
                out.emplace_back(std::move(x));
        }
        return out;
    }

    LiteralSet universe_of(const ExplanationSource& src) {
        if (const auto* idx = std::get_if<std::size_t>(&src)) return tree().paths().at(*idx).literals;
        return LiteralSet::from_instance(std::get<Instance>(src), tree().space());
    }

    void verify_pi(const LiteralSet& lits, ClassId target) {
        const Oracle& o = oracle();
        if (!o.entails(lits, target))
            throw Mismatch("oracle: " + lits_text(lits) + " does not entail class " + class_name(target));
        for (const auto& l : lits)
            if (o.entails(lits.without(l.feature), target))
                throw Mismatch("oracle: " + lits_text(lits) + " is not subset-minimal");
    }

    int classify_cmd() {
        for (const auto& x : instances()) {
            auto [cls, path] = classify(tree(), x);
            if (opts_.verify) {
                if (!path->literals.satisfied_by(x) || !oracle().entails(path->literals, cls))
                    throw Mismatch("oracle: path " + path->id + " does not explain the classification");
            }
            if (text())
                out_ << "class=" << class_name(cls) << " path=" << path->id << " " << lits_text(path->literals)
                     << "\n";
            else
                out_ << json{{"class", class_name(cls)},
                             {"path", path->id},
                             {"literals", json::parse(lits_json(path->literals))}}
                            .dump()
                     << "\n";
        }
        return kOk;
    }

    int redundancy_cmd() {
        std::vector<const TreePath*> selected;
        if (!opts_.path_id.empty())
            selected.push_back(&path_by_id(opts_.path_id));
        else
            for (const auto& p : tree().paths()) selected.push_back(&p);

        json arr = json::array();
        for (const TreePath* p : selected) {
            const RedundancyVerdict v = is_path_redundant(tree(), *p);
            if (opts_.verify) {
                if (oracle().is_redundant(*p) != v.redundant)
                    throw Mismatch("oracle disagrees on the redundancy of path " + p->id);
                if (v.witness && !oracle().entails(p->literals.without(*v.witness), p->prediction))
                    throw Mismatch("oracle: witness of path " + p->id + " is not droppable");
            }
            const std::string witness = v.witness ? tree().space()[*v.witness].name : "";
            if (text()) {
                out_ << p->id << " " << (v.redundant ? "redundant" : "irredundant");
                if (v.witness) out_ << " witness=" << witness;
                out_ << " " << lits_text(p->literals) << "\n";
            } else {
                arr.push_back(json{{"path", p->id},
                                   {"class", class_name(p->prediction)},
                                   {"redundant", v.redundant},
                                   {"witness", v.witness ? json(witness) : json(nullptr)}});
            }
        }
        if (!text()) out_ << (opts_.path_id.empty() ? arr.dump() : arr.front().dump()) << "\n";
        return kOk;
    }

    int explain_cmd() {
        for (const auto& src : sources()) {
            Explanation e = (mode() == ExplanationMode::PathRestricted)
                                ? one_pi_explanation_path(tree(), tree().paths().at(std::get<std::size_t>(src)))
                                : one_pi_explanation_instance(tree(), std::get<Instance>(src));
            if (opts_.verify) {
                if (!e.literals.is_subset_of(universe_of(src)))
                    throw Mismatch("explanation is not contained in its source literals");
                verify_pi(e.literals, e.target);
            }
            out_ << (text() ? lits_text(e.literals) : lits_json(e.literals)) << "\n";
        }
        return kOk;
    }

    int enumerate_cmd() {
        for (const auto& src : sources()) {
            auto all = enumerate_pi_explanations(tree(), src, mode(), opts_.limit);
            if (opts_.verify) {
                ClassId target = all.empty() ? build_hitting_sets(tree(), src, mode()).target : all.front().target;
                auto expected = oracle().enumerate_pi(universe_of(src), target);
                std::set<LiteralSet> want(expected.begin(), expected.end());
                for (const auto& e : all)
                    if (!want.count(e.literals))
                        throw Mismatch("oracle: " + lits_text(e.literals) + " is not a PI-explanation");
                if (!opts_.limit && all.size() != want.size())
                    throw Mismatch("oracle finds " + std::to_string(want.size()) + " PI-explanations, enumeration " +
                                   std::to_string(all.size()));
            }
            if (text()) {
                for (const auto& e : all) out_ << lits_text(e.literals) << "\n";
            } else {
                json arr = json::array();
                for (const auto& e : all) arr.push_back(json::parse(lits_json(e.literals)));
                out_ << arr.dump() << "\n";
            }
        }
        return kOk;
    }

    int stats_cmd() {
        std::vector<std::filesystem::path> files(opts_.trees.begin(), opts_.trees.end());
        auto rows = batch_report(files);
        if (opts_.verify) {
            for (std::size_t i = 0; i < rows.size(); ++i) {
                const auto* r = std::get_if<TreeReport>(&rows[i]);
                if (r == nullptr) continue;
                DecisionTree t = load_tree(files[i]);
                Oracle o(t, OracleBudget{opts_.max_points, opts_.max_universe});
                for (std::size_t k = 0; k < t.paths().size(); ++k)
                    if (o.is_redundant(t.paths()[k]) != r->details[k].redundant)
                        throw Mismatch("oracle disagrees on path " + t.paths()[k].id + " of " + files[i].string());
            }
        }
        out_ << (text() ? report_to_text(rows) : report_to_json(rows));
        const bool any_error =
            std::any_of(rows.begin(), rows.end(), [](const BatchRow& r) { return std::holds_alternative<BatchError>(r); });
        return any_error ? kInvalidInput : kOk;
    }

    int check_cmd() {
        LiteralSet lits = parse_literals(tree().space(), opts_.explanation);
        auto cls = tree().find_class(opts_.class_name);
        if (!cls) throw Error(ErrorKind::UnknownClass, "unknown class '" + opts_.class_name + "'");
        const bool ent = entails(tree(), lits, *cls);
        const bool minimal = is_pi_explanation(tree(), lits, *cls);
        if (opts_.verify) {
            if (oracle().entails(lits, *cls) != ent) throw Mismatch("oracle disagrees on entailment");
            bool bf_minimal = ent;
            for (const auto& l : lits)
                if (oracle().entails(lits.without(l.feature), *cls)) bf_minimal = false;
            if (bf_minimal != minimal) throw Mismatch("oracle disagrees on minimality");
        }
        if (text())
            out_ << (ent ? "entails" : "does not entail") << " class " << class_name(*cls)
                 << (minimal ? " (PI-explanation)" : "") << "\n";
        else
            out_ << json{{"class", class_name(*cls)}, {"entails", ent}, {"minimal", minimal}}.dump() << "\n";
        return kOk;
    }

    // Randomized cross-check of every fast operation against the oracle.
    int selftest_cmd() {
        std::mt19937_64 rng(opts_.seed);
        std::size_t checks = 0;
        for (std::size_t t = 0; t < opts_.random_trees; ++t) {
            DecisionTree tr = random_tree(rng);
            Oracle o(tr);
            auto fail = [&](const std::string& what) {
                throw Mismatch("selftest tree " + std::to_string(t) + " (seed " + std::to_string(opts_.seed) +
                               "): " + what + "\n" + serialize_tree(tr));
            };
            for (const auto& p : tr.paths()) {
                if (is_path_redundant(tr, p).redundant != o.is_redundant(p)) fail("redundancy of " + p.id);
                auto e = one_pi_explanation_path(tr, p);
                auto all = o.enumerate_pi(p.literals, p.prediction);
                if (std::find(all.begin(), all.end(), e.literals) == all.end()) fail("explanation of " + p.id);
                auto mine = enumerate_pi_explanations(tr, p.index, ExplanationMode::PathRestricted);
                if (mine.size() != all.size()) fail("enumeration of " + p.id);
                checks += 3;
            }
            for (int i = 0; i < 10; ++i) {
                Instance x = random_instance(rng, tr.space());
                auto e = one_pi_explanation_instance(tr, x);
                auto all = o.enumerate_pi(LiteralSet::from_instance(x, tr.space()), e.target);
                if (std::find(all.begin(), all.end(), e.literals) == all.end()) fail("instance explanation");
                auto mine = enumerate_pi_explanations(tr, x, ExplanationMode::PathUnrestricted);
                std::vector<LiteralSet> got;
                for (auto& m : mine) got.push_back(m.literals);
                if (got != all) fail("instance enumeration");
                checks += 2;
            }
        }
        if (text())
            out_ << "selftest: " << opts_.random_trees << " trees, " << checks << " checks, 0 mismatches\n";
        else
            out_ << json{{"trees", opts_.random_trees}, {"checks", checks}, {"mismatches", 0}}.dump() << "\n";
        return kOk;
    }

private:
    const Options& opts_;
    std::ostream& out_;
    std::unique_ptr<DecisionTree> tree_;
    std::unique_ptr<Oracle> oracle_;
};

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opts;
    CLI::App app{"Audit categorical decision trees for explanation redundancy and extract PI-explanations", "dtx"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    app.add_flag("--verify", opts.verify, "Cross-check results against the brute-force oracle");
    app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--max-points", opts.max_points, "Oracle budget: maximum feature-space size");
    app.add_option("--max-universe", opts.max_universe, "Oracle budget: maximum candidate literals");

    auto add_tree = [&](CLI::App* sub) {
        sub->add_option("-t,--tree", opts.trees, "Tree file (JSON)")->required()->expected(1);
    };
    auto add_instance = [&](CLI::App* sub) {
        auto* i = sub->add_option("-i,--instance", opts.instance, "Instance as a JSON array of values");
        auto* c = sub->add_option("--csv", opts.csv, "CSV file of instances with a header row");
        i->excludes(c);
        return std::pair{i, c};
    };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--mode", opts.mode, "Candidate literals: path (restricted) or instance (unrestricted)")
            ->check(CLI::IsMember({"restricted", "unrestricted"}));
    };

    auto* classify_sub = app.add_subcommand("classify", "Classify instances and show the consistent path");
    add_tree(classify_sub);
    add_instance(classify_sub);

    auto* redundancy_sub = app.add_subcommand("redundancy", "Decide explanation redundancy of tree paths");
    add_tree(redundancy_sub);
    auto* path_opt = redundancy_sub->add_option("--path", opts.path_id, "Path identifier (P1, Q2, ...)");
    auto* all_opt = redundancy_sub->add_flag("--all", opts.all, "All paths (default)");
    path_opt->excludes(all_opt);

    auto* explain_sub = app.add_subcommand("explain", "Extract one PI-explanation");
    auto* enumerate_sub = app.add_subcommand("enumerate", "Enumerate all PI-explanations");
    for (auto* sub : {explain_sub, enumerate_sub}) {
        add_tree(sub);
        auto* p = sub->add_option("--path", opts.path_id, "Path identifier (P1, Q2, ...)");
        auto [i, c] = add_instance(sub);
        p->excludes(i)->excludes(c);
        add_mode(sub);
    }
    enumerate_sub->add_option("--limit", opts.limit, "Stop after this many explanations");

    auto* stats_sub = app.add_subcommand("stats", "Tree-level redundancy statistics");
    stats_sub->add_option("-t,--tree", opts.trees, "Tree files (JSON)")->required();

    auto* check_sub = app.add_subcommand("check", "Check whether literals entail a class");
    add_tree(check_sub);
    check_sub->add_option("-e,--explanation", opts.explanation, "Literals as a JSON object")->required();
    check_sub->add_option("--class", opts.class_name, "Class name")->required();

    auto* selftest_sub = app.add_subcommand("selftest", "Cross-check random trees against the oracle");
    selftest_sub->add_option("--seed", opts.seed, "Random seed");
    selftest_sub->add_option("--trees", opts.random_trees, "Number of random trees");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    Command cmd(opts, out);
    try {
        if (classify_sub->parsed()) {
            if (!cmd.has_instances()) throw UsageError("classify needs -i or --csv");
            return cmd.classify_cmd();
        }
        if (redundancy_sub->parsed()) return cmd.redundancy_cmd();
        if (explain_sub->parsed() || enumerate_sub->parsed()) {
            if (opts.path_id.empty() && !cmd.has_instances()) throw UsageError("give --path, -i or --csv");
            return explain_sub->parsed() ? cmd.explain_cmd() : cmd.enumerate_cmd();
        }
        if (stats_sub->parsed()) return cmd.stats_cmd();
        if (check_sub->parsed()) return cmd.check_cmd();
        if (selftest_sub->parsed()) return cmd.selftest_cmd();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const Mismatch& e) {
        err << "verification failed: " << e.what() << "\n";
        return kOracleMismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return e.kind() == ErrorKind::BudgetExceeded ? kBudgetExceeded : kInvalidInput;
    }
    return kUsage;
}

} // namespace dtx::cli
