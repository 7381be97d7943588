#ifndef DTX_MHS_HPP
#define DTX_MHS_HPP

#include "dtx/literal.hpp"
#include "dtx/tree.hpp"
#include "dtx/xplain.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dtx {

/// Family of literal sets to hit, one per contrary path. Sets hold indices
/// into `universe`, in ascending order.
struct HittingSetInstance {
    std::vector<Literal> universe;               // ascending feature id
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> origin_paths;       // path index per set
    ClassId target = 0;
};

/// For every path Q predicting a class other than the source's, collects
/// the universe literals that contradict Q. Restricted mode takes the
/// universe from a path (source = path index), unrestricted mode from an
/// instance's equality literals. Throws SourceInconsistency if some
/// contrary path cannot be hit.
HittingSetInstance build_hitting_sets(const DecisionTree& tree, const ExplanationSource& source,
                                      ExplanationMode mode);

using IndexSet = std::vector<std::size_t>;

/// All subset-minimal hitting sets of `family` (as sorted universe indices),
/// ordered by cardinality and then lexicographically. With a limit, the
/// first `limit` sets of that order are returned.
std::vector<IndexSet> enumerate_mhs(const HittingSetInstance& family,
                                    std::optional<std::size_t> limit = std::nullopt);

LiteralSet to_literals(const HittingSetInstance& family, const IndexSet& chosen);

std::vector<Explanation> enumerate_pi_explanations(const DecisionTree& tree,
                                                   const ExplanationSource& source,
                                                   ExplanationMode mode,
                                                   std::optional<std::size_t> limit = std::nullopt);

} // namespace dtx

#endif
