#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "finloc/catalog.hpp"
#include "finloc/filters.hpp"
#include "finloc/isomorphism.hpp"
#include "finloc/kernels.hpp"
#include "finloc/lattice.hpp"
#include "finloc/sublocales.hpp"

namespace finloc {

/// Everything a checker reads about one frame, built once.
struct FrameContext {
  std::string id;
  Frame frame;
  FilterLattice filters;
  SublocaleLattice sublocales;

  /// Throws NotAFrame, FrameTooLarge or CarrierTooLarge.
  static FrameContext build(std::string id, const FiniteLattice& lattice,
                            Execution exec = Execution::serial);
};

/// Replaces the `problem`-th isomorphism problem a checker submits by its
/// mutation. Target coordinates are reduced modulo the target size.
struct MutationHook {
  Mutation mutation;
  int problem = 0;
};

struct TheoremVerdict {
  std::string theorem_id;
  std::string frame_id;
  bool passed = true;
  nlohmann::json witness;  // null iff passed
  nlohmann::json notes;    // sizes, flags, choices the verdict depends on
  /// The (possibly mutated) problem whose failure is the witness.
  std::optional<IsoProblem> failing_problem;
  nlohmann::json to_json() const;
};

/// Collects the conditions of one checker. The first failure becomes the
/// verdict's witness; later conditions are still evaluated.
class Check {
public:
  explicit Check(const MutationHook* hook = nullptr) : hook_(hook) {}

  /// Verifies p (after the hook, if it targets this problem).
  bool iso(IsoProblem p);
  bool require(std::string_view what, bool ok, nlohmann::json witness = nullptr);
  /// Records a failing family after greedily dropping members while
  /// `fails` still holds, in ascending member order.
  template <class Fails>
  bool family_fails(std::string_view what, ElementSet fam, Fails&& fails, nlohmann::json extra = nullptr) {
    for (int i : fam) {
      ElementSet smaller = fam;
      smaller.erase(i);
      if (fails(smaller)) fam = smaller;
    }
    nlohmann::json w = {{"family", fam.to_vector()}};
    if (!extra.is_null()) w["at"] = std::move(extra);
    return require(what, false, std::move(w));
  }
  void note(const std::string& key, nlohmann::json value) { notes_[key] = std::move(value); }

  bool passed() const { return witness_.is_null(); }
  /// Labels and sizes of the submitted problems, in order.
  const std::vector<std::pair<std::string, int>>& problems() const { return problems_; }
  TheoremVerdict verdict(std::string theorem_id, std::string frame_id) &&;

private:
  const MutationHook* hook_;
  nlohmann::json witness_;
  nlohmann::json notes_;
  std::optional<IsoProblem> failing_;
  std::vector<std::pair<std::string, int>> problems_;
};

using Checker = std::function<void(const FrameContext&, Check&)>;

struct TheoremInfo {
  std::string id;
  std::string summary;
  Checker run;
  bool uses_isomorphisms = false;
};

/// Every checker, in report order.
const std::vector<TheoremInfo>& theorem_registry();
const TheoremInfo* find_theorem(std::string_view id);

TheoremVerdict run_theorem(const TheoremInfo& t, const FrameContext& ctx,
                           const MutationHook* hook = nullptr);
/// Problem labels and target sizes a checker submits on this frame.
std::vector<std::pair<std::string, int>> theorem_problems(const TheoremInfo& t, const FrameContext& ctx);

// Named entry points for the main results.
TheoremVerdict check_se_iso(const FrameContext& ctx, const MutationHook* hook = nullptr);
std::vector<TheoremVerdict> check_restrictions(const FrameContext& ctx, const MutationHook* hook = nullptr);
TheoremVerdict check_inclusion_diagrams(const FrameContext& ctx, const MutationHook* hook = nullptr);
TheoremVerdict check_so_strongly_exact(const FrameContext& ctx, const MutationHook* hook = nullptr);
TheoremVerdict check_booleanization(const FrameContext& ctx, const MutationHook* hook = nullptr);
TheoremVerdict check_bool_polarity_corollary(const FrameContext& ctx, const MutationHook* hook = nullptr);
TheoremVerdict check_exact_subset_order(const FrameContext& ctx, const MutationHook* hook = nullptr);
TheoremVerdict check_fit_vs_int(const FrameContext& ctx, const MutationHook* hook = nullptr);

/// Scott-open implies strongly exact for one subset; InvalidInput when the
/// subset is not a filter.
bool so_implies_se(const Frame& frame, const SubsetTables& t, ElementSet f);

/// Positions (within the sub-poset) of the elements c with c## = c, where
/// c# is the least d whose join with c is the top. Requires `p` to be a
/// lattice read as a coframe.
ElementSet coframe_booleanization(const OrderedSet& p);

/// Selects checkers: "all", or a comma list of ids and id prefixes ending
/// in '*'. Throws InvalidInput on an unknown id.
std::vector<const TheoremInfo*> select_theorems(std::string_view suite);

struct SuiteResult {
  std::vector<TheoremVerdict> verdicts;  // catalog order, then registry order
  nlohmann::json skipped;                // [{frame, reason}]
  nlohmann::json summary;
  bool all_passed() const;
};

SuiteResult run_suite(const std::vector<CatalogEntry>& frames,
                      const std::vector<const TheoremInfo*>& theorems,
                      Execution exec = Execution::parallel);

}  // namespace finloc
