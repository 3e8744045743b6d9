#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "netdyn/graph.hpp"

namespace netdyn {

enum class EventKind { add_node, remove_node, add_link, remove_link };

std::string_view to_string(EventKind kind) noexcept;
std::optional<EventKind> parse_event_kind(std::string_view text) noexcept;

/// One atomic structural change. Node events carry a NodeLabel payload, link
/// events an Edge.
struct MutationEvent {
  std::uint64_t sequence = 0;
  EventKind kind = EventKind::add_node;
  std::variant<NodeLabel, Edge> payload = NodeLabel("_");
  std::string note;

  static MutationEvent add_node(std::uint64_t seq, NodeLabel v, std::string note = {});
  static MutationEvent remove_node(std::uint64_t seq, NodeLabel v, std::string note = {});
  static MutationEvent add_link(std::uint64_t seq, NodeLabel a, NodeLabel b, std::string note = {});
  static MutationEvent remove_link(std::uint64_t seq, NodeLabel a, NodeLabel b, std::string note = {});

  bool is_node_event() const noexcept { return kind == EventKind::add_node || kind == EventKind::remove_node; }
  /// Throws std::bad_variant_access when the payload does not match the kind.
  const NodeLabel& node() const { return std::get<NodeLabel>(payload); }
  const Edge& link() const { return std::get<Edge>(payload); }
  /// "add_link V1-V2 (#3)"
  std::string describe() const;

  friend bool operator==(const MutationEvent&, const MutationEvent&) = default;
};

enum class ApplyMode { strict, lenient };

/// Applies one event and returns the new snapshot; `g` is left untouched.
/// Removing a node also removes its incident edges. Preconditions: add_node
/// needs a fresh label, remove_node an existing one, add_link two existing
/// endpoints and no existing edge, remove_link an existing edge. Strict mode
/// throws MutationError on a violation; lenient mode returns `g` unchanged
/// and appends a message to `warnings`.
Graph apply(const Graph& g, const MutationEvent& e, ApplyMode mode, std::vector<std::string>& warnings);
Graph apply(const Graph& g, const MutationEvent& e, ApplyMode mode = ApplyMode::strict);

/// Every snapshot of an event-sourced replay.
class History {
 public:
  explicit History(Graph initial) : initial_(std::move(initial)) {}

  const Graph& initial() const noexcept { return initial_; }
  const Graph& final() const noexcept { return steps_.empty() ? initial_ : steps_.back().second; }
  /// State right after the event with this sequence number. Throws
  /// std::out_of_range for a sequence that is not in the log.
  const Graph& at(std::uint64_t sequence) const;
  std::size_t size() const noexcept { return steps_.size(); }
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

 private:
  friend History apply_log(const Graph&, std::span<const MutationEvent>, ApplyMode);
  Graph initial_;
  std::vector<std::pair<std::uint64_t, Graph>> steps_;
  std::vector<std::string> warnings_;
};

/// Left fold of `apply`. Sequence numbers must be strictly increasing;
/// otherwise MutationError.
History apply_log(const Graph& g, std::span<const MutationEvent> log, ApplyMode mode = ApplyMode::strict);

/// What a log does to one element type.
enum class Change { none, add, remove, both };

/// One of the sixteen combinations of node and link changes, numbered
/// row-major with `none` first:
///   1 none/none, 2-4 nodes only (+, -, +-), 5-7 links only (+, -, +-),
///   8-16 nodes (+, -, +-) x links (+, -, +-).
struct DynamicsModel {
  int id = 1;
  Change nodes = Change::none;
  Change links = Change::none;

  /// "+N", "-L", "+-N +-L", "N" (unchanged base network).
  std::string code() const;
  std::string_view description() const noexcept;

  friend bool operator==(const DynamicsModel&, const DynamicsModel&) = default;
};

/// All sixteen models in id order.
std::span<const DynamicsModel> dynamics_models() noexcept;
/// Throws std::out_of_range for ids outside 1..16.
const DynamicsModel& dynamics_model(int id);
/// Model of the set of event kinds present in `log`.
DynamicsModel classify_log(std::span<const MutationEvent> log) noexcept;

/// A known disagreement between the case-study narrative and what its
/// events actually produce.
struct ErrataEntry {
  std::string id;            // "E1"
  std::string step;          // "G0"
  std::string location;      // which model paragraph
  std::string claimed;       // value as stated in the narrative
  std::string engine_value;  // value this engine computes
  std::string explanation;
  bool count_mismatch = true;  // false: the log substitutes an impossible event
};

std::span<const ErrataEntry> case_study_errata();

/// One step of the case study: a log against the reference network plus the
/// counts the narrative states for the result.
struct CaseStudyStep {
  std::string name;  // "G0" .. "G14"
  int model_id = 1;
  std::vector<MutationEvent> log;
  std::size_t claimed_nodes = 0;
  std::size_t claimed_edges = 0;
  std::optional<std::size_t> claimed_components;
};

/// The fifteen canonical logs, G0..G14, in order.
std::vector<CaseStudyStep> case_study_steps();

struct ReplayOutcome {
  std::string step;
  int model_id = 1;  // as classified from the log
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::vector<std::string> errata;  // ids of raised entries, ascending

  friend bool operator==(const ReplayOutcome&, const ReplayOutcome&) = default;
};

/// Runs every canonical log in strict mode against the reference network.
/// A count that disagrees with the narrative raises the step's errata entry;
/// a disagreement with no entry raises "UNLISTED-<step>". Substitution
/// entries are raised whenever their step runs.
std::vector<ReplayOutcome> replay_case_study();

}  // namespace netdyn
