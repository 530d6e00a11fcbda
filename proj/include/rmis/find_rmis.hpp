#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rmis/abc_tree.hpp"
#include "rmis/graph.hpp"

namespace rmis {

/// PI: a robust MIS of the subtree exists with the attachment point inside.
/// PO: one exists with it outside. PE: only possible when the attachment
/// point is dominated from outside the subtree. N: none of those. E: the
/// root verdict carrying the final set.
enum class Tag { PI, PO, PE, N, E };

const char* tag_name(Tag t);

struct Label {
  Tag tag;
  VertexSet set;
  friend bool operator==(const Label&, const Label&) = default;
};

/// At most one label per tag; adding PE next to PO is a no-op.
class LabelSet {
 public:
  static LabelSet negative() {
    LabelSet s;
    s.add(Tag::N, {});
    return s;
  }

  void add(Tag t, VertexSet set);
  const VertexSet* find(Tag t) const;
  bool has(Tag t) const { return find(t) != nullptr; }
  bool empty() const { return labels_.empty(); }
  std::size_t size() const { return labels_.size(); }
  bool is_negative() const { return labels_.size() == 1 && labels_[0].tag == Tag::N; }
  bool only(Tag t) const { return labels_.size() == 1 && labels_[0].tag == t; }
  const std::vector<Label>& labels() const { return labels_; }
  std::string str() const;

  friend bool operator==(const LabelSet&, const LabelSet&) = default;

 private:
  std::vector<Label> labels_;
};

/// Indexed by ABC-tree node.
using LabelMap = std::vector<LabelSet>;

/// Raised when witness assembly finds no child label for the polarity the
/// solver picked. A well-labeled tree never triggers it.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct LabelingContext {
  const Graph& g;
  const RootedAbcTree& rt;
  LabelMap& labels;
  std::vector<std::string>* trace = nullptr;
};

std::optional<VertexSet> test_rmis(const LabelingContext& ctx, std::size_t x, const VertexSet& in,
                                   const VertexSet& out);
void label_node_a(const LabelingContext& ctx, std::size_t x);
void label_node_b(const LabelingContext& ctx, std::size_t x);
void label_node_c(const LabelingContext& ctx, std::size_t x);
/// Labels every node of the subtree at x, children first. x must not be the root.
void label_subtree(const LabelingContext& ctx, std::size_t x);
std::optional<VertexSet> decide(const LabelMap& labels, std::size_t root);

struct FindRmisRun {
  std::optional<VertexSet> result;
  /// Present unless the graph is acyclic (or a single vertex).
  std::optional<RootedAbcTree> tree;
  LabelMap labels;
  std::vector<std::string> trace;
};

/// Throws DisconnectedGraphError.
FindRmisRun run_find_rmis(const Graph& g);
std::optional<VertexSet> find_rmis(const Graph& g);

}  // namespace rmis
