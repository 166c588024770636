// rtl - robotics template library for geometry and point cloud processing
// SPDX-License-Identifier: MIT

#ifndef RTL_TRANSFORM_TF_TREE_HPP
#define RTL_TRANSFORM_TF_TREE_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rtl/transform/general_tf.hpp"

namespace rtl {

struct UnknownNodeError : std::invalid_argument {
  explicit UnknownNodeError(const std::string& id)
      : std::invalid_argument("unknown pose id: " + id) {}
};

struct DuplicateNodeError : std::invalid_argument {
  explicit DuplicateNodeError(const std::string& id)
      : std::invalid_argument("duplicate pose id: " + id) {}
};

/// Ordered list of transformations. Applying the chain means applying each
/// element left to right; reduce() collapses it into one rigid transformation.
template <int D, typename S = double>
class TfChain {
public:
  using ElementType = S;
  static constexpr int dimensionality = D;

  TfChain() = default;
  explicit TfChain(std::vector<GeneralTf<D, S>> elements)
      : elements_(std::move(elements)) {}

  void pushBack(const GeneralTf<D, S>& tf) { elements_.push_back(tf); }

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const GeneralTf<D, S>& operator[](std::size_t i) const { return elements_[i]; }

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  VectorND<D, S> operator()(VectorND<D, S> x) const {
    for (const auto& tf : elements_) {
      x = tf(x);
    }
    return x;
  }

  /// Single rigid transformation equivalent to the whole chain; the empty
  /// chain reduces to identity.
  RigidTfND<D, S> reduce() const {
    RigidTfND<D, S> acc = RigidTfND<D, S>::identity();
    for (const auto& tf : elements_) {
      acc = compose(tf.asRigid(), acc);
    }
    return acc;
  }

private:
  std::vector<GeneralTf<D, S>> elements_;
};

/// Pose hierarchy: nodes are coordinate frames, each non-root frame hangs
/// under one parent with an edge transformation mapping parent-frame
/// coordinates to child-frame coordinates.
template <int D, typename S = double>
class TfTree {
public:
  using ElementType = S;
  static constexpr int dimensionality = D;

  explicit TfTree(std::string root) : root_(std::move(root)) {
    nodes_.emplace(root_, Node{std::string(), GeneralTf<D, S>::identity(), 0});
  }

  const std::string& root() const { return root_; }
  std::size_t size() const { return nodes_.size(); }
  bool contains(const std::string& id) const { return nodes_.count(id) != 0; }

  /// Hangs `child` under `parent`; `tf` maps parent-frame coordinates into the
  /// child frame.
  void insert(const std::string& parent, const std::string& child,
              const GeneralTf<D, S>& tf) {
    const auto parent_it = nodes_.find(parent);
    if (parent_it == nodes_.end()) {
      throw UnknownNodeError(parent);
    }
    if (nodes_.count(child) != 0) {
      throw DuplicateNodeError(child);
    }
    nodes_.emplace(child, Node{parent, tf, parent_it->second.depth + 1});
  }

  /// Chain along the tree path whose reduction maps coordinates expressed in
  /// the `from` frame into the `to` frame. Edges walked child-to-parent enter
  /// the chain inverted.
  TfChain<D, S> query(const std::string& from, const std::string& to) const {
    const Node* a = find(from);
    const Node* b = find(to);

    std::vector<GeneralTf<D, S>> up;      // from -> common ancestor
    std::vector<GeneralTf<D, S>> down;    // common ancestor -> to, collected backward
    const std::string* ida = &from;
    const std::string* idb = &to;

    while (a->depth > b->depth) {
      up.push_back(a->edge.inverted());
      ida = &a->parent;
      a = find(*ida);
    }
    while (b->depth > a->depth) {
      down.push_back(b->edge);
      idb = &b->parent;
      b = find(*idb);
    }
    while (*ida != *idb) {
      up.push_back(a->edge.inverted());
      ida = &a->parent;
      a = find(*ida);
      down.push_back(b->edge);
      idb = &b->parent;
      b = find(*idb);
    }

    up.insert(up.end(), down.rbegin(), down.rend());
    return TfChain<D, S>(std::move(up));
  }

  std::vector<std::string> nodeIds() const {
    std::vector<std::string> ids;
    ids.reserve(nodes_.size());
    for (const auto& [id, node] : nodes_) {
      ids.push_back(id);
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  }

private:
  struct Node {
    std::string parent;
    GeneralTf<D, S> edge;  // parent-frame coordinates -> child-frame coordinates
    int depth;
  };

  const Node* find(const std::string& id) const {
    const auto it = nodes_.find(id);
    if (it == nodes_.end()) {
      throw UnknownNodeError(id);
    }
    return &it->second;
  }

  std::string root_;
  std::unordered_map<std::string, Node> nodes_;
};

}  // namespace rtl

#endif  // RTL_TRANSFORM_TF_TREE_HPP
