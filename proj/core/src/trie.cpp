#include "grlex/trie.hpp"

#include <algorithm>

#include "binary_io.hpp"
#include "grlex/error.hpp"
#include "grlex/greek_text.hpp"

namespace grlex {

CompressedTrie::CompressedTrie() : nodes_(1) {}

CompressedTrie CompressedTrie::build(std::vector<std::pair<std::u32string, PayloadRecord>> pairs) {
  for (const auto& [key, payload] : pairs) {
    if (make_key(key) != key)
      throw InvalidKey("trie key '" + to_utf8(key) + "' is not destressed and case folded");
    if (static_cast<uint8_t>(payload.stress) > 2) throw InvalidKey("payload stress out of range");
  }
  std::sort(pairs.begin(), pairs.end());

  CompressedTrie t;
  t.nodes_.clear();
  t.build_node(pairs, 0, pairs.size(), 0, {});
  for (const auto& n : t.nodes_)
    if (!n.payloads.empty()) ++t.key_count_;
  return t;
}

uint32_t CompressedTrie::build_node(std::vector<std::pair<std::u32string, PayloadRecord>>& pairs,
                                    size_t lo, size_t hi, size_t depth, std::u32string label) {
  const auto index = static_cast<uint32_t>(nodes_.size());
  nodes_.push_back(Node{std::move(label), {}, {}});

  size_t i = lo;
  while (i < hi && pairs[i].first.size() == depth) {
    nodes_[index].payloads.push_back(pairs[i].second);
    ++i;
  }
  while (i < hi) {
    const char32_t c = pairs[i].first[depth];
    size_t j = i + 1;
    while (j < hi && pairs[j].first[depth] == c) ++j;
    // Sorted range: the first and last key bound the common prefix.
    const auto& first = pairs[i].first;
    const auto& last = pairs[j - 1].first;
    size_t end = depth + 1;
    while (end < first.size() && end < last.size() && first[end] == last[end]) ++end;
    const uint32_t child = build_node(pairs, i, j, end, first.substr(depth, end - depth));
    nodes_[index].children.push_back(child);
    i = j;
  }
  return index;
}

int64_t CompressedTrie::find_child(uint32_t node, char32_t c) const {
  const auto& children = nodes_[node].children;
  auto it = std::lower_bound(children.begin(), children.end(), c,
                             [&](uint32_t child, char32_t v) { return nodes_[child].label[0] < v; });
  if (it == children.end() || nodes_[*it].label[0] != c) return -1;
  return *it;
}

std::span<const PayloadRecord> CompressedTrie::lookup(std::u32string_view key,
                                                      size_t* visits) const {
  uint32_t node = 0;
  size_t touched = 1;
  size_t pos = 0;
  std::span<const PayloadRecord> result;
  while (pos < key.size()) {
    const int64_t child = find_child(node, key[pos]);
    if (child < 0) break;
    const auto& label = nodes_[child].label;
    ++touched;
    if (key.substr(pos, label.size()) != label) break;
    pos += label.size();
    node = static_cast<uint32_t>(child);
  }
  if (pos == key.size()) result = nodes_[node].payloads;
  if (visits) *visits = touched;
  return result;
}

CompressedTrie::PrefixRange CompressedTrie::walk_prefix(std::u32string_view prefix) const {
  uint32_t node = 0;
  std::u32string path;
  size_t pos = 0;
  while (pos < prefix.size()) {
    const int64_t child = find_child(node, prefix[pos]);
    if (child < 0) return {};
    const auto& label = nodes_[child].label;
    const size_t n = std::min(label.size(), prefix.size() - pos);
    if (prefix.substr(pos, n) != std::u32string_view(label).substr(0, n)) return {};
    path += label;
    pos += n;
    node = static_cast<uint32_t>(child);
  }
  return {PrefixIterator(this, node, std::move(path))};
}

CompressedTrie::PrefixIterator::PrefixIterator(const CompressedTrie* trie, uint32_t start,
                                               std::u32string path)
    : trie_(trie) {
  current_.key = std::move(path);
  stack_.push_back({start, 0, false});
  advance();
}

void CompressedTrie::PrefixIterator::advance() {
  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const Node& n = trie_->nodes_[f.node];
    if (!f.entered) {
      f.entered = true;
      if (!n.payloads.empty()) {
        current_.payloads = n.payloads;
        return;
      }
    }
    if (f.next_child < n.children.size()) {
      const uint32_t c = n.children[f.next_child++];
      current_.key += trie_->nodes_[c].label;
      stack_.push_back({c, 0, false});
      continue;
    }
    stack_.pop_back();
    if (!stack_.empty()) current_.key.resize(current_.key.size() - n.label.size());
  }
  current_ = {};
}

std::string CompressedTrie::structure_violation() const {
  if (nodes_.empty()) return "no root";
  if (!nodes_[0].label.empty()) return "root has a label";
  std::vector<int> parents(nodes_.size(), 0);
  for (size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (i != 0) {
      if (n.label.empty()) return "node " + std::to_string(i) + " has an empty edge label";
      if (make_key(n.label) != n.label)
        return "node " + std::to_string(i) + " label is not destressed and folded";
      if (n.payloads.empty() && n.children.size() == 1)
        return "node " + std::to_string(i) + " is an uncompressed single-child chain";
      if (n.payloads.empty() && n.children.empty())
        return "node " + std::to_string(i) + " is a dead leaf";
    }
    if (!std::is_sorted(n.payloads.begin(), n.payloads.end()))
      return "node " + std::to_string(i) + " payloads unsorted";
    for (size_t c = 0; c < n.children.size(); ++c) {
      const uint32_t child = n.children[c];
      if (child == 0 || child >= nodes_.size()) return "child index out of range";
      if (++parents[child] > 1) return "node " + std::to_string(child) + " has two parents";
      if (c > 0 && nodes_[n.children[c - 1]].label[0] >= nodes_[child].label[0])
        return "children of node " + std::to_string(i) + " not strictly ordered";
    }
  }
  for (size_t i = 1; i < nodes_.size(); ++i)
    if (parents[i] != 1) return "node " + std::to_string(i) + " unreachable";
  return {};
}

// Preorder stream: node count, then per node the UTF-8 edge label, the
// payload list (delta-coded form ids, stress and flags packed in one byte)
// and the child count.
std::vector<uint8_t> CompressedTrie::serialize() const {
  detail::ByteWriter w;
  w.varint(nodes_.size());
  std::vector<uint32_t> stack{0};
  while (!stack.empty()) {
    const uint32_t i = stack.back();
    stack.pop_back();
    const Node& n = nodes_[i];
    w.ustr(n.label);
    w.varint(n.payloads.size());
    uint32_t previous = 0;
    for (const auto& p : n.payloads) {
      w.varint(p.form_id - previous);
      previous = p.form_id;
      w.u8(static_cast<uint8_t>(static_cast<uint8_t>(p.stress) | (p.flags << 2)));
    }
    w.varint(n.children.size());
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return std::move(w.bytes());
}

CompressedTrie CompressedTrie::deserialize(std::span<const uint8_t> bytes) {
  detail::ByteReader r(bytes, "trie");
  const size_t total = r.count(bytes.size());
  if (total == 0) r.fail("no root node");

  CompressedTrie t;
  t.nodes_.clear();
  t.nodes_.reserve(total);
  // (parent, remaining children) for nodes still receiving children.
  std::vector<std::pair<uint32_t, size_t>> open;
  while (t.nodes_.size() < total) {
    const auto index = static_cast<uint32_t>(t.nodes_.size());
    Node n;
    n.label = r.ustr();
    if ((index == 0) != n.label.empty()) r.fail("bad edge label");
    const size_t payloads = r.count(r.remaining());
    n.payloads.reserve(payloads);
    uint32_t id = 0;
    for (size_t k = 0; k < payloads; ++k) {
      const uint64_t delta = r.varint();
      if (id + delta > UINT32_MAX) r.fail("form id overflow");
      id += static_cast<uint32_t>(delta);
      const uint8_t packed = r.u8();
      if ((packed & 0x3) > 2) r.fail("bad stress");
      n.payloads.push_back({id, static_cast<Stress>(packed & 0x3), static_cast<uint8_t>(packed >> 2)});
    }
    const size_t children = r.count(total);
    if (!open.empty()) {
      auto& [parent, left] = open.back();
      t.nodes_[parent].children.push_back(index);
      if (--left == 0) open.pop_back();
    } else if (index != 0) {
      r.fail("node outside the tree");
    }
    t.nodes_.push_back(std::move(n));
    if (children > 0) open.emplace_back(index, children);
    if (!t.nodes_.back().payloads.empty()) ++t.key_count_;
  }
  if (!open.empty()) r.fail("missing child nodes");
  if (!r.done()) r.fail("trailing bytes");
  if (auto why = t.structure_violation(); !why.empty()) r.fail(why);
  return t;
}

bool operator==(const CompressedTrie::Node& a, const CompressedTrie::Node& b) {
  return a.label == b.label && a.children == b.children && a.payloads == b.payloads;
}

bool operator==(const CompressedTrie& a, const CompressedTrie& b) { return a.nodes_ == b.nodes_; }

}  // namespace grlex
