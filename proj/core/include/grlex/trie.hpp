#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grlex/lexicon_model.hpp"

namespace grlex {

namespace payload_flags {
inline constexpr uint8_t keep_stress = 0x1;
/// The key is shared by forms with different surfaces.
inline constexpr uint8_t homograph = 0x2;
}  // namespace payload_flags

struct PayloadRecord {
  uint32_t form_id = 0;
  Stress stress = Stress::penultimate;
  uint8_t flags = 0;

  friend bool operator==(const PayloadRecord&, const PayloadRecord&) = default;
  friend auto operator<=>(const PayloadRecord&, const PayloadRecord&) = default;
};

/// Path-compressed trie over destressed, case-folded keys. Every edge
/// carries one or more scalars; a node that holds no payload always has at
/// least two children (the root excepted). Immutable after build.
class CompressedTrie {
 public:
  struct Node {
    std::u32string label;
    /// Indices into nodes(), ordered by the first scalar of their label.
    std::vector<uint32_t> children;
    /// Sorted.
    std::vector<PayloadRecord> payloads;
  };

  struct Entry {
    std::u32string key;
    std::span<const PayloadRecord> payloads;
  };

  class PrefixIterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Entry;
    using difference_type = std::ptrdiff_t;
    using pointer = const Entry*;
    using reference = const Entry&;

    PrefixIterator() = default;

    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    PrefixIterator& operator++() {
      advance();
      return *this;
    }
    void operator++(int) { advance(); }
    friend bool operator==(const PrefixIterator& it, std::default_sentinel_t) {
      return it.stack_.empty();
    }

   private:
    friend class CompressedTrie;
    struct Frame {
      uint32_t node;
      size_t next_child;
      bool entered;
    };

    PrefixIterator(const CompressedTrie* trie, uint32_t start, std::u32string path);
    void advance();

    const CompressedTrie* trie_ = nullptr;
    std::vector<Frame> stack_;
    Entry current_;
  };

  struct PrefixRange {
    PrefixIterator first;
    PrefixIterator begin() const { return first; }
    std::default_sentinel_t end() const { return {}; }
  };

  /// Empty trie: a root without payload.
  CompressedTrie();

  /// Throws InvalidKey for keys that are not destressed and folded.
  static CompressedTrie build(std::vector<std::pair<std::u32string, PayloadRecord>> pairs);

  /// Exact match. `visits`, when given, receives the number of nodes touched.
  std::span<const PayloadRecord> lookup(std::u32string_view key, size_t* visits = nullptr) const;
  bool contains(std::u32string_view key) const { return !lookup(key).empty(); }

  /// All keys beginning with `prefix`, in scalar order.
  PrefixRange walk_prefix(std::u32string_view prefix) const;

  const std::vector<Node>& nodes() const { return nodes_; }
  size_t node_count() const { return nodes_.size(); }
  size_t key_count() const { return key_count_; }

  /// Checks the path-compression and child-ordering invariants over every
  /// node. Returns an empty string when the structure is sound.
  std::string structure_violation() const;

  std::vector<uint8_t> serialize() const;
  /// Throws CorruptFile.
  static CompressedTrie deserialize(std::span<const uint8_t> bytes);

  friend bool operator==(const CompressedTrie& a, const CompressedTrie& b);

 private:
  uint32_t build_node(std::vector<std::pair<std::u32string, PayloadRecord>>& pairs, size_t lo,
                      size_t hi, size_t depth, std::u32string label);
  /// Child of `node` whose label starts with `c`, or -1.
  int64_t find_child(uint32_t node, char32_t c) const;

  std::vector<Node> nodes_;
  size_t key_count_ = 0;
};

bool operator==(const CompressedTrie::Node& a, const CompressedTrie::Node& b);

}  // namespace grlex
