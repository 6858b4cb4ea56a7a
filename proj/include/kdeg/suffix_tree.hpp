#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <unordered_map>
#include <vector>

namespace kdeg {

/// Online dictionary over integer-alphabet words answering suffix-membership
/// queries: after insert(w), every suffix of w (including w itself) is
/// reported present. Built as a single Ukkonen suffix tree over the
/// concatenation of the inserted words, each closed by a unique negative
/// separator; a query word is a stored suffix exactly when the walk for it
/// ends immediately before a separator. Insertion is amortized O(|w|),
/// queries are O(|w|) dictionary lookups.
///
/// Single writer; queries may run concurrently with each other but not with
/// inserts.
class SuffixIndex {
 public:
  explicit SuffixIndex(int alphabet_size);

  /// Letters must lie in [0, alphabet_size). Throws std::out_of_range
  /// otherwise, leaving the index unchanged.
  void insert(std::span<const int> word);

  /// True iff word equals some suffix of a previously inserted word.
  /// The empty word is never reported present.
  bool is_suffix(std::span<const int> word) const;

  /// True iff some stored suffix begins with this letter; O(1).
  bool has_root_letter(int letter) const;

  int alphabet_size() const { return alphabet_; }
  std::size_t word_count() const { return words_; }

 private:
  struct Node {
    int start;
    int end;  // exclusive; kOpen for leaves
    int slink = 0;
    bool sep_child = false;  // some child edge begins with a separator
    std::unordered_map<int, int> next;
  };

  static constexpr int kOpen = std::numeric_limits<int>::max() / 2;

  int new_node(int start, int end);
  void attach(int parent, int key, int child);
  void add_link(int node);
  int edge_end(int v) const;
  void extend(int i);

  int alphabet_;
  std::size_t words_ = 0;
  std::vector<int> text_;
  std::vector<Node> nodes_;
  int root_;
  int need_link_ = -1;
  int remainder_ = 0;
  int active_node_;
  int active_edge_ = 0;  // index into text_
  int active_len_ = 0;
};

}  // namespace kdeg
