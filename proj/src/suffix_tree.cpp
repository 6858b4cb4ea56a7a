#include "kdeg/suffix_tree.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

namespace kdeg {

SuffixIndex::SuffixIndex(int alphabet_size) : alphabet_(alphabet_size) {
  root_ = new_node(-1, -1);
  nodes_[root_].slink = root_;
  active_node_ = root_;
}

int SuffixIndex::new_node(int start, int end) {
  Node node;
  node.start = start;
  node.end = end;
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

void SuffixIndex::attach(int parent, int key, int child) {
  nodes_[parent].next[key] = child;
  if (key < 0) nodes_[parent].sep_child = true;
}

void SuffixIndex::add_link(int node) {
  if (need_link_ != -1 && need_link_ != root_)
    nodes_[need_link_].slink = node;
  need_link_ = node;
}

int SuffixIndex::edge_end(int v) const {
  return std::min(nodes_[v].end, static_cast<int>(text_.size()));
}

// One Ukkonen phase for text_[i]. Leaf edges stay open to the live end of
// the text; the suffixes they accumulate across word boundaries are inert
// because queries stop at the first separator.
void SuffixIndex::extend(int i) {
  const int c = text_[i];
  need_link_ = -1;
  ++remainder_;
  while (remainder_ > 0) {
    if (active_len_ == 0) active_edge_ = i;
    const int edge_char = text_[active_edge_];
    auto it = nodes_[active_node_].next.find(edge_char);
    if (it == nodes_[active_node_].next.end()) {
      const int leaf = new_node(i, kOpen);
      attach(active_node_, edge_char, leaf);
      add_link(active_node_);
    } else {
      const int nxt = it->second;
      const int len = edge_end(nxt) - nodes_[nxt].start;
      if (active_len_ >= len) {
        active_node_ = nxt;
        active_edge_ += len;
        active_len_ -= len;
        continue;
      }
      if (text_[nodes_[nxt].start + active_len_] == c) {
        ++active_len_;
        add_link(active_node_);
        break;
      }
      const int split =
          new_node(nodes_[nxt].start, nodes_[nxt].start + active_len_);
      attach(active_node_, edge_char, split);
      const int leaf = new_node(i, kOpen);
      attach(split, c, leaf);
      nodes_[nxt].start += active_len_;
      attach(split, text_[nodes_[nxt].start], nxt);
      add_link(split);
    }
    --remainder_;
    if (active_node_ == root_ && active_len_ > 0) {
      --active_len_;
      active_edge_ = i - remainder_ + 1;
    } else {
      active_node_ = nodes_[active_node_].slink;
    }
  }
}

void SuffixIndex::insert(std::span<const int> word) {
  for (int c : word)
    if (c < 0 || c >= alphabet_)
      throw std::out_of_range("SuffixIndex: letter outside alphabet");
  for (int c : word) {
    text_.push_back(c);
    extend(static_cast<int>(text_.size()) - 1);
  }
  // Unique separator; it matches nothing, so it drains every pending suffix
  // and leaves the active point at the root for the next word.
  text_.push_back(-1 - static_cast<int>(words_));
  extend(static_cast<int>(text_.size()) - 1);
  assert(remainder_ == 0 && active_node_ == root_ && active_len_ == 0);
  ++words_;
}

bool SuffixIndex::is_suffix(std::span<const int> word) const {
  if (word.empty()) return false;
  int node = root_;
  std::size_t i = 0;
  while (true) {
    if (word[i] < 0) return false;
    auto it = nodes_[node].next.find(word[i]);
    if (it == nodes_[node].next.end()) return false;
    const int child = it->second;
    const int hi = edge_end(child);
    for (int q = nodes_[child].start; q < hi; ++q) {
      if (i == word.size()) return text_[q] < 0;
      if (text_[q] != word[i]) return false;
      ++i;
    }
    if (i == word.size()) return nodes_[child].sep_child;
    node = child;
  }
}

bool SuffixIndex::has_root_letter(int letter) const {
  if (letter < 0) return false;
  return nodes_[root_].next.count(letter) > 0;
}

}  // namespace kdeg
