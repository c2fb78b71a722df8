#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace jackhyp {

/// Weakly decreasing tuple of nonnegative integers. Trailing zeros are not
/// stored, so (2,1) and (2,1,0,0) are the same value; `at(i)` reads zero past
/// the length.
class Partition {
 public:
  Partition() = default;
  /// Validates weak monotonicity and nonnegativity; strips trailing zeros.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  int at(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }
  int operator[](int i) const { return at(i); }

  /// The parts padded with zeros to exactly `r` entries (r >= length()).
  std::vector<int> padded(int r) const;

  Partition conjugate() const;

  /// Dominance order: partial sums of *this bound those of `other`.
  /// Only meaningful for equal weights.
  bool dominates(const Partition& other) const;

  /// (m1,m1,m2,m2,...), the image used for type BC invariants.
  Partition doubled() const;

  /// (k*m1, k*m2, ...).
  Partition scaled(int k) const;

  /// (m1+c, ..., mr+c) over exactly r rows (c >= 0, r >= length()).
  Partition shifted(int c, int r) const;

  /// Partition of the shape with cells counted: arm a(s), leg l(s) for the
  /// cell in row i, column j (0-based).
  int arm(int i, int j) const { return at(i) - j - 1; }
  int leg(int i, int j) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; reverse of this is the enumeration order.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// "3,1,1"; the empty partition prints as "0".
std::string to_string(const Partition& p);

/// Accepts "3,1,1", "3, 1", "0" and "" (empty partition). Zero parts are
/// allowed only at the tail.
Partition parse_partition(std::string_view text);

/// Every partition of `weight` with at most `max_len` parts, each once, in
/// reverse-lexicographic order ((4),(3,1),(2,2),...). Reverse-lex is a
/// linear extension of dominance, so dominating partitions come first.
std::vector<Partition> enumerate_partitions(int weight, int max_len);

/// Number of distinct rearrangements of the parts padded to r entries.
long long orbit_size(const Partition& p, int r);

}  // namespace jackhyp
