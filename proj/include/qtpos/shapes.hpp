#pragma once

#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "qtpos/qt_poly.hpp"

namespace qtpos {

/// Integer partition: weakly decreasing positive parts.
class Partition {
public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int> &parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Largest part, 0 for the empty partition.
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  auto operator<=>(const Partition &) const = default;

private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition &p);

/// Parses "3,2,2,1"; the empty string gives the empty partition.
Partition parse_partition(std::string_view text);
std::string to_string(const Partition &p);

/// All partitions of n in reverse lexicographic order ((n) first, (1^n) last).
std::vector<Partition> partitions_of(int n);

/// (3^a 2^b 1^c)
Partition three_part_shape(int a, int b, int c);

/**
 * Semi-standard tableau in French orientation: rows[0] is the bottom row.
 * Entries weakly increase along rows and strictly increase up columns.
 * Entries are 0-based.
 */
struct Ssyt {
  Partition shape;
  std::vector<std::vector<int>> rows;

  int count(int value) const;
  int column_height(int col) const;
  bool is_valid() const;

  friend bool operator==(const Ssyt &, const Ssyt &) = default;
};

/**
 * Visits every SSYT of the shape with entries in {0, ..., max_entry}, in
 * lexicographic order of the row-major entry sequence (bottom row first).
 */
void for_each_ssyt(const Partition &shape, int max_entry,
                   const std::function<void(const Ssyt &)> &visit);

std::vector<Ssyt> enumerate_ssyt(const Partition &shape, int max_entry);

/// Multiset of monic monomials a_1 + ... + a_N used in a plethystic bracket.
class Alphabet {
public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Monomial> letters) : letters_(std::move(letters)) {}
  Alphabet(std::initializer_list<Monomial> letters) : letters_(letters) {}

  /// Throws std::invalid_argument unless every poly is a single term with coefficient 1.
  static Alphabet from_polys(const std::vector<QtPoly> &letters);

  const std::vector<Monomial> &letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }

private:
  std::vector<Monomial> letters_;
};

/// s_lambda[a_1 + ... + a_N] by direct SSYT enumeration with entries 0..N-1.
QtPoly schur_eval(const Partition &lambda, const Alphabet &alphabet);

/// Column-type decomposition of a filling over {0,1,2} with at most three rows.
struct BlockSignature {
  enum class Tag { A2, A0 };

  int a1 = 0; ///< columns of height 3
  int k1 = 0; ///< height-2 columns with bottom entry 0
  Tag tag = Tag::A2;
  int a2_or_a0 = 0; ///< A2: height-2 columns with bottom 1; A0: height-1 zeros
  int k2 = 0;       ///< height-1 cells with a nonzero entry

  auto operator<=>(const BlockSignature &) const = default;
};

/// Throws std::invalid_argument if t has more than 3 rows or entries above 2.
BlockSignature classify_blocks(const Ssyt &t);

} // namespace qtpos
