#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "qtpos/qt_poly.hpp"
#include "qtpos/shapes.hpp"

namespace qtpos {

/**
 * An SSYT over {0,1,2} whose 2's carry decorations.
 *
 * The 2's are read by column, left to right (a column-strict filling over
 * {0,1,2} has at most one 2 per column). In that order the first
 * num_undecorated are plain 2's (weight q), the next num_barred are barred
 * (weight t^2) and the last one is hatted (weight 1). A base without 2's has
 * no decorations.
 */
struct EnrichedTableau {
  Ssyt base;
  int num_undecorated = 0;
  int num_barred = 0;

  enum class Decoration { Plain, Barred, Hat };

  struct Two {
    int row;
    int col;
    Decoration decoration;
  };

  /// The 2's in reading order together with their decorations.
  std::vector<Two> twos() const;
  bool is_valid() const;

  friend bool operator==(const EnrichedTableau &, const EnrichedTableau &) = default;
};

/// Weight t^{t_exp} q^{q_exp} of an enriched tableau.
struct WeightClass {
  int t_exp = 0;
  int q_exp = 0;

  auto operator<=>(const WeightClass &) const = default;
};

void for_each_enriched(const Partition &shape,
                       const std::function<void(const EnrichedTableau &)> &visit);
std::vector<EnrichedTableau> enumerate_enriched(const Partition &shape);

/// (#1 + 2 * #barred, #undecorated)
WeightClass weight_class(const EnrichedTableau &t);

/// g_lambda as the sum over enriched tableaux of shape lambda' with a hatted 2 of
/// (t^i q^j - t^j q^i) / (t - q), (i, j) the weight class.
QtPoly g_via_all_enriched(const Partition &lambda);

/// Number of height-2 columns whose top entry is 1.
int ones_on_height_two_tops(const Ssyt &t);

/// True for the tableaux left outside the image of the injection.
bool is_leftover(const EnrichedTableau &t);

/// g_lambda = sum over leftovers of (qt)^{#undecorated} [t_exp - q_exp].
QtPoly g_via_leftovers(const Partition &lambda);

using WeightCounts = std::map<WeightClass, long long>;

/// Every enriched tableau, including those without 2's.
WeightCounts weight_counts(const Partition &shape);
/// Only tableaux carrying a hatted 2, the ones weighted in F.
WeightCounts weighted_counts(const Partition &shape);
WeightCounts leftover_counts(const Partition &shape);

class MapUndefined : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class InjectionCase { BottomRowSwap, RaiseToOnes };

struct InjectionImage {
  EnrichedTableau image;
  InjectionCase which;
};

/**
 * Maps an enriched tableau of class (t_exp = j, q_exp = i), i > j, to one of
 * class (t_exp = i, q_exp = j).
 *
 * BottomRowSwap applies when the hat is in the bottom row and that row holds
 * at least 2 * #barred plain 2's: the hat, the barred 2's and 2 * #barred
 * plain 2's stay put, the remaining bottom-row plain 2's trade places with
 * the height-one 1's, and the tops of the 0-bottomed height-2 columns swap
 * their 1's and 2's. Otherwise RaiseToOnes turns the leftmost i - j of the
 * 2's sitting on 0's into 1's. Decorations of the image are reassigned from
 * the target class. Throws MapUndefined if no valid image results.
 */
InjectionImage injection_case_maps(const EnrichedTableau &t, int i, int j);

struct InjectionReport {
  struct ClassRow {
    WeightClass heavy; ///< (t_exp = i, q_exp = j), i > j
    long long heavy_count = 0;
    long long light_count = 0; ///< class (t_exp = j, q_exp = i)
    long long leftover_count = 0;
    long long mapped = 0;
    long long map_failures = 0;
    long long image_collisions = 0;
    long long images_on_leftovers = 0;
  };

  std::vector<ClassRow> rows;

  /// a_(i,j) - a_(j,i) >= 0 and equals the leftover count, for every row.
  bool accounting_holds() const;
  /// Every map succeeded, images are distinct and avoid the leftovers.
  bool maps_are_injective() const;
};

InjectionReport injection_report(const Partition &shape);

} // namespace qtpos
