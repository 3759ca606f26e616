#include "qtpos/enriched.hpp"

#include <algorithm>
#include <set>

namespace qtpos {

std::vector<EnrichedTableau::Two> EnrichedTableau::twos() const {
  std::vector<Two> out;
  for (int c = 0; c < base.shape.first(); ++c) {
    int found = 0;
    for (std::size_t r = 0; r < base.rows.size(); ++r) {
      const auto &row = base.rows[r];
      if (static_cast<int>(row.size()) > c && row[static_cast<std::size_t>(c)] == 2) {
        out.push_back({static_cast<int>(r), c, Decoration::Plain});
        ++found;
      }
    }
    if (found > 1)
      throw std::logic_error("EnrichedTableau: two 2's in one column");
  }
  const int n = static_cast<int>(out.size());
  for (int k = 0; k < n; ++k) {
    auto &d = out[static_cast<std::size_t>(k)].decoration;
    if (k == n - 1)
      d = Decoration::Hat;
    else if (k >= num_undecorated)
      d = Decoration::Barred;
  }
  return out;
}

bool EnrichedTableau::is_valid() const {
  if (!base.is_valid() || base.shape.length() > 3)
    return false;
  for (const auto &row : base.rows)
    for (int e : row)
      if (e > 2)
        return false;
  const int twos = base.count(2);
  if (num_undecorated < 0 || num_barred < 0)
    return false;
  if (twos == 0)
    return num_undecorated == 0 && num_barred == 0;
  return num_undecorated + num_barred + 1 == twos;
}

void for_each_enriched(const Partition &shape,
                       const std::function<void(const EnrichedTableau &)> &visit) {
  for_each_ssyt(shape, 2, [&](const Ssyt &base) {
    EnrichedTableau e{base, 0, 0};
    const int twos = base.count(2);
    if (twos == 0) {
      visit(e);
      return;
    }
    for (int u = 0; u <= twos - 1; ++u) {
      e.num_undecorated = u;
      e.num_barred = twos - 1 - u;
      visit(e);
    }
  });
}

std::vector<EnrichedTableau> enumerate_enriched(const Partition &shape) {
  std::vector<EnrichedTableau> out;
  for_each_enriched(shape, [&](const EnrichedTableau &e) { out.push_back(e); });
  return out;
}

WeightClass weight_class(const EnrichedTableau &t) {
  return {t.base.count(1) + 2 * t.num_barred, t.num_undecorated};
}

QtPoly g_via_all_enriched(const Partition &lambda) {
  QtPoly numerator;
  for_each_enriched(conjugate(lambda), [&](const EnrichedTableau &e) {
    const auto w = weight_class(e);
    if (e.base.count(2) == 0 || w.t_exp == w.q_exp)
      return;
    numerator.add_term(w.q_exp, w.t_exp, 1);
    numerator.add_term(w.t_exp, w.q_exp, -1);
  });
  return exact_div(numerator, Divisor::Kind::TMinusQ);
}

int ones_on_height_two_tops(const Ssyt &t) {
  int n = 0;
  for (int c = 0; c < t.shape.first(); ++c)
    if (t.column_height(c) == 2 && t.rows[1][static_cast<std::size_t>(c)] == 1)
      ++n;
  return n;
}

bool is_leftover(const EnrichedTableau &t) {
  const auto w = weight_class(t);
  const int d = w.t_exp - w.q_exp;
  if (d < 1)
    return false;
  const auto twos = t.twos();
  if (twos.empty())
    return false;

  bool decorated_in_row3 = false;
  int plain_in_row1 = 0;
  for (const auto &two : twos) {
    if (two.row == 2 && two.decoration != EnrichedTableau::Decoration::Plain)
      decorated_in_row3 = true;
    if (two.row == 0 && two.decoration == EnrichedTableau::Decoration::Plain)
      ++plain_in_row1;
  }
  if (decorated_in_row3)
    return true;

  const int hat_row = twos.back().row;
  const bool few_ones = ones_on_height_two_tops(t.base) < d;
  if (hat_row == 1)
    return few_ones;
  if (hat_row == 0)
    return plain_in_row1 < 2 * t.num_barred && few_ones;
  return false;
}

QtPoly g_via_leftovers(const Partition &lambda) {
  QtPoly out;
  for_each_enriched(conjugate(lambda), [&](const EnrichedTableau &e) {
    if (!is_leftover(e))
      return;
    const auto w = weight_class(e);
    out += QtPoly::qt_power(w.q_exp) * qt_analog(w.t_exp - w.q_exp);
  });
  return out;
}

WeightCounts weight_counts(const Partition &shape) {
  WeightCounts out;
  for_each_enriched(shape, [&](const EnrichedTableau &e) { ++out[weight_class(e)]; });
  return out;
}

WeightCounts weighted_counts(const Partition &shape) {
  WeightCounts out;
  for_each_enriched(shape, [&](const EnrichedTableau &e) {
    if (e.base.count(2) > 0)
      ++out[weight_class(e)];
  });
  return out;
}

WeightCounts leftover_counts(const Partition &shape) {
  WeightCounts out;
  for_each_enriched(shape, [&](const EnrichedTableau &e) {
    if (is_leftover(e))
      ++out[weight_class(e)];
  });
  return out;
}

// ---------------------------------------------------------------------------
// Injection

namespace {

// Column-type counts of a filling over {0,1,2} with at most three rows.
struct ColumnCounts {
  int height3 = 0;
  int zero_bottom_one_top = 0; // height 2, 1 over 0
  int zero_bottom_two_top = 0; // height 2, 2 over 0
  int one_bottom = 0;          // height 2, 2 over 1
  int single_zeros = 0;
  int single_ones = 0;
  int single_twos = 0;
};

ColumnCounts count_columns(const Ssyt &t) {
  ColumnCounts cc;
  for (int c = 0; c < t.shape.first(); ++c) {
    const auto col = static_cast<std::size_t>(c);
    const int bottom = t.rows[0][col];
    switch (t.column_height(c)) {
    case 3:
      ++cc.height3;
      break;
    case 2:
      if (bottom == 1)
        ++cc.one_bottom;
      else if (t.rows[1][col] == 1)
        ++cc.zero_bottom_one_top;
      else
        ++cc.zero_bottom_two_top;
      break;
    default:
      if (bottom == 0)
        ++cc.single_zeros;
      else if (bottom == 1)
        ++cc.single_ones;
      else
        ++cc.single_twos;
      break;
    }
  }
  return cc;
}

// Rebuilds the unique sorted filling of `shape` with the given column counts.
Ssyt assemble(const Partition &shape, const ColumnCounts &cc) {
  Ssyt t;
  t.shape = shape;
  for (int part : shape.parts())
    t.rows.emplace_back(static_cast<std::size_t>(part), 0);
  std::size_t c = 0;
  auto put = [&](int count, std::initializer_list<int> column) {
    for (int k = 0; k < count; ++k, ++c) {
      std::size_t r = 0;
      for (int e : column)
        t.rows[r++][c] = e;
    }
  };
  put(cc.height3, {0, 1, 2});
  put(cc.zero_bottom_one_top, {0, 1});
  put(cc.zero_bottom_two_top, {0, 2});
  put(cc.one_bottom, {1, 2});
  put(cc.single_zeros, {0});
  put(cc.single_ones, {1});
  put(cc.single_twos, {2});
  return t;
}

// Decorates `base` so that its weight class is `target`, if possible.
EnrichedTableau redecorate(const Ssyt &base, WeightClass target) {
  const int twos = base.count(2);
  EnrichedTableau e{base, target.q_exp, twos - 1 - target.q_exp};
  if (!base.is_valid())
    throw MapUndefined("injection: image filling is not semi-standard");
  if (twos == 0 || e.num_barred < 0 || !e.is_valid() || weight_class(e) != target)
    throw MapUndefined("injection: no decoration reaches the target class");
  return e;
}

} // namespace

InjectionImage injection_case_maps(const EnrichedTableau &t, int i, int j) {
  if (i <= j)
    throw std::invalid_argument("injection_case_maps: requires i > j");
  const auto w = weight_class(t);
  if (w.t_exp != j || w.q_exp != i)
    throw std::invalid_argument("injection_case_maps: tableau is not of class (t^j q^i)");
  if (t.base.shape.length() > 3)
    throw std::invalid_argument("injection_case_maps: more than three rows");

  const auto twos = t.twos();
  int plain_in_row1 = 0;
  for (const auto &two : twos)
    plain_in_row1 += (two.row == 0 && two.decoration == EnrichedTableau::Decoration::Plain);
  const int barred = t.num_barred;
  const WeightClass target{i, j};

  ColumnCounts cc = count_columns(t.base);
  if (twos.back().row == 0 && plain_in_row1 >= 2 * barred) {
    // Decorated 2's sit at the right end of the bottom row.
    const int frozen = 3 * barred + 1;
    const int unfrozen = cc.single_twos - frozen;
    if (unfrozen < 0)
      throw MapUndefined("injection case 1: fewer bottom-row 2's than frozen cells");
    const int ones = cc.single_ones;
    cc.single_ones = unfrozen;
    cc.single_twos = ones + frozen;
    std::swap(cc.zero_bottom_one_top, cc.zero_bottom_two_top);
    return {redecorate(assemble(t.base.shape, cc), target), InjectionCase::BottomRowSwap};
  }

  const int raise = i - j;
  if (cc.zero_bottom_two_top < raise)
    throw MapUndefined("injection case 2: fewer than i-j 2's above 0's");
  cc.zero_bottom_two_top -= raise;
  cc.zero_bottom_one_top += raise;
  return {redecorate(assemble(t.base.shape, cc), target), InjectionCase::RaiseToOnes};
}

bool InjectionReport::accounting_holds() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClassRow &r) {
    const long long diff = r.heavy_count - r.light_count;
    return diff >= 0 && diff == r.leftover_count;
  });
}

bool InjectionReport::maps_are_injective() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClassRow &r) {
    return r.map_failures == 0 && r.image_collisions == 0 && r.images_on_leftovers == 0 &&
           r.mapped == r.light_count;
  });
}

namespace {

// Serializes an enriched tableau into a comparable key.
std::vector<int> tableau_key(const EnrichedTableau &e) {
  std::vector<int> key{e.num_undecorated, e.num_barred};
  for (const auto &row : e.base.rows) {
    key.push_back(-1);
    key.insert(key.end(), row.begin(), row.end());
  }
  return key;
}

} // namespace

InjectionReport injection_report(const Partition &shape) {
  const auto all = enumerate_enriched(shape);
  std::map<WeightClass, InjectionReport::ClassRow> rows;
  auto row_for = [&](int i, int j) -> InjectionReport::ClassRow & {
    auto &row = rows[WeightClass{i, j}];
    row.heavy = WeightClass{i, j};
    return row;
  };

  std::map<WeightClass, std::set<std::vector<int>>> images;
  for (const auto &e : all) {
    if (e.base.count(2) == 0)
      continue;
    const auto w = weight_class(e);
    if (w.t_exp > w.q_exp) {
      auto &row = row_for(w.t_exp, w.q_exp);
      ++row.heavy_count;
      if (is_leftover(e))
        ++row.leftover_count;
    } else if (w.q_exp > w.t_exp) {
      auto &row = row_for(w.q_exp, w.t_exp);
      ++row.light_count;
      try {
        const auto img = injection_case_maps(e, w.q_exp, w.t_exp);
        ++row.mapped;
        if (!images[row.heavy].insert(tableau_key(img.image)).second)
          ++row.image_collisions;
        if (is_leftover(img.image))
          ++row.images_on_leftovers;
      } catch (const MapUndefined &) {
        ++row.map_failures;
      }
    }
  }

  InjectionReport report;
  for (auto &[cls, row] : rows)
    report.rows.push_back(row);
  return report;
}

} // namespace qtpos
