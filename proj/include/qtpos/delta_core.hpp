#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qtpos/qt_poly.hpp"
#include "qtpos/shapes.hpp"

namespace qtpos {

/// F_{lambda'} = (s_{lambda'}[1+t+t^2] - s_{lambda'}[1+t+q]) / (t^2 - q).
QtPoly f_poly(const Partition &lambda);

/// F_{lambda'} as the tableau sum  sum_T t^{#1(T)} [#2(T)]_{t^2,q}.
QtPoly f_poly_tableau(const Partition &lambda);

/// g_lambda = (F - tau F) / (t - q). Zero when lambda_1 > 3.
QtPoly g_coefficient(const Partition &lambda);

/// g_lambda from the three-term alternating formula over (t-q)(t^2-q)(t-q^2),
/// without the lambda_1 > 3 shortcut.
QtPoly g_raw_quotient(const Partition &lambda);

/// <Delta_{e_1} e_n, s_lambda> = (s_{lambda'}[1+t] - s_{lambda'}[1+q]) / (t - q).
QtPoly delta_e1_coefficient(const Partition &lambda);

/// Closed form: [m -> n-m] when lambda = (2^m 1^{n-2m}), zero otherwise.
QtPoly delta_e1_closed(const Partition &lambda);

/**
 * A q,t-analog expansion  sum mult * (qt)^shift * [length]_{q,t}.
 *
 * Entries are sorted by (shift, length) with no repeated pair. The
 * certificate is positive when every multiplicity is nonnegative.
 */
struct Certificate {
  struct Entry {
    int shift = 0;
    int length = 1;
    mpz_class mult;

    friend bool operator==(const Entry &, const Entry &) = default;
  };

  std::vector<Entry> entries;

  bool is_positive() const;
  friend bool operator==(const Certificate &, const Certificate &) = default;
};

/**
 * Reads off the certificate of (F - tau F)/(t - q) from F.
 *
 * With a_{i,j} the coefficient of t^i q^j in f, each i > j with
 * a_{i,j} != a_{j,i} yields (shift j, length i - j, mult a_{i,j} - a_{j,i}).
 * The first index runs over powers of t; this is the orientation for which
 * reconstruct(extract_certificate(F)) == g.
 */
Certificate extract_certificate(const QtPoly &f);

QtPoly reconstruct(const Certificate &c);

/// {"entries":[{"shift":j,"length":d,"mult":"<int>"}],"positive":bool}
nlohmann::json to_json(const Certificate &c);

/// Analog notation, e.g. "[2]+[3]+2[4]+[5]+[6]+qt(1+[2]+[3])".
std::string format_analog(const Certificate &c);

} // namespace qtpos
