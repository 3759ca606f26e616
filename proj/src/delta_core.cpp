#include "qtpos/delta_core.hpp"

#include <map>
#include <sstream>

namespace qtpos {

namespace {

const Alphabet kOneTT2{{0, 0}, {0, 1}, {0, 2}}; // 1 + t + t^2
const Alphabet kOneTQ{{0, 0}, {0, 1}, {1, 0}};  // 1 + t + q
const Alphabet kOneQQ2{{0, 0}, {1, 0}, {2, 0}}; // 1 + q + q^2
const Alphabet kOneT{{0, 0}, {0, 1}};           // 1 + t
const Alphabet kOneQ{{0, 0}, {1, 0}};           // 1 + q

} // namespace

QtPoly f_poly(const Partition &lambda) {
  const Partition lp = conjugate(lambda);
  return exact_div(schur_eval(lp, kOneTT2) - schur_eval(lp, kOneTQ), Divisor::Kind::T2MinusQ);
}

QtPoly f_poly_tableau(const Partition &lambda) {
  QtPoly out;
  for_each_ssyt(conjugate(lambda), 2, [&](const Ssyt &t) {
    out += QtPoly::monomial(0, t.count(1)) * qt_analog_base(t.count(2), AnalogBase::T2Q);
  });
  return out;
}

QtPoly g_coefficient(const Partition &lambda) {
  if (lambda.first() > 3)
    return {};
  const QtPoly f = f_poly(lambda);
  return exact_div(f - tau_swap(f), Divisor::Kind::TMinusQ);
}

QtPoly g_raw_quotient(const Partition &lambda) {
  const Partition lp = conjugate(lambda);
  const QtPoly q = QtPoly::q();
  const QtPoly t = QtPoly::t();
  const QtPoly one(1);

  QtPoly numerator = Divisor(Divisor::Kind::TMinusQ2).as_poly() * schur_eval(lp, kOneTT2);
  numerator -= (q + t + one) * (t - q) * schur_eval(lp, kOneTQ);
  numerator += Divisor(Divisor::Kind::T2MinusQ).as_poly() * schur_eval(lp, kOneQQ2);

  QtPoly out = exact_div(numerator, Divisor::Kind::TMinusQ);
  out = exact_div(out, Divisor::Kind::T2MinusQ);
  return exact_div(out, Divisor::Kind::TMinusQ2);
}

QtPoly delta_e1_coefficient(const Partition &lambda) {
  const Partition lp = conjugate(lambda);
  return exact_div(schur_eval(lp, kOneT) - schur_eval(lp, kOneQ), Divisor::Kind::TMinusQ);
}

QtPoly delta_e1_closed(const Partition &lambda) {
  const int n = lambda.size();
  int twos = 0;
  for (int part : lambda.parts()) {
    if (part > 2)
      return {};
    twos += (part == 2);
  }
  return qt_range(twos, n - twos);
}

// ---------------------------------------------------------------------------
// Certificates

bool Certificate::is_positive() const {
  for (const auto &e : entries)
    if (e.mult < 0)
      return false;
  return true;
}

Certificate extract_certificate(const QtPoly &f) {
  std::map<std::pair<int, int>, mpz_class> by_shift_length;
  for (const auto &[m, c] : f.terms()) {
    // a_{i,j}: i = power of t, j = power of q.
    const int i = m.t;
    const int j = m.q;
    if (i > j)
      by_shift_length[{j, i - j}] += c;
    else if (j > i)
      by_shift_length[{i, j - i}] -= c;
  }
  Certificate cert;
  for (const auto &[key, mult] : by_shift_length)
    if (mult != 0)
      cert.entries.push_back({key.first, key.second, mult});
  return cert;
}

QtPoly reconstruct(const Certificate &c) {
  QtPoly out;
  for (const auto &e : c.entries)
    out += e.mult * (QtPoly::qt_power(e.shift) * qt_analog(e.length));
  return out;
}

nlohmann::json to_json(const Certificate &c) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto &e : c.entries)
    entries.push_back({{"shift", e.shift}, {"length", e.length}, {"mult", e.mult.get_str()}});
  return {{"entries", entries}, {"positive", c.is_positive()}};
}

std::string format_analog(const Certificate &c) {
  if (c.entries.empty())
    return "0";

  std::map<int, std::vector<const Certificate::Entry *>> groups;
  for (const auto &e : c.entries)
    groups[e.shift].push_back(&e);

  std::ostringstream os;
  bool first_group = true;
  for (const auto &[shift, entries] : groups) {
    std::ostringstream body;
    bool first = true;
    for (const auto *e : entries) {
      mpz_class mag = abs(e->mult);
      if (e->mult < 0)
        body << '-';
      else if (!first)
        body << '+';
      first = false;
      const bool bare_one = e->length == 1 && shift > 0;
      if (mag != 1)
        body << mag.get_str();
      if (bare_one) {
        if (mag == 1)
          body << '1';
      } else {
        body << '[' << e->length << ']';
      }
    }

    std::string prefix;
    if (shift == 1)
      prefix = "qt";
    else if (shift > 1)
      prefix = "(qt)^" + std::to_string(shift);

    std::string text;
    const bool single = entries.size() == 1;
    if (prefix.empty())
      text = body.str();
    else if (single && entries.front()->mult == 1)
      text = entries.front()->length == 1 ? prefix : prefix + body.str();
    else
      text = prefix + "(" + body.str() + ")";

    if (!first_group && text.front() != '-')
      os << '+';
    os << text;
    first_group = false;
  }
  return os.str();
}

} // namespace qtpos
