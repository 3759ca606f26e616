#include "qtpos/shapes.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace qtpos {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition conjugate(const Partition &p) {
  std::vector<int> cols;
  for (int i = 0; i < p.first(); ++i) {
    int height = 0;
    for (int part : p.parts())
      if (part > i)
        ++height;
    cols.push_back(height);
  }
  return Partition(std::move(cols));
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    std::string_view field = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw std::invalid_argument("malformed partition: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
    if (comma + 1 == text.size())
      throw std::invalid_argument("malformed partition: trailing comma");
  }
  return Partition(std::move(parts));
}

std::string to_string(const Partition &p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i > 0)
      out += ',';
    out += std::to_string(p[i]);
  }
  return out + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int> &prefix,
                    std::vector<Partition> &out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0)
    throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

Partition three_part_shape(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0)
    throw std::invalid_argument("three_part_shape: negative multiplicity");
  std::vector<int> parts;
  parts.insert(parts.end(), static_cast<std::size_t>(a), 3);
  parts.insert(parts.end(), static_cast<std::size_t>(b), 2);
  parts.insert(parts.end(), static_cast<std::size_t>(c), 1);
  return Partition(std::move(parts));
}

// ---------------------------------------------------------------------------
// Tableaux

int Ssyt::count(int value) const {
  int n = 0;
  for (const auto &row : rows)
    for (int e : row)
      n += (e == value);
  return n;
}

int Ssyt::column_height(int col) const {
  int h = 0;
  for (int part : shape.parts())
    if (part > col)
      ++h;
  return h;
}

bool Ssyt::is_valid() const {
  if (static_cast<int>(rows.size()) != shape.length())
    return false;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != shape[r])
      return false;
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (rows[r][c] < 0)
        return false;
      if (c > 0 && rows[r][c - 1] > rows[r][c])
        return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c])
        return false;
    }
  }
  return true;
}

namespace {

class SsytWalker {
public:
  SsytWalker(const Partition &shape, int max_entry,
             const std::function<void(const Ssyt &)> &visit)
      : visit_(visit), max_entry_(max_entry) {
    current_.shape = shape;
    for (int part : shape.parts())
      current_.rows.emplace_back(static_cast<std::size_t>(part), 0);
  }

  void run() {
    // Row r needs entries >= r, so more rows than values means no tableaux.
    if (current_.shape.length() > max_entry_ + 1)
      return;
    fill(0, 0);
  }

private:
  void fill(std::size_t r, std::size_t c) {
    if (r == current_.rows.size()) {
      visit_(current_);
      return;
    }
    if (c == current_.rows[r].size()) {
      fill(r + 1, 0);
      return;
    }
    int lo = 0;
    if (c > 0)
      lo = current_.rows[r][c - 1];
    if (r > 0)
      lo = std::max(lo, current_.rows[r - 1][c] + 1);
    // Entries in row r (0-based) leave room for the rows stacked above.
    const int above = column_cells_above(r, c);
    for (int v = lo; v + above <= max_entry_; ++v) {
      current_.rows[r][c] = v;
      fill(r, c + 1);
    }
  }

  int column_cells_above(std::size_t r, std::size_t c) const {
    int n = 0;
    for (std::size_t rr = r + 1; rr < current_.rows.size(); ++rr)
      if (current_.rows[rr].size() > c)
        ++n;
    return n;
  }

  const std::function<void(const Ssyt &)> &visit_;
  int max_entry_;
  Ssyt current_;
};

} // namespace

void for_each_ssyt(const Partition &shape, int max_entry,
                   const std::function<void(const Ssyt &)> &visit) {
  if (max_entry < 0)
    return;
  SsytWalker(shape, max_entry, visit).run();
}

std::vector<Ssyt> enumerate_ssyt(const Partition &shape, int max_entry) {
  std::vector<Ssyt> out;
  for_each_ssyt(shape, max_entry, [&](const Ssyt &t) { out.push_back(t); });
  return out;
}

// ---------------------------------------------------------------------------
// Schur specialization

Alphabet Alphabet::from_polys(const std::vector<QtPoly> &letters) {
  std::vector<Monomial> monos;
  for (const auto &p : letters) {
    if (p.size() != 1 || p.terms().begin()->second != 1)
      throw std::invalid_argument("Alphabet: letters must be monic monomials");
    monos.push_back(p.terms().begin()->first);
  }
  return Alphabet(std::move(monos));
}

QtPoly schur_eval(const Partition &lambda, const Alphabet &alphabet) {
  QtPoly out;
  const auto &letters = alphabet.letters();
  if (lambda.empty())
    return QtPoly(1);
  for_each_ssyt(lambda, alphabet.size() - 1, [&](const Ssyt &t) {
    Monomial m;
    for (const auto &row : t.rows) {
      for (int e : row) {
        m.q += letters[static_cast<std::size_t>(e)].q;
        m.t += letters[static_cast<std::size_t>(e)].t;
      }
    }
    out.add_term(m.q, m.t, 1);
  });
  return out;
}

// ---------------------------------------------------------------------------
// Block classification

BlockSignature classify_blocks(const Ssyt &t) {
  if (t.shape.length() > 3)
    throw std::invalid_argument("classify_blocks: more than three rows");
  for (const auto &row : t.rows)
    for (int e : row)
      if (e < 0 || e > 2)
        throw std::invalid_argument("classify_blocks: entries must lie in {0,1,2}");

  BlockSignature sig;
  int a2 = 0;
  int a0 = 0;
  for (int c = 0; c < t.shape.first(); ++c) {
    const int bottom = t.rows[0][static_cast<std::size_t>(c)];
    switch (t.column_height(c)) {
    case 3:
      ++sig.a1;
      break;
    case 2:
      (bottom == 0 ? sig.k1 : a2)++;
      break;
    default:
      (bottom == 0 ? a0 : sig.k2)++;
      break;
    }
  }
  if (a2 == 0 && a0 > 0) {
    sig.tag = BlockSignature::Tag::A0;
    sig.a2_or_a0 = a0;
  } else {
    sig.tag = BlockSignature::Tag::A2;
    sig.a2_or_a0 = a2;
  }
  return sig;
}

} // namespace qtpos
