// Copyright 2026 The OrbitWeave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbitweave/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "orbitweave/errors.hpp"

namespace orbitweave {
namespace {

constexpr std::size_t kRootCap = 4000;

Matrix zero_cartan(std::size_t n) {
  Matrix m(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 2;
  return m;
}

void link(Matrix& m, std::size_t i, std::size_t j, int a_ij = -1,
          int a_ji = -1) {
  m[i][j] = a_ij;
  m[j][i] = a_ji;
}

// Bourbaki numbering, shifted to start at 0.
std::optional<Matrix> standard_matrix(char series, std::size_t n) {
  switch (series) {
    case 'A': {
      if (n < 1) return std::nullopt;
      Matrix m = zero_cartan(n);
      for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
      return m;
    }
    case 'B':
    case 'C': {
      if (n < 2) return std::nullopt;
      Matrix m = zero_cartan(n);
      for (std::size_t i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      // alpha_{n-1} is short in B_n and long in C_n.
      if (series == 'B') {
        link(m, n - 2, n - 1, -1, -2);
      } else {
        link(m, n - 2, n - 1, -2, -1);
      }
      return m;
    }
    case 'D': {
      if (n < 3) return std::nullopt;
      Matrix m = zero_cartan(n);
      for (std::size_t i = 0; i + 2 < n; ++i) link(m, i, i + 1);
      link(m, n - 3, n - 1);
      return m;
    }
    case 'E': {
      if (n < 6 || n > 8) return std::nullopt;
      Matrix m = zero_cartan(n);
      link(m, 0, 2);
      link(m, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      return m;
    }
    case 'F': {
      if (n != 4) return std::nullopt;
      Matrix m = zero_cartan(4);
      link(m, 0, 1);
      link(m, 1, 2, -1, -2);
      link(m, 2, 3);
      return m;
    }
    case 'G': {
      if (n != 2) return std::nullopt;
      Matrix m = zero_cartan(2);
      link(m, 0, 1, -3, -1);
      return m;
    }
    default:
      return std::nullopt;
  }
}

Matrix principal_submatrix(const Matrix& m,
                           std::span<const std::size_t> subset) {
  Matrix out(subset.size(), std::vector<int>(subset.size()));
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = 0; b < subset.size(); ++b) {
      out[a][b] = m.at(subset[a]).at(subset[b]);
    }
  }
  return out;
}

std::string matrix_to_string(const Matrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      if (j) os << ',';
      os << m[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

// Names a matrix as a "+"-joined list of standard types when its connected
// components are contiguous index blocks that match exactly.
std::string name_matrix(const Matrix& m) {
  std::size_t n = m.size();
  if (n == 0) return "";
  std::string out;
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start + 1;
    // Extend the block while anything inside links past `end`.
    for (std::size_t i = start; i < end; ++i) {
      for (std::size_t j = end; j < n; ++j) {
        if (m[i][j] != 0) end = j + 1;
      }
    }
    for (std::size_t i = start; i < end; ++i) {
      for (std::size_t j = 0; j < start; ++j) {
        if (m[i][j] != 0) return "custom";
      }
    }
    std::vector<std::size_t> block(end - start);
    std::iota(block.begin(), block.end(), start);
    Matrix sub = principal_submatrix(m, block);
    std::string name;
    for (char series : std::string("ABCDEFG")) {
      auto candidate = standard_matrix(series, block.size());
      if (candidate && *candidate == sub) {
        name = series + std::to_string(block.size());
        break;
      }
    }
    if (name.empty()) return "custom";
    if (!out.empty()) out += '+';
    out += name;
    start = end;
  }
  return out;
}

int pair_with_coroot(const Matrix& m, const RootVector& v, std::size_t i) {
  int s = 0;
  for (std::size_t j = 0; j < v.size(); ++j) s += v[j] * m[i][j];
  return s;
}

RootVector reflect(const Matrix& m, const RootVector& v, std::size_t i) {
  RootVector out = v;
  out[i] -= pair_with_coroot(m, v, i);
  return out;
}

}  // namespace

std::optional<std::vector<RootVector>> root_closure(const Matrix& matrix,
                                                    std::size_t cap) {
  std::size_t n = matrix.size();
  std::vector<RootVector> roots;
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector v(n, 0);
    v[i] = 1;
    if (seen.insert(v).second) {
      roots.push_back(v);
      queue.push_back(v);
    }
    v[i] = -1;
    if (seen.insert(v).second) {
      roots.push_back(v);
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    RootVector v = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      RootVector r = reflect(matrix, v, i);
      if (seen.insert(r).second) {
        if (roots.size() >= cap) return std::nullopt;
        roots.push_back(r);
        queue.push_back(std::move(r));
      }
    }
  }
  return roots;
}

std::string word_to_string(std::span<const std::size_t> word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t letter : word) out += "s" + std::to_string(letter);
  return out;
}

CartanDatum::CartanDatum(Matrix matrix, std::string label)
    : matrix_(std::move(matrix)), label_(std::move(label)) {}

CartanDatum CartanDatum::parse(std::string_view label) {
  Matrix total;
  std::string canonical;
  std::size_t pos = 0;
  if (label.empty()) throw CartanError("empty Cartan type");
  while (pos <= label.size()) {
    std::size_t plus = label.find('+', pos);
    if (plus == std::string_view::npos) plus = label.size();
    std::string part;
    for (char c : label.substr(pos, plus - pos)) {
      if (!std::isspace(static_cast<unsigned char>(c))) part += c;
    }
    if (part.size() < 2 || !std::isalpha(static_cast<unsigned char>(part[0]))) {
      throw CartanError("malformed Cartan type component '" + part + "' in '" +
                        std::string(label) + "'");
    }
    char series = static_cast<char>(
        std::toupper(static_cast<unsigned char>(part[0])));
    std::size_t n = 0;
    for (std::size_t k = 1; k < part.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) {
        throw CartanError("malformed Cartan type component '" + part + "'");
      }
      n = n * 10 + static_cast<std::size_t>(part[k] - '0');
      if (n > 64) throw CartanError("rank too large in '" + part + "'");
    }
    auto block = standard_matrix(series, n);
    if (!block) {
      throw CartanError("unknown Cartan type '" + part + "'");
    }
    std::size_t offset = total.size();
    for (auto& row : total) row.resize(offset + n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> row(offset + n, 0);
      for (std::size_t j = 0; j < n; ++j) row[offset + j] = (*block)[i][j];
      total.push_back(std::move(row));
    }
    if (!canonical.empty()) canonical += '+';
    canonical += std::string(1, series) + std::to_string(n);
    pos = plus + 1;
  }
  return CartanDatum(std::move(total), canonical);
}

CartanDatum CartanDatum::from_matrix(Matrix matrix, std::string label) {
  std::size_t n = matrix.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) throw CartanError("Cartan matrix is not square");
    if (matrix[i][i] != 2) {
      throw CartanError("diagonal entry (" + std::to_string(i) + "," +
                        std::to_string(i) + ") is not 2");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (matrix[i][j] > 0) {
        throw CartanError("positive off-diagonal entry at (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if ((matrix[i][j] == 0) != (matrix[j][i] == 0)) {
        throw CartanError("entries (" + std::to_string(i) + "," +
                          std::to_string(j) + ") and transpose disagree on zero");
      }
    }
  }
  if (!root_closure(matrix, kRootCap)) {
    // Smallest principal submatrix that is already of infinite type.
    for (std::size_t size = 2; size <= n; ++size) {
      std::vector<bool> mask(n, false);
      std::fill(mask.begin(), mask.begin() + static_cast<long>(size), true);
      do {
        std::vector<std::size_t> subset;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask[i]) subset.push_back(i);
        }
        Matrix sub = principal_submatrix(matrix, subset);
        if (!root_closure(sub, kRootCap)) {
          std::string idx;
          for (std::size_t i : subset) {
            idx += (idx.empty() ? "" : ",") + std::to_string(i);
          }
          throw CartanError("Cartan matrix is not of finite type; offending "
                            "submatrix on simple roots {" + idx + "}: " +
                            matrix_to_string(sub));
        }
      } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    throw CartanError("Cartan matrix is not of finite type");
  }
  if (label == "custom") label = name_matrix(matrix);
  return CartanDatum(std::move(matrix), std::move(label));
}

bool CartanDatum::simply_laced() const {
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) {
      if (i != j && matrix_[i][j] * matrix_[j][i] > 1) return false;
    }
  }
  return true;
}

CartanDatum CartanDatum::restrict_to(
    std::span<const std::size_t> subset) const {
  std::vector<std::size_t> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i : sorted) {
    if (i >= rank()) throw CartanError("simple root index out of range");
  }
  Matrix sub = principal_submatrix(matrix_, sorted);
  std::string name = name_matrix(sub);
  return CartanDatum(std::move(sub), name);
}

CartanDatum CartanDatum::operator+(const CartanDatum& other) const {
  std::size_t n = rank(), m = other.rank();
  Matrix out(n + m, std::vector<int>(n + m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = matrix_[i][j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out[n + i][n + j] = other.matrix_[i][j];
  }
  std::string label = label_.empty() ? other.label_
                      : other.label_.empty() ? label_
                                             : label_ + "+" + other.label_;
  return CartanDatum(std::move(out), std::move(label));
}

std::vector<std::vector<std::size_t>> CartanDatum::diagram_automorphisms()
    const {
  std::size_t n = rank();
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(image);
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = matrix_[i][k] == matrix_[c][image[k]] &&
             matrix_[k][i] == matrix_[image[k]][c];
      }
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      self(self, i + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
  return out;
}

int pairing(const CartanDatum& datum, const Weight& weight, std::size_t i) {
  if (i >= datum.rank()) throw CartanError("simple root index out of range");
  if (weight.coefficients.size() != datum.rank()) {
    throw CartanError("weight has " +
                      std::to_string(weight.coefficients.size()) +
                      " coefficients, expected " +
                      std::to_string(datum.rank()));
  }
  if (weight.basis == WeightBasis::kFundamental) {
    return weight.coefficients[i];
  }
  return pair_with_coroot(datum.matrix(), weight.coefficients, i);
}

WeylGroup::WeylGroup(CartanDatum datum, std::size_t order_cap)
    : datum_(std::move(datum)) {
  const Matrix& m = datum_.matrix();
  std::size_t n = datum_.rank();
  auto closure = root_closure(m, kRootCap);
  if (!closure) throw CartanError("Cartan datum is not of finite type");
  roots_ = std::move(*closure);
  std::sort(roots_.begin(), roots_.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    // Positive roots first by height, then negatives by depth.
    bool pa = ha > 0, pb = hb > 0;
    if (pa != pb) return pa;
    if (ha != hb) return pa ? ha < hb : ha > hb;
    return pa ? a > b : a < b;
  });
  for (RootId r = 0; r < roots_.size(); ++r) root_index_[roots_[r]] = r;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector v(n, 0);
    v[i] = 1;
    simple_roots_.push_back(root_index_.at(v));
  }
  negations_.resize(roots_.size());
  for (RootId r = 0; r < roots_.size(); ++r) {
    RootVector neg = roots_[r];
    for (int& c : neg) c = -c;
    negations_[r] = root_index_.at(neg);
  }
  simple_perms_.assign(n, std::vector<RootId>(roots_.size()));
  for (std::size_t i = 0; i < n; ++i) {
    for (RootId r = 0; r < roots_.size(); ++r) {
      simple_perms_[i][r] = root_index_.at(reflect(m, roots_[r], i));
    }
  }

  // ShortLex breadth-first enumeration: appending generators in ascending
  // order to elements taken in discovery order finds each element first via
  // its lexicographically least reduced word.
  std::vector<RootId> id_perm(roots_.size());
  std::iota(id_perm.begin(), id_perm.end(), 0);
  index_[key_of(id_perm)] = 0;
  perms_.push_back(std::move(id_perm));
  words_.emplace_back();
  for (std::size_t head = 0; head < perms_.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<RootId> next(roots_.size());
      for (RootId r = 0; r < roots_.size(); ++r) {
        next[r] = perms_[head][simple_perms_[i][r]];
      }
      auto key = key_of(next);
      if (index_.contains(key)) continue;
      if (perms_.size() >= order_cap) {
        throw CartanError("Weyl group of " + datum_.label() +
                          " exceeds the order cap of " +
                          std::to_string(order_cap));
      }
      index_.emplace(std::move(key), static_cast<std::uint32_t>(perms_.size()));
      Word w = words_[head];
      w.push_back(i);
      words_.push_back(std::move(w));
      perms_.push_back(std::move(next));
    }
  }

  lengths_.resize(perms_.size());
  inverses_.resize(perms_.size());
  std::size_t longest = 0;
  for (std::size_t e = 0; e < perms_.size(); ++e) {
    std::size_t inversions = 0;
    for (RootId r = 0; r < roots_.size(); ++r) {
      if (is_positive(r) && !is_positive(perms_[e][r])) ++inversions;
    }
    lengths_[e] = inversions;
    if (inversions > lengths_[longest]) longest = e;
    std::vector<RootId> inv(roots_.size());
    for (RootId r = 0; r < roots_.size(); ++r) inv[perms_[e][r]] = r;
    inverses_[e] = WeylElement(index_.at(key_of(inv)));
  }
  longest_ = WeylElement(static_cast<std::uint32_t>(longest));
  reflection_cache_.assign(roots_.size(), std::nullopt);
}

std::vector<RootId> WeylGroup::key_of(const std::vector<RootId>& perm) const {
  std::vector<RootId> key;
  key.reserve(simple_roots_.size());
  for (RootId s : simple_roots_) key.push_back(perm[s]);
  return key;
}

WeylElement WeylGroup::simple_reflection(std::size_t i) const {
  if (i >= rank()) throw CartanError("simple root index out of range");
  return WeylElement(static_cast<std::uint32_t>(i + 1));
}

WeylElement WeylGroup::element(std::size_t index) const {
  if (index >= order()) throw Error("element index out of range");
  return WeylElement(static_cast<std::uint32_t>(index));
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<WeylElement> out;
  out.reserve(order());
  for (std::size_t e = 0; e < order(); ++e) {
    out.emplace_back(static_cast<std::uint32_t>(e));
  }
  return out;
}

std::string WeylGroup::word_string(WeylElement w) const {
  return word_to_string(word(w));
}

WeylElement WeylGroup::multiply(WeylElement a, WeylElement b) const {
  const auto& pa = perm(a);
  const auto& pb = perm(b);
  std::vector<RootId> key;
  key.reserve(simple_roots_.size());
  for (RootId s : simple_roots_) key.push_back(pa[pb[s]]);
  return WeylElement(index_.at(key));
}

WeylElement WeylGroup::from_word(std::span<const std::size_t> word) const {
  WeylElement w = identity();
  for (std::size_t letter : word) w = multiply(w, simple_reflection(letter));
  return w;
}

bool WeylGroup::is_positive(RootId r) const {
  for (int c : roots_.at(r)) {
    if (c != 0) return c > 0;
  }
  return false;
}

std::optional<RootId> WeylGroup::find_root(const RootVector& v) const {
  auto it = root_index_.find(v);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<RootId> WeylGroup::positive_roots() const {
  std::vector<RootId> out;
  for (RootId r = 0; r < roots_.size(); ++r) {
    if (is_positive(r)) out.push_back(r);
  }
  return out;
}

RootId WeylGroup::apply(WeylElement w, RootId r) const {
  if (r >= roots_.size()) throw Error("root id out of range");
  return perm(w)[r];
}

RootVector WeylGroup::apply_to_root(WeylElement w, const RootVector& r) const {
  auto id = find_root(r);
  if (!id) throw Error("vector is not a root of " + datum_.label());
  return roots_[apply(w, *id)];
}

int WeylGroup::coroot_pairing(RootId r, RootId s) const {
  // s_s(r) = r - <r, s^vee> s.
  const RootVector& image = roots_[apply(reflection(s), r)];
  const RootVector& rv = roots_[r];
  const RootVector& sv = roots_[s];
  for (std::size_t k = 0; k < sv.size(); ++k) {
    if (sv[k] != 0) return (rv[k] - image[k]) / sv[k];
  }
  return 0;
}

bool WeylGroup::orthogonal_roots(RootId r, RootId s) const {
  return coroot_pairing(r, s) == 0;
}

bool WeylGroup::in_root_subsystem(RootId r,
                                  std::span<const std::size_t> subset) const {
  const RootVector& v = roots_.at(r);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != 0 &&
        std::find(subset.begin(), subset.end(), k) == subset.end()) {
      return false;
    }
  }
  return true;
}

bool WeylGroup::bruhat_leq(WeylElement u, WeylElement v) const {
  // Peel the first letter s of v's canonical word (a left descent). If s is
  // also a left descent of u then u <= v iff su <= sv; otherwise u <= v iff
  // u <= sv.
  while (true) {
    if (length(u) > length(v)) return false;
    if (length(v) == 0) return length(u) == 0;
    if (length(u) == 0) return true;
    WeylElement s = simple_reflection(word(v).front());
    WeylElement sv = multiply(s, v);
    WeylElement su = multiply(s, u);
    if (length(su) < length(u)) u = su;
    v = sv;
  }
}

std::vector<WeylElement> WeylGroup::min_coset_reps(
    std::span<const std::size_t> subset) const {
  for (std::size_t i : subset) {
    if (i >= rank()) throw CartanError("simple root index out of range");
  }
  std::vector<WeylElement> out;
  for (WeylElement w : elements()) {
    bool keep = true;
    for (std::size_t i : subset) {
      if (!is_positive(apply(w, simple_root(i)))) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(w);
  }
  return out;
}

std::vector<WeylElement> WeylGroup::parabolic_subgroup(
    std::span<const std::size_t> subset) const {
  std::vector<WeylElement> gens;
  for (std::size_t i : subset) gens.push_back(simple_reflection(i));
  return generate(gens);
}

bool WeylGroup::is_subgroup(std::span<const WeylElement> set) const {
  std::set<WeylElement> members(set.begin(), set.end());
  if (!members.contains(identity())) return false;
  for (WeylElement a : members) {
    for (WeylElement b : members) {
      if (!members.contains(multiply(a, b))) return false;
    }
  }
  return true;
}

std::vector<WeylElement> WeylGroup::min_in_coset(
    WeylElement w, std::span<const WeylElement> subgroup,
    CosetSide side) const {
  if (!is_subgroup(subgroup)) {
    throw Error("min_in_coset: the given set is not a subgroup");
  }
  std::set<WeylElement> coset;
  for (WeylElement h : subgroup) {
    coset.insert(side == CosetSide::kLeft ? multiply(w, h) : multiply(h, w));
  }
  std::size_t best = length(*coset.begin());
  for (WeylElement c : coset) best = std::min(best, length(c));
  std::vector<WeylElement> out;
  for (WeylElement c : coset) {
    if (length(c) == best) out.push_back(c);
  }
  return out;
}

int WeylGroup::braid_order(std::size_t i, std::size_t j) const {
  if (i >= rank() || j >= rank()) {
    throw CartanError("simple root index out of range");
  }
  if (i == j) throw Error("braid_order needs two distinct simple roots");
  switch (datum_.entry(i, j) * datum_.entry(j, i)) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
    default:
      throw CartanError("pair of simple roots of infinite order");
  }
}

WeylElement WeylGroup::reflection(RootId r) const {
  if (r >= roots_.size()) throw Error("root id out of range");
  if (!is_positive(r)) r = negate(r);
  if (reflection_cache_[r]) return *reflection_cache_[r];
  for (WeylElement w : elements()) {
    for (std::size_t i = 0; i < rank(); ++i) {
      if (perm(w)[simple_roots_[i]] == r) {
        WeylElement s =
            multiply(multiply(w, simple_reflection(i)), inverse(w));
        reflection_cache_[r] = s;
        return s;
      }
    }
  }
  throw Error("root not in the orbit of a simple root");
}

std::vector<WeylElement> WeylGroup::reflections() const {
  std::vector<WeylElement> out;
  for (RootId r : positive_roots()) out.push_back(reflection(r));
  return out;
}

std::vector<CommutingProduct> WeylGroup::commuting_reflection_products()
    const {
  std::vector<CommutingProduct> out;
  auto positive = positive_roots();
  for (std::size_t a = 0; a < positive.size(); ++a) {
    for (std::size_t b = a + 1; b < positive.size(); ++b) {
      if (!orthogonal_roots(positive[a], positive[b])) continue;
      out.push_back({multiply(reflection(positive[a]), reflection(positive[b])),
                     positive[a], positive[b]});
    }
  }
  return out;
}

std::vector<WeylElement> WeylGroup::generate(
    std::span<const WeylElement> generators) const {
  std::set<WeylElement> seen{identity()};
  std::deque<WeylElement> queue{identity()};
  while (!queue.empty()) {
    WeylElement x = queue.front();
    queue.pop_front();
    for (WeylElement g : generators) {
      WeylElement y = multiply(x, g);
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace orbitweave
