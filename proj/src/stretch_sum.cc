// Copyright 2026 The Sectorise Authors
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

#include "sectorise/stretch_sum.h"

#include <algorithm>
#include <limits>
#include <string>

namespace sectorise {

bool CheckStretchSum(std::span<const Colour> colours,
                     std::span<const int64_t> values, RelOp op, int64_t t) {
  if (colours.size() != values.size()) {
    throw InputError("colours and values differ in length");
  }
  for (const Stretch& s : Stretches(colours)) {
    int64_t sum = 0;
    for (int i = s.first; i <= s.last; ++i) sum += values[i];
    if (!Holds(sum, op, t)) return false;
  }
  return true;
}

StretchSumConstraint::StretchSumConstraint(ColourState& state,
                                           OrderedPath path,
                                           std::vector<int64_t> values,
                                           RelOp op, int64_t t)
    : state_(&state),
      path_(std::move(path)),
      values_(std::move(values)),
      op_(op),
      t_(t) {
  if (static_cast<int>(values_.size()) != path_.size()) {
    throw InputError("stretch_sum needs one value per path vertex");
  }
  for (const Vertex v : path_.interior()) state.geometry().CheckVertex(v);
  prefix_.assign(values_.size() + 1, 0);
  for (size_t i = 0; i < values_.size(); ++i) {
    prefix_[i + 1] = prefix_[i] + values_[i];
  }
  Reset();
}

void StretchSumConstraint::Relabel(int a, int b) {
  for (int i = a; i <= b; ++i) {
    left_[i] = a;
    right_[i] = b;
  }
}

void StretchSumConstraint::Reset() {
  const int m = path_.size();
  left_.assign(m, 0);
  right_.assign(m, 0);
  violation_ = 0;
  int first = 0;
  for (int i = 1; i <= m; ++i) {
    if (i == m || ColourAt(i) != ColourAt(first)) {
      Relabel(first, i - 1);
      violation_ += Iverson(Bad(first, i - 1));
      first = i;
    }
  }
}

std::optional<StretchRecord> StretchSumConstraint::Record(Vertex v) const {
  const std::optional<int> pos = path_.Position(v);
  if (!pos) return std::nullopt;
  const int l = left_[*pos];
  const int r = right_[*pos];
  return StretchRecord{path_.at(l), path_.at(r), ColourAt(l), Sum(l, r)};
}

std::vector<StretchRecord> StretchSumConstraint::Records() const {
  std::vector<StretchRecord> out;
  for (int i = 0; i < path_.size(); i = right_[i] + 1) {
    out.push_back({path_.at(i), path_.at(right_[i]), ColourAt(i),
                   Sum(i, right_[i])});
  }
  return out;
}

int64_t StretchSumConstraint::IntVarViolation(Vertex v) const {
  const std::optional<int> pos = path_.Position(v);
  if (!pos) return 0;
  const int i = *pos;
  const int l = left_[i];
  const int r = right_[i];
  if (i != l && i != r) return 0;
  const int64_t sigma = Sum(l, r);
  if (!Holds(sigma, op_, t_)) return 1;
  if (Holds(sigma - values_[i], op_, t_)) return values_[i];
  return 0;
}

int64_t StretchSumConstraint::IntProbeAssign(Vertex v, Colour d) const {
  const std::optional<int> pos = path_.Position(v);
  if (!pos) return 0;
  const int i = *pos;
  if (ColourAt(i) == d) return 0;
  const int m = path_.size();
  const int l = left_[i];
  const int r = right_[i];
  const bool join_left = i == l && i > 0 && ColourAt(i - 1) == d;
  const bool join_right = i == r && i + 1 < m && ColourAt(i + 1) == d;

  int64_t before = Iverson(Bad(l, r));
  int64_t after = 0;
  if (join_left) before += Iverson(Bad(left_[i - 1], i - 1));
  if (join_right) before += Iverson(Bad(i + 1, right_[i + 1]));
  const int nl = join_left ? left_[i - 1] : i;
  const int nr = join_right ? right_[i + 1] : i;
  after += Iverson(Bad(nl, nr));
  if (i > l) after += Iverson(Bad(l, i - 1));
  if (i < r) after += Iverson(Bad(i + 1, r));
  return after - before;
}

int64_t StretchSumConstraint::TableProbeAssign(Vertex v, Colour d) const {
  const std::optional<int> pos = path_.Position(v);
  if (!pos) return 0;
  const int i = *pos;
  const Colour c = ColourAt(i);
  if (c == d) return 0;
  const int m = path_.size();
  const int l = left_[i];
  const int r = right_[i];
  constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;
  constexpr Colour kGamma = -2;  // matches no colour
  const Colour c1 = l > 0 ? ColourAt(l - 1) : kGamma;
  const int64_t s1 = l > 0 ? Sum(left_[l - 1], l - 1) : kInf;
  const Colour c2 = r + 1 < m ? ColourAt(r + 1) : kGamma;
  const int64_t s2 = r + 1 < m ? Sum(r + 1, right_[r + 1]) : kInf;
  const int64_t sigma = Sum(l, r);
  const int64_t val = values_[i];
  auto lt = [&](int64_t x) { return x < t_; };

  if (l == i && i == r) {
    const int64_t merged =
        (c1 == d ? s1 : 0) + sigma + (c2 == d ? s2 : 0);
    return -Iverson(lt(s1) && !lt(merged)) - Iverson(lt(sigma)) -
           Iverson(lt(s2) && !lt(merged));
  }
  if (l == i) {
    if (d == c1) {
      return Iverson(!lt(sigma) && lt(sigma - val)) -
             Iverson(lt(s1) && !lt(s1 + val));
    }
    return Iverson(lt(val)) + Iverson(!lt(sigma) && lt(sigma - val));
  }
  if (r == i) {
    if (d == c2) {
      return Iverson(!lt(sigma) && lt(sigma - val)) -
             Iverson(lt(s2) && !lt(s2 + val));
    }
    return Iverson(lt(val)) + Iverson(!lt(sigma) && lt(sigma - val));
  }
  if (lt(sigma)) return 2;
  return Iverson(lt(Sum(l, i - 1))) + Iverson(lt(val)) +
         Iverson(lt(Sum(i + 1, r)));
}

void StretchSumConstraint::CommitAssign(Vertex v, Colour d) {
  const std::optional<int> pos = path_.Position(v);
  if (!pos) return;
  const int i = *pos;
  if (ColourAt(i) == d) return;
  violation_ += IntProbeAssign(v, d);
  const int m = path_.size();
  const int l = left_[i];
  const int r = right_[i];
  const bool join_left = i == l && i > 0 && ColourAt(i - 1) == d;
  const bool join_right = i == r && i + 1 < m && ColourAt(i + 1) == d;
  const int nl = join_left ? left_[i - 1] : i;
  const int nr = join_right ? right_[i + 1] : i;
  if (i > l) Relabel(l, i - 1);
  if (i < r) Relabel(i + 1, r);
  Relabel(nl, nr);
}

double StretchSumConstraint::ScratchViolation() const {
  int64_t count = 0;
  std::vector<Colour> seq(path_.size());
  for (int i = 0; i < path_.size(); ++i) seq[i] = ColourAt(i);
  for (const Stretch& s : Stretches(seq)) {
    int64_t sum = 0;
    for (int i = s.first; i <= s.last; ++i) sum += values_[i];
    count += Iverson(!Holds(sum, op_, t_));
  }
  return static_cast<double>(count);
}

bool StretchSumConstraint::Check() const {
  std::vector<Colour> seq(path_.size());
  for (int i = 0; i < path_.size(); ++i) seq[i] = ColourAt(i);
  return CheckStretchSum(seq, values_, op_, t_);
}

void StretchSumConstraint::HardInit(ColourState& state) const {
  const int m = path_.size();
  if (m == 0) return;
  // reach[j]: positions 0..j-1 split into satisfied stretches; cut[j] is
  // where the last one starts. Among all cuts the latest is kept, which is
  // the greedy left-to-right choice.
  std::vector<char> reach(m + 1, 0);
  std::vector<int> cut(m + 1, -1);
  reach[0] = 1;
  for (int j = 1; j <= m; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      if (reach[i] && Holds(Sum(i, j - 1), op_, t_)) {
        reach[j] = 1;
        cut[j] = i;
        break;
      }
    }
  }
  if (!reach[m]) {
    throw InitError("no colouring of the path satisfies stretch_sum " +
                    std::string(RelOpName(op_)) + " " + std::to_string(t_));
  }
  std::vector<std::pair<int, int>> segments;
  for (int j = m; j > 0; j = cut[j]) segments.push_back({cut[j], j - 1});
  if (segments.size() > 1 && state.num_colours() < 2) {
    throw InitError("stretch_sum needs two colours to separate stretches");
  }
  std::vector<Colour> colours(state.colours().begin(), state.colours().end());
  Colour prev = kBottomColour;
  for (auto it = segments.rbegin(); it != segments.rend(); ++it) {
    Colour c = colours[path_.at(it->first)];
    if (c == prev) c = c % state.num_colours() + 1;
    for (int i = it->first; i <= it->second; ++i) colours[path_.at(i)] = c;
    prev = c;
  }
  state.SetAll(std::move(colours));
}

std::optional<std::vector<std::pair<int, int>>>
StretchSumConstraint::Segmentation(int count) const {
  const int m = path_.size();
  if (count < 1 || count > m) return std::nullopt;
  // cut[j][c]: start of the last of c stretches covering 0..j-1, or -1.
  std::vector<std::vector<int>> cut(m + 1, std::vector<int>(count + 1, -1));
  std::vector<std::vector<char>> reach(m + 1,
                                       std::vector<char>(count + 1, 0));
  reach[0][0] = 1;
  for (int j = 1; j <= m; ++j) {
    for (int i = j - 1; i >= 0; --i) {
      if (!Holds(Sum(i, j - 1), op_, t_)) continue;
      for (int c = 1; c <= count; ++c) {
        if (reach[i][c - 1] && !reach[j][c]) {
          reach[j][c] = 1;
          cut[j][c] = i;
        }
      }
    }
  }
  if (!reach[m][count]) return std::nullopt;
  std::vector<std::pair<int, int>> segments;
  for (int j = m, c = count; c > 0; --c) {
    segments.push_back({cut[j][c], j - 1});
    j = cut[j][c];
  }
  std::reverse(segments.begin(), segments.end());
  return segments;
}

}  // namespace sectorise
