#include "wbinom/paths.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

namespace wb {

namespace {

struct Move {
  int dx, dy;
};

// Unit moves making up one step.
std::vector<Move> moves(Step s) {
  switch (s) {
    case Step::N: return {{0, 1}};
    case Step::S: return {{0, -1}};
    case Step::E: return {{1, 0}};
    case Step::W: return {{-1, 0}};
    case Step::ES: return {{1, 0}, {0, -1}};
    case Step::NW: return {{0, 1}, {-1, 0}};
  }
  return {};
}

bool is_combo(Step s) { return s == Step::ES || s == Step::NW; }

template <class F>
void for_each_move(const HybridPath& p, F&& f) {
  Point at = p.start;
  for (Step s : p.steps)
    for (Move mv : moves(s)) {
      Point next{at.x + mv.dx, at.y + mv.dy};
      f(at, next);
      at = next;
    }
}

Point walk_end(const HybridPath& p) {
  Point at = p.start;
  for_each_move(p, [&](Point, Point to) { at = to; });
  return at;
}

void arrangements(Step a, int na, Step b, int nb, std::vector<Step>& cur,
                  std::vector<std::vector<Step>>& out) {
  if (na == 0 && nb == 0) {
    out.push_back(cur);
    return;
  }
  if (na > 0) {
    cur.push_back(a);
    arrangements(a, na - 1, b, nb, cur, out);
    cur.pop_back();
  }
  if (nb > 0) {
    cur.push_back(b);
    arrangements(a, na, b, nb - 1, cur, out);
    cur.pop_back();
  }
}

// Horizontal unit edges as (column s, height h): an east move (s-1,h)->(s,h)
// or a west move (s,h)->(s-1,h).
void horizontal_edges(const HybridPath& p, std::vector<std::pair<int, int>>& out) {
  for_each_move(p, [&](Point from, Point to) {
    if (from.y != to.y) return;
    out.emplace_back(std::max(from.x, to.x), from.y);
  });
}

// Cells between the x-axis and the horizontal edges, one column at a time.
std::vector<AreaCell> column_cells(const std::vector<std::pair<int, int>>& edges) {
  std::vector<AreaCell> cells;
  for (auto [s, h] : edges) {
    int lo = h > 0 ? 1 : h + 1;
    int hi = h > 0 ? h : 0;
    for (int t = lo; t <= hi; ++t) cells.push_back({s, t, sgn(s - 1) * sgn(t - 1), false});
  }
  return cells;
}

WeightMonomial cell_monomial(const std::vector<AreaCell>& cells) {
  std::vector<WeightMonomial::factor> f;
  for (const auto& c : cells) f.push_back({{c.s, c.t}, c.exponent});
  return WeightMonomial(std::move(f));
}

int combo_count(const HybridPath& p) {
  return static_cast<int>(std::count_if(p.steps.begin(), p.steps.end(), is_combo));
}

HybridPath shifted_path(HybridPath p, Point origin) {
  p.start = {p.start.x + origin.x, p.start.y + origin.y};
  p.end = {p.end.x + origin.x, p.end.y + origin.y};
  return p;
}

}  // namespace

std::string_view step_name(Step s) {
  switch (s) {
    case Step::N: return "N";
    case Step::S: return "S";
    case Step::E: return "E";
    case Step::W: return "W";
    case Step::ES: return "ES";
    case Step::NW: return "NW";
  }
  return "?";
}

std::string step_string(const HybridPath& p) {
  std::string out;
  for (Step s : p.steps) {
    if (!out.empty()) out += ' ';
    out += step_name(s);
  }
  return out;
}

HybridPath parse_path(std::string_view text, Point start) {
  HybridPath p;
  p.start = start;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool found = false;
    for (Step s : {Step::N, Step::S, Step::E, Step::W, Step::ES, Step::NW})
      if (tok == step_name(s)) {
        p.steps.push_back(s);
        found = true;
      }
    if (!found) throw std::invalid_argument("unknown step: " + tok);
  }
  p.end = walk_end(p);
  return p;
}

bool is_valid_path(const HybridPath& p) {
  if (walk_end(p) != p.end) return false;
  int k = p.end.x - p.start.x, m = p.end.y - p.start.y;
  auto only = [&](std::initializer_list<Step> allowed) {
    return std::all_of(p.steps.begin(), p.steps.end(), [&](Step s) {
      return std::find(allowed.begin(), allowed.end(), s) != allowed.end();
    });
  };
  if (k >= 0 && m >= 0) return only({Step::N, Step::E});
  if (m < 0 && k >= 0) return only({Step::S, Step::ES}) && p.steps.front() == Step::S;
  if (k < 0 && m >= 0) return only({Step::W, Step::NW}) && p.steps.front() == Step::W;
  return false;
}

std::vector<HybridPath> enumerate_paths(int k, int m) {
  std::vector<std::vector<Step>> seqs;
  std::vector<Step> cur;
  if (k >= 0 && m >= 0) {
    arrangements(Step::N, m, Step::E, k, cur, seqs);
  } else if (m < 0 && k >= 0) {
    int plain = -m - k;
    if (plain >= 1) {
      cur.push_back(Step::S);
      arrangements(Step::S, plain - 1, Step::ES, k, cur, seqs);
    }
  } else if (k < 0 && m >= 0) {
    int plain = -k - m;
    if (plain >= 1) {
      cur.push_back(Step::W);
      arrangements(Step::W, plain - 1, Step::NW, m, cur, seqs);
    }
  }
  std::vector<HybridPath> out;
  out.reserve(seqs.size());
  for (auto& s : seqs) out.push_back(HybridPath{std::move(s), {0, 0}, {k, m}});
  return out;
}

SignedMonomial path_weight_steps(const HybridPath& p) {
  SignedMonomial r;
  for_each_move(p, [&](Point from, Point to) {
    if (to.x == from.x + 1) r.mono = r.mono * big_weight(to.x, to.y);
    if (to.x == from.x - 1) r.mono = r.mono * big_weight(from.x, from.y).inverse();
  });
  if (combo_count(p) % 2) r.sign = -1;
  return r;
}

std::vector<AreaCell> area_cells(const HybridPath& p) {
  std::vector<std::pair<int, int>> edges;
  horizontal_edges(p, edges);
  auto cells = column_cells(edges);

  // path edges keyed by lower-left endpoint and orientation
  std::set<std::tuple<int, int, bool>> path_edges;
  for_each_move(p, [&](Point a, Point b) {
    path_edges.emplace(std::min(a.x, b.x), std::min(a.y, b.y), a.y == b.y);
  });
  for (auto& c : cells) {
    bool bottom = path_edges.count({c.s - 1, c.t - 1, true});
    bool top = path_edges.count({c.s - 1, c.t, true});
    bool left = path_edges.count({c.s - 1, c.t - 1, false});
    bool right = path_edges.count({c.s, c.t - 1, false});
    bool inner = (bottom || top) && (left || right);
    c.negative_corner = inner && (c.s <= 0 || c.t <= 0);
  }
  return cells;
}

SignedMonomial path_weight_area(const HybridPath& p) {
  auto cells = area_cells(p);
  SignedMonomial r;
  r.mono = cell_monomial(cells);
  for (const auto& c : cells)
    if (c.negative_corner) r.sign = -r.sign;
  return r;
}

WeightPolynomial path_sum(int k, int m) {
  WeightPolynomial sum;
  for (const auto& p : enumerate_paths(k, m)) {
    auto sw = path_weight_steps(p);
    sum.add_term(sw.mono, sw.sign);
  }
  return sum;
}

std::string to_string(const HybridSubset& y) {
  std::ostringstream os;
  os << '{';
  if (y.negative) os << '|';
  for (std::size_t i = 0; i < y.elements.size(); ++i) os << (i ? "," : "") << y.elements[i];
  if (!y.negative) os << '|';
  os << '}';
  return os.str();
}

namespace {

void weakly_decreasing(int len, int hi, int lo, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int top = cur.empty() ? hi : cur.back();
  for (int v = top; v >= lo; --v) {
    cur.push_back(v);
    weakly_decreasing(len, hi, lo, cur, out);
    cur.pop_back();
  }
}

void increasing(int len, int lo, int hi, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int from = cur.empty() ? lo : cur.back() + 1;
  for (int v = from; v <= hi; ++v) {
    cur.push_back(v);
    increasing(len, lo, hi, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<HybridSubset> subsets_of(int n, int k) {
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  bool negative = false;
  if (n >= 0 && 0 <= k && k <= n) {
    increasing(k, 1, n, cur, seqs);
  } else if (n < 0 && k >= 0) {
    weakly_decreasing(k, 0, n + 1, cur, seqs);
  } else if (n < 0 && k <= n) {
    negative = true;
    weakly_decreasing(-k, 0, n + 1, cur, seqs);
    std::erase_if(seqs, [n](const std::vector<int>& s) {
      for (int v = n + 1; v <= 0; ++v)
        if (std::find(s.begin(), s.end(), v) == s.end()) return true;
      return false;
    });
  }
  std::vector<HybridSubset> out;
  for (auto& s : seqs) out.push_back({n, std::move(s), negative});
  return out;
}

HybridPath subset_to_path(const HybridSubset& y) {
  const int n = y.n;
  const int len = static_cast<int>(y.elements.size());
  HybridPath p;
  int h = 0;
  auto repeat = [&](Step s, int count) {
    if (count < 0) throw std::invalid_argument("subset is not in canonical form");
    p.steps.insert(p.steps.end(), count, s);
  };
  if (!y.negative && n >= 0) {
    // east step i ends at (i, y_i - i)
    for (int i = 1; i <= len; ++i) {
      int target = y.elements[i - 1] - i;
      repeat(Step::N, target - h);
      p.steps.push_back(Step::E);
      h = target;
    }
    repeat(Step::N, n - len - h);
    p.end = {len, n - len};
  } else if (!y.negative) {
    for (int i = 1; i <= len; ++i) {
      int target = y.elements[i - 1] - i;
      repeat(Step::S, h - target);
      p.steps.push_back(Step::ES);
      h = target - 1;
    }
    repeat(Step::S, h - (n - len));
    p.end = {len, n - len};
  } else {
    // west step p starts at (1-p, y_p - (1-p))
    for (int q = 1; q <= len; ++q) {
      int col = 1 - q;
      int target = y.elements[q - 1] - col;
      int rise = target - h;
      if (rise == 0)
        p.steps.push_back(Step::W);
      else if (rise == 1)
        p.steps.push_back(Step::NW);
      else
        throw std::invalid_argument("subset is not in canonical form");
      h = target;
    }
    p.end = {-len, n + len};
  }
  if (walk_end(p) != p.end) throw std::invalid_argument("subset does not fit [n]");
  return p;
}

HybridSubset path_to_subset(const HybridPath& p) {
  HybridSubset y;
  y.n = (p.end.x - p.start.x) + (p.end.y - p.start.y);
  y.negative = p.end.x - p.start.x < 0;
  for_each_move(p, [&](Point from, Point to) {
    if (to.x == from.x + 1) y.elements.push_back(to.y + to.x);
    if (to.x == from.x - 1) y.elements.push_back(from.y + from.x);
  });
  return y;
}

WeightPolynomial subset_sum(int n, int k) {
  int eps = neg_one_pow(sgn(k) < 0 ? n : 0) * neg_one_pow(sgn(n) < 0 ? k : 0);
  WeightPolynomial sum;
  for (const auto& y : subsets_of(n, k)) {
    auto term = range_product<WeightMonomial>(1, k, [&](long i) {
      int yi = k >= 0 ? y.elements[i - 1] : y.elements[-i];
      return big_weight(static_cast<int>(i), yi - static_cast<int>(i));
    });
    sum.add_term(term, eps);
  }
  return sum;
}

std::vector<PathPair> enumerate_pairs(int n, int m, int k) {
  if (k < 0) throw std::invalid_argument("enumerate_pairs needs k >= 0");
  std::vector<PathPair> out;
  for (int j = 0; j <= k; ++j) {
    auto first = enumerate_paths(j, n - j);
    auto second = enumerate_paths(k - j, m - (k - j));
    for (const auto& p1 : first)
      for (const auto& p2 : second) out.push_back({n, m, k, j, p1, shifted_path(p2, {j, n - j})});
  }
  return out;
}

SignedMonomial pair_weight(const PathPair& pp) {
  std::vector<std::pair<int, int>> edges;
  horizontal_edges(pp.p1, edges);
  horizontal_edges(pp.p2, edges);
  SignedMonomial r;
  r.mono = cell_monomial(column_cells(edges));
  if ((combo_count(pp.p1) + combo_count(pp.p2)) % 2) r.sign = -1;
  return r;
}

namespace {

struct EastInfo {
  int index = -1;  // step index, -1 if none
  int height = 0;  // y at the start of the step
};

EastInfo last_east(const HybridPath& p) {
  EastInfo e;
  int y = p.start.y;
  for (int i = 0; i < static_cast<int>(p.steps.size()); ++i) {
    if (p.steps[i] == Step::E) e = {i, y};
    if (p.steps[i] == Step::N) ++y;
  }
  return e;
}

EastInfo first_east(const HybridPath& p) {
  int y = p.start.y;
  for (int i = 0; i < static_cast<int>(p.steps.size()); ++i) {
    if (p.steps[i] == Step::ES) return {i, y};
    if (p.steps[i] == Step::S) --y;
  }
  return {};
}

enum class Move2 { none, forward, back };

Move2 classify(const PathPair& pp, EastInfo e1, EastInfo e2) {
  const int n = pp.n, m = pp.m, k = pp.k;
  if (e1.index >= 0 && e2.index >= 0) return e1.height <= e2.height ? Move2::forward : Move2::back;
  if (e1.index < 0 && e2.index >= 0 && e2.height >= 0) return Move2::forward;
  if (e2.index < 0 && e1.index >= 0 && e1.height >= n + m - k + 1) return Move2::back;
  return Move2::none;
}

}  // namespace

bool is_fixed_point(const PathPair& pp) {
  return classify(pp, last_east(pp.p1), first_east(pp.p2)) == Move2::none;
}

PathPair iota(const PathPair& pp) {
  const int n = pp.n, m = pp.m, j = pp.j;
  if (!(m < 0 && 0 <= n)) throw unsupported_case("iota is only constructed for m < 0 <= n");
  auto e1 = last_east(pp.p1);
  auto e2 = first_east(pp.p2);
  auto kind = classify(pp, e1, e2);
  if (kind == Move2::none) return pp;

  PathPair out = pp;
  auto& a = out.p1.steps;
  auto& b = out.p2.steps;
  if (kind == Move2::forward) {
    // e2 joins the first path; the second path restarts one column right
    int h1 = e1.index >= 0 ? e1.height : 0;
    a.assign(pp.p1.steps.begin(), pp.p1.steps.begin() + (e1.index + 1));
    a.insert(a.end(), e2.height - h1, Step::N);
    a.push_back(Step::E);
    a.insert(a.end(), (n - j - 1) - e2.height, Step::N);
    b.assign(n - j - e2.height, Step::S);
    b.insert(b.end(), pp.p2.steps.begin() + (e2.index + 1), pp.p2.steps.end());
    out.j = j + 1;
  } else {
    // e1 moves into the second path as an east-south combo
    a.assign(pp.p1.steps.begin(), pp.p1.steps.begin() + e1.index);
    a.insert(a.end(), (n - j + 1) - e1.height, Step::N);
    b.assign((n - j + 1) - e1.height, Step::S);
    b.push_back(Step::ES);
    int consumed = n - j - e1.height + 1;
    b.insert(b.end(), pp.p2.steps.begin() + consumed, pp.p2.steps.end());
    out.j = j - 1;
  }
  out.p1.end = {out.j, n - out.j};
  out.p2.start = out.p1.end;
  return out;
}

HybridPath merge_pair(const PathPair& pp) {
  std::vector<Step> a = pp.p1.steps, b = pp.p2.steps;
  std::size_t cut = 0;
  while (!a.empty() && cut < b.size() && a.back() == Step::N && b[cut] == Step::S) {
    a.pop_back();
    ++cut;
  }
  a.insert(a.end(), b.begin() + cut, b.end());
  return HybridPath{std::move(a), pp.p1.start, pp.p2.end};
}

}  // namespace wb
