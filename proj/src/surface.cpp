#include "stretchlab/surface.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>

#include "stretchlab/error.hpp"

namespace stretchlab {

namespace {

[[noreturn]] void bad_triangulation(const std::string& what) {
  throw StretchError(ErrorKind::InvalidTriangulation, what);
}

[[noreturn]] void bad_curve(const std::string& what) {
  throw StretchError(ErrorKind::InvalidCurve, what);
}

}  // namespace

IdealTriangulation IdealTriangulation::from_edge_lists(
    std::vector<std::array<int, 3>> triangles, std::optional<int> declared_genus) {
  if (triangles.empty()) bad_triangulation("triangulation has no triangles");
  IdealTriangulation tri;
  const int T = static_cast<int>(triangles.size());
  if ((3 * T) % 2 != 0) bad_triangulation("odd number of triangle sides");
  const int E = 3 * T / 2;

  std::vector<std::vector<SideRef>> occurrences(E);
  for (int t = 0; t < T; ++t) {
    for (int s = 0; s < 3; ++s) {
      const int e = triangles[t][s];
      if (e < 0 || e >= E) {
        bad_triangulation("edge id " + std::to_string(e) + " outside [0, " +
                          std::to_string(E) + ")");
      }
      occurrences[e].push_back({t, s});
    }
  }
  tri.edge_sides_.resize(E);
  tri.partner_.resize(T);
  for (int e = 0; e < E; ++e) {
    if (occurrences[e].size() != 2) {
      bad_triangulation("edge e" + std::to_string(e) + " appears " +
                        std::to_string(occurrences[e].size()) + " times, expected 2");
    }
    const SideRef x = occurrences[e][0];
    const SideRef y = occurrences[e][1];
    tri.edge_sides_[e] = {x, y};
    tri.partner_[x.triangle][x.side] = y;
    tri.partner_[y.triangle][y.side] = x;
  }
  tri.edges_ = std::move(triangles);

  std::vector<std::array<bool, 3>> seen(T, {false, false, false});
  for (int t = 0; t < T; ++t) {
    for (int v = 0; v < 3; ++v) {
      if (seen[t][v]) continue;
      std::vector<Corner> orbit;
      Corner c{t, v};
      while (!seen[c.triangle][c.side]) {
        seen[c.triangle][c.side] = true;
        orbit.push_back(c);
        c = tri.rotate_corner(c);
      }
      tri.punctures_.push_back(std::move(orbit));
    }
  }

  const int P = tri.puncture_count();
  const int twice_genus = 2 - P - (T - E);
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    bad_triangulation("Euler characteristic T - E = " + std::to_string(T - E) +
                      " is not 2 - 2g - " + std::to_string(P) + " for any genus");
  }
  tri.genus_ = twice_genus / 2;
  if (declared_genus && *declared_genus != tri.genus_) {
    bad_triangulation("declared genus " + std::to_string(*declared_genus) +
                      " but gluing gives genus " + std::to_string(tri.genus_) +
                      " with " + std::to_string(P) + " punctures");
  }
  tri.validate();
  return tri;
}

Corner IdealTriangulation::rotate_corner(Corner c) const {
  return partner({c.triangle, (c.side + 2) % 3});
}

void IdealTriangulation::validate() const {
  const int T = triangle_count();
  const int E = edge_count();
  if (2 * E != 3 * T) bad_triangulation("E != 3T/2");
  for (int t = 0; t < T; ++t) {
    for (int s = 0; s < 3; ++s) {
      const SideRef here{t, s};
      const SideRef other = partner(here);
      if (other == here) bad_triangulation("side glued to itself");
      if (partner(other) != here) bad_triangulation("gluing is not an involution");
      if (edge(other) != edge(here)) bad_triangulation("glued sides carry different edges");
    }
  }
  std::size_t corners = 0;
  for (const auto& orbit : punctures_) {
    if (orbit.empty()) bad_triangulation("empty puncture orbit");
    if (rotate_corner(orbit.back()) != orbit.front()) {
      bad_triangulation("puncture orbit is not closed under corner rotation");
    }
    corners += orbit.size();
  }
  if (corners != static_cast<std::size_t>(3 * T)) {
    bad_triangulation("puncture orbits do not partition the corners");
  }
  if (T - E != 2 - 2 * genus_ - puncture_count()) {
    bad_triangulation("Euler characteristic mismatch");
  }
}

bool IdealTriangulation::is_standard_torus() const {
  return edges_ == standard_torus_triangulation().edges_;
}

IdealTriangulation standard_torus_triangulation() {
  return IdealTriangulation::from_edge_lists({{0, 1, 2}, {0, 1, 2}}, 1);
}

std::vector<SideRef> resolve_loop(const IdealTriangulation& tri,
                                  const CombinatorialLoop& loop) {
  if (loop.steps.empty()) {
    throw StretchError(ErrorKind::IncompatibleLoop, "loop has no steps");
  }
  const int E = tri.edge_count();
  for (const auto& step : loop.steps) {
    if (step.edge < 0 || step.edge >= E) {
      throw StretchError(ErrorKind::IncompatibleLoop,
                         "loop crosses unknown edge " + std::to_string(step.edge));
    }
  }
  const std::size_t n = loop.steps.size();
  for (const SideRef start : tri.edge_sides(loop.steps[0].edge)) {
    std::vector<SideRef> entered;
    entered.reserve(n);
    SideRef cur = start;
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      entered.push_back(cur);
      const int exit_side = (cur.side + (loop.steps[k].turn == Turn::Right ? 1 : 2)) % 3;
      const SideRef exit{cur.triangle, exit_side};
      if (tri.edge(exit) != loop.steps[(k + 1) % n].edge) {
        ok = false;
        break;
      }
      cur = tri.partner(exit);
    }
    if (ok && cur == start) return entered;
  }
  throw StretchError(ErrorKind::IncompatibleLoop,
                     "loop " + to_string(loop) + " does not close up in the triangulation");
}

CombinatorialLoop reversed(const CombinatorialLoop& loop) {
  CombinatorialLoop out;
  const std::size_t n = loop.steps.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = n - 1 - i;
    const Turn flipped = loop.steps[k].turn == Turn::Left ? Turn::Right : Turn::Left;
    out.steps.push_back({loop.steps[(k + 1) % n].edge, flipped});
  }
  return out;
}

CombinatorialLoop rotated(const CombinatorialLoop& loop, std::size_t k) {
  CombinatorialLoop out = loop;
  if (!out.steps.empty()) {
    std::rotate(out.steps.begin(), out.steps.begin() + (k % out.steps.size()),
                out.steps.end());
  }
  return out;
}

std::vector<CombinatorialLoop> puncture_loops(const IdealTriangulation& tri) {
  std::vector<CombinatorialLoop> loops;
  for (const auto& orbit : tri.punctures()) {
    CombinatorialLoop loop;
    for (const Corner& c : orbit) loop.steps.push_back({tri.edge(c), Turn::Left});
    loops.push_back(std::move(loop));
  }
  return loops;
}

CombinatorialLoop torus_a_loop() { return {{{2, Turn::Left}, {1, Turn::Right}}}; }
CombinatorialLoop torus_b_loop() { return {{{2, Turn::Right}, {0, Turn::Left}}}; }

Slope make_slope(long p, long q) {
  if (p == 0 && q == 0) bad_curve("slope 0/0");
  if (std::gcd(std::labs(p), std::labs(q)) != 1) {
    bad_curve("slope " + std::to_string(p) + "/" + std::to_string(q) + " is not coprime");
  }
  if (q < 0 || (q == 0 && p < 0)) {
    p = -p;
    q = -q;
  }
  return {p, q};
}

std::vector<Slope> enumerate_slopes(int max_complexity) {
  if (max_complexity < 1) {
    throw StretchError(ErrorKind::InvalidArgument, "slope bound must be >= 1");
  }
  std::vector<Slope> out;
  for (long s = 1; s <= max_complexity; ++s) {
    for (long p = -s; p <= s; ++p) {
      const long q = s - std::labs(p);
      if (q == 0 && p != 1) continue;
      if (std::gcd(std::labs(p), q) != 1) continue;
      out.push_back({p, q});
    }
  }
  return out;
}

long geometric_intersection(const Slope& s, const Slope& t) {
  return std::labs(s.p * t.q - s.q * t.p);
}

std::array<long, 3> torus_edge_intersections(const Slope& s) {
  return {std::labs(s.q), std::labs(s.p), std::labs(s.p - s.q)};
}

bool is_letter(char c) { return c == 'a' || c == 'b' || c == 'A' || c == 'B'; }

char inverse_letter(char c) {
  switch (c) {
    case 'a': return 'A';
    case 'A': return 'a';
    case 'b': return 'B';
    case 'B': return 'b';
  }
  bad_curve(std::string("not a generator letter: ") + c);
}

std::string inverse_word(std::string_view w) {
  std::string out(w.rbegin(), w.rend());
  for (char& c : out) c = inverse_letter(c);
  return out;
}

std::string free_reduce(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    if (!out.empty() && out.back() == inverse_letter(c)) {
      out.pop_back();
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string cyclic_reduce(std::string_view w) {
  std::string r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == inverse_letter(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return r.substr(lo, hi - lo);
}

bool is_cyclically_reduced(std::string_view w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (w[i + 1] == inverse_letter(w[i])) return false;
  }
  return n < 2 || w[0] != inverse_letter(w[n - 1]);
}

int letter_rank(char c) {
  switch (c) {
    case 'a': return 0;
    case 'b': return 1;
    case 'A': return 2;
    case 'B': return 3;
  }
  return 4;
}

bool word_less(std::string_view x, std::string_view y) {
  return std::lexicographical_compare(
      x.begin(), x.end(), y.begin(), y.end(),
      [](char l, char r) { return letter_rank(l) < letter_rank(r); });
}

std::string canonical_class(std::string_view w) {
  std::string best(w);
  for (const std::string& v : {std::string(w), inverse_word(w)}) {
    std::string rot = v;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (word_less(rot, best)) best = rot;
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    }
  }
  return best;
}

FreeWord slope_word(const Slope& s) {
  if (s.p < 0) {
    std::string w = slope_word({-s.p, s.q}).letters;
    std::replace(w.begin(), w.end(), 'a', 'A');
    return {w};
  }
  // Stern-Brocot descent between (1,0) and (0,1).
  long lp = 1, lq = 0, rp = 0, rq = 1;
  std::string lw = "a", rw = "b";
  while (true) {
    if (s.p == lp && s.q == lq) return {lw};
    if (s.p == rp && s.q == rq) return {rw};
    const long mp = lp + rp, mq = lq + rq;
    std::string mw = lw + rw;
    if (s.p == mp && s.q == mq) return {mw};
    if (s.p * mq > s.q * mp) {
      rp = mp;
      rq = mq;
      rw = std::move(mw);
    } else {
      lp = mp;
      lq = mq;
      lw = std::move(mw);
    }
  }
}

namespace {

void extend_words(std::string& prefix, std::size_t length, std::vector<FreeWord>& out) {
  static constexpr char kLetters[] = {'a', 'b', 'A', 'B'};
  if (prefix.size() == length) {
    if (is_cyclically_reduced(prefix) && canonical_class(prefix) == prefix) {
      out.push_back({prefix});
    }
    return;
  }
  for (char c : kLetters) {
    if (!prefix.empty() && prefix.back() == inverse_letter(c)) continue;
    prefix.push_back(c);
    extend_words(prefix, length, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<FreeWord> enumerate_conjugacy_classes(int max_length) {
  if (max_length < 1) {
    throw StretchError(ErrorKind::InvalidArgument, "word length bound must be >= 1");
  }
  std::vector<FreeWord> out;
  std::string prefix;
  for (int n = 1; n <= max_length; ++n) {
    extend_words(prefix, static_cast<std::size_t>(n), out);
  }
  return out;
}

std::string to_string(const Slope& s) {
  return "slope:" + std::to_string(s.p) + "/" + std::to_string(s.q);
}

std::string to_string(const FreeWord& w) { return "word:" + w.letters; }

std::string to_string(const CombinatorialLoop& l) {
  std::string out = "loop:";
  for (std::size_t i = 0; i < l.steps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(l.steps[i].edge);
    out += l.steps[i].turn == Turn::Left ? 'L' : 'R';
  }
  return out;
}

std::string to_string(const Curve& c) {
  return std::visit([](const auto& v) { return to_string(v); }, c);
}

namespace {

long parse_long(std::string_view text, std::string_view spec) {
  long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last) {
    bad_curve("bad integer '" + std::string(text) + "' in curve '" +
              std::string(spec) + "'");
  }
  return value;
}

}  // namespace

Curve parse_curve(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    bad_curve("curve '" + std::string(spec) + "' lacks a 'kind:' prefix");
  }
  const std::string_view kind = spec.substr(0, colon);
  const std::string_view body = spec.substr(colon + 1);
  if (kind == "slope") {
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) bad_curve("slope needs p/q");
    return make_slope(parse_long(body.substr(0, slash), spec),
                      parse_long(body.substr(slash + 1), spec));
  }
  if (kind == "word") {
    for (char c : body) {
      if (!is_letter(c)) bad_curve("word letters must be a, b, A, B");
    }
    std::string w = cyclic_reduce(body);
    if (w.empty()) bad_curve("word reduces to the identity");
    return FreeWord{std::move(w)};
  }
  if (kind == "loop") {
    CombinatorialLoop loop;
    std::size_t pos = 0;
    while (pos <= body.size()) {
      const auto comma = body.find(',', pos);
      std::string_view tok = body.substr(pos, comma == std::string_view::npos
                                                  ? std::string_view::npos
                                                  : comma - pos);
      if (!tok.empty() && tok.front() == 'e') tok.remove_prefix(1);
      if (tok.size() < 2) bad_curve("loop step '" + std::string(tok) + "' too short");
      const char turn = tok.back();
      if (turn != 'L' && turn != 'R') bad_curve("loop step turn must be L or R");
      const long edge = parse_long(tok.substr(0, tok.size() - 1), spec);
      loop.steps.push_back({static_cast<int>(edge), turn == 'L' ? Turn::Left : Turn::Right});
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    return loop;
  }
  bad_curve("unknown curve kind '" + std::string(kind) + "'");
}

}  // namespace stretchlab
