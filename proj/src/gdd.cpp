#include "snark/gdd.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "snark/error.hpp"
#include "snark/exact_cover.hpp"
#include "snark/latin.hpp"
#include "text.hpp"

namespace snark {

std::size_t GddType::points() const {
  std::size_t n = 0;
  for (auto [g, t] : classes) n += g * t;
  return n;
}

std::size_t GddType::group_count() const {
  std::size_t n = 0;
  for (auto [g, t] : classes) n += t;
  return n;
}

std::vector<std::size_t> GddType::group_sizes() const {
  std::vector<std::size_t> out;
  for (auto [g, t] : classes) out.insert(out.end(), t, g);
  return out;
}

std::string GddType::to_string() const {
  std::string s;
  for (auto [g, t] : classes) {
    if (!s.empty()) s += ' ';
    s += std::to_string(g) + "^" + std::to_string(t);
  }
  return s;
}

GddType parse_gdd_type(std::string_view text_in, std::size_t k) {
  GddType t;
  t.k = k;
  for (std::string_view tok : text::tokens(text_in)) {
    auto caret = tok.find('^');
    auto g = text::to_uint(tok.substr(0, caret));
    auto c = caret == std::string_view::npos ? std::optional<std::uint64_t>(1) : text::to_uint(tok.substr(caret + 1));
    if (!g || !c || *g == 0 || *c == 0) throw ConfigError("bad GDD type `" + std::string(text_in) + "`");
    t.classes.emplace_back(*g, *c);
  }
  if (t.classes.empty()) throw ConfigError("empty GDD type");
  if (k < 2) throw ConfigError("GDD block size must be at least 2");
  return t;
}

GddType type_from_sizes(const std::vector<std::size_t>& sizes, std::size_t k) {
  GddType t;
  t.k = k;
  for (std::size_t s : sizes) {
    if (!t.classes.empty() && t.classes.back().first == s) {
      ++t.classes.back().second;
    } else {
      t.classes.emplace_back(s, 1);
    }
  }
  return t;
}

GddType Gdd::type() const {
  std::vector<std::size_t> sizes;
  for (const auto& g : groups) sizes.push_back(g.size());
  return type_from_sizes(sizes, k);
}

GddReport validate_gdd(const Gdd& g) {
  GddReport r;
  const std::size_t n = g.points;
  std::vector<std::size_t> group_of(n, static_cast<std::size_t>(-1));
  for (std::size_t gi = 0; gi < g.groups.size(); ++gi) {
    for (Vertex x : g.groups[gi]) {
      if (x >= n || group_of[x] != static_cast<std::size_t>(-1)) {
        r.violations.push_back({GddViolationKind::BadPartition, x, 0, gi});
        continue;
      }
      group_of[x] = gi;
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    if (group_of[x] == static_cast<std::size_t>(-1)) r.violations.push_back({GddViolationKind::BadPartition, x, 0, 0});
  }
  if (!r.violations.empty()) return r;

  std::vector<std::uint32_t> count(n * n, 0);
  for (std::size_t bi = 0; bi < g.blocks.size(); ++bi) {
    const auto& b = g.blocks[bi];
    std::vector<Vertex> sorted = b;
    std::sort(sorted.begin(), sorted.end());
    bool bad = b.size() != g.k || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
               (!sorted.empty() && sorted.back() >= n);
    if (bad) {
      r.violations.push_back({GddViolationKind::BadBlockSize, static_cast<Vertex>(bi), 0, b.size()});
      continue;
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      for (std::size_t j = i + 1; j < b.size(); ++j) {
        Vertex x = std::min(b[i], b[j]), y = std::max(b[i], b[j]);
        if (group_of[x] == group_of[y]) r.violations.push_back({GddViolationKind::IntraGroupPair, x, y, bi});
        ++count[x * n + y];
      }
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (group_of[x] == group_of[y]) continue;
      std::uint32_t c = count[x * n + y];
      if (c == 0) r.violations.push_back({GddViolationKind::UncoveredPair, x, y, 0});
      if (c > 1) r.violations.push_back({GddViolationKind::RepeatedPair, x, y, c});
    }
  }
  r.pass = r.violations.empty();
  return r;
}

void canonicalize(Gdd& g) {
  std::vector<Vertex> relabel(g.points, static_cast<Vertex>(-1));
  Vertex next = 0;
  for (auto& group : g.groups) {
    std::sort(group.begin(), group.end());
    for (Vertex x : group) {
      if (x < g.points && relabel[x] == static_cast<Vertex>(-1)) relabel[x] = next++;
    }
  }
  for (Vertex x = 0; x < g.points; ++x) {
    if (relabel[x] == static_cast<Vertex>(-1)) relabel[x] = next++;
  }
  auto map = [&](std::vector<Vertex>& v) {
    for (Vertex& x : v) {
      if (x < g.points) x = relabel[x];
    }
    std::sort(v.begin(), v.end());
  };
  for (auto& group : g.groups) map(group);
  for (auto& b : g.blocks) map(b);
  std::sort(g.blocks.begin(), g.blocks.end());
}

Gdd gdd_from_latin_squares(std::size_t k, std::size_t g) {
  if (k < 3) throw ConfigError("Latin-square GDDs need k >= 3");
  if (g == 0) throw ConfigError("group size must be positive");
  auto squares = mols(static_cast<int>(g), static_cast<int>(k - 2));
  Gdd out;
  out.k = k;
  out.points = k * g;
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Vertex> group;
    for (std::size_t s = 0; s < g; ++s) group.push_back(static_cast<Vertex>(i * g + s));
    out.groups.push_back(std::move(group));
  }
  for (std::size_t r = 0; r < g; ++r) {
    for (std::size_t c = 0; c < g; ++c) {
      std::vector<Vertex> block{static_cast<Vertex>(r), static_cast<Vertex>(g + c)};
      for (std::size_t i = 0; i + 2 < k; ++i) {
        block.push_back(static_cast<Vertex>((i + 2) * g + static_cast<std::size_t>(squares[i][r][c])));
      }
      out.blocks.push_back(std::move(block));
    }
  }
  canonicalize(out);
  return out;
}

namespace {

Gdd singleton_groups(std::size_t n) {
  Gdd g;
  g.k = 3;
  g.points = n;
  for (Vertex x = 0; x < n; ++x) g.groups.push_back({x});
  return g;
}

// Bose: n = 6t+3 on Z_m x Z_3, m = 2t+1, point (x, i) -> x + m i.
Gdd bose_sts(std::size_t n) {
  const std::size_t m = n / 3;
  const std::size_t half = (m + 1) / 2;  // inverse of 2 mod m
  Gdd g = singleton_groups(n);
  auto pt = [m](std::size_t x, std::size_t i) { return static_cast<Vertex>(x + m * (i % 3)); };
  for (std::size_t x = 0; x < m; ++x) g.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y) g.blocks.push_back({pt(x, i), pt(y, i), pt((x + y) * half % m, i + 1)});
  return g;
}

// Skolem: n = 6t+1 on Z_2t x Z_3 plus infinity (the last point), using the
// half-idempotent commutative quasigroup of order 2t.
Gdd skolem_sts(std::size_t n) {
  const std::size_t t = (n - 1) / 6;
  const std::size_t m = 2 * t;
  Gdd g = singleton_groups(n);
  const Vertex inf = static_cast<Vertex>(n - 1);
  auto pt = [m](std::size_t x, std::size_t i) { return static_cast<Vertex>(x + m * (i % 3)); };
  auto op = [t, m](std::size_t x, std::size_t y) {
    std::size_t s = (x + y) % m;
    return s % 2 == 0 ? s / 2 : t + (s - 1) / 2;
  };
  for (std::size_t x = 0; x < t; ++x) g.blocks.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < t; ++x) g.blocks.push_back({inf, pt(x + t, i), pt(x, i + 1)});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = x + 1; y < m; ++y) g.blocks.push_back({pt(x, i), pt(y, i), pt(op(x, y), i + 1)});
  return g;
}

bool is_sts(const Gdd& g) {
  if (g.k != 3 || g.groups.size() != g.points) return false;
  for (const auto& grp : g.groups) {
    if (grp.size() != 1) return false;
  }
  return validate_gdd(g).pass;
}

}  // namespace

Gdd steiner_triple_system(std::size_t n) {
  if (n % 6 != 1 && n % 6 != 3) {
    throw ConfigError("no Steiner triple system of order " + std::to_string(n));
  }
  Gdd g = n % 6 == 3 ? bose_sts(n) : skolem_sts(n);
  canonicalize(g);
  return g;
}

Gdd gdd_by_deletion(const Gdd& sts, Deletion mode) {
  if (!is_sts(sts)) throw ConfigError("deletion needs a valid Steiner triple system");
  Gdd out;
  out.k = 3;
  if (mode == Deletion::Point) {
    if (sts.points < 3) throw ConfigError("point deletion needs at least 3 points");
    const Vertex p = static_cast<Vertex>(sts.points - 1);
    out.points = sts.points - 1;
    for (const auto& b : sts.blocks) {
      if (std::find(b.begin(), b.end(), p) == b.end()) {
        out.blocks.push_back(b);
      } else {
        std::vector<Vertex> group;
        for (Vertex x : b) {
          if (x != p) group.push_back(x);
        }
        out.groups.push_back(std::move(group));
      }
    }
  } else {
    if (sts.points % 6 != 3) throw ConfigError("parallel-class deletion needs an STS of order 3 mod 6");
    ExactCover ec(sts.points);
    for (const auto& b : sts.blocks) ec.add_row({b.begin(), b.end()});
    auto solved = ec.solve();
    if (!solved.rows) throw ConfigError("Steiner triple system has no parallel class");
    std::vector<char> in_class(sts.blocks.size(), 0);
    for (std::size_t r : *solved.rows) in_class[r] = 1;
    out.points = sts.points;
    for (std::size_t i = 0; i < sts.blocks.size(); ++i) {
      (in_class[i] ? out.groups : out.blocks).push_back(sts.blocks[i]);
    }
  }
  std::sort(out.groups.begin(), out.groups.end());
  canonicalize(out);
  return out;
}

Gdd inflate_gdd(const Gdd& g, std::size_t w, const Gdd& filler) {
  if (w == 0) throw ConfigError("inflation weight must be positive");
  if (filler.k != g.k || filler.groups.size() != g.k) {
    throw ConfigError("filler must be a " + std::to_string(g.k) + "-GDD with " + std::to_string(g.k) + " groups");
  }
  for (const auto& grp : filler.groups) {
    if (grp.size() != w) throw ConfigError("filler type mismatch: expected " + std::to_string(w) + "^" + std::to_string(g.k));
  }
  if (!validate_gdd(filler).pass) throw ConfigError("filler is not a valid GDD");
  if (!validate_gdd(g).pass) throw ConfigError("inflated GDD is not valid");

  std::vector<std::size_t> group_of(filler.points), position(filler.points);
  for (std::size_t gi = 0; gi < filler.groups.size(); ++gi) {
    auto grp = filler.groups[gi];
    std::sort(grp.begin(), grp.end());
    for (std::size_t i = 0; i < grp.size(); ++i) {
      group_of[grp[i]] = gi;
      position[grp[i]] = i;
    }
  }
  Gdd out;
  out.k = g.k;
  out.points = g.points * w;
  for (const auto& grp : g.groups) {
    std::vector<Vertex> blown;
    for (Vertex x : grp)
      for (std::size_t j = 0; j < w; ++j) blown.push_back(static_cast<Vertex>(x * w + j));
    out.groups.push_back(std::move(blown));
  }
  for (auto b : g.blocks) {
    std::sort(b.begin(), b.end());
    for (const auto& fb : filler.blocks) {
      std::vector<Vertex> nb;
      for (Vertex x : fb) nb.push_back(static_cast<Vertex>(b[group_of[x]] * w + position[x]));
      out.blocks.push_back(std::move(nb));
    }
  }
  canonicalize(out);
  return out;
}

GddSearchResult solve_gdd_exact_cover(const GddType& t, std::uint64_t node_budget) {
  GddSearchResult res;
  const std::size_t k = t.k;
  const auto sizes = t.group_sizes();
  const std::size_t n = t.points();
  if (sizes.size() < k) {
    res.reason = "fewer groups than the block size";
    return res;
  }
  std::uint64_t inside = 0;
  for (std::size_t s : sizes) inside += s * s;
  const std::uint64_t cross = (static_cast<std::uint64_t>(n) * n - inside) / 2;
  if (cross % (k * (k - 1) / 2) != 0) {
    res.reason = "cross-pair count " + std::to_string(cross) + " not divisible by " + std::to_string(k * (k - 1) / 2);
    return res;
  }
  for (std::size_t s : sizes) {
    if ((n - s) % (k - 1) != 0) {
      res.reason = "point degree " + std::to_string(n - s) + " not divisible by " + std::to_string(k - 1);
      return res;
    }
  }

  std::vector<std::size_t> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
  std::vector<std::size_t> group_of(n);
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t x = start[i]; x < start[i + 1]; ++x) group_of[x] = i;
  std::vector<std::size_t> pair_col(n * n, static_cast<std::size_t>(-1));
  std::size_t cols = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (group_of[x] != group_of[y]) pair_col[x * n + y] = cols++;

  ExactCover ec(cols);
  std::vector<std::vector<Vertex>> rows;
  constexpr std::size_t kMaxRows = 4'000'000;
  std::vector<std::size_t> groups(k), pick(k);
  // Enumerate group k-combinations, then one point from each chosen group.
  std::function<bool(std::size_t, std::size_t)> choose_groups;
  std::function<bool(std::size_t)> choose_points = [&](std::size_t depth) {
    if (depth == k) {
      if (rows.size() >= kMaxRows) return false;
      std::vector<std::size_t> c;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) c.push_back(pair_col[pick[i] * n + pick[j]]);
      ec.add_row(c);
      rows.emplace_back(pick.begin(), pick.end());
      return true;
    }
    for (std::size_t x = start[groups[depth]]; x < start[groups[depth] + 1]; ++x) {
      pick[depth] = x;
      if (!choose_points(depth + 1)) return false;
    }
    return true;
  };
  choose_groups = [&](std::size_t depth, std::size_t from) {
    if (depth == k) return choose_points(0);
    for (std::size_t gi = from; gi < sizes.size(); ++gi) {
      groups[depth] = gi;
      if (!choose_groups(depth + 1, gi + 1)) return false;
    }
    return true;
  };
  if (!choose_groups(0, 0)) {
    res.reason = "more than " + std::to_string(kMaxRows) + " candidate blocks";
    return res;
  }

  auto solved = ec.solve(node_budget);
  res.nodes = solved.nodes;
  if (!solved.rows) {
    res.reason = solved.budget_exhausted ? "search budget of " + std::to_string(node_budget) + " nodes exhausted"
                                         : "no solution exists";
    return res;
  }
  Gdd g;
  g.k = k;
  g.points = n;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    std::vector<Vertex> grp;
    for (std::size_t x = start[i]; x < start[i + 1]; ++x) grp.push_back(static_cast<Vertex>(x));
    g.groups.push_back(std::move(grp));
  }
  for (std::size_t r : *solved.rows) g.blocks.push_back(rows[r]);
  canonicalize(g);
  res.gdd = std::move(g);
  return res;
}

std::vector<Gdd> parse_gdd_file(std::string_view text_in, const std::string& origin) {
  std::vector<Gdd> out;
  std::optional<Gdd> cur;
  std::optional<GddType> declared;
  std::size_t line_no = 0;
  for (std::string_view line : text::lines(text_in)) {
    ++line_no;
    auto toks = text::tokens(text::strip_comment(line));
    if (toks.empty()) continue;
    auto fail = [&](const std::string& msg) { throw ParseError(origin, line_no, msg); };
    auto vertices = [&](std::size_t from) {
      std::vector<Vertex> v;
      for (std::size_t i = from; i < toks.size(); ++i) {
        auto x = text::to_uint(toks[i]);
        if (!x) fail("bad point `" + std::string(toks[i]) + "`");
        v.push_back(static_cast<Vertex>(*x));
      }
      return v;
    };
    if (toks[0] == "gdd") {
      if (cur) fail("gdd inside gdd");
      if (toks.size() < 4 || toks[1] != "type" || toks.back().substr(0, 2) != "k=") {
        fail("expected `gdd type <type> k=<k>`");
      }
      auto k = text::to_uint(toks.back().substr(2));
      if (!k) fail("bad block size");
      std::string type_text;
      for (std::size_t i = 2; i + 1 < toks.size(); ++i) type_text += std::string(toks[i]) + " ";
      try {
        declared = parse_gdd_type(type_text, *k);
      } catch (const ConfigError& err) {
        fail(err.what());
      }
      cur.emplace();
      cur->k = *k;
      cur->points = declared->points();
    } else if (toks[0] == "group") {
      if (!cur) fail("group outside gdd");
      cur->groups.push_back(vertices(1));
    } else if (toks[0] == "block") {
      if (!cur) fail("block outside gdd");
      cur->blocks.push_back(vertices(1));
    } else if (toks[0] == "end") {
      if (!cur) fail("end outside gdd");
      if (!(cur->type() == type_from_sizes(declared->group_sizes(), declared->k))) {
        fail("groups do not realize declared type " + declared->to_string());
      }
      out.push_back(std::move(*cur));
      cur.reset();
    } else {
      fail("unknown directive `" + std::string(toks[0]) + "`");
    }
  }
  if (cur) throw ParseError(origin, line_no, "unterminated gdd");
  return out;
}

std::string render_gdd(const Gdd& g) {
  std::ostringstream os;
  os << "gdd type " << g.type().to_string() << " k=" << g.k << "\n";
  for (const auto& grp : g.groups) {
    os << "group";
    for (Vertex x : grp) os << " " << x;
    os << "\n";
  }
  for (const auto& b : g.blocks) {
    os << "block";
    for (Vertex x : b) os << " " << x;
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

namespace {

// Reorders groups to follow the group sizes of t; nullopt when the size
// multisets differ.
std::optional<Gdd> arrange(Gdd g, const GddType& t) {
  if (g.k != t.k) return std::nullopt;
  auto want = t.group_sizes();
  std::vector<char> used(g.groups.size(), 0);
  std::vector<std::vector<Vertex>> ordered;
  for (std::size_t s : want) {
    bool found = false;
    for (std::size_t i = 0; i < g.groups.size() && !found; ++i) {
      if (!used[i] && g.groups[i].size() == s) {
        used[i] = 1;
        ordered.push_back(g.groups[i]);
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  if (ordered.size() != g.groups.size()) return std::nullopt;
  g.groups = std::move(ordered);
  canonicalize(g);
  return g;
}

bool uniform(const GddType& t) { return t.classes.size() == 1; }

std::optional<Gdd> direct(const GddType& t, std::vector<std::string>& attempts) {
  const std::size_t k = t.k;
  const std::size_t groups = t.group_count();
  if (uniform(t)) {
    const std::size_t g = t.classes[0].first;
    if (groups == k && k >= 3) {
      try {
        return gdd_from_latin_squares(k, g);
      } catch (const UnreachableError& err) {
        attempts.push_back(std::string("latin squares: ") + err.what());
      }
    }
    if (k == 3 && g == 1 && (groups % 6 == 1 || groups % 6 == 3)) {
      return steiner_triple_system(groups);
    }
    if (k == 3 && g == 2 && groups >= 3 && (groups % 3 == 0 || groups % 3 == 1)) {
      return gdd_by_deletion(steiner_triple_system(2 * groups + 1), Deletion::Point);
    }
    if (k == 3 && g == 3 && groups >= 3 && groups % 2 == 1) {
      return gdd_by_deletion(steiner_triple_system(3 * groups), Deletion::ParallelClassAsGroups);
    }
  }
  attempts.push_back("direct constructions: none for type " + t.to_string() + " k=" + std::to_string(k));
  return std::nullopt;
}

std::optional<Gdd> by_inflation(const GddType& t, std::vector<std::string>& attempts) {
  std::size_t common = 0;
  for (auto [g, c] : t.classes) common = std::gcd(common, g);
  for (std::size_t w = 2; w <= common; ++w) {
    if (common % w != 0) continue;
    GddType inner = t;
    for (auto& cls : inner.classes) cls.first /= w;
    std::vector<std::string> ignored;
    auto base = direct(inner, ignored);
    if (!base) continue;
    try {
      Gdd filler = gdd_from_latin_squares(t.k, w);
      if (auto g = arrange(inflate_gdd(*base, w, filler), t)) return g;
    } catch (const UnreachableError&) {
      continue;
    }
  }
  attempts.push_back("inflation: no factorization into a direct type and a Latin-square filler");
  return std::nullopt;
}

std::vector<std::string> gdd_files(const std::vector<std::string>& paths) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& p : paths) {
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      std::vector<std::string> found;
      for (const auto& de : fs::directory_iterator(p, ec)) {
        if (de.is_regular_file() && de.path().extension() == ".gdd") found.push_back(de.path().string());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else if (fs::is_regular_file(p, ec)) {
      files.push_back(p);
    }
  }
  return files;
}

}  // namespace

Gdd gdd_provider(const GddType& t, const GddProviderOptions& options) {
  std::vector<std::string> attempts;
  auto accept = [&](std::optional<Gdd> g) -> std::optional<Gdd> {
    if (!g) return std::nullopt;
    auto arranged = arrange(std::move(*g), t);
    if (!arranged || !validate_gdd(*arranged).pass) return std::nullopt;
    return arranged;
  };
  const GddType merged = type_from_sizes(t.group_sizes(), t.k);
  if (auto g = accept(direct(merged, attempts))) return *g;
  if (auto g = accept(by_inflation(merged, attempts))) return *g;
  auto solved = solve_gdd_exact_cover(merged, options.node_budget);
  if (auto g = accept(solved.gdd)) return *g;
  attempts.push_back("exact cover: " + solved.reason);
  auto files = gdd_files(options.gdd_path);
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    for (auto& g : parse_gdd_file(buf.str(), f)) {
      if (auto a = accept(std::move(g))) return *a;
    }
  }
  attempts.push_back("files: no " + t.to_string() + " k=" + std::to_string(t.k) + " among " +
                     std::to_string(files.size()) + " ingested file(s)");
  std::string msg = "GDD of type " + t.to_string() + " (k=" + std::to_string(t.k) + ") unavailable";
  for (const auto& a : attempts) msg += "; " + a;
  throw UnreachableError(msg);
}

}  // namespace snark
