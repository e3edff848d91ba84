#include "snark/host.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "snark/error.hpp"
#include "text.hpp"

namespace snark {

namespace {

std::string range_text(const VertexRange& r) {
  std::string s = std::to_string(r.lo) + ".." + std::to_string(r.hi);
  if (r.step != 1) s += " step " + std::to_string(r.step);
  return s;
}

}  // namespace

HostSpec::HostSpec(Rule rule) : rule_(std::move(rule)) {
  std::vector<std::vector<Vertex>> parts;
  if (const auto* c = std::get_if<Complete>(&rule_)) {
    for (Vertex x = 0; x < c->n; ++x) parts.push_back({x});
  } else if (const auto* m = std::get_if<ResidueMod>(&rule_)) {
    if (m->r < 2) throw ConfigError("residue host needs at least 2 classes");
    if (m->span < m->r) throw ConfigError("residue host span smaller than modulus");
    parts.resize(m->r);
    for (Vertex x = 0; x < m->span; ++x) parts[x % m->r].push_back(x);
    if (m->tail) {
      auto [lo, hi] = *m->tail;
      if (lo != m->span || hi < lo) throw ConfigError("tail must start right after the residue window");
      std::vector<Vertex> tail;
      for (Vertex x = lo; x <= hi; ++x) tail.push_back(x);
      if (m->join) {
        if (*m->join >= m->r) throw ConfigError("tail joins a nonexistent residue class");
        auto& target = parts[*m->join];
        target.insert(target.end(), tail.begin(), tail.end());
      } else {
        parts.push_back(std::move(tail));
      }
    } else if (m->join) {
      throw ConfigError("join without tail");
    }
  } else {
    const auto& p = std::get<Parts>(rule_);
    if (p.parts.size() < 2) throw ConfigError("multipartite host needs at least 2 parts");
    for (const auto& ranges : p.parts) {
      std::vector<Vertex> part;
      for (const VertexRange& r : ranges) {
        if (r.step == 0 || r.hi < r.lo) throw ConfigError("bad vertex range " + range_text(r));
        for (Vertex x = r.lo; x <= r.hi; x += r.step) part.push_back(x);
      }
      if (part.empty()) throw ConfigError("empty part");
      parts.push_back(std::move(part));
    }
  }
  std::size_t total = 0;
  for (auto& part : parts) {
    std::sort(part.begin(), part.end());
    total += part.size();
  }
  part_of_.assign(total, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex x : parts[i]) {
      if (x >= total) throw ConfigError("host vertex " + std::to_string(x) + " out of range");
      if (part_of_[x] != static_cast<std::size_t>(-1)) {
        throw ConfigError("host vertex " + std::to_string(x) + " in two parts");
      }
      part_of_[x] = i;
    }
  }
  parts_ = std::move(parts);
}

HostSpec HostSpec::complete(std::size_t n) { return HostSpec(Complete{n}); }

HostSpec HostSpec::multipartite(const std::vector<std::size_t>& sizes) {
  Parts p;
  Vertex next = 0;
  for (std::size_t s : sizes) {
    if (s == 0) throw ConfigError("empty part");
    p.parts.push_back({VertexRange{next, static_cast<Vertex>(next + s - 1), 1}});
    next = static_cast<Vertex>(next + s);
  }
  return HostSpec(std::move(p));
}

std::vector<std::size_t> HostSpec::part_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& p : parts_) out.push_back(p.size());
  return out;
}

bool HostSpec::is_host_edge(Vertex x, Vertex y) const {
  return x != y && x < order() && y < order() && part_of_[x] != part_of_[y];
}

std::uint64_t HostSpec::edge_count() const {
  std::uint64_t n = order();
  std::uint64_t inside = 0;
  for (const auto& p : parts_) inside += static_cast<std::uint64_t>(p.size()) * p.size();
  return (n * n - inside) / 2;
}

std::string HostSpec::name() const {
  if (is_complete()) return "K_" + std::to_string(order());
  std::string s = "K_{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i].size());
  }
  return s + "}";
}

HostSpec parse_host(std::string_view text_in) {
  auto toks = text::tokens(text_in);
  auto fail = [&](const std::string& msg) -> HostSpec {
    throw ConfigError("bad host `" + std::string(text_in) + "`: " + msg);
  };
  if (toks.empty()) return fail("empty");
  if (toks[0] == "complete") {
    if (toks.size() != 2) return fail("expected `complete <n>`");
    auto n = text::to_uint(toks[1]);
    if (!n) return fail("bad order");
    return HostSpec::complete(*n);
  }
  if (toks[0] != "multipartite" || toks.size() < 2) return fail("unknown host kind");
  if (toks[1] == "mod") {
    HostSpec::ResidueMod m;
    if (toks.size() < 5 || toks[3] != "over") return fail("expected `mod <r> over 0..<k>`");
    auto r = text::to_uint(toks[2]);
    auto over = text::to_range(toks[4]);
    if (!r || !over || over->first != 0) return fail("bad residue window");
    m.r = *r;
    m.span = over->second + 1;
    std::size_t i = 5;
    if (i < toks.size() && toks[i] == "tail") {
      if (i + 1 >= toks.size()) return fail("missing tail range");
      auto tail = text::to_range(toks[i + 1]);
      if (!tail) return fail("bad tail range");
      m.tail = std::make_pair(static_cast<Vertex>(tail->first), static_cast<Vertex>(tail->second));
      i += 2;
      if (i < toks.size() && toks[i] == "join") {
        if (i + 1 >= toks.size()) return fail("missing join class");
        auto j = text::to_uint(toks[i + 1]);
        if (!j) return fail("bad join class");
        m.join = *j;
        i += 2;
      }
    }
    if (i != toks.size()) return fail("trailing tokens");
    return HostSpec(m);
  }
  if (toks[1] == "parts") {
    HostSpec::Parts p;
    p.parts.emplace_back();
    for (std::size_t i = 2; i < toks.size(); ++i) {
      if (toks[i] == "|") {
        p.parts.emplace_back();
        continue;
      }
      auto r = text::to_range(toks[i]);
      if (!r) return fail("bad range `" + std::string(toks[i]) + "`");
      VertexRange vr{static_cast<Vertex>(r->first), static_cast<Vertex>(r->second), 1};
      if (i + 2 < toks.size() && toks[i + 1] == "step") {
        auto s = text::to_uint(toks[i + 2]);
        if (!s || *s == 0) return fail("bad step");
        vr.step = static_cast<Vertex>(*s);
        i += 2;
      }
      p.parts.back().push_back(vr);
    }
    return HostSpec(std::move(p));
  }
  return fail("unknown multipartite form");
}

std::string render_host(const HostSpec& h) {
  std::ostringstream os;
  if (const auto* c = std::get_if<HostSpec::Complete>(&h.rule())) {
    os << "complete " << c->n;
  } else if (const auto* m = std::get_if<HostSpec::ResidueMod>(&h.rule())) {
    os << "multipartite mod " << m->r << " over 0.." << m->span - 1;
    if (m->tail) os << " tail " << m->tail->first << ".." << m->tail->second;
    if (m->join) os << " join " << *m->join;
  } else {
    const auto& p = std::get<HostSpec::Parts>(h.rule());
    os << "multipartite parts";
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      if (i) os << " |";
      for (const auto& r : p.parts[i]) os << " " << range_text(r);
    }
  }
  return os.str();
}

std::uint64_t expected_copies(const HostSpec& h, std::uint64_t e) {
  if (e == 0) throw ConfigError("graph has no edges");
  std::uint64_t edges = h.edge_count();
  if (edges % e != 0) {
    throw InadmissibleError("host " + h.name() + " not " + std::to_string(e) + "-divisible (" +
                            std::to_string(edges) + " edges)");
  }
  return edges / e;
}

Admissibility admissible_residues(int v) {
  if (v < 4 || v % 2 != 0) {
    throw Error("no cubic graph on " + std::to_string(v) + " vertices");
  }
  const long full = std::lcm(3L, 3L * v);
  auto member = [&](long n) { return n % 3 == 1 && (n * (n - 1)) % (3L * v) == 0; };
  std::vector<char> in(static_cast<std::size_t>(full));
  for (long n = 0; n < full; ++n) in[static_cast<std::size_t>(n)] = member(n);
  Admissibility out;
  out.minimum_order = v;
  for (long m = 1; m <= full; ++m) {
    if (full % m != 0) continue;
    bool periodic = true;
    for (long n = 0; n < full && periodic; ++n) {
      periodic = in[static_cast<std::size_t>(n)] == in[static_cast<std::size_t>(n % m)];
    }
    if (!periodic) continue;
    out.modulus = static_cast<int>(m);
    for (long n = 0; n < m; ++n) {
      if (in[static_cast<std::size_t>(n)]) out.residues.push_back(static_cast<int>(n));
    }
    break;
  }
  return out;
}

std::string format_admissibility(const Admissibility& a, const std::vector<int>& excluded) {
  std::ostringstream os;
  os << "n ≡ ";
  for (std::size_t i = 0; i < a.residues.size(); ++i) os << (i ? ", " : "") << a.residues[i];
  os << " (mod " << a.modulus << ")";
  for (std::size_t i = 0; i < excluded.size(); ++i) {
    os << (i ? ", " : ", n ≠ ") << excluded[i];
  }
  return os.str();
}

bool is_admissible_order(int v, std::uint64_t n, const std::optional<Spectrum>& spectrum) {
  if (n == 1) return true;
  if (n < static_cast<std::uint64_t>(v)) return false;
  Admissibility a = admissible_residues(v);
  int r = static_cast<int>(n % static_cast<std::uint64_t>(a.modulus));
  if (std::find(a.residues.begin(), a.residues.end(), r) == a.residues.end()) return false;
  if (spectrum) {
    for (int x : spectrum->excluded) {
      if (static_cast<std::uint64_t>(x) == n) return false;
    }
  }
  return true;
}

}  // namespace snark
