#include "snark/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "snark/embedded.hpp"
#include "snark/error.hpp"
#include "text.hpp"

namespace snark {

namespace {

class EntryParser {
 public:
  EntryParser(const std::string& origin, const Catalog& catalog) : origin_(origin), catalog_(catalog) {}

  std::vector<Decomposition> run(std::string_view input) {
    std::size_t line_no = 0;
    for (std::string_view raw : text::lines(input)) {
      line_no_ = ++line_no;
      auto toks = text::tokens(text::strip_comment(raw));
      if (toks.empty()) continue;
      line(toks);
    }
    if (current_) fail("unterminated entry " + current_->id);
    return std::move(out_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(origin_, line_no_, msg); }

  Decomposition& cur() {
    if (!current_) fail("directive outside entry");
    return *current_;
  }

  void need_host() {
    if (!have_host_) fail("host must be declared before actions and blocks");
  }

  Vertex vertex(std::string_view tok) {
    const std::size_t n = cur().host.order();
    if (tok == "INF") {
      if (n == 0) fail("INF in empty host");
      cur().infinity = true;
      return static_cast<Vertex>(n - 1);
    }
    auto v = text::to_uint(tok);
    if (!v) fail("bad vertex `" + std::string(tok) + "`");
    if (*v >= n) fail("vertex " + std::string(tok) + " outside host of order " + std::to_string(n));
    return static_cast<Vertex>(*v);
  }

  void line(const std::vector<std::string_view>& toks) {
    const std::string_view kw = toks[0];
    if (kw == "entry") {
      if (current_) fail("entry inside entry");
      if (toks.size() != 2) fail("expected `entry <id>`");
      current_.emplace();
      current_->id = std::string(toks[1]);
      have_host_ = false;
    } else if (kw == "source") {
      if (toks.size() != 2) fail("expected `source <tag>`");
      cur().source = std::string(toks[1]);
    } else if (kw == "graph") {
      if (toks.size() != 2) fail("expected `graph <NAME>`");
      set_graph(toks[1]);
    } else if (kw == "host") {
      if (have_host_) fail("duplicate host");
      std::string rest;
      for (std::size_t i = 1; i < toks.size(); ++i) rest += (i > 1 ? " " : "") + std::string(toks[i]);
      try {
        cur().host = parse_host(rest);
      } catch (const ConfigError& err) {
        fail(err.what());
      }
      have_host_ = true;
    } else if (kw == "action") {
      need_host();
      action(toks);
    } else if (kw == "block") {
      need_host();
      block(toks);
    } else if (kw == "end") {
      if (toks.size() != 1) fail("trailing tokens after end");
      need_host();
      if (cur().graph.empty()) fail("entry " + cur().id + " names no graph");
      try {
        for (const auto& a : cur().actions) validate_action(a, cur().host.order());
      } catch (const ConfigError& err) {
        fail(err.what());
      }
      out_.push_back(std::move(*current_));
      current_.reset();
    } else {
      fail("unknown directive `" + std::string(kw) + "`");
    }
  }

  void set_graph(std::string_view name) {
    if (!catalog_.find(name)) fail("unknown graph " + std::string(name));
    if (!cur().graph.empty() && cur().graph != name) {
      fail("entry mixes graphs " + cur().graph + " and " + std::string(name));
    }
    cur().graph = std::string(name);
  }

  void action(const std::vector<std::string_view>& toks) {
    if (toks.size() < 3) fail("expected `action <id> ...`");
    ActionSpec a;
    a.id = std::string(toks[1]);
    if (cur().find_action(a.id)) fail("duplicate action id " + a.id);
    std::size_t i = 2;
    if (toks[i] == "identity") {
      if (toks.size() != 3) fail("trailing tokens after identity");
      a.identity = true;
      cur().actions.push_back(std::move(a));
      return;
    }
    while (i < toks.size() && toks[i] == "fix") {
      if (i + 1 >= toks.size()) fail("missing fixed vertex");
      a.fixed.push_back(vertex(toks[i + 1]));
      i += 2;
    }
    while (i < toks.size()) {
      if (toks.size() < i + 6 || toks[i] != "shift" || toks[i + 2] != "mod" || toks[i + 4] != "on") {
        fail("expected `shift <s> mod <m> on <lo>..<hi>`");
      }
      auto step = text::to_uint(toks[i + 1]);
      auto mod = text::to_uint(toks[i + 3]);
      auto range = text::to_range(toks[i + 5]);
      if (!step || !mod || !range || *mod == 0) fail("bad shift segment");
      a.segments.push_back(Segment{static_cast<Vertex>(range->first), static_cast<Vertex>(range->second),
                                   *step, *mod});
      i += 6;
      if (i < toks.size()) {
        if (toks[i] != ";") fail("expected `;` between segments");
        ++i;
        if (i == toks.size()) fail("dangling `;`");
      }
    }
    if (a.segments.empty()) fail("action " + a.id + " has no segments");
    cur().actions.push_back(std::move(a));
  }

  void block(const std::vector<std::string_view>& toks) {
    if (toks.size() < 3) fail("expected `block <GRAPH> <action> t1 ... tv`");
    set_graph(toks[1]);
    const CatalogGraph& g = catalog_.at(toks[1]);
    BaseBlock b;
    b.graph = std::string(toks[1]);
    b.action = std::string(toks[2]);
    if (!cur().find_action(b.action)) fail("undeclared action " + b.action);
    const std::size_t len = toks.size() - 3;
    if (len != g.v()) {
      fail("tuple length " + std::to_string(len) + " ≠ " + std::to_string(g.v()));
    }
    for (std::size_t i = 3; i < toks.size(); ++i) b.tuple.push_back(vertex(toks[i]));
    cur().blocks.push_back(std::move(b));
  }

  const std::string& origin_;
  const Catalog& catalog_;
  std::size_t line_no_ = 0;
  std::optional<Decomposition> current_;
  bool have_host_ = false;
  std::vector<Decomposition> out_;
};

std::string vertex_text(Vertex x, const Decomposition& d) {
  if (d.infinity && x + 1 == d.host.order()) return "INF";
  return std::to_string(x);
}

}  // namespace

std::vector<Decomposition> parse_corpus(std::string_view text_in, const std::string& origin,
                                        const Catalog& catalog) {
  return EntryParser(origin, catalog).run(text_in);
}

std::string render_action(const ActionSpec& a, const Decomposition& d) {
  std::ostringstream os;
  os << "action " << a.id;
  if (a.identity) {
    os << " identity";
    return os.str();
  }
  for (Vertex x : a.fixed) os << " fix " << vertex_text(x, d);
  for (std::size_t i = 0; i < a.segments.size(); ++i) {
    const Segment& s = a.segments[i];
    if (i) os << " ;";
    os << " shift " << s.step << " mod " << s.modulus << " on " << s.lo << ".." << s.hi;
  }
  return os.str();
}

std::string render_entry(const Decomposition& d) {
  std::ostringstream os;
  os << "entry " << d.id << "\n";
  if (!d.source.empty()) os << "source " << d.source << "\n";
  if (d.blocks.empty()) os << "graph " << d.graph << "\n";
  os << "host " << render_host(d.host) << "\n";
  for (const auto& a : d.actions) os << render_action(a, d) << "\n";
  for (const auto& b : d.blocks) {
    os << "block " << b.graph << " " << b.action;
    for (Vertex x : b.tuple) os << " " << vertex_text(x, d);
    os << "\n";
  }
  os << "end\n";
  return os.str();
}

std::string render_corpus(const std::vector<Decomposition>& entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += "\n";
    out += render_entry(entries[i]);
  }
  return out;
}

std::vector<Decomposition> load_corpus(const std::vector<std::string>& paths, const Catalog& catalog) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& p : paths) {
    if (fs::is_directory(p)) {
      std::vector<std::string> found;
      for (const auto& de : fs::directory_iterator(p)) {
        if (de.is_regular_file() && de.path().extension() == ".design") found.push_back(de.path().string());
      }
      std::sort(found.begin(), found.end());
      files.insert(files.end(), found.begin(), found.end());
    } else {
      files.push_back(p);
    }
  }
  std::vector<Decomposition> out;
  for (const auto& f : files) {
    std::ifstream in(f, std::ios::binary);
    if (!in) throw ConfigError("cannot read " + f);
    std::stringstream buf;
    buf << in.rdbuf();
    auto entries = parse_corpus(buf.str(), f, catalog);
    for (auto& e : entries) out.push_back(std::move(e));
  }
  return out;
}

const std::vector<Decomposition>& builtin_corpus() {
  static const std::vector<Decomposition> entries = [] {
    std::vector<Decomposition> out;
    for (const auto& file : embedded::corpus_files()) {
      auto parsed = parse_corpus(file.text, std::string(file.name), builtin_catalog());
      for (auto& e : parsed) out.push_back(std::move(e));
    }
    return out;
  }();
  return entries;
}

}  // namespace snark
