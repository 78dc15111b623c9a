#include "agc/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "agc/detail/sorted.hpp"

namespace agc {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

ActorId parse_id(std::string_view tok, int line) {
  ActorId v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  int line_no = 0;

  // Next meaningful line (skips blanks and comments); false at end of input.
  bool next(std::string_view& out) {
    while (pos < text.size()) {
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) eol = text.size();
      std::string_view line = text.substr(pos, eol - pos);
      pos = eol + 1;
      ++line_no;
      std::size_t k = line.find_first_not_of(" \t\r");
      if (k == std::string_view::npos) continue;
      if (line[k] == '#') continue;
      out = line;
      return true;
    }
    return false;
  }
};

}  // namespace

ActorGraph parse_graph(std::string_view text, std::vector<std::string>* warnings) {
  ActorGraph g;
  LineReader rd{text};
  std::string_view line;
  bool have_line = rd.next(line);

  if (have_line) {
    auto toks = split_ws(line);
    if (!toks.empty() && toks[0] == "actors") {
      if (toks.size() != 2) throw ParseError(rd.line_no, "expected 'actors <count>'");
      ActorId count = parse_id(toks[1], rd.line_no);
      for (ActorId i = 0; i < count; ++i) {
        if (!rd.next(line)) throw ParseError(rd.line_no, "unexpected end of input in actor section");
        auto t = split_ws(line);
        if (t.size() < 2 || t.size() > 3) {
          throw ParseError(rd.line_no, "expected '<id> <blocked|unblocked>[ root]'");
        }
        ActorId id = parse_id(t[0], rd.line_no);
        if (g.has_actor(id)) {
          throw ParseError(rd.line_no, "actor " + std::to_string(id) + " declared twice");
        }
        bool is_unblocked;
        if (t[1] == "unblocked") {
          is_unblocked = true;
        } else if (t[1] == "blocked") {
          is_unblocked = false;
        } else {
          throw ParseError(rd.line_no, "expected 'blocked' or 'unblocked', got '" + std::string(t[1]) + "'");
        }
        bool is_root = t.size() == 3;
        if (is_root && t[2] != "root") {
          throw ParseError(rd.line_no, "trailing token must be 'root', got '" + std::string(t[2]) + "'");
        }
        g.add_actor(id);
        if (is_root && !is_unblocked) {
          // Roots are always useful, hence never blocked.
          is_unblocked = true;
          if (warnings) {
            warnings->push_back("actor " + std::to_string(id) +
                                " declared as a blocked root; normalized to unblocked");
          }
        }
        if (is_unblocked) g.set_unblocked(id, true);
        if (is_root) g.add_root(id);
      }
      have_line = rd.next(line);
    }
  }

  if (have_line) {
    auto toks = split_ws(line);
    if (toks.size() != 1 || toks[0] != "edges") {
      throw ParseError(rd.line_no, "expected 'edges'");
    }
    while (rd.next(line)) {
      auto t = split_ws(line);
      if (t.size() != 2) throw ParseError(rd.line_no, "expected '<src-id> <dst-id>'");
      ActorId src = parse_id(t[0], rd.line_no);
      ActorId dst = parse_id(t[1], rd.line_no);
      if (!g.has_actor(src)) {
        throw ParseError(rd.line_no, "actor " + std::to_string(src) + " undeclared");
      }
      if (!g.has_actor(dst)) {
        throw ParseError(rd.line_no, "actor " + std::to_string(dst) + " undeclared");
      }
      g.add_reference(src, dst);  // duplicates collapse silently
    }
  }
  return g;
}

std::string serialize_graph(const ActorGraph& g) {
  std::ostringstream out;
  out << "actors " << g.actors.size() << "\n";
  for (ActorId a : g.actors) {
    out << a << ' ' << (g.is_unblocked(a) ? "unblocked" : "blocked");
    if (g.is_root(a)) out << " root";
    out << "\n";
  }
  out << "edges\n";
  for (const auto& [src, dst] : g.references) out << src << ' ' << dst << "\n";
  return out.str();
}

std::string serialize_passive(const PassiveGraph& p, const NodeMap* map) {
  std::ostringstream out;
  out << "# passive reference graph\n";
  out << "actors " << p.nodes.size() << "\n";
  for (NodeId n : p.nodes) {
    bool root = detail::contains(p.roots, n);
    out << n << ' ' << (root ? "unblocked root" : "blocked") << "\n";
  }
  out << "edges\n";
  for (const auto& [src, dst] : p.edges) out << src << ' ' << dst << "\n";
  if (map) {
    for (std::size_t i = 0; i < map->actors.size(); ++i) {
      if (map->paired) {
        out << "# map " << map->actors[i] << " object=" << map->alpha[i]
            << " queue=" << map->mu[i] << "\n";
      } else {
        out << "# map " << map->actors[i] << " node=" << map->alpha[i] << "\n";
      }
    }
  }
  return out.str();
}

std::string to_dot(const ActorGraph& g) {
  std::ostringstream out;
  out << "digraph actors {\n";
  out << "  node [shape=circle];\n";
  for (ActorId a : g.actors) {
    out << "  \"" << a << "\" [";
    if (g.is_root(a)) out << "shape=triangle, ";
    out << "style=" << (g.is_unblocked(a) ? "bold" : "dashed") << "];\n";
  }
  for (const auto& [src, dst] : g.references) {
    out << "  \"" << src << "\" -> \"" << dst << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const PassiveGraph& p, const NodeMap* map) {
  // Inverse labels when a paired map is available.
  std::vector<std::pair<NodeId, std::string>> labels;
  if (map && map->paired) {
    for (std::size_t i = 0; i < map->actors.size(); ++i) {
      labels.emplace_back(map->alpha[i], "obj" + std::to_string(map->actors[i]));
      labels.emplace_back(map->mu[i], "mq" + std::to_string(map->actors[i]));
    }
    std::sort(labels.begin(), labels.end());
  }
  std::ostringstream out;
  out << "digraph passive {\n";
  out << "  node [shape=circle];\n";
  for (NodeId n : p.nodes) {
    out << "  \"" << n << "\" [";
    if (detail::contains(p.roots, n)) out << "shape=triangle";
    auto it = std::lower_bound(labels.begin(), labels.end(), n,
                               [](const auto& kv, NodeId key) { return kv.first < key; });
    if (it != labels.end() && it->first == n) {
      if (detail::contains(p.roots, n)) out << ", ";
      out << "label=\"" << it->second << "\"";
    }
    out << "];\n";
  }
  for (const auto& [src, dst] : p.edges) {
    out << "  \"" << src << "\" -> \"" << dst << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

ActorGraph load_graph_file(const std::string& path, std::vector<std::string>* warnings) {
  return parse_graph(read_file(path), warnings);
}

}  // namespace agc
