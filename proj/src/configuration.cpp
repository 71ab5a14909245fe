#include "listcolor/configuration.hpp"

#include <algorithm>
#include <sstream>

#include "listcolor/text_format.hpp"

namespace lc {

void validate_configuration(const Configuration& c) {
  const int n = c.internal.vertex_count();
  if (c.k < 1) throw std::invalid_argument("k must be at least 1");
  if (static_cast<int>(c.full_degree.size()) != n) {
    throw std::invalid_argument("full_degree must have one entry per vertex");
  }
  for (Vertex v = 0; v < n; ++v) {
    if (c.full_degree[v] < 1) {
      throw std::invalid_argument("vertex " + std::to_string(v) + " has nonpositive degree");
    }
    if (c.full_degree[v] < c.internal.degree(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " has full degree below its internal degree");
    }
  }
  if (c.explicit_caps && static_cast<int>(c.explicit_caps->size()) != n) {
    throw std::invalid_argument("caps must have one entry per vertex");
  }
}

CapVector derive_caps(const Configuration& c) {
  validate_configuration(c);
  CapVector caps;
  if (c.explicit_caps) {
    caps = *c.explicit_caps;
  } else {
    caps.resize(c.internal.vertex_count());
    for (Vertex v = 0; v < c.internal.vertex_count(); ++v) {
      const int external = c.full_degree[v] - c.internal.degree(v);
      caps[v] = (c.k - 1) - external;
    }
  }
  for (std::size_t v = 0; v < caps.size(); ++v) {
    if (caps[v] < 0) {
      throw UncheckableConfiguration("vertex " + std::to_string(v) +
                                     " may have empty residual list; configuration not "
                                     "checkable by this method");
    }
  }
  return caps;
}

namespace {

std::string join_tail(const TextLine& line) {
  std::string out;
  for (std::size_t i = 1; i < line.tokens.size(); ++i) {
    if (i > 1) out += ' ';
    out += line.tokens[i];
  }
  return out;
}

Configuration parse_block(const std::vector<TextLine>& lines, std::size_t begin,
                          std::size_t end) {
  Configuration c;
  bool have_name = false, have_k = false;
  std::optional<int> n;
  std::optional<int> end_line;
  std::vector<std::optional<int>> degrees;
  std::vector<Edge> edges;
  for (std::size_t i = begin; i < end; ++i) {
    const TextLine& line = lines[i];
    const std::string& key = line.tokens.front();
    end_line = line.number;
    if (key == "name") {
      expect_token_count(line, 2);
      if (have_name) throw ParseError(line.number, "duplicate 'name' line");
      c.name = line.tokens[1];
      have_name = true;
    } else if (key == "note") {
      c.note = join_tail(line);
    } else if (key == "k") {
      expect_token_count(line, 2);
      if (have_k) throw ParseError(line.number, "duplicate 'k' line");
      c.k = parse_int(line, 1);
      if (c.k < 1) throw ParseError(line.number, "k must be at least 1");
      have_k = true;
    } else if (key == "vertices") {
      expect_token_count(line, 2);
      if (n) throw ParseError(line.number, "duplicate 'vertices' line");
      n = parse_int(line, 1);
      if (*n < 0) throw ParseError(line.number, "vertex count must be nonnegative");
      degrees.assign(*n, std::nullopt);
    } else if (key == "vertex") {
      expect_token_count(line, 4);
      if (!n) throw ParseError(line.number, "'vertex' before 'vertices'");
      if (line.tokens[2] != "degree") throw ParseError(line.number, "expected 'degree'");
      int v = parse_int(line, 1), d = parse_int(line, 3);
      if (v < 0 || v >= *n) throw ParseError(line.number, "vertex index out of range");
      if (degrees[v]) throw ParseError(line.number, "duplicate degree for vertex " + line.tokens[1]);
      if (d < 1) throw ParseError(line.number, "degree must be positive");
      degrees[v] = d;
    } else if (key == "edge") {
      expect_token_count(line, 3);
      if (!n) throw ParseError(line.number, "'edge' before 'vertices'");
      int u = parse_int(line, 1), v = parse_int(line, 2);
      if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
      if (u < 0 || v < 0 || u >= *n || v >= *n) {
        throw ParseError(line.number, "edge endpoint out of range");
      }
      edges.emplace_back(u, v);
    } else if (key == "caps") {
      if (!n) throw ParseError(line.number, "'caps' before 'vertices'");
      if (c.explicit_caps) throw ParseError(line.number, "duplicate 'caps' line");
      expect_token_count(line, static_cast<std::size_t>(*n) + 1);
      CapVector caps;
      for (int i2 = 1; i2 <= *n; ++i2) caps.push_back(parse_int(line, i2));
      c.explicit_caps = std::move(caps);
    } else {
      throw ParseError(line.number, "unknown keyword '" + key + "'");
    }
  }
  const int last = end_line.value_or(1);
  if (!have_name) throw ParseError(lines.empty() ? 1 : lines[begin].number, "missing 'name' line");
  if (!n) throw ParseError(last, "missing 'vertices' line");
  c.internal = Graph(*n, edges);
  c.full_degree.resize(*n);
  for (Vertex v = 0; v < *n; ++v) {
    if (degrees[v]) {
      c.full_degree[v] = *degrees[v];
      if (*degrees[v] < c.internal.degree(v)) {
        throw ParseError(last, "vertex " + std::to_string(v) +
                                   " has degree below its internal degree");
      }
    } else if (c.explicit_caps) {
      c.full_degree[v] = std::max(1, c.internal.degree(v));
    } else {
      throw ParseError(last, "missing degree for vertex " + std::to_string(v));
    }
  }
  return c;
}

}  // namespace

Configuration parse_configuration(std::string_view text) {
  auto lines = tokenize(text);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].tokens.front() == "name") {
      throw ParseError(lines[i].number, "duplicate 'name' line");
    }
  }
  return parse_block(lines, 0, lines.size());
}

std::vector<Configuration> parse_catalog(std::string_view text) {
  auto lines = tokenize(text);
  std::vector<Configuration> out;
  std::size_t begin = 0;
  if (!lines.empty() && lines.front().tokens.front() != "name") {
    throw ParseError(lines.front().number, "catalog entry must start with 'name'");
  }
  for (std::size_t i = 1; i <= lines.size(); ++i) {
    if (i == lines.size() || lines[i].tokens.front() == "name") {
      out.push_back(parse_block(lines, begin, i));
      begin = i;
    }
  }
  return out;
}

std::string format_configuration(const Configuration& c) {
  std::ostringstream out;
  out << "name " << c.name << '\n';
  if (!c.note.empty()) out << "note " << c.note << '\n';
  out << "k " << c.k << '\n';
  out << "vertices " << c.internal.vertex_count() << '\n';
  for (Vertex v = 0; v < c.internal.vertex_count(); ++v) {
    out << "vertex " << v << " degree " << c.full_degree.at(v) << '\n';
  }
  for (auto [u, v] : c.internal.edges()) out << "edge " << u << ' ' << v << '\n';
  if (c.explicit_caps) {
    out << "caps";
    for (int t : *c.explicit_caps) out << ' ' << t;
    out << '\n';
  }
  return out.str();
}

}  // namespace lc
