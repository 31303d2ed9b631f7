#include "graphmc/dsl.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gmc {

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::runtime_error("parse error at offset " + std::to_string(pos) +
                             ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '#') {  // comment to end of line
        while (pos < text.size() && text[pos] != '\n') ++pos;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat(const std::string& s) {
    skip_ws();
    if (text.compare(pos, s.size(), s) == 0) {
      pos += s.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  void expect(const std::string& s) {
    if (!eat(s)) fail("expected '" + s + "'");
  }

  bool done() {
    skip_ws();
    return pos >= text.size();
  }

  long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(text.substr(start, pos - start));
  }

  Rat rational() {
    long num = integer();
    if (eat('/')) {
      long den = integer();
      if (den == 0) fail("zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }

  // Vertex reference relative to a graph with n externals; internals resolve
  // to n + index.
  int vertex(int n_ext, int n_int) {
    skip_ws();
    if (pos < text.size() && text[pos] == 'i') {
      ++pos;
      long k = integer();
      if (k < 1 || k > n_int) fail("internal vertex i" + std::to_string(k) +
                                   " out of range");
      return n_ext + static_cast<int>(k);
    }
    long k = integer();
    if (k < 1 || k > n_ext)
      fail("external vertex " + std::to_string(k) + " out of range");
    return static_cast<int>(k);
  }

  // Parses one G(...) into a sum of directed graphs: '--' edges expand to
  // both directions, inadmissible orientations dropped.
  GraphSum graph() {
    expect("G(");
    expect("n=");
    int n_ext = static_cast<int>(integer());
    expect(';');
    expect("I=");
    int n_int = static_cast<int>(integer());
    expect(';');
    expect("e=[");
    DirectedGraph proto{n_ext, n_int, {}};
    std::vector<int> undirected;  // positions of '--' edges
    if (!eat(']')) {
      while (true) {
        expect('(');
        int a = vertex(n_ext, n_int);
        bool undir = false;
        if (eat("->") || eat(",")) {
        } else if (eat("--")) {
          undir = true;
        } else {
          fail("expected '->', ',' or '--'");
        }
        int b = vertex(n_ext, n_int);
        expect(')');
        if (undir) undirected.push_back(proto.n_edges());
        proto.edges.push_back({a, b});
        if (eat(',')) continue;
        expect(']');
        break;
      }
    }
    expect(')');

    GraphSum out;
    std::size_t combos = std::size_t{1} << undirected.size();
    int n_admissible = 0;
    for (std::size_t mask = 0; mask < combos; ++mask) {
      DirectedGraph g = proto;
      for (std::size_t b = 0; b < undirected.size(); ++b) {
        if (mask & (std::size_t{1} << b)) {
          Edge& e = g.edges[undirected[b]];
          std::swap(e.src, e.dst);
        }
      }
      Admissibility adm = check_admissible(g);
      if (!adm.ok) {
        if (undirected.empty())
          fail("inadmissible graph term " + graph_key(g) + ": " + adm.detail);
        continue;  // dropped orientation of an undirected edge
      }
      ++n_admissible;
      out.add_graph(g, Rat(1));
    }
    if (!undirected.empty() && n_admissible == 0)
      fail("all orientations of undirected edges are inadmissible");
    return out;
  }

  GraphSum sum() {
    GraphSum total;
    bool first = true;
    while (true) {
      skip_ws();
      Rat sign(1);
      if (eat('-')) {
        sign = -1;
      } else if (eat('+')) {
        if (first) fail("unexpected '+'");
      } else if (!first) {
        break;
      }
      skip_ws();
      Rat coeff = sign;
      if (pos < text.size() &&
          std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = sign * rational();
        expect('*');
      }
      GraphSum g = graph();
      total += coeff * g;
      first = false;
      skip_ws();
      if (pos >= text.size()) break;
      if (text[pos] != '+' && text[pos] != '-') break;
    }
    return total;
  }
};

}  // namespace

GraphSum parse_graph_sum(const std::string& text) {
  Parser p(text);
  GraphSum s = p.sum();
  if (!p.done()) p.fail("trailing input");
  return s;
}

std::string serialize_graph(const DirectedGraph& g) {
  std::ostringstream os;
  os << "G(n=" << g.n_ext << "; I=" << g.n_int << "; e=[";
  for (int i = 0; i < g.n_edges(); ++i) {
    if (i) os << ",";
    os << "(" << vertex_name(g, g.edges[i].src) << "->"
       << vertex_name(g, g.edges[i].dst) << ")";
  }
  os << "])";
  return os.str();
}

std::string serialize(const GraphSum& sum) {
  if (sum.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : sum.vec().entries()) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << rat_str(a) << "*";
    os << serialize_graph(graph_from_key(key));
    first = false;
  }
  return os.str();
}

}  // namespace gmc
