#include "plucker/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace plucker {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

int to_int(const std::string& s, const char* what) {
  std::string t = trim(s);
  if (t.empty()) throw ParseError(std::string("empty ") + what);
  size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t, &used);
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + ": '" + t + "'");
  }
  if (used != t.size()) throw ParseError(std::string("bad ") + what + ": '" + t + "'");
  return static_cast<int>(v);
}

std::pair<int, int> parse_pair(const std::string& s) {
  auto parts = split(s, '-');
  if (parts.size() != 2) throw ParseError("edge must look like a-b: '" + s + "'");
  return {to_int(parts[0], "vertex"), to_int(parts[1], "vertex")};
}

// key=value fields separated by ';'
std::map<std::string, std::string> fields(const std::string& body) {
  std::map<std::string, std::string> out;
  for (const auto& item : split(body, ';')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + item + "'");
    std::string key = trim(item.substr(0, eq));
    if (out.count(key)) throw ParseError("duplicate field '" + key + "'");
    out[key] = trim(item.substr(eq + 1));
  }
  return out;
}

void check_graph(const DirectedGraph& g) {
  if (g.n < 0 || g.n > 255) throw ParseError("n out of range");
  for (auto e : g.edges)
    if (e.a < 1 || e.b < 1 || e.a > g.n || e.b > g.n) throw ParseError("edge endpoint outside 1..n");
}

std::vector<Edge> edges_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("edges must be an array");
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) throw ParseError("edge must be [a,b]");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

json edges_to_json(const std::vector<Edge>& edges) {
  json a = json::array();
  for (auto e : edges) a.push_back({e.a, e.b});
  return a;
}

Q coeff_from_json(const json& c) {
  try {
    if (c.is_string()) return q_from_string(c.get<std::string>());
    if (c.is_number_integer()) return q_of(c.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  throw ParseError("coefficient must be an integer or a fraction string");
}

std::vector<int> ints_from_json(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

const json& need(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

Matching matching_from_json(int n, const json& j) {
  try {
    return make_matching(n, edges_from_json(j));
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

DirectedGraph graph_from_json(const json& j) {
  DirectedGraph g;
  const json& n = need(j, "n");
  if (!n.is_number_integer()) throw ParseError("n must be an integer");
  g.n = n.get<int>();
  g.edges = edges_from_json(need(j, "edges"));
  check_graph(g);
  return g;
}

DirectedGraph parse_graph(const std::string& raw) {
  std::string text = trim(raw);
  if (!text.empty() && text[0] == '{') return graph_from_json(parse_json(text));
  auto f = fields(text);
  if (!f.count("n")) throw ParseError("graph text needs n=<int>");
  DirectedGraph g;
  g.n = to_int(f["n"], "n");
  for (const auto& [k, v] : f)
    if (k != "n" && k != "edges") throw ParseError("unknown graph field '" + k + "'");
  if (f.count("edges") && !f["edges"].empty())
    for (const auto& item : split(f["edges"], ',')) {
      auto [a, b] = parse_pair(item);
      g.edges.push_back({a, b});
    }
  check_graph(g);
  return g;
}

json graph_to_json(const DirectedGraph& g) { return json{{"n", g.n}, {"edges", edges_to_json(g.edges)}}; }

json ring_to_json(const RingElement& e) {
  json terms = json::array();
  for (const auto& [k, c] : e.terms) terms.push_back({{"coeff", q_to_string(c)}, {"edges", edges_to_json(graph_of(e.n, k).edges)}});
  return json{{"n", e.n}, {"terms", terms}};
}

RingElement parse_ring_element(const std::string& raw) {
  std::string text = trim(raw);
  if (!text.empty() && text[0] == '{') {
    json j = parse_json(text);
    if (j.contains("terms")) {
      const json& n = need(j, "n");
      if (!n.is_number_integer()) throw ParseError("n must be an integer");
      RingElement out(n.get<int>());
      for (const auto& t : need(j, "terms")) {
        DirectedGraph g{out.n, edges_from_json(need(t, "edges"))};
        check_graph(g);
        RingElement x = x_of(g);
        out += coeff_from_json(need(t, "coeff")) * x;
      }
      return out;
    }
    return x_of(graph_from_json(j));
  }
  return x_of(parse_graph(text));
}

std::string ring_to_text(const RingElement& e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : e.terms) {
    Q a = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (a != 1) os << q_to_string(a) << " ";
    os << "X[";
    auto g = graph_of(e.n, k);
    for (size_t i = 0; i < g.edges.size(); ++i) os << (i ? " " : "") << g.edges[i].a << g.edges[i].b;
    os << "]";
    first = false;
  }
  return os.str();
}

json sym_to_json(const SymElement& e) {
  json terms = json::array();
  for (const auto& [mono, c] : e.terms) {
    json ms = json::array();
    for (const auto& m : factors_of(e.n, mono)) ms.push_back(edges_to_json(m.edges));
    terms.push_back({{"coeff", q_to_string(c)}, {"matchings", ms}});
  }
  return json{{"n", e.n}, {"k", e.k}, {"terms", terms}};
}

SymElement sym_from_json(const json& j) {
  const json& n = need(j, "n");
  const json& k = need(j, "k");
  if (!n.is_number_integer() || !k.is_number_integer()) throw ParseError("n and k must be integers");
  SymElement e(n.get<int>(), k.get<int>());
  for (const auto& t : need(j, "terms")) {
    std::vector<Matching> f;
    for (const auto& m : need(t, "matchings")) f.push_back(matching_from_json(e.n, m));
    if (static_cast<int>(f.size()) != e.k) throw ParseError("monomial degree mismatch");
    e.add(std::move(f), coeff_from_json(need(t, "coeff")));
  }
  return e;
}

TreeWeighting parse_tree(const std::string& raw) {
  std::string text = trim(raw);
  static const std::regex shape(R"(^tree\s*\{([\s\S]*)\}$)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw ParseError("tree must look like: tree { vertices=k; edges=...; leaves=... }");
  auto f = fields(m[1].str());
  for (const auto& [k, v] : f)
    if (k != "vertices" && k != "edges" && k != "leaves" && k != "weights") throw ParseError("unknown tree field '" + k + "'");
  if (!f.count("vertices") || !f.count("edges") || !f.count("leaves")) throw ParseError("tree needs vertices, edges and leaves");
  int nv = to_int(f["vertices"], "vertex count");
  std::vector<std::pair<int, int>> edges, leaves;
  if (!f["edges"].empty())
    for (const auto& item : split(f["edges"], ',')) edges.push_back(parse_pair(item));
  for (const auto& item : split(f["leaves"], ',')) {
    auto p = split(item, ':');
    if (p.size() != 2) throw ParseError("leaf must look like vertex:label");
    leaves.emplace_back(to_int(p[0], "vertex"), to_int(p[1], "label"));
  }
  TrivalentTree t;
  try {
    t = make_tree(nv, edges, leaves);
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid tree: ") + e.what());
  }
  TreeWeighting w{t, std::vector<int>(t.edges.size(), 0), false};
  if (f.count("weights") && !f["weights"].empty()) {
    std::vector<char> seen(t.edges.size(), 0);
    for (const auto& item : split(f["weights"], ',')) {
      auto p = split(item, ':');
      if (p.size() != 2) throw ParseError("weight must look like u-v:w");
      auto [u, v] = parse_pair(p[0]);
      int wt = to_int(p[1], "weight");
      int idx = -1;
      for (size_t e = 0; e < t.edges.size(); ++e)
        if ((t.edges[e].u == u && t.edges[e].v == v) || (t.edges[e].u == v && t.edges[e].v == u)) idx = static_cast<int>(e);
      if (idx < 0) throw ParseError("weight given for a non-edge " + p[0]);
      if (seen[idx]) throw ParseError("duplicate weight for edge " + p[0]);
      seen[idx] = 1;
      w.weight[idx] = wt;
    }
  }
  return w;
}

std::string tree_to_text(const TreeWeighting& w, bool with_weights) {
  const auto& t = w.tree;
  std::ostringstream os;
  os << "tree { vertices=" << t.num_vertices << "; edges=";
  for (size_t e = 0; e < t.edges.size(); ++e) os << (e ? "," : "") << t.edges[e].u << "-" << t.edges[e].v;
  os << "; leaves=";
  for (int l = 1; l <= t.num_leaves(); ++l) os << (l > 1 ? "," : "") << t.leaf_vertex[l] << ":" << l;
  if (with_weights) {
    os << "; weights=";
    for (size_t e = 0; e < t.edges.size(); ++e) os << (e ? "," : "") << t.edges[e].u << "-" << t.edges[e].v << ":" << w.weight[e];
  }
  os << " }";
  return os.str();
}

GenSegreDatum gen_segre_from_json(const json& j) {
  GenSegreDatum s;
  s.UR = ints_from_json(need(j, "UR"), "UR");
  s.UG = ints_from_json(need(j, "UG"), "UG");
  s.UB = ints_from_json(need(j, "UB"), "UB");
  s.n = j.contains("n") ? j.at("n").get<int>() : static_cast<int>(s.UR.size() + s.UG.size() + s.UB.size());
  s.red = matching_from_json(s.n, need(j, "red"));
  s.green = matching_from_json(s.n, need(j, "green"));
  s.blue = matching_from_json(s.n, need(j, "blue"));
  try {
    validate(s);
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid generalized Segre datum: ") + e.what());
  }
  return s;
}

json gen_segre_to_json(const GenSegreDatum& s) {
  return json{{"n", s.n},
              {"UR", s.UR},
              {"UG", s.UG},
              {"UB", s.UB},
              {"red", edges_to_json(s.red.edges)},
              {"green", edges_to_json(s.green.edges)},
              {"blue", edges_to_json(s.blue.edges)}};
}

SquareRotationDatum square_rotation_from_json(const json& j) {
  SquareRotationDatum p;
  const json& n = need(j, "n");
  if (!n.is_number_integer()) throw ParseError("n must be an integer");
  p.n = n.get<int>();
  p.U = ints_from_json(need(j, "U"), "U");
  p.purple = edges_from_json(need(j, "purple"));
  p.black = edges_from_json(need(j, "black"));
  try {
    validate(p);
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid square rotation datum: ") + e.what());
  }
  return p;
}

json square_rotation_to_json(const SquareRotationDatum& p) {
  return json{{"n", p.n}, {"U", p.U}, {"purple", edges_to_json(p.purple)}, {"black", edges_to_json(p.black)}};
}

BinomialQuadDatum binomial_from_json(const json& j) {
  BinomialQuadDatum d;
  const json& n = need(j, "n");
  if (!n.is_number_integer()) throw ParseError("n must be an integer");
  d.n = n.get<int>();
  d.U = ints_from_json(need(j, "U"), "U");
  d.red = matching_from_json(d.n, need(j, "red"));
  d.green = matching_from_json(d.n, need(j, "green"));
  try {
    validate(d);
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid binomial datum: ") + e.what());
  }
  return d;
}

json binomial_to_json(const BinomialQuadDatum& d) {
  return json{{"n", d.n}, {"U", d.U}, {"red", edges_to_json(d.red.edges)}, {"green", edges_to_json(d.green.edges)}};
}

json decomposition_to_json(const std::map<Partition, long long>& d) {
  json a = json::array();
  for (auto it = d.rbegin(); it != d.rend(); ++it) a.push_back({{"partition", it->first}, {"multiplicity", it->second}});
  return a;
}

std::string read_arg(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.size() < 4096 && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

}  // namespace plucker
