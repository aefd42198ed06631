#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "plucker/graph.hpp"
#include "plucker/relations.hpp"
#include "plucker/rep.hpp"
#include "plucker/ring.hpp"
#include "plucker/sym.hpp"
#include "plucker/trees.hpp"

namespace plucker {

using json = nlohmann::ordered_json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "n=4; edges=1-3,2-4" or {"n":4,"edges":[[1,3],[2,4]]}
DirectedGraph parse_graph(const std::string& text);
DirectedGraph graph_from_json(const json& j);
json graph_to_json(const DirectedGraph& g);

json ring_to_json(const RingElement& e);
// Accepts an element JSON or a bare graph (text or JSON).
RingElement parse_ring_element(const std::string& text);
std::string ring_to_text(const RingElement& e);

json sym_to_json(const SymElement& e);
SymElement sym_from_json(const json& j);

// tree { vertices=k; edges=u-v,...; leaves=vertex:label,...; weights=u-v:w,... }
TreeWeighting parse_tree(const std::string& text);
std::string tree_to_text(const TreeWeighting& w, bool with_weights = true);

GenSegreDatum gen_segre_from_json(const json& j);
json gen_segre_to_json(const GenSegreDatum& s);
SquareRotationDatum square_rotation_from_json(const json& j);
json square_rotation_to_json(const SquareRotationDatum& p);
BinomialQuadDatum binomial_from_json(const json& j);
json binomial_to_json(const BinomialQuadDatum& d);

json decomposition_to_json(const std::map<Partition, long long>& d);

// Reads a file if `arg` names one, otherwise returns arg itself.
std::string read_arg(const std::string& arg);

}  // namespace plucker
