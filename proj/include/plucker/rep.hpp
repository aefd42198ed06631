#pragma once

#include <map>
#include <string>
#include <vector>

#include "plucker/graph.hpp"
#include "plucker/rational.hpp"

namespace plucker {

using Partition = std::vector<int>;  // descending, positive

std::vector<Partition> partitions(int n);
long long factorial(int n);
long long class_size(const Partition& cycle_type);
long long mn_character(const Partition& lambda, const Partition& mu);
long long hook_length_dim(const Partition& lambda);

struct ClassFunction {
  int n = 0;
  std::map<Partition, Q> values;  // keyed by cycle type
};

ClassFunction irreducible_character(const Partition& lambda);
Q inner_product(const ClassFunction& a, const ClassFunction& b);
// Multiplicities; throws std::logic_error if one is not a non-negative integer.
std::map<Partition, long long> decompose(const ClassFunction& chi);

enum class RepSpace { V, Sym2, Wedge2, R2, I2 };
RepSpace rep_space_from_string(const std::string& s);
std::string to_string(RepSpace s);
ClassFunction character_of_action(int n, RepSpace space, int jobs = 0);

bool refines(const std::vector<int>& blocks, const Partition& p);
// dim of F_p and of gr_p inside Sym^3(V_n), p with even parts.
struct GrDims {
  long long f_dim = 0;
  long long gr_dim = 0;
};
GrDims gr_dims(int n, const Partition& p);
long long gr_dim(int n, const Partition& p);
// Rank of the span of benzene multi-matchings inside Sym^3(V_n).
int benzene_span_rank(int n);

std::string partition_to_string(const Partition& p);

}  // namespace plucker
