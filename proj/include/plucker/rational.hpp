#pragma once

#include <gmpxx.h>

#include <string>

namespace plucker {

using Q = mpq_class;

inline Q q_of(long long v) { return Q(static_cast<long>(v)); }

inline std::string q_to_string(const Q& q) { return q.get_str(); }

// Accepts "a" or "a/b"; throws std::invalid_argument otherwise.
Q q_from_string(const std::string& s);

inline std::size_t q_bits(const Q& q) {
  return mpz_sizeinbase(q.get_num_mpz_t(), 2) + mpz_sizeinbase(q.get_den_mpz_t(), 2);
}

}  // namespace plucker
