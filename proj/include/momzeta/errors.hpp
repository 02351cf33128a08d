#pragma once

#include <stdexcept>
#include <string>

namespace momzeta {

// Base of every error the library reports. Callers that only care about
// "numeric failure vs. success" can catch this one type.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class divergence_error : public error {
 public:
  explicit divergence_error(const std::string& what) : error("divergent: " + what) {}
};

class quadrature_failure : public error {
 public:
  explicit quadrature_failure(const std::string& what) : error("quadrature failure: " + what) {}
};

class missing_edge_data : public error {
 public:
  explicit missing_edge_data(const std::string& what) : error("missing edge data: " + what) {}
};

class invalid_tail : public error {
 public:
  explicit invalid_tail(const std::string& what) : error("invalid tail: " + what) {}
};

class tail_unavailable : public error {
 public:
  explicit tail_unavailable(const std::string& what) : error("tail unavailable: " + what) {}
};

class precision_exhausted : public error {
 public:
  explicit precision_exhausted(const std::string& what) : error("precision exhausted: " + what) {}
};

class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error("domain error: " + what) {}
};

class too_many_sets : public error {
 public:
  explicit too_many_sets(const std::string& what) : error("too many sets: " + what) {}
};

class invalid_distribution : public error {
 public:
  explicit invalid_distribution(const std::string& what) : error("invalid distribution: " + what) {}
};

}  // namespace momzeta
