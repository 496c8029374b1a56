#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "fourgen/codes.hpp"
#include "fourgen/genset.hpp"
#include "fourgen/projspace.hpp"

namespace fourgen {

// Point-set file, version 1:
//   # fourgen pointset v1
//   field p=<p> k=<k> modulus=<int>
//   n=<dim>
//   <c0> <c1> ... <cn>     one point per line, field-element encodings
// '#' starts a comment; every body line must normalize to a valid point and
// duplicates are rejected.
enum class PointSetError {
  MalformedHeader,
  OutOfRangeElement,
  DuplicatePoint,
  BadPoint,
};

class PointSetParseError : public std::runtime_error {
public:
  PointSetParseError(PointSetError code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}
  PointSetError code() const { return code_; }

private:
  PointSetError code_;
};

PointSet load_pointset(std::istream& in);
PointSet load_pointset_file(const std::string& path);
void save_pointset(const PointSet& x, std::ostream& out);
void save_pointset_file(const PointSet& x, const std::string& path);

// fixed-field-name JSON renderings used by the CLI
std::string verify_report_json(const VerifyReport& rep);
std::string code_params_json(const CodeParams& cp);

}  // namespace fourgen
