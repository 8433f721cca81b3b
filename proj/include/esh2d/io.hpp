#pragma once
// JSON tensor files and report emission.
//
// Tensor file schema:
//   { "order": 4, "symmetry": "eshelby" | "elasticity",
//     "components": [16 numbers] }
// with the flat-offset component convention of tensor.hpp. Numbers are
// written with "%.17g" so a write/read round trip reproduces every double
// bit for bit; fields are emitted in a fixed order so identical inputs give
// byte-identical output.

#include <string>

#include "esh2d/elasticity.hpp"
#include "esh2d/tensor.hpp"

namespace esh2d {

// I/O or schema failure (unreadable file, malformed JSON, wrong field types
// or sizes). Distinct from SymmetryViolation, which reports well-formed but
// asymmetric data.
class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SymmetryTag { eshelby, elasticity };

const char* to_string(SymmetryTag tag);

struct LoadedTensor {
  SymmetryTag tag = SymmetryTag::eshelby;
  EshelbyTensor m{};  // elasticity inputs are validated, then handled as
                      // minor-symmetric tensors
};

std::string format_double(double x);

void write_tensor_file(const std::string& path, SymmetryTag tag,
                       const Comps16& components);

// Parses and validates. The symmetry check uses the file's tag with
// tolerance 1e-9 * max(1, |raw|_inf). Throws FileError on I/O or schema
// problems and SymmetryViolation on failed symmetry validation.
LoadedTensor read_tensor_file(const std::string& path);

}  // namespace esh2d
