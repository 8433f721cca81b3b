#include "esh2d/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace esh2d {

const char* to_string(SymmetryTag tag) {
  return tag == SymmetryTag::eshelby ? "eshelby" : "elasticity";
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_tensor_file(const std::string& path, SymmetryTag tag,
                       const Comps16& components) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"order\": 4,\n";
  out << "  \"symmetry\": \"" << to_string(tag) << "\",\n";
  out << "  \"components\": [";
  for (int i = 0; i < 16; ++i) {
    if (i) out << ", ";
    out << format_double(components[i]);
  }
  out << "]\n}\n";

  std::ofstream file(path);
  if (!file) throw FileError("cannot open for writing: " + path);
  file << out.str();
  file.flush();
  if (!file) throw FileError("write failed: " + path);
}

LoadedTensor read_tensor_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw FileError("cannot open: " + path);

  nlohmann::json doc;
  try {
    file >> doc;
  } catch (const std::exception& e) {
    throw FileError("json parse failure in " + path + ": " + e.what());
  }

  if (!doc.is_object()) throw FileError(path + ": expected a JSON object");
  if (!doc.contains("order") || !doc["order"].is_number_integer() ||
      doc["order"].get<int>() != 4)
    throw FileError(path + ": \"order\" must be the integer 4");
  if (!doc.contains("symmetry") || !doc["symmetry"].is_string())
    throw FileError(path + ": missing \"symmetry\" string");
  const std::string sym = doc["symmetry"].get<std::string>();
  SymmetryTag tag;
  if (sym == "eshelby")
    tag = SymmetryTag::eshelby;
  else if (sym == "elasticity")
    tag = SymmetryTag::elasticity;
  else
    throw FileError(path + ": unknown symmetry tag \"" + sym + "\"");
  if (!doc.contains("components") || !doc["components"].is_array() ||
      doc["components"].size() != 16)
    throw FileError(path + ": \"components\" must be an array of 16 numbers");

  Tensor4 raw;
  for (int i = 0; i < 16; ++i) {
    const auto& v = doc["components"][i];
    if (!v.is_number())
      throw FileError(path + ": component " + std::to_string(i) +
                      " is not a number");
    raw.c[i] = v.get<double>();
    if (!std::isfinite(raw.c[i]))
      throw FileError(path + ": component " + std::to_string(i) +
                      " is not finite");
  }

  const double tol = 1e-9 * std::max(1.0, inf_norm(raw.c));
  if (tag == SymmetryTag::elasticity)
    return {tag, to_elasticity(raw, tol).as_eshelby()};
  return {tag, validate_minor_symmetry(raw, tol)};
}

}  // namespace esh2d
