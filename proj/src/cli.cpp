#include "esh2d/cli.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esh2d/decomp.hpp"
#include "esh2d/diophantine.hpp"
#include "esh2d/elasticity.hpp"
#include "esh2d/invariants.hpp"
#include "esh2d/io.hpp"
#include "esh2d/orbit.hpp"

namespace esh2d::cli {

namespace {

std::uint64_t env_default_seed() {
  const char* s = std::getenv("ESHELBY2D_SEED");
  if (!s || !*s) return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || *end != '\0') {
    std::cerr << "warning: ignoring non-integer ESHELBY2D_SEED=\"" << s
              << "\"\n";
    return 0;
  }
  return v;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw FileError("cannot open for writing: " + output_path);
  out << text;
  out.flush();
  if (!out) throw FileError("write failed: " + output_path);
}

std::string doubles_json(const double* v, int n) {
  std::ostringstream o;
  o << "[";
  for (int i = 0; i < n; ++i) {
    if (i) o << ", ";
    o << format_double(v[i]);
  }
  o << "]";
  return o.str();
}

std::string ints_json(const int* v, int n) {
  std::ostringstream o;
  o << "[";
  for (int i = 0; i < n; ++i) {
    if (i) o << ", ";
    o << v[i];
  }
  o << "]";
  return o.str();
}

std::string witness_json(bool found, const GroupElement& g) {
  if (!found) return "null";
  std::ostringstream o;
  o << "{\"angle\": " << format_double(g.angle)
    << ", \"reflect\": " << (g.reflect ? "true" : "false") << "}";
  return o.str();
}

Group parse_group(const std::string& s) {
  return s == "so2" ? Group::so2 : Group::o2;
}

int do_decompose(const std::string& input, const std::string& output) {
  const LoadedTensor t = read_tensor_file(input);
  const Decomposition dec = decompose(t.m);
  const double d1[4] = {dec.d1(0, 0), dec.d1(0, 1), dec.d1(1, 0), dec.d1(1, 1)};
  const double d2[4] = {dec.d2(0, 0), dec.d2(0, 1), dec.d2(1, 0), dec.d2(1, 1)};
  std::ostringstream o;
  o << "{\n";
  o << "  \"lambda\": " << format_double(dec.lambda) << ",\n";
  o << "  \"mu\": " << format_double(dec.mu) << ",\n";
  o << "  \"v\": " << format_double(dec.v) << ",\n";
  o << "  \"d1\": " << doubles_json(d1, 4) << ",\n";
  o << "  \"d2\": " << doubles_json(d2, 4) << ",\n";
  o << "  \"d\": " << doubles_json(dec.d.c.data(), 16) << "\n";
  o << "}\n";
  emit(o.str(), output);
  return 0;
}

int do_invariants(const std::string& input, bool derived, bool normalize) {
  const LoadedTensor t = read_tensor_file(input);
  const InvariantVector iv = invariant_basis(decompose(t.m));

  std::array<double, 10> values = iv.j;
  std::array<double, 6> derived_values = derived_invariants(iv).j;
  // Degrees of the derived invariants in the tensor components.
  static const std::array<int, 6> derived_degrees = {6, 5, 6, 5, 6, 5};
  if (normalize) {
    const double norm = frobenius_norm(t.m.c);
    if (norm > 0.0) {
      for (int s = 0; s < 10; ++s)
        values[s] /= std::pow(norm, InvariantVector::degrees()[s]);
      for (int s = 0; s < 6; ++s)
        derived_values[s] /= std::pow(norm, derived_degrees[s]);
    }
  }

  std::ostringstream o;
  o << "{\n";
  for (int s = 0; s < 10; ++s)
    o << "  \"j" << s + 1 << "\": " << format_double(values[s]) << ",\n";
  if (derived)
    for (int s = 0; s < 6; ++s)
      o << "  \"j" << s + 11 << "\": " << format_double(derived_values[s])
        << ",\n";
  o << "  \"normalized_by_degree\": " << (normalize ? "true" : "false")
    << "\n";
  o << "}\n";
  emit(o.str(), "");
  return 0;
}

int do_equivalent(const std::string& a, const std::string& b,
                  const std::string& group, double rtol, double atol) {
  const LoadedTensor ta = read_tensor_file(a);
  const LoadedTensor tb = read_tensor_file(b);
  const EquivalenceVerdict verdict =
      check_equivalence(ta.m, tb.m, parse_group(group), 1e-8, rtol, atol);

  std::ostringstream o;
  o << "{\n";
  o << "  \"equivalent\": " << (verdict.equivalent ? "true" : "false")
    << ",\n";
  o << "  \"group\": \"" << group << "\",\n";
  o << "  \"witness\": "
    << witness_json(verdict.alignment.found, verdict.alignment.element)
    << ",\n";
  o << "  \"residual\": " << format_double(verdict.alignment.residual) << "\n";
  o << "}\n";
  emit(o.str(), "");
  return verdict.equivalent ? 0 : 3;
}

int do_align(const std::string& a, const std::string& b,
             const std::string& group, bool brute, int grid) {
  const LoadedTensor ta = read_tensor_file(a);
  const LoadedTensor tb = read_tensor_file(b);
  const Group grp = parse_group(group);
  const AlignmentResult result =
      brute ? brute_force_align(ta.m, tb.m, grid, 1e-8, grp)
            : align(ta.m, tb.m, grp, 1e-8);

  std::ostringstream o;
  o << "{\n";
  o << "  \"found\": " << (result.found ? "true" : "false") << ",\n";
  o << "  \"group\": \"" << group << "\",\n";
  o << "  \"method\": \"" << (brute ? "brute-force" : "analytic") << "\",\n";
  o << "  \"witness\": " << witness_json(result.found, result.element)
    << ",\n";
  o << "  \"residual\": " << format_double(result.residual) << "\n";
  o << "}\n";
  emit(o.str(), "");
  return 0;
}

int do_audit(const std::string& input, int samples, std::uint64_t seed) {
  const LoadedTensor t = read_tensor_file(input);
  const AuditReport rep = audit_action(t.m, samples, seed);

  std::ostringstream o;
  o << "{\n";
  o << "  \"samples\": " << rep.samples << ",\n";
  o << "  \"seed\": " << rep.seed << ",\n";
  o << "  \"rotation_max_deviation\": "
    << doubles_json(rep.rotation_max_deviation.data(), 10) << ",\n";
  o << "  \"reflection_class\": [";
  for (int s = 0; s < 10; ++s) {
    if (s) o << ", ";
    o << "\"" << to_string(rep.reflection_class[s]) << "\"";
  }
  o << "]\n}\n";
  emit(o.str(), "");
  return 0;
}

int do_dio_enumerate(int bound) {
  const auto sols = enumerate_irreducible(bound);
  std::ostringstream o;
  o << "{\n";
  o << "  \"bound\": " << bound << ",\n";
  o << "  \"count\": " << sols.size() << ",\n";
  o << "  \"solutions\": [\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto arr = sols[i].as_array();
    o << "    " << ints_json(arr.data(), 6)
      << (i + 1 < sols.size() ? ",\n" : "\n");
  }
  o << "  ]\n}\n";
  emit(o.str(), "");
  return 0;
}

int do_dio_reduce(const std::string& spec) {
  DiophantineSolution w;
  {
    std::array<int, 6> vals{};
    std::istringstream in(spec);
    std::string token;
    int count = 0;
    while (std::getline(in, token, ',')) {
      if (count >= 6) throw std::runtime_error("--solution needs 6 integers");
      std::size_t pos = 0;
      vals[count] = std::stoi(token, &pos);
      if (pos != token.size())
        throw std::runtime_error("--solution: bad integer \"" + token + "\"");
      ++count;
    }
    if (count != 6) throw std::runtime_error("--solution needs 6 integers");
    w = {vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]};
  }

  const auto parts = reduce_solution(w);
  const auto& gen = irreducible_generators();

  std::ostringstream o;
  const auto warr = w.as_array();
  o << "{\n";
  o << "  \"solution\": " << ints_json(warr.data(), 6) << ",\n";
  o << "  \"parts\": [";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto arr = parts[i].as_array();
    o << (i ? ", " : "") << ints_json(arr.data(), 6);
  }
  o << "],\n";
  o << "  \"indices\": [";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    int idx = 0;
    for (int s = 0; s < 11; ++s)
      if (gen[s] == parts[i]) idx = s + 1;
    o << (i ? ", " : "") << idx;
  }
  o << "]\n}\n";
  emit(o.str(), "");
  return 0;
}

int do_dio_elasticity() {
  const auto sols = elasticity_irreducible();
  std::ostringstream o;
  o << "{\n";
  o << "  \"count\": " << sols.size() << ",\n";
  o << "  \"solutions\": [\n";
  for (std::size_t i = 0; i < sols.size(); ++i) {
    const auto arr = sols[i].as_array();
    o << "    " << ints_json(arr.data(), 4)
      << (i + 1 < sols.size() ? ",\n" : "\n");
  }
  o << "  ]\n}\n";
  emit(o.str(), "");
  return 0;
}

int do_random(std::uint64_t seed, const std::string& symmetry,
              const std::string& output) {
  if (symmetry == "elasticity")
    write_tensor_file(output, SymmetryTag::elasticity,
                      random_elasticity(seed).c);
  else
    write_tensor_file(output, SymmetryTag::eshelby, random_eshelby(seed).c);
  return 0;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{
      "eshelby2d: irreducible decomposition, invariants, orbit equivalence "
      "and exponent enumeration for 2D minor-symmetric fourth-order tensors"};
  app.require_subcommand(1);

  std::string input, output, file_a, file_b, group = "o2";
  std::string solution_spec, symmetry = "eshelby";
  bool derived = false, normalize = false, brute = false;
  int samples = 100, grid = 720, bound = 6;
  double rtol = 1e-8, atol = 1e-10;
  std::uint64_t seed = env_default_seed();

  auto* cmd_decompose =
      app.add_subcommand("decompose", "Write the six-part decomposition");
  cmd_decompose->add_option("--input", input, "tensor file")->required();
  cmd_decompose->add_option("--output", output, "write report here");

  auto* cmd_invariants =
      app.add_subcommand("invariants", "Evaluate the ten-invariant basis");
  cmd_invariants->add_option("--input", input, "tensor file")->required();
  cmd_invariants->add_flag("--derived", derived, "include j11..j16");
  cmd_invariants->add_flag("--normalize-degree", normalize,
                           "divide each invariant by |M|^degree");

  auto* cmd_equivalent = app.add_subcommand(
      "equivalent", "Decide orbit equivalence (exit 0 yes, 3 no)");
  cmd_equivalent->add_option("--a", file_a, "first tensor file")->required();
  cmd_equivalent->add_option("--b", file_b, "second tensor file")->required();
  cmd_equivalent->add_option("--group", group, "so2 or o2")
      ->required()
      ->check(CLI::IsMember({"so2", "o2"}));
  cmd_equivalent->add_option("--rtol", rtol, "relative filter tolerance");
  cmd_equivalent->add_option("--atol", atol, "absolute filter tolerance");

  auto* cmd_align =
      app.add_subcommand("align", "Recover a group element mapping a onto b");
  cmd_align->add_option("--a", file_a, "first tensor file")->required();
  cmd_align->add_option("--b", file_b, "second tensor file")->required();
  cmd_align->add_option("--group", group, "so2 or o2")
      ->required()
      ->check(CLI::IsMember({"so2", "o2"}));
  cmd_align->add_flag("--brute-force", brute, "grid scan plus refinement");
  cmd_align->add_option("--grid", grid, "grid size for --brute-force");

  auto* cmd_audit = app.add_subcommand(
      "audit", "Classify how each invariant transforms under the group");
  cmd_audit->add_option("--input", input, "tensor file")->required();
  cmd_audit->add_option("--samples", samples, "rotation sample count");
  cmd_audit->add_option("--seed", seed, "sampling seed");

  auto* cmd_dio =
      app.add_subcommand("diophantine", "Exponent solution tooling");
  cmd_dio->require_subcommand(1);
  auto* cmd_dio_enum = cmd_dio->add_subcommand(
      "enumerate", "All irreducible solutions with sum <= bound");
  cmd_dio_enum->add_option("--bound", bound, "component sum bound");
  auto* cmd_dio_reduce = cmd_dio->add_subcommand(
      "reduce", "Split a solution into irreducible parts");
  cmd_dio_reduce
      ->add_option("--solution", solution_spec, "comma-separated d,e,f,g,j,k")
      ->required();
  auto* cmd_dio_elast = cmd_dio->add_subcommand(
      "elasticity", "Irreducible solutions of the major-symmetric variant");

  auto* cmd_random =
      app.add_subcommand("random", "Write a random tensor file");
  cmd_random->add_option("--seed", seed, "generator seed");
  cmd_random->add_option("--symmetry", symmetry, "eshelby or elasticity")
      ->check(CLI::IsMember({"eshelby", "elasticity"}));
  cmd_random->add_option("--output", output, "destination file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (cmd_decompose->parsed()) return do_decompose(input, output);
    if (cmd_invariants->parsed()) return do_invariants(input, derived, normalize);
    if (cmd_equivalent->parsed())
      return do_equivalent(file_a, file_b, group, rtol, atol);
    if (cmd_align->parsed()) return do_align(file_a, file_b, group, brute, grid);
    if (cmd_audit->parsed()) return do_audit(input, samples, seed);
    if (cmd_dio_enum->parsed()) return do_dio_enumerate(bound);
    if (cmd_dio_reduce->parsed()) return do_dio_reduce(solution_spec);
    if (cmd_dio_elast->parsed()) return do_dio_elasticity();
    if (cmd_random->parsed()) return do_random(seed, symmetry, output);
  } catch (const SymmetryViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace esh2d::cli
